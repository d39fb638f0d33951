#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "word.hpp"

namespace nvcalc {

// A labeled dyadic block partition of the n-cube.  The label of a block is
// its index in `blocks`; storage order is free and carries no meaning beyond
// labelling (serialization sorts).
struct Pattern {
  int arity = 1;
  std::vector<MultiAddress> blocks;

  std::size_t size() const { return blocks.size(); }
};

inline Pattern trivial_pattern(int arity) {
  Pattern p;
  p.arity = arity;
  p.blocks.push_back(MultiAddress::trivial(arity));
  return p;
}

struct PatternCheck {
  enum class Kind { ok, overlap, coverage_deficit, non_hierarchical };
  Kind kind = Kind::ok;
  int i = -1, j = -1;    // offending labels for overlap
  std::string detail;    // deficit value for coverage_deficit

  bool ok() const { return kind == Kind::ok; }

  std::string to_string() const {
    switch (kind) {
      case Kind::ok:
        return "ok";
      case Kind::overlap:
        return "overlap(" + std::to_string(i) + "," + std::to_string(j) + ")";
      case Kind::coverage_deficit:
        return "coverage-deficit(" + detail + ")";
      case Kind::non_hierarchical:
        return "non-hierarchical";
    }
    return "ok";
  }
};

namespace detail {

// Format the dyadic value 1 - sum(2^-d for d in leftover) as "p/2^k" (plain
// "p/q" while the denominator fits in 64 bits).  Pre: leftover sorted, sum < 1.
inline std::string format_deficit(const std::vector<std::size_t>& leftover) {
  const std::size_t dmax = leftover.empty() ? 1 : *std::max_element(leftover.begin(), leftover.end());
  if (dmax > 120) return "finer than 2^-120";
  unsigned __int128 num = (static_cast<unsigned __int128>(1)) << dmax;
  for (std::size_t d : leftover) num -= (static_cast<unsigned __int128>(1)) << (dmax - d);
  std::size_t k = dmax;
  while (k > 0 && (num & 1) == 0) {
    num >>= 1;
    --k;
  }
  std::string digits;
  if (num == 0) digits = "0";
  while (num > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(num % 10)));
    num /= 10;
  }
  if (k <= 63) return digits + "/" + std::to_string(1ull << k);
  return digits + "/2^" + std::to_string(k);
}

// A pattern decomposes iff at every level some axis exists on which no block
// straddles the cell's mid-hyperplane; splitting on any such axis is always
// safe, so the greedy search is complete.
inline bool decomposes(const std::vector<MultiAddress>& blocks, const std::vector<int>& idxs,
                       std::vector<std::size_t>& cell_len, int arity) {
  if (idxs.size() <= 1) return true;
  for (int a = 1; a <= arity; ++a) {
    const std::size_t len = cell_len[static_cast<std::size_t>(a - 1)];
    bool all_extend = true;
    for (int i : idxs) {
      if (blocks[static_cast<std::size_t>(i)].word(a).size() <= len) {
        all_extend = false;
        break;
      }
    }
    if (!all_extend) continue;
    std::vector<int> side0, side1;
    for (int i : idxs) {
      (blocks[static_cast<std::size_t>(i)].word(a).bit(len) ? side1 : side0).push_back(i);
    }
    if (side0.empty() || side1.empty()) continue;  // cannot occur for exact covers; be safe
    cell_len[static_cast<std::size_t>(a - 1)] = len + 1;
    const bool ok = decomposes(blocks, side0, cell_len, arity) &&
                    decomposes(blocks, side1, cell_len, arity);
    cell_len[static_cast<std::size_t>(a - 1)] = len;
    return ok;
  }
  return false;
}

}  // namespace detail

inline PatternCheck validate_pattern(const Pattern& p) {
  if (p.arity < 1) throw std::invalid_argument("pattern arity must be >= 1");
  if (p.blocks.empty()) throw std::invalid_argument("pattern needs at least one block");
  for (const auto& b : p.blocks) {
    if (b.arity() != p.arity) throw std::invalid_argument("block arity differs from pattern arity");
  }

  // 1. pairwise disjoint interiors
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < p.blocks.size(); ++j) {
      if (!p.blocks[i].disjoint_from(p.blocks[j])) {
        return {PatternCheck::Kind::overlap, static_cast<int>(i), static_cast<int>(j), {}};
      }
    }
  }

  // 2. exact coverage: sum of 2^-depth must equal 1.  Binary carry on the
  //    multiset of depths keeps this exact at any depth.
  std::map<std::size_t, unsigned long long> cnt;
  for (const auto& b : p.blocks) ++cnt[b.depth()];
  std::vector<std::size_t> leftover;
  unsigned long long at_root = 0;
  while (!cnt.empty()) {
    auto it = std::prev(cnt.end());
    const std::size_t d = it->first;
    unsigned long long c = it->second;
    cnt.erase(it);
    if (d == 0) {
      at_root += c;
      continue;
    }
    if (c & 1ull) leftover.push_back(d);
    if (c >>= 1; c) cnt[d - 1] += c;
  }
  if (!(at_root == 1 && leftover.empty())) {
    // Disjointness already holds, so the total cannot exceed 1.
    return {PatternCheck::Kind::coverage_deficit, -1, -1, detail::format_deficit(leftover)};
  }

  // 3. a recursive halving decomposition must exist
  std::vector<int> idxs(p.blocks.size());
  std::iota(idxs.begin(), idxs.end(), 0);
  std::vector<std::size_t> cell_len(static_cast<std::size_t>(p.arity), 0);
  if (!detail::decomposes(p.blocks, idxs, cell_len, p.arity)) {
    return {PatternCheck::Kind::non_hierarchical, -1, -1, {}};
  }
  return {};
}

// Halve block `label` along `axis`.  The 0-child keeps the label, the 1-child
// is appended and becomes label m.
inline Pattern split_block(const Pattern& p, int label, int axis) {
  if (label < 0 || static_cast<std::size_t>(label) >= p.blocks.size()) {
    throw std::invalid_argument("split_block: label out of range");
  }
  if (axis < 1 || axis > p.arity) throw std::invalid_argument("split_block: axis out of range");
  Pattern out = p;
  const MultiAddress original = out.blocks[static_cast<std::size_t>(label)];
  out.blocks[static_cast<std::size_t>(label)] = original.split_child(axis, 0);
  out.blocks.push_back(original.split_child(axis, 1));
  return out;
}

// Minimal common refinement: all nonempty pairwise intersections, in sorted
// address order.
inline Pattern common_refinement(const Pattern& p, const Pattern& q) {
  if (p.arity != q.arity) throw std::invalid_argument("common_refinement: arity mismatch");
  Pattern out;
  out.arity = p.arity;
  for (const auto& bp : p.blocks) {
    for (const auto& bq : q.blocks) {
      if (auto meet = bp.intersect(bq)) out.blocks.push_back(std::move(*meet));
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

inline Pattern canonical(const Pattern& p) {
  Pattern out = p;
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

inline bool same_blocks(const Pattern& p, const Pattern& q) {
  if (p.arity != q.arity || p.blocks.size() != q.blocks.size()) return false;
  return canonical(p).blocks == canonical(q).blocks;
}

// Every block of `fine` sits inside some block of `coarse`.
inline bool refines(const Pattern& fine, const Pattern& coarse) {
  if (fine.arity != coarse.arity) return false;
  for (const auto& b : fine.blocks) {
    bool found = false;
    for (const auto& c : coarse.blocks) {
      if (c.contains(b)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Label of the block containing `addr` (addr at least as deep), or -1.
inline int find_containing_block(const Pattern& p, const MultiAddress& addr) {
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (p.blocks[i].contains(addr)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace nvcalc
