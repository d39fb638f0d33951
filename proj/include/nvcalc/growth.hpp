#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "pattern.hpp"
#include "segments.hpp"

namespace nvcalc {

// One power of the instrumented chain f, f*f, f*f*f, ... where each product
// is formed by composition without reduction (so the pattern history is
// visible) while the reduced column tracks the minimal presentation.
struct GrowthRow {
  long long i = 0;       // power index, starting at 1
  long long Tp = 0;      // segment count of the non-reduced power's domain
  long long Tp_red = 0;  // segment count of the reduced power's domain
  long long Cp = 0;      // segments shared by that power's domain and range
  long long Dp = 0;      // Tp - Cp
  long long I = 0;       // Tp at this power minus Tp at power 1
  long long R = 0;       // Tp - Tp_red (how much reduction recovers)
  long long m = 0;       // block count, non-reduced
  long long m_red = 0;   // block count, reduced
};

inline std::vector<GrowthRow> power_profile(const Element& f, long long max_power) {
  std::vector<GrowthRow> rows;
  if (max_power < 1) return rows;
  Element acc = f;
  long long tp1 = 0;
  for (long long i = 1; i <= max_power; ++i) {
    GrowthRow row;
    row.i = i;
    const auto dom_segs = segments(acc.dom);
    row.Tp = static_cast<long long>(dom_segs.size());
    row.Cp = static_cast<long long>(common_segments(acc.dom, acc.ran));
    row.Dp = row.Tp - row.Cp;
    row.m = static_cast<long long>(acc.size());
    const Element red = reduce(acc);
    row.Tp_red = static_cast<long long>(segments(red.dom).size());
    row.m_red = static_cast<long long>(red.size());
    if (i == 1) tp1 = row.Tp;
    row.I = row.Tp - tp1;
    row.R = row.Tp - row.Tp_red;
    rows.push_back(row);
    if (i < max_power) acc = compose(acc, f);
  }
  return rows;
}

// At each power from the second on, reduction recovered less than, exactly,
// or more than the raw increment added since power 1.
enum class StepCase { case_1, case_2, case_3 };

inline StepCase classify_step(const GrowthRow& row) {
  if (row.i < 2) throw std::invalid_argument("classify_step: defined for powers >= 2");
  if (row.R < row.I) return StepCase::case_1;
  if (row.R == row.I) return StepCase::case_2;
  return StepCase::case_3;
}

inline const char* to_string(StepCase c) {
  switch (c) {
    case StepCase::case_1: return "case-1";
    case StepCase::case_2: return "case-2";
    default: return "case-3";
  }
}

// Least power j such that the reduced segment counts increase strictly from
// j through the last row, provided that tail spans at least `window` rows.
inline std::optional<long long> monotone_growth_check(const std::vector<GrowthRow>& rows,
                                                      long long window) {
  if (rows.empty() || window < 1) return std::nullopt;
  std::size_t j = rows.size() - 1;
  while (j > 0 && rows[j - 1].Tp_red < rows[j].Tp_red) --j;
  const long long span = static_cast<long long>(rows.size() - j);
  if (span < window) return std::nullopt;
  return rows[j].i;
}

inline bool is_root(const Element& h, const Element& g, long long t) {
  return equals(power(h, t, true), g);
}

struct RootHit {
  Element root;
  long long t = 0;
};

// All patterns of the given arity with at most max_blocks blocks, generated
// by splitting and de-duplicated on the sorted block set.  Refuses to grow
// past max_patterns (any search over that many patterns is hopeless anyway).
inline std::vector<Pattern> enumerate_patterns(int arity, int max_blocks,
                                               std::size_t max_patterns = 200000) {
  std::vector<Pattern> out;
  std::set<std::vector<MultiAddress>> seen;
  std::vector<Pattern> frontier{trivial_pattern(arity)};
  seen.insert(canonical(frontier.front()).blocks);
  out.push_back(canonical(frontier.front()));
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Pattern p = frontier[head];  // copy: frontier grows below
    if (static_cast<int>(p.blocks.size()) >= max_blocks) continue;
    for (int label = 0; label < static_cast<int>(p.blocks.size()); ++label) {
      for (int axis = 1; axis <= arity; ++axis) {
        Pattern q = canonical(split_block(p, label, axis));
        if (seen.insert(q.blocks).second) {
          if (out.size() + 1 > max_patterns) throw enumeration_too_large(out.size() + 1);
          out.push_back(q);
          frontier.push_back(q);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Pattern& a, const Pattern& b) {
    if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
    return a.blocks < b.blocks;
  });
  return out;
}

// Exhaustive search for untwisted h with at most max_blocks blocks and
// h^t = g for some 2 <= t <= max_t.  The candidate count is computed first;
// beyond the cap the search refuses to start rather than run unbounded.
inline std::vector<RootHit> root_search(const Element& g, int max_blocks, long long max_t,
                                        long long cap = 2000000) {
  if (max_blocks < 1 || max_t < 2) throw std::invalid_argument("root_search: bad bounds");
  const auto patterns = enumerate_patterns(g.arity, max_blocks);
  std::vector<unsigned __int128> count_by_m(static_cast<std::size_t>(max_blocks) + 1, 0);
  for (const auto& p : patterns) ++count_by_m[p.blocks.size()];
  unsigned __int128 estimate = 0;
  unsigned __int128 factorial = 1;
  for (int m = 1; m <= max_blocks; ++m) {
    factorial *= static_cast<unsigned>(m);
    estimate += count_by_m[static_cast<std::size_t>(m)] *
                count_by_m[static_cast<std::size_t>(m)] * factorial;
  }
  if (estimate > static_cast<unsigned __int128>(cap)) {
    const auto top = static_cast<unsigned __int128>(std::numeric_limits<std::size_t>::max());
    throw enumeration_too_large(static_cast<std::size_t>(estimate > top ? top : estimate));
  }

  std::vector<RootHit> hits;
  for (const auto& d : patterns) {
    for (const auto& r : patterns) {
      if (d.blocks.size() != r.blocks.size()) continue;
      std::vector<int> sigma(d.blocks.size());
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        Element h;  // patterns are valid by construction; skip revalidation
        h.arity = g.arity;
        h.dom = d;
        h.ran = r;
        h.sigma = sigma;
        h.twist.assign(d.blocks.size(), CoordPerm(g.arity));
        Element acc = reduce(h);
        for (long long t = 2; t <= max_t; ++t) {
          acc = reduce(compose(acc, h));
          if (equals(acc, g)) hits.push_back({h, t});
        }
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
  return hits;
}

// Does conjugating the m-th power of b by a give the n-th power of b?
// Conventions: powers reduce as they go, and the conjugate applies the inverse
// of a first, then b^m, then a.
inline bool bs_relation_check(const Element& a, const Element& b, long long m, long long n) {
  return equals(compose(compose(invert(a), power(b, m, true)), a), power(b, n, true));
}

}  // namespace nvcalc
