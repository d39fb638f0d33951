#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "pattern.hpp"
#include "word.hpp"

namespace nvcalc {

// One maximal flat piece of the interior boundary of a partition: a cut
// hyperplane orthogonal to `axis` (named by the word whose interval midpoint
// is the cut position) together with its extent on the remaining axes, in
// ascending axis order.  Maximal means no strictly larger coaxial dyadic box
// fits inside the union of interior block boundaries.
struct Segment {
  int axis = 1;
  BinaryWord cut;
  std::vector<BinaryWord> extent;

  auto operator<=>(const Segment&) const = default;
};

namespace detail {

using Box = std::vector<BinaryWord>;  // one word per extent axis

inline bool box_contains(const Box& outer, const Box& inner) {
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (!outer[i].is_prefix_of(inner[i])) return false;
  }
  return true;
}

// Is `box` contained in the union of `faces`?  Exact, by recursive halving.
inline bool covered(const Box& box, const std::vector<Box>& faces) {
  std::vector<const Box*> live;
  for (const auto& f : faces) {
    if (box_contains(f, box)) return true;
    bool meets = true;
    for (std::size_t i = 0; i < box.size(); ++i) {
      if (!f[i].comparable(box[i])) {
        meets = false;
        break;
      }
    }
    if (meets) live.push_back(&f);
  }
  if (live.empty()) return false;
  // No live face contains the box, so some live face extends it on some axis.
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (const Box* f : live) {
      if ((*f)[i].size() > box[i].size()) {
        std::vector<Box> sub;
        sub.reserve(live.size());
        for (const Box* g : live) sub.push_back(*g);
        for (int b = 0; b < 2; ++b) {
          Box half = box;
          half[i] = box[i].child(b);
          if (!covered(half, sub)) return false;
        }
        return true;
      }
    }
  }
  return false;  // unreachable for consistent inputs
}

// All maximal dyadic boxes inside the union of `faces`.  Any maximal box has,
// on each axis, a word that is a prefix of some face word on that axis, so the
// prefix grids are a complete candidate set.
inline std::vector<Box> maximal_boxes(std::vector<Box> faces) {
  if (faces.empty()) return {};
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  const std::size_t dims = faces[0].size();
  if (dims == 0) return {Box{}};  // the cut point itself

  std::vector<std::vector<BinaryWord>> grid(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    for (const auto& f : faces) {
      std::string s = f[i].str();
      for (std::size_t len = 0; len <= s.size(); ++len) grid[i].push_back(BinaryWord(s.substr(0, len)));
    }
    std::sort(grid[i].begin(), grid[i].end());
    grid[i].erase(std::unique(grid[i].begin(), grid[i].end()), grid[i].end());
  }

  std::vector<Box> out;
  std::vector<std::size_t> pick(dims, 0);
  while (true) {
    Box cand(dims);
    for (std::size_t i = 0; i < dims; ++i) cand[i] = grid[i][pick[i]];
    if (covered(cand, faces)) {
      bool maximal = true;
      for (std::size_t i = 0; i < dims && maximal; ++i) {
        if (cand[i].empty()) continue;
        Box up = cand;
        up[i] = cand[i].parent();
        if (covered(up, faces)) maximal = false;
      }
      if (maximal) out.push_back(std::move(cand));
    }
    std::size_t i = 0;
    while (i < dims && ++pick[i] == grid[i].size()) pick[i++] = 0;
    if (i == dims) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// All maximal interior boundary segments of the partition, sorted.  Interior
// hyperplane pieces are collected from block faces at the right endpoint of
// each axis interval (by exact tiling these equal the left-face pieces).
inline std::vector<Segment> segments(const Pattern& p) {
  std::map<std::pair<int, BinaryWord>, std::vector<detail::Box>> faces;
  for (const auto& b : p.blocks) {
    for (int a = 1; a <= p.arity; ++a) {
      auto cut = b.word(a).right_cut();
      if (!cut) continue;
      detail::Box extent;
      extent.reserve(static_cast<std::size_t>(p.arity - 1));
      for (int s = 1; s <= p.arity; ++s) {
        if (s != a) extent.push_back(b.word(s));
      }
      faces[{a, *cut}].push_back(std::move(extent));
    }
  }
  std::vector<Segment> out;
  for (auto& [key, fs] : faces) {
    for (auto& box : detail::maximal_boxes(std::move(fs))) {
      out.push_back(Segment{key.first, key.second, std::move(box)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of segments shared exactly (same axis, same cut, same extent).
inline long long common_segments(const Pattern& p, const Pattern& q) {
  const auto sp = segments(p);
  const auto sq = segments(q);
  std::vector<Segment> both;
  std::set_intersection(sp.begin(), sp.end(), sq.begin(), sq.end(), std::back_inserter(both));
  return static_cast<long long>(both.size());
}

}  // namespace nvcalc
