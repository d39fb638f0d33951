#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "element.hpp"
#include "pattern.hpp"
#include "perm.hpp"
#include "rng.hpp"

namespace nvcalc {

// Deterministic pseudo-random element: both patterns receive the same number
// of splits (drawn below 2^max_depth, so max_depth 0 gives the identity),
// each split picks a block of total depth < max_depth and a random axis; the
// label map is a uniform shuffle.  When twist generators are supplied each
// block twist is a product of up to two of them.
inline Element random_element(std::uint64_t seed, int arity, int max_depth,
                              const std::vector<CoordPerm>& twist_gens = {}) {
  if (arity < 1) throw std::invalid_argument("random_element: bad arity");
  if (max_depth < 0 || max_depth > 20) throw std::invalid_argument("random_element: bad depth");
  for (const auto& g : twist_gens) {
    if (g.n() != arity) throw std::invalid_argument("random_element: twist degree mismatch");
  }
  SplitMix64 rng(seed);
  const std::uint64_t splits = rng.below(std::uint64_t{1} << max_depth);

  auto grow = [&](Pattern p) {
    for (std::uint64_t s = 0; s < splits; ++s) {
      std::vector<int> eligible;
      for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        if (static_cast<int>(p.blocks[i].depth()) < max_depth) eligible.push_back(static_cast<int>(i));
      }
      // Never empty: a pattern of k <= 2^max_depth - 1 blocks cannot consist
      // solely of blocks at full depth.
      const int label = eligible[static_cast<std::size_t>(rng.below(eligible.size()))];
      const int axis = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(arity)));
      p = split_block(p, label, axis);
    }
    return p;
  };

  Pattern dom = grow(trivial_pattern(arity));
  Pattern ran = grow(trivial_pattern(arity));
  const std::size_t m = dom.blocks.size();

  std::vector<int> sigma(m);
  for (std::size_t i = 0; i < m; ++i) sigma[i] = static_cast<int>(i);
  for (std::size_t i = m; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(sigma[i - 1], sigma[j]);
  }

  std::vector<CoordPerm> twist(m, CoordPerm(arity));
  if (!twist_gens.empty()) {
    for (auto& t : twist) {
      const std::uint64_t factors = rng.below(3);
      for (std::uint64_t k = 0; k < factors; ++k) {
        t = t.then(twist_gens[static_cast<std::size_t>(rng.below(twist_gens.size()))]);
      }
    }
  }
  return make_element(std::move(dom), std::move(ran), std::move(sigma), std::move(twist));
}

}  // namespace nvcalc
