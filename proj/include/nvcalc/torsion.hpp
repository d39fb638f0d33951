#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "pattern.hpp"
#include "perm.hpp"
#include "point.hpp"
#include "segments.hpp"

namespace nvcalc {

// Witness that f has finite order: at power k the accumulated block pair uses
// one pattern twice, so f^k permutes that pattern's blocks rigidly.  The
// rigid data is recorded on the sorted pattern, and bounds the order by
// k * order(rigid part); the true order divides that bound.
struct TorsionCertificate {
  long long power_k = 0;
  Pattern pattern;                      // canonical (sorted) common pattern of f^k
  std::vector<int> rigid_perm;          // position i of `pattern` maps to rigid_perm[i]
  std::vector<CoordPerm> rigid_twists;  // twist applied while moving block i
  long long order_bound = 0;
  long long first_segment_match = 0;    // least k whose power has matching cut sets
};

namespace detail {

inline long long mul_checked(long long a, long long b) {
  if (a != 0 && b > std::numeric_limits<long long>::max() / a) {
    throw std::overflow_error("order bound overflow");
  }
  return a * b;
}

// Reduced binary-exponentiation power; semantically equal to power(f, k, true)
// but O(log k) multiplications.  Used where only the map matters.
inline Element pow_reduced_fast(const Element& f, long long k) {
  if (k < 0) return pow_reduced_fast(invert(f), -k);
  Element acc = identity_element(f.arity);
  if (k == 0) return acc;
  Element base = reduce(f);
  while (k > 0) {
    if (k & 1) acc = reduce(compose(acc, base));
    k >>= 1;
    if (k > 0) base = reduce(compose(base, base));
  }
  return acc;
}

}  // namespace detail

// Order of a rigid block permutation with twists: per cycle, length times the
// order of the twist product collected around the cycle.
inline long long rigid_order(const std::vector<int>& perm, const std::vector<CoordPerm>& twists) {
  if (perm.empty()) return 1;
  const int arity = twists.empty() ? 1 : twists.front().n();
  std::vector<bool> seen(perm.size(), false);
  long long total = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    CoordPerm around(arity);
    long long len = 0;
    std::size_t cur = start;
    do {
      seen[cur] = true;
      around = around.then(twists[cur]);
      cur = static_cast<std::size_t>(perm[cur]);
      ++len;
    } while (cur != start);
    total = lcm_checked(total, detail::mul_checked(len, around.order()));
  }
  return total;
}

// Scan the non-reduced powers f, f^2, ... for the first k whose domain and
// range use the same block set.  Torsion elements always certify with
// k <= order (a power equal to the identity reuses its pattern verbatim), so
// absence up to K proves the order exceeds K.
inline std::optional<TorsionCertificate> torsion_certificate(const Element& f,
                                                             long long max_power) {
  Element acc = f;
  long long first_segment_match = 0;
  for (long long k = 1; k <= max_power; ++k) {
    if (first_segment_match == 0 &&
        segments(acc.dom) == segments(acc.ran)) {
      first_segment_match = k;
    }
    if (same_blocks(acc.dom, acc.ran)) {
      TorsionCertificate cert;
      cert.power_k = k;
      cert.pattern = canonical(acc.dom);
      const std::size_t m = cert.pattern.blocks.size();
      cert.rigid_perm.resize(m);
      cert.rigid_twists.assign(m, CoordPerm(f.arity));
      for (std::size_t pos = 0; pos < m; ++pos) {
        const int di = detail::index_of_block(acc.dom, cert.pattern.blocks[pos]);
        const MultiAddress& img = acc.ran.blocks[static_cast<std::size_t>(
            acc.sigma[static_cast<std::size_t>(di)])];
        cert.rigid_perm[pos] = detail::index_of_block(cert.pattern, img);
        cert.rigid_twists[pos] = acc.twist[static_cast<std::size_t>(di)];
      }
      cert.order_bound = detail::mul_checked(k, rigid_order(cert.rigid_perm, cert.rigid_twists));
      cert.first_segment_match = first_segment_match;
      if (cert.order_bound <= 4096 &&
          !equals(detail::pow_reduced_fast(f, cert.order_bound), identity_element(f.arity))) {
        throw std::logic_error("torsion certificate inconsistent with element powers");
      }
      return cert;
    }
    if (k < max_power) acc = compose(acc, f);
  }
  return std::nullopt;
}

// Exact order if it is at most max_order, otherwise nullopt.  A certificate
// must appear by the order itself, so a fruitless scan already settles the
// question; with a certificate only divisors of its bound can be the order.
inline std::optional<long long> order_up_to(const Element& f, long long max_order) {
  const auto cert = torsion_certificate(f, max_order);
  if (!cert) return std::nullopt;
  std::vector<long long> divisors;
  for (long long d = 1; d * d <= cert->order_bound; ++d) {
    if (cert->order_bound % d != 0) continue;
    divisors.push_back(d);
    if (d != cert->order_bound / d) divisors.push_back(cert->order_bound / d);
  }
  std::sort(divisors.begin(), divisors.end());
  const Element id = identity_element(f.arity);
  for (long long d : divisors) {
    if (d > max_order) break;
    if (equals(detail::pow_reduced_fast(f, d), id)) return d;
  }
  return std::nullopt;
}

// A finite group of elements with its multiplication table:
// table[i][j] = index of elements[i] followed by elements[j].
struct FiniteGroup {
  std::vector<Element> elements;  // reduced; elements[0] is the identity
  std::vector<std::vector<int>> table;
};

struct ClosureResult {
  std::optional<FiniteGroup> group;  // nullopt when the budget was exhausted
  std::size_t size_reached = 0;
};

// Sound collision key: equal elements map the fixed sample the same way.
// Distinct elements may collide, so every hit is confirmed with equals().
inline std::string dynamics_fingerprint(const Element& e, const std::vector<CantorPoint>& pts) {
  std::string out;
  for (const auto& p : pts) {
    out += apply(e, p).to_string();
    out += ';';
  }
  return out;
}

namespace detail {

inline std::vector<CantorPoint> closure_samples(int arity) {
  return sample_points(0x5eedf00dULL ^ static_cast<std::uint64_t>(arity), 12, arity);
}

inline int find_in(const std::vector<Element>& elems,
                   const std::map<std::string, std::vector<int>>& index,
                   const std::vector<CantorPoint>& pts, const Element& h) {
  const auto it = index.find(dynamics_fingerprint(h, pts));
  if (it == index.end()) return -1;
  for (int i : it->second) {
    if (equals(elems[static_cast<std::size_t>(i)], h)) return i;
  }
  return -1;
}

}  // namespace detail

// Breadth-first closure of the generators (and their inverses) under
// multiplication, up to `budget` distinct elements.
inline ClosureResult closure(const std::vector<Element>& gens, std::size_t budget) {
  if (gens.empty()) throw std::invalid_argument("closure: no generators");
  const int arity = gens.front().arity;
  for (const auto& g : gens) {
    if (g.arity != arity) throw std::invalid_argument("closure: mixed arities");
  }
  const auto pts = detail::closure_samples(arity);

  std::vector<Element> step;
  for (const auto& g : gens) {
    step.push_back(reduce(g));
    step.push_back(reduce(invert(g)));
  }

  std::vector<Element> elems{identity_element(arity)};
  std::map<std::string, std::vector<int>> index;
  index[dynamics_fingerprint(elems[0], pts)].push_back(0);

  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : step) {
      Element h = reduce(compose(elems[head], g));
      if (detail::find_in(elems, index, pts, h) >= 0) continue;
      if (elems.size() + 1 > budget) return {std::nullopt, budget};
      index[dynamics_fingerprint(h, pts)].push_back(static_cast<int>(elems.size()));
      elems.push_back(std::move(h));
    }
  }

  FiniteGroup grp;
  grp.table.assign(elems.size(), std::vector<int>(elems.size(), -1));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const int k = detail::find_in(elems, index, pts, reduce(compose(elems[i], elems[j])));
      if (k < 0) throw std::logic_error("closure: product escaped the closed set");
      grp.table[i][j] = k;
    }
  }
  grp.elements = std::move(elems);
  const std::size_t n = grp.elements.size();
  return {std::move(grp), n};
}

// A finite subgroup acts rigidly on some common pattern; this assembles one.
struct SameVWitness {
  FiniteGroup group;
  std::vector<TorsionCertificate> certificates;  // one per group element, same order
  Pattern witness;                               // every element is rigid on it
};

// Certify each generator, close the group, certify every element, and refine
// the joint certificate pattern until the whole group permutes its blocks.
// Throws invalid_argument when an element resists certification within
// cert_max_power and budget_exceeded when the closure outgrows the budget.
inline SameVWitness same_v_witness(const std::vector<Element>& gens, std::size_t budget,
                                   long long cert_max_power = 64) {
  if (gens.empty()) throw std::invalid_argument("same_v_witness: no generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!torsion_certificate(gens[i], cert_max_power)) {
      throw std::invalid_argument("same_v_witness: generator " + std::to_string(i) +
                                  " has no torsion certificate up to " +
                                  std::to_string(cert_max_power));
    }
  }
  ClosureResult cr = closure(gens, budget);
  if (!cr.group) throw budget_exceeded(cr.size_reached);

  SameVWitness out;
  out.group = std::move(*cr.group);
  Pattern w = trivial_pattern(gens.front().arity);
  for (std::size_t i = 0; i < out.group.elements.size(); ++i) {
    auto cert = torsion_certificate(out.group.elements[i], cert_max_power);
    if (!cert) {
      throw std::invalid_argument("same_v_witness: group element " + std::to_string(i) +
                                  " has no torsion certificate up to " +
                                  std::to_string(cert_max_power));
    }
    w = common_refinement(w, cert->pattern);
    out.certificates.push_back(std::move(*cert));
  }

  for (int round = 0; round < 64; ++round) {
    bool all = true;
    for (const auto& e : out.group.elements) {
      if (!is_rigid_on(e, w)) {
        all = false;
        break;
      }
    }
    if (all) {
      out.witness = std::move(w);
      return out;
    }
    // Not yet invariant: fold in every generator's image of w.  At the fixed
    // point each image has as many blocks as w and is refined by w, hence
    // equals w, making w invariant under the whole group.  Reduced copies are
    // used because w provably refines their domains (via their certificates).
    for (const auto& g : gens) {
      const Element rg = reduce(g);
      w = common_refinement(w, image_pattern(rg, w));
    }
  }
  throw std::logic_error("same_v_witness: witness refinement did not stabilize");
}

}  // namespace nvcalc
