#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pattern.hpp"
#include "perm.hpp"
#include "word.hpp"

namespace nvcalc {

// One prefix-substitution homeomorphism of the n-fold Cantor cube, presented
// as a block pair: domain block i is carried onto range block sigma[i].  The
// per-block twist permutes the residual coordinate streams; the stream leaving
// on output axis s is the one that entered on input axis twist^{-1}(s).
// Equal elements can have many presentations; `equals` compares semantically.
struct Element {
  int arity = 1;
  Pattern dom, ran;
  std::vector<int> sigma;        // sigma[i] = range label of domain block i
  std::vector<CoordPerm> twist;  // twist[i] attached to domain block i

  std::size_t size() const { return dom.blocks.size(); }
};

inline std::vector<int> inverse_sigma(const std::vector<int>& sigma) {
  std::vector<int> inv(sigma.size(), -1);
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
  return inv;
}

inline void assert_element_ok(const Element& e) {
  if (e.dom.arity != e.arity || e.ran.arity != e.arity) {
    throw std::invalid_argument("element: pattern arity mismatch");
  }
  if (e.dom.blocks.size() != e.ran.blocks.size()) {
    throw std::invalid_argument("element: domain and range block counts differ");
  }
  const std::size_t m = e.dom.blocks.size();
  if (e.sigma.size() != m) throw std::invalid_argument("element: label map has wrong size");
  std::vector<bool> seen(m, false);
  for (int v : e.sigma) {
    if (v < 0 || static_cast<std::size_t>(v) >= m || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("element: label map is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (e.twist.size() != m) throw std::invalid_argument("element: twist list has wrong size");
  for (const auto& t : e.twist) {
    if (t.n() != e.arity) throw std::invalid_argument("element: twist degree differs from arity");
  }
  if (auto c = validate_pattern(e.dom); !c.ok()) {
    throw std::invalid_argument("element: invalid domain pattern: " + c.to_string());
  }
  if (auto c = validate_pattern(e.ran); !c.ok()) {
    throw std::invalid_argument("element: invalid range pattern: " + c.to_string());
  }
}

inline Element make_element(Pattern dom, Pattern ran, std::vector<int> sigma,
                            std::vector<CoordPerm> twist = {}) {
  Element e;
  e.arity = dom.arity;
  e.dom = std::move(dom);
  e.ran = std::move(ran);
  e.sigma = std::move(sigma);
  if (twist.empty()) {
    e.twist.assign(e.dom.blocks.size(), CoordPerm(e.arity));
  } else {
    e.twist = std::move(twist);
  }
  assert_element_ok(e);
  return e;
}

inline Element identity_element(int arity) {
  std::vector<int> sigma{0};
  return make_element(trivial_pattern(arity), trivial_pattern(arity), std::move(sigma));
}

// Rigid element: both patterns equal, blocks permuted (and possibly twisted).
inline Element make_identical_pair_element(Pattern p, std::vector<int> sigma,
                                           std::vector<CoordPerm> twist = {}) {
  Pattern q = p;
  return make_element(std::move(p), std::move(q), std::move(sigma), std::move(twist));
}

inline Element invert(const Element& f) {
  Element out;
  out.arity = f.arity;
  out.dom = f.ran;
  out.ran = f.dom;
  out.sigma = inverse_sigma(f.sigma);
  out.twist.reserve(f.twist.size());
  for (std::size_t j = 0; j < f.twist.size(); ++j) {
    out.twist.push_back(f.twist[static_cast<std::size_t>(out.sigma[j])].inverse());
  }
  return out;
}

// Halve domain block `label` along `axis`; the matched range block splits
// along the twisted axis, children correspond bit-for-bit and inherit the twist.
inline Element expand_element(const Element& f, int label, int axis) {
  if (label < 0 || static_cast<std::size_t>(label) >= f.size()) {
    throw std::invalid_argument("expand_element: label out of range");
  }
  if (axis < 1 || axis > f.arity) throw std::invalid_argument("expand_element: axis out of range");
  Element out;
  out.arity = f.arity;
  out.dom = split_block(f.dom, label, axis);
  out.ran = split_block(f.ran, f.sigma[static_cast<std::size_t>(label)],
                        f.twist[static_cast<std::size_t>(label)](axis));
  out.sigma = f.sigma;
  out.sigma.push_back(static_cast<int>(f.size()));  // 1-children pair up
  out.twist = f.twist;
  out.twist.push_back(f.twist[static_cast<std::size_t>(label)]);
  return out;
}

// Re-present f on the finer domain `target` (every target block must sit
// inside a domain block).  Result blocks follow target order with an identity
// label map.
inline Element expand_to_domain(const Element& f, const Pattern& target) {
  if (target.arity != f.arity) throw std::invalid_argument("expand_to_domain: arity mismatch");
  Element out;
  out.arity = f.arity;
  out.dom = target;
  out.ran.arity = f.arity;
  out.sigma.resize(target.blocks.size());
  std::iota(out.sigma.begin(), out.sigma.end(), 0);
  out.ran.blocks.reserve(target.blocks.size());
  out.twist.reserve(target.blocks.size());
  for (const auto& e : target.blocks) {
    const int j = find_containing_block(f.dom, e);
    if (j < 0) throw std::invalid_argument("expand_to_domain: target does not refine domain");
    const auto& g = f.twist[static_cast<std::size_t>(j)];
    // The suffix gained on domain axis a reappears on range axis g(a).
    MultiAddress img = f.ran.blocks[static_cast<std::size_t>(f.sigma[static_cast<std::size_t>(j)])];
    for (int a = 1; a <= f.arity; ++a) {
      const BinaryWord suffix = e.word(a).suffix_after(f.dom.blocks[static_cast<std::size_t>(j)].word(a));
      if (!suffix.empty()) img = img.with_word(g(a), img.word(g(a)).cat(suffix));
    }
    out.ran.blocks.push_back(std::move(img));
    out.twist.push_back(g);
  }
  return out;
}

// Re-present f so its range is exactly `target` (which must refine the range).
inline Element expand_to_range(const Element& f, const Pattern& target) {
  if (target.arity != f.arity) throw std::invalid_argument("expand_to_range: arity mismatch");
  const std::vector<int> sinv = inverse_sigma(f.sigma);
  Element out;
  out.arity = f.arity;
  out.ran = target;
  out.dom.arity = f.arity;
  out.sigma.resize(target.blocks.size());
  std::iota(out.sigma.begin(), out.sigma.end(), 0);
  out.dom.blocks.reserve(target.blocks.size());
  out.twist.reserve(target.blocks.size());
  for (const auto& e : target.blocks) {
    const int j = find_containing_block(f.ran, e);
    if (j < 0) throw std::invalid_argument("expand_to_range: target does not refine range");
    const int i = sinv[static_cast<std::size_t>(j)];
    const auto& g = f.twist[static_cast<std::size_t>(i)];
    // The suffix gained on range axis s was read from domain axis g^{-1}(s),
    // i.e. domain axis a gains the suffix of range axis g(a).
    MultiAddress pre = f.dom.blocks[static_cast<std::size_t>(i)];
    for (int a = 1; a <= f.arity; ++a) {
      const BinaryWord suffix = e.word(g(a)).suffix_after(f.ran.blocks[static_cast<std::size_t>(j)].word(g(a)));
      if (!suffix.empty()) pre = pre.with_word(a, pre.word(a).cat(suffix));
    }
    out.dom.blocks.push_back(std::move(pre));
    out.twist.push_back(g);
  }
  return out;
}

// Apply f first, then g.  Both are expanded over the common refinement of
// f's range and g's domain; nothing is reduced afterwards.
inline Element compose(const Element& f, const Element& g) {
  if (f.arity != g.arity) throw std::invalid_argument("compose: arity mismatch");
  const Pattern joint = common_refinement(f.ran, g.dom);
  Element fe = expand_to_range(f, joint);
  Element ge = expand_to_domain(g, joint);
  Element out;
  out.arity = f.arity;
  out.dom = std::move(fe.dom);
  out.ran = std::move(ge.ran);
  out.sigma.resize(joint.blocks.size());
  std::iota(out.sigma.begin(), out.sigma.end(), 0);
  out.twist.reserve(joint.blocks.size());
  for (std::size_t k = 0; k < joint.blocks.size(); ++k) {
    out.twist.push_back(fe.twist[k].then(ge.twist[k]));
  }
  return out;
}

namespace detail {

inline int index_of_block(const Pattern& p, const MultiAddress& addr) {
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (p.blocks[i] == addr) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace detail

// Greedily undo expansions: domain siblings whose images are matching range
// siblings (same child bits, along the twisted axis) with equal twists merge
// into their parents.  Deterministic scan order: axes ascending, domain blocks
// in address order.  The result represents the same map; distinct fully
// reduced presentations may still exist, so equality stays semantic.
inline Element reduce(Element f) {
  bool merged = true;
  while (merged) {
    merged = false;
    std::vector<int> order(f.dom.blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&f](int x, int y) {
      return f.dom.blocks[static_cast<std::size_t>(x)] < f.dom.blocks[static_cast<std::size_t>(y)];
    });
    for (int a = 1; a <= f.arity && !merged; ++a) {
      for (int i : order) {
        const MultiAddress& b = f.dom.blocks[static_cast<std::size_t>(i)];
        if (b.word(a).empty() || b.word(a).last_bit() != 0) continue;
        const int j = detail::index_of_block(f.dom, b.with_word(a, b.word(a).with_last_flipped()));
        if (j < 0) continue;
        if (!(f.twist[static_cast<std::size_t>(i)] == f.twist[static_cast<std::size_t>(j)])) continue;
        const int ga = f.twist[static_cast<std::size_t>(i)](a);
        const int ri = f.sigma[static_cast<std::size_t>(i)];
        const int rj = f.sigma[static_cast<std::size_t>(j)];
        const MultiAddress& rb = f.ran.blocks[static_cast<std::size_t>(ri)];
        if (rb.word(ga).empty() || rb.word(ga).last_bit() != 0) continue;
        if (!(f.ran.blocks[static_cast<std::size_t>(rj)] ==
              rb.with_word(ga, rb.word(ga).with_last_flipped()))) {
          continue;
        }

        Element next;
        next.arity = f.arity;
        next.dom.arity = f.arity;
        next.ran.arity = f.arity;
        std::vector<int> dom_map(f.dom.blocks.size(), -1), ran_map(f.ran.blocks.size(), -1);
        for (std::size_t k = 0; k < f.dom.blocks.size(); ++k) {
          if (static_cast<int>(k) == j) continue;
          dom_map[k] = static_cast<int>(next.dom.blocks.size());
          next.dom.blocks.push_back(static_cast<int>(k) == i
                                        ? b.with_word(a, b.word(a).parent())
                                        : f.dom.blocks[k]);
        }
        for (std::size_t l = 0; l < f.ran.blocks.size(); ++l) {
          if (static_cast<int>(l) == rj) continue;
          ran_map[l] = static_cast<int>(next.ran.blocks.size());
          next.ran.blocks.push_back(static_cast<int>(l) == ri
                                        ? rb.with_word(ga, rb.word(ga).parent())
                                        : f.ran.blocks[l]);
        }
        next.sigma.resize(next.dom.blocks.size());
        next.twist.resize(next.dom.blocks.size());
        for (std::size_t k = 0; k < f.dom.blocks.size(); ++k) {
          if (static_cast<int>(k) == j) continue;
          next.sigma[static_cast<std::size_t>(dom_map[k])] =
              ran_map[static_cast<std::size_t>(f.sigma[k])];
          next.twist[static_cast<std::size_t>(dom_map[k])] = f.twist[k];
        }
        f = std::move(next);
        merged = true;
        break;
      }
    }
  }
  return f;
}

// Semantic equality: expand both over the common refinement of the domains
// and compare image addresses and twists block by block.  Exact and total.
inline bool equals(const Element& f, const Element& g) {
  if (f.arity != g.arity) throw std::invalid_argument("equals: arity mismatch");
  const Pattern joint = common_refinement(f.dom, g.dom);
  const Element fe = expand_to_domain(f, joint);
  const Element ge = expand_to_domain(g, joint);
  for (std::size_t k = 0; k < joint.blocks.size(); ++k) {
    if (!(fe.ran.blocks[k] == ge.ran.blocks[k]) || !(fe.twist[k] == ge.twist[k])) return false;
  }
  return true;
}

// k-th power, multiplying new factors on the right; k = 0 is the identity.
// Without auto_reduce the intermediate presentations are kept as composed,
// which is what the growth profile instruments.
inline Element power(const Element& f, long long k, bool auto_reduce) {
  if (k < 0) return power(invert(f), -k, auto_reduce);
  if (k == 0) return identity_element(f.arity);
  Element acc = auto_reduce ? reduce(f) : f;
  for (long long s = 2; s <= k; ++s) {
    acc = compose(acc, f);
    if (auto_reduce) acc = reduce(acc);
  }
  return acc;
}

// Place an arity-1 element on one axis of the n-cube, identity elsewhere.
inline Element embed_on_axis(const Element& line, int axis, int arity) {
  if (line.arity != 1) throw std::invalid_argument("embed_on_axis: source must have arity 1");
  if (axis < 1 || axis > arity) throw std::invalid_argument("embed_on_axis: axis out of range");
  auto lift = [&](const Pattern& p) {
    Pattern out;
    out.arity = arity;
    out.blocks.reserve(p.blocks.size());
    for (const auto& b : p.blocks) {
      out.blocks.push_back(MultiAddress::trivial(arity).with_word(axis, b.word(1)));
    }
    return out;
  };
  return make_element(lift(line.dom), lift(line.ran), line.sigma);
}

// Image of a refinement of the domain, as a sorted pattern.
inline Pattern image_pattern(const Element& f, const Pattern& refinement_of_dom) {
  return canonical(expand_to_domain(f, refinement_of_dom).ran);
}

// f permutes the blocks of p (possibly with twists) without cutting them.
// Checked over the joint refinement of f's domain with p, so f's own
// presentation may be coarser or finer than p: every piece of a p-block must
// land in one common target block, with one common twist, at the rigidly
// transported relative address.
inline bool is_rigid_on(const Element& f, const Pattern& p) {
  const Pattern joint = common_refinement(f.dom, p);
  const Element fe = expand_to_domain(f, joint);
  std::vector<int> target(p.blocks.size(), -1);
  std::vector<CoordPerm> tw(p.blocks.size(), CoordPerm(f.arity));
  std::vector<bool> seen(p.blocks.size(), false);
  for (std::size_t k = 0; k < joint.blocks.size(); ++k) {
    const int pi = find_containing_block(p, joint.blocks[k]);
    if (pi < 0) return false;  // joint refines p by construction; defensive
    const int po = find_containing_block(p, fe.ran.blocks[k]);
    if (po < 0) return false;  // image straddles p-blocks
    const auto& g = fe.twist[k];
    if (seen[static_cast<std::size_t>(pi)]) {
      if (target[static_cast<std::size_t>(pi)] != po || !(tw[static_cast<std::size_t>(pi)] == g)) {
        return false;
      }
    } else {
      seen[static_cast<std::size_t>(pi)] = true;
      target[static_cast<std::size_t>(pi)] = po;
      tw[static_cast<std::size_t>(pi)] = g;
    }
    // Piece at relative address rho inside its p-block must land at the
    // twisted relative address inside the target p-block.
    for (int a = 1; a <= f.arity; ++a) {
      const BinaryWord rho =
          joint.blocks[k].word(a).suffix_after(p.blocks[static_cast<std::size_t>(pi)].word(a));
      const BinaryWord img_rho = fe.ran.blocks[k].word(g(a)).suffix_after(
          p.blocks[static_cast<std::size_t>(po)].word(g(a)));
      if (!(rho == img_rho)) return false;
    }
  }
  std::vector<int> t;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (!seen[i]) return false;
    t.push_back(target[i]);
  }
  std::sort(t.begin(), t.end());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != static_cast<int>(i)) return false;  // must be a bijection
  }
  return true;
}

}  // namespace nvcalc
