#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "element.hpp"
#include "pattern.hpp"
#include "rng.hpp"
#include "word.hpp"

namespace nvcalc {

// One coordinate of a point of the Cantor cube: an eventually periodic bit
// stream prefix . period period period ...  Canonical form (shortest period,
// then shortest prefix) is unique, so operator== decides stream equality.
class AxisStream {
 public:
  AxisStream(std::string prefix, std::string period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("axis stream: empty period");
    for (char c : prefix_) {
      if (c != '0' && c != '1') throw std::invalid_argument("axis stream: bad prefix bit");
    }
    for (char c : period_) {
      if (c != '0' && c != '1') throw std::invalid_argument("axis stream: bad period bit");
    }
    canonicalize();
  }

  std::size_t prefix_size() const { return prefix_.size(); }
  std::size_t period_size() const { return period_.size(); }

  int bit_at(std::size_t k) const {
    if (k < prefix_.size()) return prefix_[k] - '0';
    return period_[(k - prefix_.size()) % period_.size()] - '0';
  }

  bool starts_with(const BinaryWord& w) const {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (bit_at(k) != w.bit(k)) return false;
    }
    return true;
  }

  // Stream with the first k bits removed.
  AxisStream dropped(std::size_t k) const {
    if (k <= prefix_.size()) return AxisStream(prefix_.substr(k), period_);
    const std::size_t r = (k - prefix_.size()) % period_.size();
    return AxisStream(std::string(), period_.substr(r) + period_.substr(0, r));
  }

  AxisStream prepended(const BinaryWord& w) const {
    return AxisStream(w.str() + prefix_, period_);
  }

  // "prefix:period", 'e' standing for the empty prefix.
  std::string to_string() const {
    return (prefix_.empty() ? std::string("e") : prefix_) + ":" + period_;
  }

  friend bool operator==(const AxisStream&, const AxisStream&) = default;
  friend auto operator<=>(const AxisStream&, const AxisStream&) = default;

 private:
  void canonicalize() {
    // Shortest period: the smallest divisor length whose repetition matches.
    for (std::size_t d = 1; d < period_.size(); ++d) {
      if (period_.size() % d != 0) continue;
      bool ok = true;
      for (std::size_t k = d; k < period_.size() && ok; ++k) {
        ok = period_[k] == period_[k % d];
      }
      if (ok) {
        period_.resize(d);
        break;
      }
    }
    // Shortest prefix: a prefix ending with the period's last bit can hand
    // that bit to the loop (rotate the period right by one).
    while (!prefix_.empty() && prefix_.back() == period_.back()) {
      prefix_.pop_back();
      period_ = period_.back() + period_.substr(0, period_.size() - 1);
    }
  }

  std::string prefix_, period_;
};

// A point of the n-fold Cantor cube.
struct CantorPoint {
  std::vector<AxisStream> axes;

  int arity() const { return static_cast<int>(axes.size()); }
  const AxisStream& axis(int a) const { return axes[static_cast<std::size_t>(a - 1)]; }

  std::string to_string() const {
    std::string out;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      if (a) out += ",";
      out += axes[a].to_string();
    }
    return out;
  }

  friend bool operator==(const CantorPoint&, const CantorPoint&) = default;
};

inline bool agree(const CantorPoint& x, const CantorPoint& y) { return x == y; }

inline bool block_contains_point(const MultiAddress& b, const CantorPoint& x) {
  for (int a = 1; a <= static_cast<int>(b.arity()); ++a) {
    if (!x.axis(a).starts_with(b.word(a))) return false;
  }
  return true;
}

// Index of the unique pattern block containing x.
inline int locate_block(const Pattern& p, const CantorPoint& x) {
  if (p.arity != x.arity()) throw std::invalid_argument("locate_block: arity mismatch");
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (block_contains_point(p.blocks[i], x)) return static_cast<int>(i);
  }
  throw std::logic_error("locate_block: point not covered (invalid pattern?)");
}

// Apply the element to a point: strip the domain block's address, route the
// residual streams through the twist (output axis s reads what entered on
// axis twist^{-1}(s)), and graft on the range block's address.
inline CantorPoint apply(const Element& f, const CantorPoint& x) {
  if (f.arity != x.arity()) throw std::invalid_argument("apply: arity mismatch");
  const int i = locate_block(f.dom, x);
  const auto& d = f.dom.blocks[static_cast<std::size_t>(i)];
  const auto& r = f.ran.blocks[static_cast<std::size_t>(f.sigma[static_cast<std::size_t>(i)])];
  const auto& g = f.twist[static_cast<std::size_t>(i)];
  const CoordPerm ginv = g.inverse();
  CantorPoint out;
  out.axes.reserve(x.axes.size());
  for (int s = 1; s <= f.arity; ++s) {
    const int a = ginv(s);
    out.axes.push_back(x.axis(a).dropped(d.word(a).size()).prepended(r.word(s)));
  }
  return out;
}

// Deterministic pseudo-random sample, used as a cheap conjugacy-free
// fingerprint of an element's action (never as a proof of equality).
inline std::vector<CantorPoint> sample_points(std::uint64_t seed, int count, int arity) {
  SplitMix64 rng(seed);
  std::vector<CantorPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    CantorPoint x;
    x.axes.reserve(static_cast<std::size_t>(arity));
    for (int a = 0; a < arity; ++a) {
      std::string prefix, period;
      const std::size_t np = static_cast<std::size_t>(rng.below(9));
      for (std::size_t k = 0; k < np; ++k) prefix += rng.bit() ? '1' : '0';
      const std::size_t nq = 1 + static_cast<std::size_t>(rng.below(4));
      for (std::size_t k = 0; k < nq; ++k) period += rng.bit() ? '1' : '0';
      x.axes.emplace_back(std::move(prefix), std::move(period));
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace nvcalc
