#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nvcalc {

inline unsigned long long lcm_checked(unsigned long long a, unsigned long long b) {
  unsigned long long g = std::gcd(a, b);
  unsigned long long q = a / g;
  if (b != 0 && q > ~0ull / b) throw std::overflow_error("lcm overflow");
  return q * b;
}

// Permutation of the coordinate axes {1..n}.  Also reused for the rigid part
// of block permutations after relabelling to 1-based positions.
class CoordPerm {
public:
  CoordPerm() = default;

  explicit CoordPerm(int n) : img_(static_cast<std::size_t>(n)) {
    if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
    std::iota(img_.begin(), img_.end(), 1);
  }

  static CoordPerm from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
        throw std::invalid_argument("images do not form a permutation of 1..n");
      }
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
    CoordPerm p;
    p.img_ = std::move(images);
    return p;
  }

  int n() const { return static_cast<int>(img_.size()); }

  int operator()(int axis) const {
    if (axis < 1 || axis > n()) throw std::invalid_argument("axis out of range");
    return img_[static_cast<std::size_t>(axis - 1)];
  }

  CoordPerm inverse() const {
    std::vector<int> inv(img_.size());
    for (int a = 1; a <= n(); ++a) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(a - 1)] - 1)] = a;
    return from_images(std::move(inv));
  }

  // Apply *this first, then `after`.
  CoordPerm then(const CoordPerm& after) const {
    if (after.n() != n()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> out(img_.size());
    for (int a = 1; a <= n(); ++a) out[static_cast<std::size_t>(a - 1)] = after((*this)(a));
    return from_images(std::move(out));
  }

  bool is_identity() const {
    for (int a = 1; a <= n(); ++a) {
      if ((*this)(a) != a) return false;
    }
    return true;
  }

  // Nontrivial cycles, each starting at its least element, sorted by that element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int a = 1; a <= n(); ++a) {
      if (seen[static_cast<std::size_t>(a - 1)]) continue;
      std::vector<int> cyc;
      int cur = a;
      while (!seen[static_cast<std::size_t>(cur - 1)]) {
        seen[static_cast<std::size_t>(cur - 1)] = true;
        cyc.push_back(cur);
        cur = (*this)(cur);
      }
      if (cyc.size() > 1) out.push_back(std::move(cyc));
    }
    return out;
  }

  unsigned long long order() const {
    unsigned long long o = 1;
    for (const auto& c : cycles()) o = lcm_checked(o, c.size());
    return o;
  }

  // "(1 2)(3 4)"; identity renders as "()".
  std::string to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += "(";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(c[i]);
      }
      s += ")";
    }
    return s;
  }

  auto operator<=>(const CoordPerm&) const = default;

private:
  std::vector<int> img_;  // img_[a-1] = image of axis a
};

}  // namespace nvcalc
