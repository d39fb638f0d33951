#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nvcalc {

// Finite binary word addressing a dyadic interval of [0,1]: the empty word is
// the whole interval, appending 0 keeps the first half, appending 1 the
// second half.  Comparison is plain string order, which is what the canonical
// block ordering below relies on.
class BinaryWord {
public:
  BinaryWord() = default;
  explicit BinaryWord(std::string_view bits) : bits_(bits) {
    for (char c : bits_) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("binary word may contain only 0/1, got: " + bits_);
      }
    }
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int bit(std::size_t i) const { return bits_.at(i) == '1' ? 1 : 0; }
  int last_bit() const { return bit(bits_.size() - 1); }

  BinaryWord child(int b) const {
    BinaryWord w = *this;
    w.bits_.push_back(b ? '1' : '0');
    return w;
  }

  BinaryWord parent() const {
    if (empty()) throw std::invalid_argument("empty word has no parent");
    BinaryWord w = *this;
    w.bits_.pop_back();
    return w;
  }

  BinaryWord with_last_flipped() const {
    if (empty()) throw std::invalid_argument("empty word has no last bit");
    BinaryWord w = *this;
    w.bits_.back() = (w.bits_.back() == '0') ? '1' : '0';
    return w;
  }

  bool is_prefix_of(const BinaryWord& w) const {
    return bits_.size() <= w.bits_.size() && w.bits_.compare(0, bits_.size(), bits_) == 0;
  }

  // Either word is a prefix of the other (their intervals nest).
  bool comparable(const BinaryWord& w) const { return is_prefix_of(w) || w.is_prefix_of(*this); }

  BinaryWord suffix_after(const BinaryWord& prefix) const {
    if (!prefix.is_prefix_of(*this)) throw std::invalid_argument("suffix_after: not a prefix");
    return BinaryWord(std::string_view(bits_).substr(prefix.size()));
  }

  BinaryWord cat(const BinaryWord& tail) const { return BinaryWord(bits_ + tail.bits_); }

  // Canonical name of the hyperplane through the right endpoint of this
  // interval: the unique word whose interval has that endpoint as midpoint.
  // Empty result means the endpoint is 1 (the cube boundary, not a cut).
  std::optional<BinaryWord> right_cut() const {
    std::string s = bits_;
    while (!s.empty() && s.back() == '1') s.pop_back();
    if (s.empty()) return std::nullopt;
    s.pop_back();  // drop trailing '0'; the remaining word's midpoint is this endpoint
    return BinaryWord(s);
  }

  // Numeric value of the bits (left endpoint is value()/2^size()).
  std::uint64_t value() const {
    if (bits_.size() > 63) throw std::invalid_argument("word too deep for numeric value");
    std::uint64_t v = 0;
    for (char c : bits_) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    return v;
  }

  const std::string& str() const { return bits_; }
  std::string display() const { return bits_.empty() ? std::string("e") : bits_; }

  auto operator<=>(const BinaryWord&) const = default;

private:
  std::string bits_;
};

// Address of one dyadic block of the n-cube: one word per axis.  Axes are
// 1-based on the public surface.
class MultiAddress {
public:
  MultiAddress() = default;
  explicit MultiAddress(std::vector<BinaryWord> words) : words_(std::move(words)) {
    if (words_.empty()) throw std::invalid_argument("block address needs at least one axis");
  }

  static MultiAddress trivial(int arity) {
    if (arity < 1) throw std::invalid_argument("arity must be >= 1");
    return MultiAddress(std::vector<BinaryWord>(static_cast<std::size_t>(arity)));
  }

  int arity() const { return static_cast<int>(words_.size()); }

  const BinaryWord& word(int axis) const {
    check_axis(axis);
    return words_[static_cast<std::size_t>(axis - 1)];
  }

  MultiAddress with_word(int axis, BinaryWord w) const {
    check_axis(axis);
    MultiAddress a = *this;
    a.words_[static_cast<std::size_t>(axis - 1)] = std::move(w);
    return a;
  }

  MultiAddress split_child(int axis, int bit) const {
    return with_word(axis, word(axis).child(bit));
  }

  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& w : words_) d += w.size();
    return d;
  }

  // Every word of *this is a prefix of the corresponding word of `finer`.
  bool contains(const MultiAddress& finer) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (!words_[i].is_prefix_of(finer.words_[i])) return false;
    }
    return true;
  }

  // Disjoint interiors: some axis where neither word is a prefix of the other.
  bool disjoint_from(const MultiAddress& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (!words_[i].comparable(o.words_[i])) return true;
    }
    return false;
  }

  // Intersection block if the two blocks meet (per axis the longer word wins).
  std::optional<MultiAddress> intersect(const MultiAddress& o) const {
    std::vector<BinaryWord> out;
    out.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i].is_prefix_of(o.words_[i])) {
        out.push_back(o.words_[i]);
      } else if (o.words_[i].is_prefix_of(words_[i])) {
        out.push_back(words_[i]);
      } else {
        return std::nullopt;
      }
    }
    return MultiAddress(std::move(out));
  }

  const std::vector<BinaryWord>& words() const { return words_; }

  std::string display() const {
    std::string s = "(";
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (i) s += ",";
      s += words_[i].display();
    }
    s += ")";
    return s;
  }

  auto operator<=>(const MultiAddress&) const = default;

private:
  void check_axis(int axis) const {
    if (axis < 1 || axis > arity()) throw std::invalid_argument("axis out of range");
  }

  std::vector<BinaryWord> words_;
};

}  // namespace nvcalc
