#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "pattern.hpp"

namespace nvcalc {
namespace detail {

// All geometry is exact: a square of side 2^d scaled to at least 256, so every
// block corner is an integer and re-rendering is byte-stable.
struct SvgScale {
  long long side = 0;   // drawn square side
  long long unit = 0;   // side / 2^d
  int depth = 0;
};

inline int max_word_depth(const Pattern& p) {
  int d = 0;
  for (const auto& b : p.blocks) {
    for (const auto& w : b.words()) d = std::max(d, static_cast<int>(w.size()));
  }
  return d;
}

inline SvgScale svg_scale(int depth) {
  if (depth > 32) throw std::invalid_argument("render: blocks deeper than 32 bits");
  SvgScale s;
  s.depth = depth;
  const long long span = 1LL << depth;
  s.unit = span >= 256 ? 1 : 256 / span;
  s.side = span * s.unit;
  return s;
}

// x-offset (or y-offset) and extent of a word's interval in drawn units.
inline std::pair<long long, long long> word_span(const BinaryWord& w, const SvgScale& s) {
  long long offset = 0;
  long long extent = s.side;
  for (std::size_t k = 0; k < w.size(); ++k) {
    extent /= 2;
    if (w.bit(k) == 1) offset += extent;
  }
  return {offset, extent};
}

inline const char* svg_palette(int i) {
  static const char* colors[] = {"#cfe8ff", "#ffe0cc", "#d6f5d6", "#f5d6eb",
                                 "#fff3bf", "#e0d9ff", "#d9f2f2", "#f2d9d9"};
  return colors[i % 8];
}

inline void svg_block(std::ostringstream& out, const MultiAddress& b, const SvgScale& s,
                      long long x0, const std::string& fill, const std::string& label) {
  const auto [x, w] = word_span(b.word(1), s);
  const auto [y, h] = word_span(b.word(2), s);  // axis-2 bit 0 is the top half
  out << "<rect x=\"" << (x0 + x) << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
      << "\" fill=\"" << fill << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  const long long fs = std::max<long long>(1, std::min(w, h) / 3);
  out << "<text x=\"" << (x0 + x + w / 2) << "\" y=\"" << (y + h / 2) << "\" font-size=\"" << fs
      << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-family=\"monospace\">"
      << label << "</text>\n";
}

inline std::string svg_document(long long width, long long height, const std::string& body) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " " << height
      << "\">\n"
      << body << "</svg>\n";
  return out.str();
}

}  // namespace detail

// Draw an arity-2 pattern as a subdivided square (axis 1 horizontal, axis 2
// vertical with bit 0 on top), blocks labeled by position.
inline std::string render_svg(const Pattern& p) {
  if (p.arity != 2) throw std::invalid_argument("render: only arity 2 can be drawn");
  const auto s = detail::svg_scale(detail::max_word_depth(p));
  std::ostringstream body;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    detail::svg_block(body, p.blocks[i], s, 0, detail::svg_palette(static_cast<int>(i)),
                      std::to_string(i));
  }
  return detail::svg_document(s.side, s.side, body.str());
}

// Draw an arity-2 element: domain square left, range square right.  The block
// numbered i on the left maps onto the block numbered i on the right (range
// labels are routed through the inverse of the label map), matching colors;
// a non-trivial twist is printed after the domain label.
inline std::string render_svg(const Element& e) {
  if (e.arity != 2) throw std::invalid_argument("render: only arity 2 can be drawn");
  const int depth = std::max(detail::max_word_depth(e.dom), detail::max_word_depth(e.ran));
  const auto s = detail::svg_scale(depth);
  const long long gap = std::max<long long>(1, s.side / 8);
  std::ostringstream body;
  const std::vector<int> sinv = inverse_sigma(e.sigma);
  for (std::size_t i = 0; i < e.dom.blocks.size(); ++i) {
    std::string label = std::to_string(i);
    if (!e.twist[i].is_identity()) label += " " + e.twist[i].to_cycle_string();
    detail::svg_block(body, e.dom.blocks[i], s, 0, detail::svg_palette(static_cast<int>(i)), label);
  }
  for (std::size_t j = 0; j < e.ran.blocks.size(); ++j) {
    const int i = sinv[j];
    detail::svg_block(body, e.ran.blocks[j], s, s.side + gap, detail::svg_palette(i),
                      std::to_string(i));
  }
  return detail::svg_document(2 * s.side + gap, s.side, body.str());
}

}  // namespace nvcalc
