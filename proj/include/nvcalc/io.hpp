#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "growth.hpp"
#include "pattern.hpp"
#include "perm.hpp"
#include "point.hpp"
#include "word.hpp"

namespace nvcalc {
namespace detail {

inline std::string trimmed(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trimmed(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trimmed(cur));
  return out;
}

inline long long parse_int(const std::string& tok, int line, const char* what) {
  if (tok.empty()) throw parse_error(line, std::string("missing ") + what);
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw parse_error(line, std::string("bad ") + what + " '" + tok + "'");
  }
  if (pos != tok.size()) throw parse_error(line, std::string("bad ") + what + " '" + tok + "'");
  return v;
}

// Document form of a block address: one word per axis, comma separated.
inline std::string address_text(const MultiAddress& b) {
  std::string s;
  for (std::size_t i = 0; i < b.words().size(); ++i) {
    if (i) s += " , ";
    s += b.words()[i].display();
  }
  return s;
}

inline BinaryWord parse_word(const std::string& tok, int line) {
  if (tok == "e") return BinaryWord();
  for (char c : tok) {
    if (c != '0' && c != '1') throw parse_error(line, "bad word '" + tok + "'");
  }
  if (tok.empty()) throw parse_error(line, "empty word (use 'e')");
  return BinaryWord(tok);
}

}  // namespace detail

// Cycle notation for a coordinate permutation: "(1 2)(3 4)", "()" for the
// identity.  Axes are 1-based and each may appear at most once.
inline CoordPerm parse_cycles(const std::string& text, int arity, int line = 0) {
  std::vector<int> img(static_cast<std::size_t>(arity));
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(arity) + 1, false);
  std::size_t k = 0;
  const std::string s = detail::trimmed(text);
  if (s.empty()) throw parse_error(line, "empty twist (use '()')");
  while (k < s.size()) {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    if (k >= s.size()) break;
    if (s[k] != '(') throw parse_error(line, "twist cycles must look like '(1 2)'");
    ++k;
    std::vector<int> cycle;
    while (k < s.size() && s[k] != ')') {
      while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
      if (k < s.size() && s[k] == ')') break;
      std::string num;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) num += s[k++];
      if (num.empty()) throw parse_error(line, "twist cycles must list axis numbers");
      const long long a = detail::parse_int(num, line, "axis");
      if (a < 1 || a > arity) throw parse_error(line, "twist axis out of range");
      if (used[static_cast<std::size_t>(a)]) throw parse_error(line, "twist axis repeated");
      used[static_cast<std::size_t>(a)] = true;
      cycle.push_back(static_cast<int>(a));
    }
    if (k >= s.size()) throw parse_error(line, "unterminated twist cycle");
    ++k;  // ')'
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      img[static_cast<std::size_t>(cycle[t] - 1)] = cycle[(t + 1) % cycle.size()];
    }
  }
  return CoordPerm::from_images(img);
}

// Element document grammar (one directive per line, '#' starts a comment):
//   nv <arity>
//   blocks <m>
//   group <tag>            optional, informational
//   D <label> : w , ... , w    (m lines, arity words each; 'e' = empty word)
//   R <label> : w , ... , w
//   map a->b ; a->b ; ...      optional, identity when absent
//   twist <label> : (cycles)   optional per label, identity when absent
// Structural faults (bad words, repeated or missing labels, a non-bijective
// map) are parse errors; pattern geometry is checked only when validate=true.
inline Element parse_element(const std::string& text, bool validate = true) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  int arity = -1, blocks = -1;
  std::vector<MultiAddress> dom, ran;
  std::vector<bool> have_d, have_r;
  std::vector<int> sigma;
  bool have_map = false;
  std::vector<CoordPerm> twist;
  std::vector<bool> have_twist;

  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    const std::string line = detail::trimmed(raw);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string head;
    ls >> head;

    if (head == "nv") {
      if (arity != -1) throw parse_error(lineno, "repeated 'nv' line");
      std::string tok;
      ls >> tok;
      const long long n = detail::parse_int(tok, lineno, "arity");
      if (n < 1 || n > 64) throw parse_error(lineno, "arity out of range");
      arity = static_cast<int>(n);
      continue;
    }
    if (arity == -1) throw parse_error(lineno, "expected 'nv <arity>' first");

    if (head == "blocks") {
      if (blocks != -1) throw parse_error(lineno, "repeated 'blocks' line");
      std::string tok;
      ls >> tok;
      const long long m = detail::parse_int(tok, lineno, "block count");
      if (m < 1) throw parse_error(lineno, "block count out of range");
      blocks = static_cast<int>(m);
      dom.assign(static_cast<std::size_t>(m), MultiAddress::trivial(arity));
      ran.assign(static_cast<std::size_t>(m), MultiAddress::trivial(arity));
      have_d.assign(static_cast<std::size_t>(m), false);
      have_r.assign(static_cast<std::size_t>(m), false);
      sigma.resize(static_cast<std::size_t>(m));
      std::iota(sigma.begin(), sigma.end(), 0);
      twist.assign(static_cast<std::size_t>(m), CoordPerm(arity));
      have_twist.assign(static_cast<std::size_t>(m), false);
      continue;
    }
    if (blocks == -1) throw parse_error(lineno, "expected 'blocks <m>' before this line");

    if (head == "group") {
      continue;  // informational tag, accepted and ignored
    }

    if (head == "D" || head == "R") {
      std::string rest;
      std::getline(ls, rest);
      const auto colon = rest.find(':');
      if (colon == std::string::npos) throw parse_error(lineno, "expected ':' in block line");
      const long long label =
          detail::parse_int(detail::trimmed(rest.substr(0, colon)), lineno, "label");
      if (label < 0 || label >= blocks) throw parse_error(lineno, "label out of range");
      const auto words = detail::split_on(rest.substr(colon + 1), ',');
      if (static_cast<int>(words.size()) != arity) {
        throw parse_error(lineno, "expected one word per axis");
      }
      std::vector<BinaryWord> ws;
      for (const auto& w : words) ws.push_back(detail::parse_word(w, lineno));
      auto& have = (head == "D") ? have_d : have_r;
      if (have[static_cast<std::size_t>(label)]) {
        throw parse_error(lineno, "repeated " + head + " label " + std::to_string(label));
      }
      have[static_cast<std::size_t>(label)] = true;
      ((head == "D") ? dom : ran)[static_cast<std::size_t>(label)] = MultiAddress(std::move(ws));
      continue;
    }

    if (head == "map") {
      if (have_map) throw parse_error(lineno, "repeated 'map' line");
      have_map = true;
      std::string rest;
      std::getline(ls, rest);
      std::vector<bool> src(static_cast<std::size_t>(blocks), false);
      std::vector<bool> dst(static_cast<std::size_t>(blocks), false);
      for (const auto& pair : detail::split_on(rest, ';')) {
        const auto arrow = pair.find("->");
        if (arrow == std::string::npos) throw parse_error(lineno, "map entries look like 'a->b'");
        const long long a = detail::parse_int(detail::trimmed(pair.substr(0, arrow)), lineno, "label");
        const long long b =
            detail::parse_int(detail::trimmed(pair.substr(arrow + 2)), lineno, "label");
        if (a < 0 || a >= blocks || b < 0 || b >= blocks) {
          throw parse_error(lineno, "map label out of range");
        }
        if (src[static_cast<std::size_t>(a)] || dst[static_cast<std::size_t>(b)]) {
          throw parse_error(lineno, "map is not a bijection");
        }
        src[static_cast<std::size_t>(a)] = dst[static_cast<std::size_t>(b)] = true;
        sigma[static_cast<std::size_t>(a)] = static_cast<int>(b);
      }
      for (int i = 0; i < blocks; ++i) {
        if (!src[static_cast<std::size_t>(i)]) throw parse_error(lineno, "map is not a bijection");
      }
      continue;
    }

    if (head == "twist") {
      std::string rest;
      std::getline(ls, rest);
      const auto colon = rest.find(':');
      if (colon == std::string::npos) throw parse_error(lineno, "expected ':' in twist line");
      const long long label =
          detail::parse_int(detail::trimmed(rest.substr(0, colon)), lineno, "label");
      if (label < 0 || label >= blocks) throw parse_error(lineno, "label out of range");
      if (have_twist[static_cast<std::size_t>(label)]) {
        throw parse_error(lineno, "repeated twist label " + std::to_string(label));
      }
      have_twist[static_cast<std::size_t>(label)] = true;
      try {
        twist[static_cast<std::size_t>(label)] = parse_cycles(rest.substr(colon + 1), arity, lineno);
      } catch (const std::invalid_argument& ex) {
        throw parse_error(lineno, ex.what());
      }
      continue;
    }

    throw parse_error(lineno, "unknown directive '" + head + "'");
  }

  if (arity == -1) throw parse_error(lineno, "missing 'nv <arity>' line");
  if (blocks == -1) throw parse_error(lineno, "missing 'blocks <m>' line");
  for (int i = 0; i < blocks; ++i) {
    if (!have_d[static_cast<std::size_t>(i)]) {
      throw parse_error(lineno, "missing D line for label " + std::to_string(i));
    }
    if (!have_r[static_cast<std::size_t>(i)]) {
      throw parse_error(lineno, "missing R line for label " + std::to_string(i));
    }
  }

  Element e;
  e.arity = arity;
  e.dom = Pattern{arity, std::move(dom)};
  e.ran = Pattern{arity, std::move(ran)};
  e.sigma = std::move(sigma);
  e.twist = std::move(twist);
  if (validate) assert_element_ok(e);
  return e;
}

// Canonical text form: both patterns sorted by address and relabeled, the map
// rewritten to match, twists listed only when non-trivial, LF line endings.
// Serializing any two presentations of the same block data gives equal bytes.
inline std::string serialize_element(const Element& e) {
  const std::size_t m = e.dom.blocks.size();
  std::vector<int> dperm(m), rperm(m);
  std::iota(dperm.begin(), dperm.end(), 0);
  std::iota(rperm.begin(), rperm.end(), 0);
  std::sort(dperm.begin(), dperm.end(), [&e](int a, int b) {
    return e.dom.blocks[static_cast<std::size_t>(a)] < e.dom.blocks[static_cast<std::size_t>(b)];
  });
  std::sort(rperm.begin(), rperm.end(), [&e](int a, int b) {
    return e.ran.blocks[static_cast<std::size_t>(a)] < e.ran.blocks[static_cast<std::size_t>(b)];
  });
  std::vector<int> rinv(m);
  for (std::size_t k = 0; k < m; ++k) rinv[static_cast<std::size_t>(rperm[k])] = static_cast<int>(k);

  bool any_twist = false;
  for (const auto& t : e.twist) any_twist = any_twist || !t.is_identity();

  std::ostringstream out;
  out << "nv " << e.arity << "\n";
  out << "blocks " << m << "\n";
  if (any_twist) out << "group S" << e.arity << "\n";
  for (std::size_t k = 0; k < m; ++k) {
    out << "D " << k << " : "
        << detail::address_text(e.dom.blocks[static_cast<std::size_t>(dperm[k])]) << "\n";
  }
  for (std::size_t k = 0; k < m; ++k) {
    out << "R " << k << " : "
        << detail::address_text(e.ran.blocks[static_cast<std::size_t>(rperm[k])]) << "\n";
  }
  out << "map ";
  for (std::size_t k = 0; k < m; ++k) {
    if (k) out << " ; ";
    out << k << "->" << rinv[static_cast<std::size_t>(e.sigma[static_cast<std::size_t>(dperm[k])])];
  }
  out << "\n";
  for (std::size_t k = 0; k < m; ++k) {
    const auto& t = e.twist[static_cast<std::size_t>(dperm[k])];
    if (!t.is_identity()) out << "twist " << k << " : " << t.to_cycle_string() << "\n";
  }
  return out.str();
}

// Point literal: one 'prefix:period' per axis, comma separated, 'e' for the
// empty prefix.  Example for arity 2: "10:1,e:01".
inline CantorPoint parse_point(const std::string& text, int arity, int line = 0) {
  const auto parts = detail::split_on(text, ',');
  if (static_cast<int>(parts.size()) != arity) {
    throw parse_error(line, "expected one axis stream per axis");
  }
  CantorPoint x;
  for (const auto& part : parts) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw parse_error(line, "axis stream looks like 'prefix:period'");
    std::string prefix = detail::trimmed(part.substr(0, colon));
    std::string period = detail::trimmed(part.substr(colon + 1));
    if (prefix == "e") prefix.clear();
    for (char c : prefix + period) {
      if (c != '0' && c != '1') throw parse_error(line, "axis stream has non-bit characters");
    }
    if (period.empty()) throw parse_error(line, "axis stream period is empty");
    x.axes.emplace_back(std::move(prefix), std::move(period));
  }
  return x;
}

inline std::string format_point(const CantorPoint& x) { return x.to_string(); }

inline std::string profile_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream out;
  out << "i,Tp,Tp_red,Cp,Dp,I,R,m,m_red\n";
  for (const auto& r : rows) {
    out << r.i << ',' << r.Tp << ',' << r.Tp_red << ',' << r.Cp << ',' << r.Dp << ',' << r.I
        << ',' << r.R << ',' << r.m << ',' << r.m_red << "\n";
  }
  return out.str();
}

}  // namespace nvcalc
