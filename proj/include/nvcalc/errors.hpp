#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nvcalc {

// Input text could not be parsed; `line` is 1-based.
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& reason)
      : std::runtime_error("parse-error(line " + std::to_string(line) + "): " + reason),
        line_(line),
        reason_(reason) {}
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

private:
  std::size_t line_;
  std::string reason_;
};

// A bounded closure or search hit its configured budget before finishing.
class budget_exceeded : public std::runtime_error {
public:
  explicit budget_exceeded(std::size_t reached)
      : std::runtime_error("budget-exceeded(" + std::to_string(reached) + ")"), reached_(reached) {}
  std::size_t reached() const { return reached_; }

private:
  std::size_t reached_;
};

// A brute-force candidate space is too large to enumerate.
class enumeration_too_large : public std::runtime_error {
public:
  explicit enumeration_too_large(unsigned long long estimate)
      : std::runtime_error("enumeration-too-large(" + std::to_string(estimate) + ")"),
        estimate_(estimate) {}
  unsigned long long estimate() const { return estimate_; }

private:
  unsigned long long estimate_;
};

}  // namespace nvcalc
