#pragma once

#include <stdexcept>
#include <string>

namespace chardeg {

/// A computation would exceed a configured size bound (partition counts,
/// group orders, enumeration ranges).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs fall outside the hypotheses under which a bound is asserted.
class OutOfHypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The group is deliberately excluded from a check (e.g. PSL2 for the 3/8
/// Steinberg bound).
class ExcludedCaseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A character family for which no invariance criterion is modeled.
class UnsupportedFamilyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace chardeg
