#pragma once

#include <stdexcept>
#include <string>

namespace pathent {

// Distinct failure kinds so callers (and tests) can tell which contract broke
// without parsing message strings.
enum class Violation {
  kDimensionMismatch,
  kNotFinite,
  kNotHermitian,
  kNotUnitTrace,
  kNotPositiveSemidefinite,
  kDiagonalNotUnit,
  kNotNormalized,
  kBadWeights,
  kNonDiagonalKraus,
  kIncompleteKraus,
  kNoConvergence,
  kQuadratureBudget,
  kInvalidArgument,
};

const char* to_string(Violation v);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(Violation kind, const std::string& what_arg)
      : std::runtime_error(what_arg), kind_(kind) {}

  Violation kind() const noexcept { return kind_; }

 private:
  Violation kind_;
};

// Config-file parse failure; carries the 1-based line number (0 = whole file).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& what_arg)
      : std::runtime_error(what_arg), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace pathent
