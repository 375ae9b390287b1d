#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace schubert {

// Base of all library errors. `kind()` is a stable machine-readable tag,
// the what() string is "<kind>: <details>".
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

// A caller broke a precondition (bad type, bad index, x not below w, ...).
// The CLI maps these to exit code 1.
class InvalidInput : public Error {
public:
  using Error::Error;
};

// The library caught itself producing something impossible (non-polynomial
// Joseph polynomial, smoothness criteria disagreeing, a Schubert tuple
// failing its congruences). These signal an implementation or convention
// bug, never bad user input. The CLI maps them to exit code 2.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

}  // namespace schubert
