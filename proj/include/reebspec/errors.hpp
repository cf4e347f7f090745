#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reebspec {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition or a type invariant.
// The CLI maps these to exit code 2.
struct ContractViolation : Error {
  using Error::Error;
};

// Two operands live in distinct irrational quadratic fields.
struct MixedRadicand : ContractViolation {
  using ContractViolation::ContractViolation;
};

struct DivisionByZero : ContractViolation {
  using ContractViolation::ContractViolation;
};

struct NonpositiveDivisor : ContractViolation {
  using ContractViolation::ContractViolation;
};

struct NonpositiveRadius : ContractViolation {
  using ContractViolation::ContractViolation;
};

struct InsufficientTerms : ContractViolation {
  using ContractViolation::ContractViolation;
};

struct NotStarShapedModel : ContractViolation {
  using ContractViolation::ContractViolation;
};

// An upper-boundary edge whose outward normal is not proportional to an
// integer vector; such edges carry no (m, n) action data.
struct NonIntegerEdgeNormal : ContractViolation {
  using ContractViolation::ContractViolation;
};

struct RationalInput : ContractViolation {
  using ContractViolation::ContractViolation;
};

struct NotGreaterThanOne : ContractViolation {
  using ContractViolation::ContractViolation;
};

struct LTooSmall : ContractViolation {
  using ContractViolation::ContractViolation;
};

struct DegenerateTriangle : ContractViolation {
  using ContractViolation::ContractViolation;
};

struct NonUnimodularMatrix : ContractViolation {
  using ContractViolation::ContractViolation;
};

struct SpectrumTooShort : ContractViolation {
  using ContractViolation::ContractViolation;
};

struct SingularGrid : ContractViolation {
  using ContractViolation::ContractViolation;
};

// Malformed text input. The CLI maps these to exit code 3.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t at)
      : Error(what + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

}  // namespace reebspec
