#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace axial {

enum class ErrorKind {
  ZeroDenominator,
  DivisionByZero,
  DenominatorVanishes,
  OmegaUnevaluable,
  MissingParameter,
  ParseError,
  AmbientMismatch,
  DimMismatch,
  DuplicateEigenvalue,
  IncompleteDecomposition,
  NotPrimitive,
  NotAnIdeal,
  UnsupportedDivisor,
  NotSpecialized,
  BadParameter,
  WrongDimension,
  ConstraintUnsatisfied,
  Singular,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::OmegaUnevaluable: return "OmegaUnevaluable";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::DuplicateEigenvalue: return "DuplicateEigenvalue";
    case ErrorKind::IncompleteDecomposition: return "IncompleteDecomposition";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::UnsupportedDivisor: return "UnsupportedDivisor";
    case ErrorKind::NotSpecialized: return "NotSpecialized";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::ConstraintUnsatisfied: return "ConstraintUnsatisfied";
    case ErrorKind::Singular: return "Singular";
  }
  return "Unknown";
}

/// All library failures surface as this exception; `kind()` identifies the
/// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace axial
