#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cppforge {

/// Failure categories raised by the library. Every throw site uses one of
/// these, so callers (and the CLI) can branch on the kind without parsing text.
enum class Errc {
  NotPrime,
  DegreeZero,
  FieldTooLarge,
  ContextMismatch,
  DivisionByZero,
  NotASubfield,
  NoSuchRoot,
  NotCoprime,
  DegenerateLeadingCoefficient,
  ZeroPolynomial,
  ConstantPolynomial,
  NotAnExtension,
  CoefficientsOutsideSubfield,
  ZeroCoefficient,
  NotGood,
  OrbitSizeDoesNotDivideN,
  GcdViolation,
  ZeroScalar,
  NotPrimeDegree,
  DividesQMinus1,
  ZeroShift,
  DividesQSquaredMinus1,
  ZeroA,
  DegenerateDerivative,
  NotPrimeCharDegree,
  RNotDivisor,
  ExceptionalityViolated,
  AZero,
  NotChar3,
  BadS,
  ANotNonSquare,
  RNotDividingM,
  EpsilonNotDividingR,
  NotLinearizedShape,
  NotChar2,
  ConfigInvalid,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view errcName(Errc e) noexcept {
  switch (e) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotASubfield: return "NotASubfield";
    case Errc::NoSuchRoot: return "NoSuchRoot";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::NotAnExtension: return "NotAnExtension";
    case Errc::CoefficientsOutsideSubfield: return "CoefficientsOutsideSubfield";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::NotGood: return "NotGood";
    case Errc::OrbitSizeDoesNotDivideN: return "OrbitSizeDoesNotDivideN";
    case Errc::GcdViolation: return "GcdViolation";
    case Errc::ZeroScalar: return "ZeroScalar";
    case Errc::NotPrimeDegree: return "NotPrimeDegree";
    case Errc::DividesQMinus1: return "DividesQMinus1";
    case Errc::ZeroShift: return "ZeroShift";
    case Errc::DividesQSquaredMinus1: return "DividesQSquaredMinus1";
    case Errc::ZeroA: return "ZeroA";
    case Errc::DegenerateDerivative: return "DegenerateDerivative";
    case Errc::NotPrimeCharDegree: return "NotPrimeCharDegree";
    case Errc::RNotDivisor: return "RNotDivisor";
    case Errc::ExceptionalityViolated: return "ExceptionalityViolated";
    case Errc::AZero: return "AZero";
    case Errc::NotChar3: return "NotChar3";
    case Errc::BadS: return "BadS";
    case Errc::ANotNonSquare: return "ANotNonSquare";
    case Errc::RNotDividingM: return "RNotDividingM";
    case Errc::EpsilonNotDividingR: return "EpsilonNotDividingR";
    case Errc::NotLinearizedShape: return "NotLinearizedShape";
    case Errc::NotChar2: return "NotChar2";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cppforge
