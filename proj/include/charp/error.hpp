#pragma once
#include <stdexcept>
#include <string>
#include <string_view>

namespace charp {

enum class Errc {
  DivisionByZero,
  InvalidLocalizer,
  UnsupportedPrime,
  NegativeExponent,
  ExponentOverflow,
  TooManyVariables,
  VarTableMismatch,
  NotDivisible,
  ZeroPolynomial,
  NonIntegralCoefficient,
  NotInInvariantRing,
  NotLaurentCoefficient,
  NotStructured,
  SingularAffine,
  NotUnitMultiple,
  NotInvariantParameter,
  AdditivityViolation,
  AxiomViolation,
  NotInvariantGenerator,
  NotOrderP,
  NotTriangular,
  NonUnitTranslation,
  InternalIntegralityFailure,
  BadThetaSupport,
  UnsupportedField,
  NotAutomorphism,
  NotInCentralizer,
  NotInWst,
  WitnessNotCentralizing,
  InconsistentSlice,
  PreconditionViolated,
  UnsupportedP,
  BadParameters,
  BadH,
  UnknownSuite,
  ParseError,
};

std::string_view errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail = {});

}  // namespace charp
