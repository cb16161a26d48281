#include "charp/error.hpp"

namespace charp {

std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidLocalizer: return "InvalidLocalizer";
    case Errc::UnsupportedPrime: return "UnsupportedPrime";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::TooManyVariables: return "TooManyVariables";
    case Errc::VarTableMismatch: return "VarTableMismatch";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case Errc::NotInInvariantRing: return "NotInInvariantRing";
    case Errc::NotLaurentCoefficient: return "NotLaurentCoefficient";
    case Errc::NotStructured: return "NotStructured";
    case Errc::SingularAffine: return "SingularAffine";
    case Errc::NotUnitMultiple: return "NotUnitMultiple";
    case Errc::NotInvariantParameter: return "NotInvariantParameter";
    case Errc::AdditivityViolation: return "AdditivityViolation";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::NotInvariantGenerator: return "NotInvariantGenerator";
    case Errc::NotOrderP: return "NotOrderP";
    case Errc::NotTriangular: return "NotTriangular";
    case Errc::NonUnitTranslation: return "NonUnitTranslation";
    case Errc::InternalIntegralityFailure: return "InternalIntegralityFailure";
    case Errc::BadThetaSupport: return "BadThetaSupport";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::NotInCentralizer: return "NotInCentralizer";
    case Errc::NotInWst: return "NotInWst";
    case Errc::WitnessNotCentralizing: return "WitnessNotCentralizing";
    case Errc::InconsistentSlice: return "InconsistentSlice";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::UnsupportedP: return "UnsupportedP";
    case Errc::BadParameters: return "BadParameters";
    case Errc::BadH: return "BadH";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

static std::string format_what(Errc code, const std::string& detail) {
  std::string s(errc_name(code));
  if (!detail.empty()) {
    s += ": ";
    s += detail;
  }
  return s;
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(format_what(code, detail)), code_(code) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace charp
