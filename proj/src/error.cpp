#include "lambdabuild/error.hpp"

namespace lambdabuild {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NonPositiveInput: return "NonPositiveInput";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DetNotOne: return "DetNotOne";
    case Errc::NonPositiveMinor: return "NonPositiveMinor";
    case Errc::NotACartanMatrix: return "NotACartanMatrix";
    case Errc::ClosureDiverged: return "ClosureDiverged";
    case Errc::DegenerateGram: return "DegenerateGram";
    case Errc::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::SingularCayley: return "SingularCayley";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotUnipotent: return "NotUnipotent";
    case Errc::IdentityHasNoWall: return "IdentityHasNoWall";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::WitnessInvalid: return "WitnessInvalid";
    case Errc::NoConsistentCandidate: return "NoConsistentCandidate";
    case Errc::NotAHalfApartment: return "NotAHalfApartment";
    case Errc::NonPositiveY: return "NonPositiveY";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& expected, const std::string& input)
    : Error(Errc::ParseError,
            "at position " + std::to_string(position) + " expected " + expected + " in \"" + input + "\""),
      position_(position),
      expected_(expected) {}

}  // namespace lambdabuild
