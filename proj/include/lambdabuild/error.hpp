#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lambdabuild {

enum class Errc {
  GroupMismatch,
  NonPositiveInput,
  InsufficientPrecision,
  DivisionByZero,
  ZeroCoefficient,
  DimensionMismatch,
  DetNotOne,
  NonPositiveMinor,
  NotACartanMatrix,
  ClosureDiverged,
  DegenerateGram,
  NonPositiveCoefficient,
  NotOrthogonal,
  SingularCayley,
  NotNilpotent,
  NotUnipotent,
  IdentityHasNoWall,
  ZeroParameter,
  WitnessInvalid,
  NoConsistentCandidate,
  NotAHalfApartment,
  NonPositiveY,
  ParseError,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }
  std::string_view name() const { return errc_name(code_); }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& expected, const std::string& input);
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace lambdabuild
