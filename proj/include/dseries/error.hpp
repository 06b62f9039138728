#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dseries {

enum class Errc {
  DivisionByZero,
  BothZero,
  ZeroDenominator,
  PoleAtValue,
  BadScalarText,
  OrderMismatch,
  RingMismatch,
  NonUnitConstantTerm,
  IndexOutOfOrder,
  BadConstantTerm,
  NoExactRoot,
  NotDelta,
  InsufficientOrder,
  NonUnitBaseForRationalPower,
  ArityTooSmall,
  NonRepresentablePower,
  InvalidArgument,
  LambdaModeRequired,
  UnknownPreset,
  NoOracle,
  ZeroFirstMoment,
  SyntaxError,
  UnknownFunction,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by the expression parser; offset is a byte offset into the source.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : Error(Errc::SyntaxError, what + " at offset " + std::to_string(offset)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace dseries
