#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qons {

/// Error categories raised by the engine. Each maps to one named failure of a
/// public operation.
enum class Errc {
  DivisionByZero,
  PoleAtPoint,
  InvalidQ,
  AlphabetMismatch,
  MissingImage,
  InvalidParams,
  ContextMismatch,
  NotLeadingMonomial,
  OrderViolation,
  NotCertifiedA1,
  InvalidCutoff,
  IndexOutOfRange,
  DegenerateEigenvalues,
  DimensionMismatch,
  NotDiagonalizable,
  ParseError,
  InvariantViolation,
  IoError,
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

}  // namespace qons
