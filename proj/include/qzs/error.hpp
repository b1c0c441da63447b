#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qzs {

/// Failure categories raised across the library.
enum class Errc {
  ParseError,
  DivisionByZero,
  InvalidBase,
  MissingSqrtQ,
  NotTerminating,
  DenominatorPole,
  DegenerateEigenvalues,
  AllCouplingsZero,
  EigenvalueCollision,
  ZeroCoupling,
  InconsistentAlgebra,
  ConstraintUnsolvable,
  NotASquare,
  FlipOfZero,
  RecurrencePole,
  PoleAtZ,
  InvalidParameters,
  TranscriptionMismatch,
  UnknownFamily,
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

}  // namespace qzs
