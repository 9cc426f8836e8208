#pragma once

#include <stdexcept>
#include <string>

namespace spherotrop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  /// Stable identifier used in structured diagnostics.
  virtual const char* kind() const noexcept { return "Error"; }
};

#define SPHEROTROP_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(what) {}             \
    const char* kind() const noexcept override { return #Name; }        \
  };

SPHEROTROP_DEFINE_ERROR(DivisionByZero)
SPHEROTROP_DEFINE_ERROR(ZeroPolynomial)
SPHEROTROP_DEFINE_ERROR(ConstantPolynomial)
SPHEROTROP_DEFINE_ERROR(OrderNotWellFounded)
SPHEROTROP_DEFINE_ERROR(DimensionTooLarge)
SPHEROTROP_DEFINE_ERROR(RankMismatch)
SPHEROTROP_DEFINE_ERROR(InvalidPoint)
SPHEROTROP_DEFINE_ERROR(CurveNotOnVariety)
SPHEROTROP_DEFINE_ERROR(UnsupportedHypersurface)
SPHEROTROP_DEFINE_ERROR(DegeneratePoint)
SPHEROTROP_DEFINE_ERROR(ParseError)
SPHEROTROP_DEFINE_ERROR(InvalidArgument)

#undef SPHEROTROP_DEFINE_ERROR

/// A quantity was demanded whose value is hidden below the known precision.
/// Carries the truncation bound so callers can retry with deeper input.
class PrecisionLoss : public Error {
 public:
  PrecisionLoss(const std::string& what, std::string bound)
      : Error(what + " (known only modulo t^" + bound + ")"), bound_(std::move(bound)) {}
  const char* kind() const noexcept override { return "PrecisionLoss"; }
  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string bound_;
};

/// Iterative numeric routine hit its iteration cap.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  const char* kind() const noexcept override { return "NoConvergence"; }
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace spherotrop
