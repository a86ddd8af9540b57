#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slp {

enum class errc {
  // problem validation
  breakpoint_order,
  non_positive_coefficient,
  rho_not_positive,
  zero_transmission_coefficient,
  beta_both_zero,
  // coefficient expressions
  syntax_error,
  domain_error,
  // initial-value integration
  step_failure,
  coefficient_error,
  out_of_span,
  // fundamental solutions
  breakpoint_without_side,
  // spectrum
  bracket_invalid,
  zero_norm,
  // Hilbert-space operations
  quadrature_nonconvergence,
  domain_mismatch,
  not_in_domain,
  // resolvent
  near_eigenvalue,
  // discretization oracle
  length_mismatch,
  eig_solve_failure,
  // generic misuse of an operation (precondition violated)
  invalid_argument,
  // I/O
  file_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::breakpoint_order: return "BreakpointOrder";
    case errc::non_positive_coefficient: return "NonPositiveCoefficient";
    case errc::rho_not_positive: return "RhoNotPositive";
    case errc::zero_transmission_coefficient: return "ZeroTransmissionCoefficient";
    case errc::beta_both_zero: return "BetaBothZero";
    case errc::syntax_error: return "SyntaxError";
    case errc::domain_error: return "DomainError";
    case errc::step_failure: return "StepFailure";
    case errc::coefficient_error: return "CoefficientError";
    case errc::out_of_span: return "OutOfSpan";
    case errc::breakpoint_without_side: return "BreakpointWithoutSide";
    case errc::bracket_invalid: return "BracketInvalid";
    case errc::zero_norm: return "ZeroNorm";
    case errc::quadrature_nonconvergence: return "QuadratureNonConvergence";
    case errc::domain_mismatch: return "DomainMismatch";
    case errc::not_in_domain: return "NotInDomain";
    case errc::near_eigenvalue: return "NearEigenvalue";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::eig_solve_failure: return "EigSolveFailure";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::file_error: return "FileError";
  }
  return "UnknownError";
}

/// Library-wide exception type. The code distinguishes failure classes so
/// callers (and the CLI exit-code mapping) can react without string matching.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Expression parse failure. `offset` is the byte index of the offending
/// token in the input (or the input length when the input ended too early).
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error(errc::syntax_error, message + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace slp
