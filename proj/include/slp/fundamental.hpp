#pragma once

#include <array>
#include <complex>
#include <optional>

#include "slp/ivp.hpp"
#include "slp/problem.hpp"

namespace slp {

enum class SolutionKind {
  left,   // satisfies u(-1) = 0, u'(-1) = 1; built piece 1 -> 2 -> 3
  right,  // satisfies the lambda-dependent condition at x = 1; built 3 -> 2 -> 1
};

/// A solution of the differential equation across all three pieces, glued
/// with the transmission jump maps. Values at a breakpoint are one-sided;
/// the side selects the defining piece.
class PiecewiseSolution {
 public:
  struct Values {
    double u = 0.0;
    double up = 0.0;
  };

  PiecewiseSolution() = default;
  PiecewiseSolution(double lambda, SolutionKind kind, std::array<Trajectory, 3> pieces)
      : lambda_(lambda), kind_(kind), pieces_(std::move(pieces)) {}

  double lambda() const { return lambda_; }
  SolutionKind kind() const { return kind_; }
  const Trajectory& piece(int i) const { return pieces_[i]; }

  /// One-sided evaluation: the side flag picks the piece at h1/h2 and is
  /// ignored elsewhere.
  Values at(const ValidatedProblem& problem, double x, Side side) const;

  /// Evaluation away from breakpoints; throws BreakpointWithoutSide at h1/h2.
  Values at(const ValidatedProblem& problem, double x) const;

  Values in_piece(int piece, double x) const {
    auto s = pieces_[piece].sample(x);
    return Values{s.u, s.up};
  }

  void scale(double c) {
    for (auto& t : pieces_) t.scale(c);
  }

 private:
  double lambda_ = 0.0;
  SolutionKind kind_ = SolutionKind::left;
  std::array<Trajectory, 3> pieces_;
};

/// Left fundamental solution: u(-1) = 0, u'(-1) = 1 on piece 1, continued
/// through h1 and h2 with initial data scaled by gamma/delta ratios.
PiecewiseSolution build_left_solution(const ValidatedProblem& problem, double lambda,
                                      const IvpOptions& opts = {});

/// Right fundamental solution: u(1) = alpha2*lambda + beta2,
/// u'(1) = alpha1*lambda + beta1 on piece 3 (so the boundary condition at
/// x = 1 holds identically in lambda), continued backwards with the inverse
/// delta/gamma ratios.
PiecewiseSolution build_right_solution(const ValidatedProblem& problem, double lambda,
                                       const IvpOptions& opts = {});

struct WronskianValue {
  double x = 0.0;
  int piece = 0;
  double value = 0.0;  // u_left * u_right' - u_left' * u_right
};

/// Wronskian of the two fundamental solutions at x, evaluated within the
/// containing piece. Requires matching lambda; at h1/h2 a side is required.
WronskianValue wronskian(const ValidatedProblem& problem, const PiecewiseSolution& left,
                         const PiecewiseSolution& right, double x,
                         std::optional<Side> side = std::nullopt);

/// p(x) * wronskian, constant on each piece (Abel identity). Evaluated at
/// the piece midpoint.
double abel_constant(const ValidatedProblem& problem, const PiecewiseSolution& left,
                     const PiecewiseSolution& right, int piece);

/// Characteristic function: the piece-3 Wronskian at x = 1. Since the right
/// solution takes exactly its seed values there, this equals
///   (lambda*alpha1 + beta1) * u(1) - (lambda*alpha2 + beta2) * u'(1)
/// with u the left solution; its real zeros are the eigenvalues. Uses
/// endpoint-only integration (no dense storage).
double characteristic(const ValidatedProblem& problem, double lambda,
                      const IvpOptions& opts = {});

/// Characteristic function at complex lambda, via the equivalent real system
/// of doubled dimension (real and imaginary parts integrated together).
std::complex<double> characteristic_complex(const ValidatedProblem& problem,
                                            std::complex<double> lambda,
                                            const IvpOptions& opts = {});

}  // namespace slp
