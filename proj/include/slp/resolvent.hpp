#pragma once

#include <array>
#include <memory>

#include "slp/hilbert.hpp"
#include "slp/spectrum.hpp"

namespace slp {

/// Green kernel data at a non-eigenvalue lambda: both fundamental solutions,
/// the characteristic value d, and the per-piece Abel constants kappa = p * w
/// (w the Wronskian), which make the kernel weight r(y)/kappa cheap.
class GreenKernel {
 public:
  GreenKernel() = default;

  double lambda() const { return lambda_; }
  double d() const { return d_; }
  const std::array<double, 3>& abel() const { return abel_; }
  const PiecewiseSolution& left() const { return *left_; }
  const PiecewiseSolution& right() const { return *right_; }
  std::shared_ptr<const PiecewiseSolution> left_ptr() const { return left_; }
  std::shared_ptr<const PiecewiseSolution> right_ptr() const { return right_; }

  /// Kernel value at (x, y), both off the breakpoints. The weight carried on
  /// the y argument is -r(y)/(p(y) w(y)): with it, the integral of
  /// K(x,y) T1(y) against dy plus the boundary term solves the inhomogeneous
  /// problem (the variation-of-parameters weight; see apply_resolvent).
  double value(const ValidatedProblem& problem, double x, double y) const;

 private:
  friend GreenKernel build_kernel(const ValidatedProblem&, double, double, const IvpOptions&);

  double lambda_ = 0.0;
  double d_ = 0.0;
  std::array<double, 3> abel_{};
  std::shared_ptr<const PiecewiseSolution> left_, right_;
};

/// Builds the kernel at lambda. Throws NearEigenvalue when |d| is below
/// threshold * max(1, |lambda|) (d grows with lambda, so the threshold is
/// scaled).
GreenKernel build_kernel(const ValidatedProblem& problem, double lambda,
                         double proximity_threshold = 1e-6,
                         const IvpOptions& opts = eigenfunction_ivp_options());

/// Solution of (K - lambda I) U = T for T in the Hilbert space:
///   U1(x) = chi(x) * A(x) + phi(x) * (B(x) + c),
/// with A, B the variation-of-parameters integrals against the kernel weight
/// and c = -T2 / d fixed by the boundary condition at x = 1 in the
/// operator's sign convention  -(U1)_1 - lambda (U1)'_1 = T2.
/// Values and derivatives are evaluable anywhere (one-sided at breakpoints);
/// the derivative is analytic in the quadratures, not a finite difference.
class ResolventSolution {
 public:
  double lambda() const;
  double value(int piece, double x) const;
  double deriv(int piece, double x) const;
  double value(const ValidatedProblem& problem, double x, Side side = Side::minus) const;
  double deriv(const ValidatedProblem& problem, double x, Side side = Side::minus) const;
  double scalar() const;  // (U1)'_1 = alpha1 U1(1) - alpha2 U1'(1)

  HilbertElement to_element() const;

 private:
  friend ResolventSolution apply_resolvent(const ValidatedProblem&, const GreenKernel&,
                                           const HilbertElement&);
  struct State;
  std::shared_ptr<const State> state_;
};

ResolventSolution apply_resolvent(const ValidatedProblem& problem, const GreenKernel& kernel,
                                  const HilbertElement& T);
ResolventSolution apply_resolvent(const ValidatedProblem& problem, double lambda,
                                  const HilbertElement& T);

struct ResidualReport {
  double ode_defect = 0.0;  // sup over a dense interior grid of |l U - lambda U - T1|
  double bc_left = 0.0;     // |U(-1)|
  double bc_right = 0.0;    // |-(U)_1 - lambda (U)'_1 - T2|
  std::array<double, 4> trans_defects{};  // the four transmission conditions
  double max_defect() const;
};

/// Measures how well U solves the inhomogeneous problem. The second
/// derivative is formed by one fourth-order finite difference of the flux
/// p U' (U' itself is analytic), so the meter does not stack two numerical
/// differentiations.
ResidualReport resolvent_residual(const ValidatedProblem& problem, double lambda,
                                  const HilbertElement& T, const ResolventSolution& U);

}  // namespace slp
