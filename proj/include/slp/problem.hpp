#pragma once

#include <array>
#include <memory>

#include "slp/errors.hpp"
#include "slp/expr.hpp"

namespace slp {

/// Which one-sided limit to take at an interior breakpoint.
enum class Side { minus, plus };

/// Raw description of the boundary-value problem on [-1,1] with interior
/// breakpoints h1 < h2: coefficients r, p, q per subinterval, boundary
/// parameters (alpha, beta) for the lambda-dependent condition at x = 1,
/// and transmission parameters (gamma, delta) at the breakpoints.
struct ProblemSpec {
  double h1 = 0.0;
  double h2 = 0.0;
  std::array<Expr, 3> r_pieces;
  std::array<Expr, 3> p_pieces;
  std::array<Expr, 3> q_pieces;
  double alpha1 = 0.0, alpha2 = 0.0;
  double beta1 = 0.0, beta2 = 0.0;
  std::array<double, 4> gamma{1, 1, 1, 1};
  std::array<double, 4> delta{1, 1, 1, 1};
};

/// Boundary linear forms at x = 1:
///   u_form  = beta1*u(1) - beta2*u'(1)
///   du_form = alpha1*u(1) - alpha2*u'(1)
/// du_form is the scalar slot of the Hilbert-space element attached to u.
struct BoundaryForms {
  double u_form = 0.0;
  double du_form = 0.0;
};

struct TransmissionSymmetryReport {
  bool holds = false;
  std::array<double, 2> residuals{0.0, 0.0};  // at h1 and h2
};

/// One-sided coefficient limits cached at validation time.
struct CoefficientLimits {
  double p_h1_minus, p_h1_plus, p_h2_minus, p_h2_plus;
  double r_h1_minus, r_h1_plus, r_h2_minus, r_h2_plus;
};

/// A ProblemSpec that passed validate_problem. Immutable; cheap to copy
/// (expressions are shared); safe to read from concurrent tasks.
class ValidatedProblem {
 public:
  const ProblemSpec& spec() const { return spec_; }

  double h1() const { return spec_.h1; }
  double h2() const { return spec_.h2; }
  double rho() const { return rho_; }
  double p_at_one() const { return p_at_one_; }
  const CoefficientLimits& limits() const { return limits_; }

  double alpha1() const { return spec_.alpha1; }
  double alpha2() const { return spec_.alpha2; }
  double beta1() const { return spec_.beta1; }
  double beta2() const { return spec_.beta2; }
  const std::array<double, 4>& gamma() const { return spec_.gamma; }
  const std::array<double, 4>& delta() const { return spec_.delta; }

  /// Piece index 0,1,2 for [-1,h1], [h1,h2], [h2,1].
  double piece_lo(int piece) const { return piece == 0 ? -1.0 : piece == 1 ? spec_.h1 : spec_.h2; }
  double piece_hi(int piece) const { return piece == 0 ? spec_.h1 : piece == 1 ? spec_.h2 : 1.0; }
  double piece_width(int piece) const { return piece_hi(piece) - piece_lo(piece); }

  /// Piece containing x; at a breakpoint the side flag decides.
  int piece_of(double x, Side side = Side::minus) const;
  bool is_breakpoint(double x) const { return x == spec_.h1 || x == spec_.h2; }

  /// Coefficient evaluation inside a given piece (closed endpoints allowed);
  /// this is how one-sided limits are realized.
  double r(int piece, double x) const { return eval_coeff(spec_.r_pieces[piece], x); }
  double p(int piece, double x) const { return eval_coeff(spec_.p_pieces[piece], x); }
  double q(int piece, double x) const { return eval_coeff(spec_.q_pieces[piece], x); }

  const Expr& r_expr(int piece) const { return spec_.r_pieces[piece]; }
  const Expr& p_expr(int piece) const { return spec_.p_pieces[piece]; }
  const Expr& q_expr(int piece) const { return spec_.q_pieces[piece]; }

 private:
  friend ValidatedProblem validate_problem(const ProblemSpec& spec, int samples_per_piece);

  static double eval_coeff(const Expr& e, double x);

  ProblemSpec spec_;
  double rho_ = 0.0;
  double p_at_one_ = 0.0;
  CoefficientLimits limits_{};
};

/// Checks all invariants (breakpoint order, rho > 0, |beta1|+|beta2| != 0,
/// all transmission coefficients nonzero, r > 0 and p > 0 at dense sample
/// points) and caches the one-sided limits. Throws Error with the matching
/// code on violation; expression evaluation failures surface as
/// errc::coefficient_error.
ValidatedProblem validate_problem(const ProblemSpec& spec, int samples_per_piece = 256);

/// The two boundary forms for given endpoint data. The overload on raw
/// parameters exists because the forms are defined for any (alpha, beta),
/// not only for validatable problems.
BoundaryForms boundary_forms(double alpha1, double alpha2, double beta1, double beta2,
                             double u1, double u1p);
BoundaryForms boundary_forms(const ValidatedProblem& problem, double u1, double u1p);

/// Checks delta1*delta2*p(h1-0) = gamma1*gamma2*p(h1+0) and the analogous
/// condition at h2; these make the problem's operator symmetric. A failed
/// condition is a report, not an error.
TransmissionSymmetryReport symmetry_condition_check(const ValidatedProblem& problem,
                                                    double rel_tol = 1e-9);

}  // namespace slp
