#include "slp/problem.hpp"

#include <cmath>
#include <string>

namespace slp {

int ValidatedProblem::piece_of(double x, Side side) const {
  if (x == spec_.h1) return side == Side::minus ? 0 : 1;
  if (x == spec_.h2) return side == Side::minus ? 1 : 2;
  if (x < spec_.h1) return 0;
  if (x < spec_.h2) return 1;
  return 2;
}

double ValidatedProblem::eval_coeff(const Expr& e, double x) {
  try {
    return e.eval(x);
  } catch (const Error& err) {
    if (err.code() == errc::domain_error)
      throw Error(errc::coefficient_error, std::string("coefficient evaluation failed: ") + err.what());
    throw;
  }
}

ValidatedProblem validate_problem(const ProblemSpec& spec, int samples_per_piece) {
  if (!(-1.0 < spec.h1 && spec.h1 < spec.h2 && spec.h2 < 1.0))
    throw Error(errc::breakpoint_order,
                "breakpoints must satisfy -1 < h1 < h2 < 1 (h1=" + std::to_string(spec.h1) +
                    ", h2=" + std::to_string(spec.h2) + ")");

  if (spec.beta1 == 0.0 && spec.beta2 == 0.0)
    throw Error(errc::beta_both_zero, "beta1 and beta2 must not both vanish");

  double rho = spec.alpha1 * spec.beta2 - spec.alpha2 * spec.beta1;
  if (!(rho > 0.0))
    throw Error(errc::rho_not_positive,
                "alpha1*beta2 - alpha2*beta1 = " + std::to_string(rho) + " must be positive");

  for (int j = 0; j < 4; ++j) {
    if (spec.gamma[j] == 0.0 || spec.delta[j] == 0.0)
      throw Error(errc::zero_transmission_coefficient,
                  "gamma[" + std::to_string(j + 1) + "] and delta[" + std::to_string(j + 1) +
                      "] must be nonzero");
  }

  ValidatedProblem out;
  out.spec_ = spec;
  out.rho_ = rho;

  const double lo[3] = {-1.0, spec.h1, spec.h2};
  const double hi[3] = {spec.h1, spec.h2, 1.0};
  if (samples_per_piece < 2) samples_per_piece = 2;
  for (int piece = 0; piece < 3; ++piece) {
    for (int i = 0; i < samples_per_piece; ++i) {
      double x = lo[piece] + (hi[piece] - lo[piece]) * i / (samples_per_piece - 1);
      double rv = ValidatedProblem::eval_coeff(spec.r_pieces[piece], x);
      double pv = ValidatedProblem::eval_coeff(spec.p_pieces[piece], x);
      if (!(rv > 0.0))
        throw Error(errc::non_positive_coefficient,
                    "r <= 0 at x=" + std::to_string(x) + " in piece " + std::to_string(piece + 1));
      if (!(pv > 0.0))
        throw Error(errc::non_positive_coefficient,
                    "p <= 0 at x=" + std::to_string(x) + " in piece " + std::to_string(piece + 1));
      // q only needs to evaluate
      (void)ValidatedProblem::eval_coeff(spec.q_pieces[piece], x);
    }
  }

  out.limits_.p_h1_minus = out.p(0, spec.h1);
  out.limits_.p_h1_plus = out.p(1, spec.h1);
  out.limits_.p_h2_minus = out.p(1, spec.h2);
  out.limits_.p_h2_plus = out.p(2, spec.h2);
  out.limits_.r_h1_minus = out.r(0, spec.h1);
  out.limits_.r_h1_plus = out.r(1, spec.h1);
  out.limits_.r_h2_minus = out.r(1, spec.h2);
  out.limits_.r_h2_plus = out.r(2, spec.h2);
  out.p_at_one_ = out.p(2, 1.0);
  return out;
}

BoundaryForms boundary_forms(double alpha1, double alpha2, double beta1, double beta2,
                             double u1, double u1p) {
  return BoundaryForms{beta1 * u1 - beta2 * u1p, alpha1 * u1 - alpha2 * u1p};
}

BoundaryForms boundary_forms(const ValidatedProblem& problem, double u1, double u1p) {
  const ProblemSpec& s = problem.spec();
  return boundary_forms(s.alpha1, s.alpha2, s.beta1, s.beta2, u1, u1p);
}

TransmissionSymmetryReport symmetry_condition_check(const ValidatedProblem& problem,
                                                    double rel_tol) {
  const ProblemSpec& s = problem.spec();
  const CoefficientLimits& L = problem.limits();

  auto residual = [&](double d_a, double d_b, double p_minus, double g_a, double g_b,
                      double p_plus) {
    double left = d_a * d_b * p_minus;
    double right = g_a * g_b * p_plus;
    double scale = std::max({std::fabs(left), std::fabs(right), 1.0});
    return std::fabs(left - right) / scale;
  };

  TransmissionSymmetryReport rep;
  rep.residuals[0] =
      residual(s.delta[0], s.delta[1], L.p_h1_minus, s.gamma[0], s.gamma[1], L.p_h1_plus);
  rep.residuals[1] =
      residual(s.delta[2], s.delta[3], L.p_h2_minus, s.gamma[2], s.gamma[3], L.p_h2_plus);
  rep.holds = rep.residuals[0] <= rel_tol && rep.residuals[1] <= rel_tol;
  return rep;
}

}  // namespace slp
