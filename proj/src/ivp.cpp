#include "slp/ivp.hpp"

#include <string>

namespace slp {

namespace {

struct PieceField {
  const ValidatedProblem& problem;
  int piece;
  double lambda;

  std::array<double, 2> operator()(double x, const std::array<double, 2>& y) const {
    double p, q, r;
    try {
      p = problem.p(piece, x);
      q = problem.q(piece, x);
      r = problem.r(piece, x);
    } catch (const Error& e) {
      throw Error(errc::coefficient_error, e.what());
    }
    return {y[1] / p, (q - lambda * r) * y[0]};
  }
};

void check_span(const ValidatedProblem& problem, int piece, double x_start, double x_end) {
  if (piece < 0 || piece > 2) throw Error(errc::invalid_argument, "piece index out of range");
  if (x_start == x_end) throw Error(errc::invalid_argument, "x_start must differ from x_end");
  const double lo = problem.piece_lo(piece), hi = problem.piece_hi(piece);
  const double slack = 1e-12;
  if (x_start < lo - slack || x_start > hi + slack || x_end < lo - slack || x_end > hi + slack)
    throw Error(errc::invalid_argument,
                "integration bounds outside piece " + std::to_string(piece + 1));
}

}  // namespace

Trajectory integrate_ivp(const ValidatedProblem& problem, int piece, double lambda,
                         double x_start, double x_end, double u0, double up0,
                         const IvpOptions& opts) {
  check_span(problem, piece, x_start, x_end);
  PieceField field{problem, piece, lambda};
  std::array<double, 2> y0{u0, problem.p(piece, x_start) * up0};
  DenseSolution<2> dense = rk45_integrate<2>(field, y0, x_start, x_end, opts);
  return Trajectory(piece, problem.p_expr(piece), std::move(dense));
}

std::array<double, 2> integrate_endpoint(const ValidatedProblem& problem, int piece,
                                         double lambda, double x_start, double x_end,
                                         double u0, double up0, const IvpOptions& opts) {
  check_span(problem, piece, x_start, x_end);
  PieceField field{problem, piece, lambda};
  std::array<double, 2> y0{u0, problem.p(piece, x_start) * up0};
  IvpOptions o = opts;
  o.record_dense = false;
  DenseSolution<2> dense = rk45_integrate<2>(field, y0, x_start, x_end, o);
  return dense.y_end;
}

}  // namespace slp
