#include "slp/fundamental.hpp"

#include <cmath>
#include <string>

namespace slp {

PiecewiseSolution::Values PiecewiseSolution::at(const ValidatedProblem& problem, double x,
                                                Side side) const {
  return in_piece(problem.piece_of(x, side), x);
}

PiecewiseSolution::Values PiecewiseSolution::at(const ValidatedProblem& problem, double x) const {
  if (problem.is_breakpoint(x))
    throw Error(errc::breakpoint_without_side,
                "value at a breakpoint requires a side flag (x=" + std::to_string(x) + ")");
  return in_piece(problem.piece_of(x), x);
}

PiecewiseSolution build_left_solution(const ValidatedProblem& problem, double lambda,
                                      const IvpOptions& opts) {
  const ProblemSpec& s = problem.spec();
  std::array<Trajectory, 3> pieces;

  pieces[0] = integrate_ivp(problem, 0, lambda, -1.0, s.h1, 0.0, 1.0, opts);
  auto end1 = pieces[0].at_end();

  double u1 = (s.gamma[0] / s.delta[0]) * end1.u;
  double up1 = (s.gamma[1] / s.delta[1]) * end1.up;
  pieces[1] = integrate_ivp(problem, 1, lambda, s.h1, s.h2, u1, up1, opts);
  auto end2 = pieces[1].at_end();

  double u2 = (s.gamma[2] / s.delta[2]) * end2.u;
  double up2 = (s.gamma[3] / s.delta[3]) * end2.up;
  pieces[2] = integrate_ivp(problem, 2, lambda, s.h2, 1.0, u2, up2, opts);

  return PiecewiseSolution(lambda, SolutionKind::left, std::move(pieces));
}

PiecewiseSolution build_right_solution(const ValidatedProblem& problem, double lambda,
                                       const IvpOptions& opts) {
  const ProblemSpec& s = problem.spec();
  std::array<Trajectory, 3> pieces;

  double u3 = s.alpha2 * lambda + s.beta2;
  double up3 = s.alpha1 * lambda + s.beta1;
  pieces[2] = integrate_ivp(problem, 2, lambda, 1.0, s.h2, u3, up3, opts);
  auto end3 = pieces[2].at_end();

  double u2 = (s.delta[2] / s.gamma[2]) * end3.u;
  double up2 = (s.delta[3] / s.gamma[3]) * end3.up;
  pieces[1] = integrate_ivp(problem, 1, lambda, s.h2, s.h1, u2, up2, opts);
  auto end2 = pieces[1].at_end();

  double u1 = (s.delta[0] / s.gamma[0]) * end2.u;
  double up1 = (s.delta[1] / s.gamma[1]) * end2.up;
  pieces[0] = integrate_ivp(problem, 0, lambda, s.h1, -1.0, u1, up1, opts);

  return PiecewiseSolution(lambda, SolutionKind::right, std::move(pieces));
}

WronskianValue wronskian(const ValidatedProblem& problem, const PiecewiseSolution& left,
                         const PiecewiseSolution& right, double x, std::optional<Side> side) {
  if (left.lambda() != right.lambda())
    throw Error(errc::invalid_argument, "wronskian requires matching lambda");
  int piece;
  if (problem.is_breakpoint(x)) {
    if (!side)
      throw Error(errc::breakpoint_without_side,
                  "wronskian at a breakpoint requires a side flag");
    piece = problem.piece_of(x, *side);
  } else {
    piece = problem.piece_of(x);
  }
  auto a = left.in_piece(piece, x);
  auto b = right.in_piece(piece, x);
  return WronskianValue{x, piece, a.u * b.up - a.up * b.u};
}

double abel_constant(const ValidatedProblem& problem, const PiecewiseSolution& left,
                     const PiecewiseSolution& right, int piece) {
  double mid = 0.5 * (problem.piece_lo(piece) + problem.piece_hi(piece));
  auto a = left.in_piece(piece, mid);
  auto b = right.in_piece(piece, mid);
  return problem.p(piece, mid) * (a.u * b.up - a.up * b.u);
}

double characteristic(const ValidatedProblem& problem, double lambda, const IvpOptions& opts) {
  const ProblemSpec& s = problem.spec();

  auto end1 = integrate_endpoint(problem, 0, lambda, -1.0, s.h1, 0.0, 1.0, opts);
  double p_h1m = problem.limits().p_h1_minus;
  double u = (s.gamma[0] / s.delta[0]) * end1[0];
  double up = (s.gamma[1] / s.delta[1]) * (end1[1] / p_h1m);

  auto end2 = integrate_endpoint(problem, 1, lambda, s.h1, s.h2, u, up, opts);
  double p_h2m = problem.limits().p_h2_minus;
  u = (s.gamma[2] / s.delta[2]) * end2[0];
  up = (s.gamma[3] / s.delta[3]) * (end2[1] / p_h2m);

  auto end3 = integrate_endpoint(problem, 2, lambda, s.h2, 1.0, u, up, opts);
  double u_one = end3[0];
  double up_one = end3[1] / problem.p_at_one();

  return (lambda * s.alpha1 + s.beta1) * u_one - (lambda * s.alpha2 + s.beta2) * up_one;
}

namespace {

// Real 4-dimensional system equivalent to the complex-lambda equation:
// state (Re u, Im u, Re w, Im w) with w = p u'.
struct ComplexField {
  const ValidatedProblem& problem;
  int piece;
  std::complex<double> lambda;

  std::array<double, 4> operator()(double x, const std::array<double, 4>& y) const {
    double p = problem.p(piece, x);
    double q = problem.q(piece, x);
    double r = problem.r(piece, x);
    double a = q - lambda.real() * r;  // Re(q - lambda r)
    double b = -lambda.imag() * r;     // Im(q - lambda r)
    // u' = w/p, w' = (a + ib)(u_re + i u_im)
    return {y[2] / p, y[3] / p, a * y[0] - b * y[1], a * y[1] + b * y[0]};
  }
};

std::array<double, 4> complex_piece_endpoint(const ValidatedProblem& problem, int piece,
                                             std::complex<double> lambda, double x0, double x1,
                                             std::complex<double> u0, std::complex<double> up0,
                                             const IvpOptions& opts) {
  ComplexField field{problem, piece, lambda};
  double p0 = problem.p(piece, x0);
  std::array<double, 4> y0{u0.real(), u0.imag(), p0 * up0.real(), p0 * up0.imag()};
  IvpOptions o = opts;
  o.record_dense = false;
  return rk45_integrate<4>(field, y0, x0, x1, o).y_end;
}

}  // namespace

std::complex<double> characteristic_complex(const ValidatedProblem& problem,
                                            std::complex<double> lambda,
                                            const IvpOptions& opts) {
  const ProblemSpec& s = problem.spec();
  using C = std::complex<double>;

  auto y = complex_piece_endpoint(problem, 0, lambda, -1.0, s.h1, C(0.0), C(1.0), opts);
  C u(y[0], y[1]);
  C up = C(y[2], y[3]) / problem.limits().p_h1_minus;
  u *= s.gamma[0] / s.delta[0];
  up *= s.gamma[1] / s.delta[1];

  y = complex_piece_endpoint(problem, 1, lambda, s.h1, s.h2, u, up, opts);
  u = C(y[0], y[1]) * (s.gamma[2] / s.delta[2]);
  up = C(y[2], y[3]) / problem.limits().p_h2_minus * (s.gamma[3] / s.delta[3]);

  y = complex_piece_endpoint(problem, 2, lambda, s.h2, 1.0, u, up, opts);
  C u_one(y[0], y[1]);
  C up_one = C(y[2], y[3]) / problem.p_at_one();

  return (lambda * s.alpha1 + s.beta1) * u_one - (lambda * s.alpha2 + s.beta2) * up_one;
}

}  // namespace slp
