#include "slp/expansion.hpp"

#include <cmath>

namespace slp {

std::vector<double> fourier_coefficients(const ValidatedProblem& problem,
                                         const std::vector<Eigenpair>& eigenpairs,
                                         const HilbertElement& T, const QuadOptions& quad) {
  std::vector<double> out;
  out.reserve(eigenpairs.size());
  for (const Eigenpair& pair : eigenpairs)
    out.push_back(inner_product(problem, T, eigen_element(pair), quad));
  return out;
}

HilbertElement partial_sum(const std::vector<Eigenpair>& eigenpairs,
                           const std::vector<double>& coefficients, std::size_t N) {
  if (N > eigenpairs.size() || N > coefficients.size())
    throw Error(errc::invalid_argument, "partial sum length exceeds available eigenpairs");
  std::vector<std::pair<double, HilbertElement>> terms;
  terms.reserve(N);
  for (std::size_t n = 0; n < N; ++n)
    terms.emplace_back(coefficients[n], eigen_element(eigenpairs[n]));
  if (terms.empty()) return zero_element();
  return linear_combination(std::move(terms));
}

ExpansionResult expand(const ValidatedProblem& problem, const std::vector<Eigenpair>& eigenpairs,
                       const HilbertElement& T, std::size_t N, const QuadOptions& quad) {
  ExpansionResult res;
  res.coefficients = fourier_coefficients(problem, eigenpairs, T, quad);
  res.partial = partial_sum(eigenpairs, res.coefficients, N);
  HilbertElement diff = linear_combination({{1.0, T}, {-1.0, res.partial}});
  res.residual_norm = h_norm(problem, diff, quad);
  return res;
}

ScalarSeriesCheck identity_38(const ValidatedProblem& problem,
                              const std::vector<Eigenpair>& eigenpairs, std::size_t N) {
  ScalarSeriesCheck chk;
  chk.target = problem.rho() / problem.p_at_one();
  for (std::size_t n = 0; n < N && n < eigenpairs.size(); ++n)
    chk.partial += eigenpairs[n].boundary_scalar * eigenpairs[n].boundary_scalar;
  return chk;
}

BoundarySeriesCheck identity_39(const ValidatedProblem& problem,
                                const std::vector<Eigenpair>& eigenpairs, std::size_t N,
                                const std::vector<double>& x_grid) {
  std::vector<std::pair<double, HilbertElement>> terms;
  for (std::size_t n = 0; n < N && n < eigenpairs.size(); ++n)
    terms.emplace_back(eigenpairs[n].boundary_scalar, eigen_element(eigenpairs[n]));

  BoundarySeriesCheck chk;
  if (terms.empty()) return chk;
  HilbertElement sum = linear_combination(std::move(terms));

  for (double x : x_grid) {
    if (problem.is_breakpoint(x)) continue;
    int piece = problem.piece_of(x);
    chk.sup_abs = std::max(chk.sup_abs, std::fabs(sum.f[piece](x)));
  }
  // r-weighted L2 norm of the function part alone (zero the scalar slot).
  HilbertElement fn_only = sum;
  fn_only.scalar = 0.0;
  chk.l2_norm = h_norm(problem, fn_only);
  return chk;
}

FunctionExpansion expand_function(const ValidatedProblem& problem,
                                  const std::vector<Eigenpair>& eigenpairs,
                                  const HilbertElement& f, std::size_t N,
                                  const QuadOptions& quad) {
  HilbertElement T = f;
  T.scalar = 0.0;

  FunctionExpansion out;
  out.coefficients = fourier_coefficients(problem, eigenpairs, T, quad);

  std::vector<std::pair<double, HilbertElement>> terms;
  for (std::size_t n = 0; n < N && n < eigenpairs.size(); ++n) {
    HilbertElement fn_part = eigen_element(eigenpairs[n]);
    fn_part.scalar = 0.0;  // function-part expansion only
    terms.emplace_back(out.coefficients[n], fn_part);
  }
  out.sum = terms.empty() ? zero_element() : linear_combination(std::move(terms));

  HilbertElement diff = linear_combination({{1.0, T}, {-1.0, out.sum}});
  diff.scalar = 0.0;
  out.l2_error = h_norm(problem, diff, quad);
  return out;
}

double boundary_leak_check(const ValidatedProblem& problem,
                           const std::vector<Eigenpair>& eigenpairs, const HilbertElement& f,
                           std::size_t N, const QuadOptions& quad) {
  HilbertElement T = f;
  T.scalar = 0.0;
  double acc = 0.0;
  for (std::size_t n = 0; n < N && n < eigenpairs.size(); ++n) {
    double cn = inner_product(problem, T, eigen_element(eigenpairs[n]), quad);
    acc += cn * eigenpairs[n].boundary_scalar;
  }
  return std::fabs(acc);
}

}  // namespace slp
