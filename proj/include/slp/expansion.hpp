#pragma once

#include <cstddef>
#include <vector>

#include "slp/hilbert.hpp"
#include "slp/spectrum.hpp"

namespace slp {

/// Fourier data of T against the orthonormal eigen-elements.
struct ExpansionResult {
  std::vector<double> coefficients;
  HilbertElement partial;       // S_N
  double residual_norm = 0.0;   // ||T - S_N||_H
};

std::vector<double> fourier_coefficients(const ValidatedProblem& problem,
                                         const std::vector<Eigenpair>& eigenpairs,
                                         const HilbertElement& T, const QuadOptions& quad = {});

/// S_N = sum of the first N coefficients times eigen-elements.
HilbertElement partial_sum(const std::vector<Eigenpair>& eigenpairs,
                           const std::vector<double>& coefficients, std::size_t N);

ExpansionResult expand(const ValidatedProblem& problem, const std::vector<Eigenpair>& eigenpairs,
                       const HilbertElement& T, std::size_t N, const QuadOptions& quad = {});

/// Partial sums of the boundary-scalar squares against their limit rho/p(1).
struct ScalarSeriesCheck {
  double partial = 0.0;
  double target = 0.0;
};
ScalarSeriesCheck identity_38(const ValidatedProblem& problem,
                              const std::vector<Eigenpair>& eigenpairs, std::size_t N);

/// The N-term sum  sum_n (u_n)'_1 u_n(x): sup over the grid and its
/// r-weighted L2 norm. The series converges to zero in the mean-square
/// sense; the sup is informational.
struct BoundarySeriesCheck {
  double sup_abs = 0.0;
  double l2_norm = 0.0;
};
BoundarySeriesCheck identity_39(const ValidatedProblem& problem,
                                const std::vector<Eigenpair>& eigenpairs, std::size_t N,
                                const std::vector<double>& x_grid);

/// Expansion of T = (f, 0): coefficients are the r-weighted integrals of
/// f against the eigenfunctions; l2_error is the r-weighted L2 distance of
/// the N-term function sum from f.
struct FunctionExpansion {
  std::vector<double> coefficients;
  HilbertElement sum;
  double l2_error = 0.0;
};
FunctionExpansion expand_function(const ValidatedProblem& problem,
                                  const std::vector<Eigenpair>& eigenpairs,
                                  const HilbertElement& f, std::size_t N,
                                  const QuadOptions& quad = {});

/// | sum_{n<=N} (integral f u_n r) (u_n)'_1 |, expected to shrink as N grows.
double boundary_leak_check(const ValidatedProblem& problem,
                           const std::vector<Eigenpair>& eigenpairs, const HilbertElement& f,
                           std::size_t N, const QuadOptions& quad = {});

}  // namespace slp
