#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "slp/fundamental.hpp"
#include "slp/hilbert.hpp"
#include "slp/problem.hpp"

namespace slp {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct ScanResult {
  std::vector<Bracket> brackets;
  std::vector<double> skipped_nodes;  // grid nodes where the evaluation failed
};

/// Sign-change scan of the characteristic function over a uniform grid.
/// A node where the evaluation fails is skipped and reported. Grid values
/// may be computed concurrently (jobs > 1); the result is independent of
/// the job count.
ScanResult scan_eigenvalues(const ValidatedProblem& problem, double lambda_min,
                            double lambda_max, int grid_points, int jobs = 1,
                            const IvpOptions& opts = {});

/// Bracketed root refinement (bisection with secant acceleration) of the
/// characteristic function; contracts the bracket width below tol.
double refine_eigenvalue(const ValidatedProblem& problem, Bracket bracket, double tol = 1e-10,
                         const IvpOptions& opts = {});

struct Eigenpair {
  double lambda = 0.0;
  std::shared_ptr<const PiecewiseSolution> eigenfunction;  // H-normalized, sign-fixed
  double boundary_scalar = 0.0;  // alpha1 u(1) - alpha2 u'(1) of the normalized eigenfunction
  double norm_check = 0.0;       // recomputed H-norm (should be 1)
};

/// Integration options used for eigenfunction construction; tighter than the
/// scan so that downstream quadratures see interpolation error well below
/// their targets.
inline IvpOptions eigenfunction_ivp_options() { return IvpOptions{1e-12, 1e-14, 0.0, 0.0, true}; }

/// Builds the left solution at lambda_n, scales it to unit H-norm (function
/// integral weighted by r plus the boundary term), and fixes the sign so the
/// first sample with |u| > 1e-6 is positive.
Eigenpair normalize_eigenpair(const ValidatedProblem& problem, double lambda_n,
                              const IvpOptions& opts = eigenfunction_ivp_options());

/// Scan + refine + normalize over a window; eigenvalues ascending.
std::vector<Eigenpair> compute_eigenpairs(const ValidatedProblem& problem, double lambda_min,
                                          double lambda_max, int grid_points,
                                          double refine_tol = 1e-10, int jobs = 1);

/// The eigenpair as a Hilbert-space element (function part, boundary scalar),
/// with analytic derivatives from the stored flux.
HilbertElement eigen_element(const Eigenpair& pair);

struct RealityProbeSample {
  std::complex<double> lambda;
  double abs_characteristic = 0.0;
};

struct RealityProbeReport {
  std::vector<RealityProbeSample> samples;
  double min_abs = 0.0;  // 0 for an empty sample list
};

/// Evaluates |D(lambda)| on complex samples (each must have |Im| >= 0.1);
/// all eigenvalues being real, the expectation is a strictly positive
/// minimum.
RealityProbeReport reality_probe(const ValidatedProblem& problem,
                                 const std::vector<std::complex<double>>& samples,
                                 const IvpOptions& opts = {});

}  // namespace slp
