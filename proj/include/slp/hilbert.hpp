#pragma once

#include <array>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "slp/fundamental.hpp"
#include "slp/problem.hpp"
#include "slp/quadrature.hpp"

namespace slp {

/// Element of the weighted space L2[-1,1] (+) scalar: a function component
/// evaluable per piece (never across a breakpoint) and a scalar slot.
/// Derivative callables are optional; operations fall back to finite
/// differences when they are absent.
struct HilbertElement {
  std::array<std::function<double(double)>, 3> f;
  std::array<std::function<double(double)>, 3> df;  // may be empty
  double scalar = 0.0;

  bool has_derivative() const { return static_cast<bool>(df[0]); }
  double value(int piece, double x) const { return f[piece](x); }
};

HilbertElement zero_element();
HilbertElement element_from_callable(std::function<double(double)> fn, double scalar,
                                     std::function<double(double)> dfn = nullptr);
HilbertElement element_from_expr(const Expr& e, double scalar);
HilbertElement element_from_solution(std::shared_ptr<const PiecewiseSolution> sol, double scalar);

/// Pointwise linear combination sum_i c_i * X_i (scalar slots included).
HilbertElement linear_combination(std::vector<std::pair<double, HilbertElement>> terms);

/// <T, G> = sum over pieces of  integral T G r dx  +  (p(1)/rho) T2 G2.
/// Quadrature per piece, panels aligned to the breakpoints.
double inner_product(const ValidatedProblem& problem, const HilbertElement& T,
                     const HilbertElement& G, const QuadOptions& quad = {});

double h_norm(const ValidatedProblem& problem, const HilbertElement& T,
              const QuadOptions& quad = {});

/// Differential expression (1/r)(-(p u')' + q u) evaluated numerically via
/// the quasi-derivative: (p u')' ~ [p u'](x+h) - [p u'](x-h) over 2h with
/// h = 1e-4 (stencils shift inward near piece edges). u' comes from the
/// element's derivative callable when present, else central differences.
/// Returns (l u, -(u)_1). Throws DomainMismatch when the scalar slot does
/// not equal alpha1 u(1) - alpha2 u'(1).
HilbertElement apply_K(const ValidatedProblem& problem, const HilbertElement& u,
                       double fd_step = 1e-4);

/// Membership test for the operator domain: u(-1) = 0, transmission
/// conditions at h1 and h2, scalar slot = alpha1 u(1) - alpha2 u'(1), all
/// within tol. Throws NotInDomain on violation.
void check_domain_membership(const ValidatedProblem& problem, const HilbertElement& u,
                             double tol = 1e-8);

/// |<Ku, v> - <u, Kv>| for u, v in the operator domain. Expected small when
/// the transmission symmetry conditions hold. The quadrature target is kept
/// above the finite-difference noise floor of apply_K.
double symmetry_test(const ValidatedProblem& problem, const HilbertElement& u,
                     const HilbertElement& v, const QuadOptions& quad = {3e-8, 32, 20});

/// Random smooth element of the operator domain: trigonometric seeds on
/// piece 1 (vanishing at x = -1), continued through the breakpoints with the
/// exact jump ratios, plus interface-neutral wiggles. Carries analytic
/// derivatives.
HilbertElement random_domain_element(const ValidatedProblem& problem, std::mt19937_64& rng);

}  // namespace slp
