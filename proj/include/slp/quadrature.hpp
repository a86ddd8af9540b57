#pragma once

#include <cmath>
#include <vector>

#include "slp/errors.hpp"

namespace slp {

/// Gauss-Legendre rule on [-1,1]; nodes ascending.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule of the given order (computed once via Newton on P_n).
const GaussRule& gauss_rule(int n);

struct QuadOptions {
  double abs_tol = 1e-10;
  int panel_nodes = 32;
  int max_depth = 20;
};

template <class F>
double integrate_panel(F&& f, double a, double b, int n = 32) {
  const GaussRule& rule = gauss_rule(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

namespace detail {

template <class F>
double adaptive_rec(F& f, double a, double b, double whole, double tol, int depth, int nodes) {
  double m = 0.5 * (a + b);
  double left = integrate_panel(f, a, m, nodes);
  double right = integrate_panel(f, m, b, nodes);
  double err = std::fabs(left + right - whole);
  if (err <= tol) return left + right;
  if (depth <= 0)
    throw Error(errc::quadrature_nonconvergence,
                "panel error " + std::to_string(err) + " above tolerance at max depth");
  return adaptive_rec(f, a, m, left, 0.5 * tol, depth - 1, nodes) +
         adaptive_rec(f, m, b, right, 0.5 * tol, depth - 1, nodes);
}

}  // namespace detail

/// Composite adaptive Gauss-Legendre with an absolute-error target. Panels
/// split recursively where the whole-vs-halves estimate exceeds the local
/// share of the tolerance.
template <class F>
double integrate_adaptive(F&& f, double a, double b, const QuadOptions& opts = {}) {
  if (a == b) return 0.0;
  double whole = integrate_panel(f, a, b, opts.panel_nodes);
  return detail::adaptive_rec(f, a, b, whole, opts.abs_tol, opts.max_depth, opts.panel_nodes);
}

}  // namespace slp
