#include "slp/hilbert.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace slp {

namespace {

// First derivative of a callable at x, staying inside [lo, hi]. Central when
// there is room, 3-point one-sided otherwise (both second order).
double fd_deriv(const std::function<double(double)>& f, double x, double lo, double hi,
                double h) {
  double room = std::min(x - lo, hi - x);
  if (room >= h) return (f(x + h) - f(x - h)) / (2.0 * h);
  if (x - lo < hi - x) {
    return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
  }
  return (3.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h)) / (2.0 * h);
}

// Fourth-order one-sided derivative at the right end of [lo, hi].
double fd_deriv_right_end(const std::function<double(double)>& f, double x, double h) {
  return (25.0 * f(x) - 48.0 * f(x - h) + 36.0 * f(x - 2 * h) - 16.0 * f(x - 3 * h) +
          3.0 * f(x - 4 * h)) /
         (12.0 * h);
}

double element_deriv(const HilbertElement& u, int piece, double x, double lo, double hi,
                     double h) {
  if (u.df[piece]) return u.df[piece](x);
  return fd_deriv(u.f[piece], x, lo, hi, h);
}

}  // namespace

HilbertElement zero_element() {
  HilbertElement e;
  auto z = [](double) { return 0.0; };
  e.f = {z, z, z};
  e.df = {z, z, z};
  e.scalar = 0.0;
  return e;
}

HilbertElement element_from_callable(std::function<double(double)> fn, double scalar,
                                     std::function<double(double)> dfn) {
  HilbertElement e;
  e.f = {fn, fn, fn};
  if (dfn) e.df = {dfn, dfn, dfn};
  e.scalar = scalar;
  return e;
}

HilbertElement element_from_expr(const Expr& expr, double scalar) {
  auto fn = [expr](double x) { return expr.eval(x); };
  return element_from_callable(fn, scalar);
}

HilbertElement element_from_solution(std::shared_ptr<const PiecewiseSolution> sol,
                                     double scalar) {
  HilbertElement e;
  for (int piece = 0; piece < 3; ++piece) {
    e.f[piece] = [sol, piece](double x) { return sol->piece(piece).u(x); };
    e.df[piece] = [sol, piece](double x) { return sol->piece(piece).du(x); };
  }
  e.scalar = scalar;
  return e;
}

HilbertElement linear_combination(std::vector<std::pair<double, HilbertElement>> terms) {
  auto shared = std::make_shared<std::vector<std::pair<double, HilbertElement>>>(std::move(terms));
  HilbertElement e;
  bool all_have_deriv = true;
  double scalar = 0.0;
  for (const auto& [c, t] : *shared) {
    scalar += c * t.scalar;
    all_have_deriv = all_have_deriv && t.has_derivative();
  }
  for (int piece = 0; piece < 3; ++piece) {
    e.f[piece] = [shared, piece](double x) {
      double acc = 0.0;
      for (const auto& [c, t] : *shared) acc += c * t.f[piece](x);
      return acc;
    };
    if (all_have_deriv)
      e.df[piece] = [shared, piece](double x) {
        double acc = 0.0;
        for (const auto& [c, t] : *shared) acc += c * t.df[piece](x);
        return acc;
      };
  }
  e.scalar = scalar;
  return e;
}

double inner_product(const ValidatedProblem& problem, const HilbertElement& T,
                     const HilbertElement& G, const QuadOptions& quad) {
  double acc = 0.0;
  QuadOptions piece_quad = quad;
  piece_quad.abs_tol = quad.abs_tol / 3.0;
  for (int piece = 0; piece < 3; ++piece) {
    const auto& tf = T.f[piece];
    const auto& gf = G.f[piece];
    auto integrand = [&](double x) { return tf(x) * gf(x) * problem.r(piece, x); };
    acc += integrate_adaptive(integrand, problem.piece_lo(piece), problem.piece_hi(piece),
                              piece_quad);
  }
  acc += (problem.p_at_one() / problem.rho()) * T.scalar * G.scalar;
  return acc;
}

double h_norm(const ValidatedProblem& problem, const HilbertElement& T,
              const QuadOptions& quad) {
  double v = inner_product(problem, T, T, quad);
  return v > 0.0 ? std::sqrt(v) : 0.0;
}

HilbertElement apply_K(const ValidatedProblem& problem, const HilbertElement& u,
                       double fd_step) {
  // Scalar-slot consistency: it must be the boundary form alpha1 u(1) - alpha2 u'(1).
  const double h = fd_step;
  double u_one = u.f[2](1.0);
  double up_one = u.df[2] ? u.df[2](1.0) : fd_deriv_right_end(u.f[2], 1.0, h);
  BoundaryForms forms = boundary_forms(problem, u_one, up_one);
  double scale = std::max({1.0, std::fabs(u_one), std::fabs(up_one)});
  if (std::fabs(u.scalar - forms.du_form) > 1e-8 * scale)
    throw Error(errc::domain_mismatch,
                "scalar slot " + std::to_string(u.scalar) + " differs from boundary form " +
                    std::to_string(forms.du_form));

  HilbertElement out;
  for (int piece = 0; piece < 3; ++piece) {
    const double lo = problem.piece_lo(piece), hi = problem.piece_hi(piece);
    HilbertElement usnap = u;  // capture by value keeps the callables alive
    out.f[piece] = [usnap, piece, lo, hi, h, problem](double x) {
      // flux w(y) = p(y) u'(y) at the stencil points, then one central
      // difference for (p u')'.
      double g = std::min({h, (x - lo) / 2.0, (hi - x) / 2.0});
      if (g < h * 1e-6) g = h * 1e-6;
      auto flux = [&](double y) {
        return problem.p(piece, y) * element_deriv(usnap, piece, y, lo, hi, g);
      };
      double dpu = (flux(x + g) - flux(x - g)) / (2.0 * g);
      return (-dpu + problem.q(piece, x) * usnap.f[piece](x)) / problem.r(piece, x);
    };
  }
  out.scalar = -forms.u_form;
  return out;
}

void check_domain_membership(const ValidatedProblem& problem, const HilbertElement& u,
                             double tol) {
  const ProblemSpec& s = problem.spec();
  const double h = 1e-4;
  auto fail = [&](const std::string& what, double residual) {
    throw Error(errc::not_in_domain, what + " (residual " + std::to_string(residual) + ")");
  };

  double u_left = u.f[0](-1.0);
  if (std::fabs(u_left) > tol) fail("u(-1) != 0", u_left);

  struct Interface {
    double x;
    int left_piece, right_piece;
    double g_val, d_val, g_der, d_der;
  };
  const Interface ifaces[2] = {
      {s.h1, 0, 1, s.gamma[0], s.delta[0], s.gamma[1], s.delta[1]},
      {s.h2, 1, 2, s.gamma[2], s.delta[2], s.gamma[3], s.delta[3]},
  };
  for (const auto& iface : ifaces) {
    double um = u.f[iface.left_piece](iface.x);
    double up = u.f[iface.right_piece](iface.x);
    double scale = std::max({1.0, std::fabs(um), std::fabs(up)});
    double res = iface.g_val * um - iface.d_val * up;
    if (std::fabs(res) > tol * scale) fail("value transmission condition violated", res);

    double dm = element_deriv(u, iface.left_piece, iface.x, problem.piece_lo(iface.left_piece),
                              iface.x, h);
    double dp = element_deriv(u, iface.right_piece, iface.x, iface.x,
                              problem.piece_hi(iface.right_piece), h);
    scale = std::max({1.0, std::fabs(dm), std::fabs(dp)});
    res = iface.g_der * dm - iface.d_der * dp;
    if (std::fabs(res) > tol * scale) fail("derivative transmission condition violated", res);
  }

  double u_one = u.f[2](1.0);
  double up_one = u.df[2] ? u.df[2](1.0) : fd_deriv_right_end(u.f[2], 1.0, h);
  BoundaryForms forms = boundary_forms(problem, u_one, up_one);
  double scale = std::max({1.0, std::fabs(u_one), std::fabs(up_one)});
  double res = u.scalar - forms.du_form;
  if (std::fabs(res) > tol * scale) fail("scalar slot differs from the boundary form", res);
}

double symmetry_test(const ValidatedProblem& problem, const HilbertElement& u,
                     const HilbertElement& v, const QuadOptions& quad) {
  check_domain_membership(problem, u);
  check_domain_membership(problem, v);
  HilbertElement ku = apply_K(problem, u);
  HilbertElement kv = apply_K(problem, v);
  double a = inner_product(problem, ku, v, quad);
  double b = inner_product(problem, u, kv, quad);
  return std::fabs(a - b);
}

HilbertElement random_domain_element(const ValidatedProblem& problem, std::mt19937_64& rng) {
  const ProblemSpec& s = problem.spec();
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> freq(0.8, 2.2);

  // Piece 1: vanishes at x = -1 by construction.
  double a1 = amp(rng), a2 = 0.5 * amp(rng), c = freq(rng);
  auto f0 = [a1, a2, c](double x) {
    return a1 * std::sin(c * (x + 1.0)) + a2 * std::sin(2.0 * c * (x + 1.0));
  };
  auto df0 = [a1, a2, c](double x) {
    return a1 * c * std::cos(c * (x + 1.0)) + 2.0 * a2 * c * std::cos(2.0 * c * (x + 1.0));
  };

  // Continue through an interface with prescribed value/derivative, plus a
  // wiggle that vanishes to first order at the interface.
  auto continued = [&](double x0, double v0, double d0) {
    double k = freq(rng), m = freq(rng), b = 0.5 * amp(rng);
    auto fn = [x0, v0, d0, k, m, b](double x) {
      double t = x - x0;
      return v0 * std::cos(k * t) + (d0 / k) * std::sin(k * t) + b * (1.0 - std::cos(m * t));
    };
    auto dfn = [x0, v0, d0, k, m, b](double x) {
      double t = x - x0;
      return -v0 * k * std::sin(k * t) + d0 * std::cos(k * t) + b * m * std::sin(m * t);
    };
    return std::make_pair(std::function<double(double)>(fn), std::function<double(double)>(dfn));
  };

  double v1 = (s.gamma[0] / s.delta[0]) * f0(s.h1);
  double d1 = (s.gamma[1] / s.delta[1]) * df0(s.h1);
  auto [f1, df1] = continued(s.h1, v1, d1);

  double v2 = (s.gamma[2] / s.delta[2]) * f1(s.h2);
  double d2 = (s.gamma[3] / s.delta[3]) * df1(s.h2);
  auto [f2, df2] = continued(s.h2, v2, d2);

  HilbertElement e;
  e.f = {f0, f1, f2};
  e.df = {df0, df1, df2};
  e.scalar = boundary_forms(problem, f2(1.0), df2(1.0)).du_form;
  return e;
}

}  // namespace slp
