#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "slp/errors.hpp"
#include "slp/problem.hpp"

namespace slp {

struct IvpOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.0;    // 0: span/16
  double first_step = 0.0;  // 0: automatic
  bool record_dense = true;
};

/// Dormand-Prince 5(4) solution record for an N-dimensional system,
/// integrated in either direction. Dense output is the standard quartic
/// continuous extension; it reproduces the step endpoints exactly.
template <int N>
struct DenseSolution {
  using State = std::array<double, N>;

  struct Step {
    double x0, h;                     // signed step
    State y, ydiff, bspl, cspl, dspl; // continuous-extension coefficients
  };

  double x_begin = 0.0, x_end = 0.0;
  State y_begin{}, y_end{};
  std::vector<Step> steps;                  // in integration order (empty if not recorded)
  std::vector<std::pair<double, State>> nodes;  // accepted step endpoints incl. both ends

  bool forward() const { return x_end >= x_begin; }
  double span_lo() const { return std::min(x_begin, x_end); }
  double span_hi() const { return std::max(x_begin, x_end); }

  State eval(double x) const {
    if (steps.empty()) throw Error(errc::out_of_span, "dense output was not recorded");
    const double lo = span_lo(), hi = span_hi();
    const double slack = 1e-12 * (1.0 + std::fabs(lo) + std::fabs(hi));
    if (x < lo - slack || x > hi + slack)
      throw Error(errc::out_of_span, "x=" + std::to_string(x) + " outside integration span");
    x = std::clamp(x, lo, hi);
    // Binary search for the step whose [x0, x0+h] contains x.
    std::size_t a = 0, b = steps.size() - 1;
    const bool fwd = forward();
    while (a < b) {
      std::size_t m = (a + b + 1) / 2;
      bool before = fwd ? (steps[m].x0 <= x) : (steps[m].x0 >= x);
      if (before) a = m; else b = m - 1;
    }
    const Step& s = steps[a];
    double theta = (x - s.x0) / s.h;
    theta = std::clamp(theta, 0.0, 1.0);
    const double th1 = 1.0 - theta;
    State out;
    for (int i = 0; i < N; ++i)
      out[i] = s.y[i] + theta * (s.ydiff[i] + th1 * (s.bspl[i] + theta * (s.cspl[i] + th1 * s.dspl[i])));
    return out;
  }
};

namespace rk_detail {

// Dormand-Prince tableau.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// difference between 5th- and 4th-order weights
inline constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                        e4 = b4 - 393.0 / 640, e5 = b5 + 92097.0 / 339200,
                        e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;
// continuous-extension weights
inline constexpr double d1 = -12715105075.0 / 11282082432.0;
inline constexpr double d3 = 87487479700.0 / 32700410799.0;
inline constexpr double d4 = -10690763975.0 / 1880347072.0;
inline constexpr double d5 = 701980252875.0 / 199316789632.0;
inline constexpr double d6 = -1453857185.0 / 822651844.0;
inline constexpr double d7 = 69997945.0 / 29380423.0;

}  // namespace rk_detail

/// Adaptive embedded RK45 with dense output. `deriv(x, y)` returns dy/dx.
/// Integrates from x0 to x1 (either direction).
template <int N, class F>
DenseSolution<N> rk45_integrate(F&& deriv, std::array<double, N> y0, double x0, double x1,
                                const IvpOptions& opts = {}) {
  using State = std::array<double, N>;
  namespace rd = rk_detail;

  DenseSolution<N> sol;
  sol.x_begin = x0;
  sol.x_end = x1;
  sol.y_begin = y0;
  if (x0 == x1) throw Error(errc::invalid_argument, "empty integration span");

  const double span = x1 - x0;
  const double dir = span > 0 ? 1.0 : -1.0;
  const double span_abs = std::fabs(span);
  const double hmax = opts.max_step > 0 ? std::min(opts.max_step, span_abs) : span_abs / 16.0;
  const double hmin = span_abs * 1e-15;

  double h = opts.first_step > 0 ? std::min(opts.first_step, hmax) : std::min(hmax, span_abs / 100.0);
  h *= dir;

  double x = x0;
  State y = y0;
  State k1 = deriv(x, y);
  sol.nodes.emplace_back(x, y);

  auto weighted_err = [&](const State& ynew, const State& yerr) {
    double acc = 0.0;
    for (int i = 0; i < N; ++i) {
      double sc = opts.abs_tol + opts.rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
      double r = yerr[i] / sc;
      acc += r * r;
    }
    return std::sqrt(acc / N);
  };

  bool last = false;
  const std::size_t max_steps = 5'000'000;
  for (std::size_t iter = 0; iter < max_steps && !last; ++iter) {
    if (std::fabs(h) > hmax) h = dir * hmax;
    if ((x + h - x1) * dir >= 0.0) {
      h = x1 - x;
      last = true;
    }
    if (std::fabs(h) < hmin)
      throw Error(errc::step_failure, "step size underflow at x=" + std::to_string(x));

    State k2, k3, k4, k5, k6, k7, ytmp, ynew, yerr;
    for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * rd::a21 * k1[i];
    k2 = deriv(x + rd::c2 * h, ytmp);
    for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * (rd::a31 * k1[i] + rd::a32 * k2[i]);
    k3 = deriv(x + rd::c3 * h, ytmp);
    for (int i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (rd::a41 * k1[i] + rd::a42 * k2[i] + rd::a43 * k3[i]);
    k4 = deriv(x + rd::c4 * h, ytmp);
    for (int i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (rd::a51 * k1[i] + rd::a52 * k2[i] + rd::a53 * k3[i] + rd::a54 * k4[i]);
    k5 = deriv(x + rd::c5 * h, ytmp);
    for (int i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (rd::a61 * k1[i] + rd::a62 * k2[i] + rd::a63 * k3[i] +
                            rd::a64 * k4[i] + rd::a65 * k5[i]);
    k6 = deriv(x + h, ytmp);
    for (int i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (rd::b1 * k1[i] + rd::b3 * k3[i] + rd::b4 * k4[i] + rd::b5 * k5[i] +
                            rd::b6 * k6[i]);
    k7 = deriv(x + h, ynew);
    for (int i = 0; i < N; ++i)
      yerr[i] = h * (rd::e1 * k1[i] + rd::e3 * k3[i] + rd::e4 * k4[i] + rd::e5 * k5[i] +
                     rd::e6 * k6[i] + rd::e7 * k7[i]);

    double err = weighted_err(ynew, yerr);
    if (err <= 1.0) {
      if (opts.record_dense) {
        typename DenseSolution<N>::Step st;
        st.x0 = x;
        st.h = h;
        st.y = y;
        for (int i = 0; i < N; ++i) {
          double ydiff = ynew[i] - y[i];
          double bspl = h * k1[i] - ydiff;
          st.ydiff[i] = ydiff;
          st.bspl[i] = bspl;
          st.cspl[i] = ydiff - h * k7[i] - bspl;
          st.dspl[i] = h * (rd::d1 * k1[i] + rd::d3 * k3[i] + rd::d4 * k4[i] + rd::d5 * k5[i] +
                            rd::d6 * k6[i] + rd::d7 * k7[i]);
        }
        sol.steps.push_back(st);
      }
      x += h;
      y = ynew;
      k1 = k7;  // first-same-as-last
      sol.nodes.emplace_back(x, y);
      double factor = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
      h *= std::clamp(factor, 0.2, 5.0);
    } else {
      last = false;
      double factor = 0.9 * std::pow(err, -0.2);
      h *= std::clamp(factor, 0.1, 0.9);
    }
  }
  if (!last) throw Error(errc::step_failure, "step budget exhausted");
  // Pin the terminal node to the requested endpoint exactly.
  sol.nodes.back().first = x1;
  sol.y_end = y;
  return sol;
}

/// Solution of the second-order equation on one piece in quasi-derivative
/// form: state (u, w) with w = p(x) u'. Sampleable anywhere in its span.
class Trajectory {
 public:
  struct Sample {
    double u = 0.0;
    double up = 0.0;  // u' = w / p(x)
  };

  Trajectory() = default;
  Trajectory(int piece, Expr p_expr, DenseSolution<2> dense)
      : piece_(piece), p_expr_(std::move(p_expr)), dense_(std::move(dense)) {}

  int piece() const { return piece_; }
  double x_begin() const { return dense_.x_begin; }
  double x_end() const { return dense_.x_end; }
  bool forward() const { return dense_.forward(); }

  /// (u, w) at the requested start / end of integration (exact endpoints).
  std::array<double, 2> state_begin() const { return dense_.y_begin; }
  std::array<double, 2> state_end() const { return dense_.y_end; }

  Sample at_begin() const { return to_sample(dense_.x_begin, dense_.y_begin); }
  Sample at_end() const { return to_sample(dense_.x_end, dense_.y_end); }

  /// Dense-output interpolation. Exact at stored nodes: the continuous
  /// extension reduces to the stored states at theta = 0 and 1. Throws
  /// OutOfSpan outside the integration span.
  Sample sample(double x) const { return to_sample(x, dense_.eval(x)); }

  double u(double x) const { return sample(x).u; }
  double du(double x) const { return sample(x).up; }
  double flux(double x) const { return dense_.eval(x)[1]; }  // w = p u'

  const std::vector<std::pair<double, std::array<double, 2>>>& nodes() const {
    return dense_.nodes;
  }

  void scale(double c) {
    for (auto& n : dense_.nodes)
      for (double& v : n.second) v *= c;
    for (auto& s : dense_.steps)
      for (int i = 0; i < 2; ++i) {
        s.y[i] *= c;
        s.ydiff[i] *= c;
        s.bspl[i] *= c;
        s.cspl[i] *= c;
        s.dspl[i] *= c;
      }
    for (double& v : dense_.y_begin) v *= c;
    for (double& v : dense_.y_end) v *= c;
  }

 private:
  Sample to_sample(double x, const std::array<double, 2>& y) const {
    return Sample{y[0], y[1] / p_expr_.eval(x)};
  }

  int piece_ = 0;
  Expr p_expr_;
  DenseSolution<2> dense_;
};

/// Integrates u' = w/p(x), w' = (q(x) - lambda r(x)) u on one piece from
/// x_start to x_end (either direction) with initial data u0, up0 = u'(x_start).
Trajectory integrate_ivp(const ValidatedProblem& problem, int piece, double lambda,
                         double x_start, double x_end, double u0, double up0,
                         const IvpOptions& opts = {});

/// Endpoint-only variant (no dense storage); returns (u, w) at x_end.
std::array<double, 2> integrate_endpoint(const ValidatedProblem& problem, int piece,
                                         double lambda, double x_start, double x_end,
                                         double u0, double up0, const IvpOptions& opts = {});

}  // namespace slp
