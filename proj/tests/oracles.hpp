#pragma once

// Test-side ground truth for the continuous fixture, independent of the
// library: with r = p = 1, q = 0, u(-1) = 0 and u(1) + lambda u'(1) = 0,
// the eigenvalue equation reduces to scalar transcendental equations:
//   lambda = s^2 > 0:   sin(2s)/s + s^2 cos(2s) = 0
//   lambda = -t^2 < 0:  tanh(2t) = t^3
// solved here by plain bisection.

#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

inline double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 200; ++i) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0.0) return m;
    if (fa * fm < 0.0) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

inline double positive_branch(double s) { return std::sin(2.0 * s) / s + s * s * std::cos(2.0 * s); }
inline double negative_branch(double t) { return std::tanh(2.0 * t) - t * t * t; }

// All eigenvalues of the continuous fixture up to lambda_max, ascending.
inline std::vector<double> continuous_eigenvalues(double lambda_max, int scan_points = 400000) {
  std::vector<double> out;

  // negative branch: one root of tanh(2t) = t^3 with t > 0
  {
    double prev_t = 1e-3, prev_f = negative_branch(prev_t);
    for (int i = 1; i <= 4000; ++i) {
      double t = 1e-3 + (3.0 - 1e-3) * i / 4000.0;
      double f = negative_branch(t);
      if (prev_f * f < 0.0) out.push_back(-std::pow(bisect(negative_branch, prev_t, t), 2));
      prev_t = t;
      prev_f = f;
    }
  }

  double s_max = std::sqrt(lambda_max > 0 ? lambda_max : 0.0);
  double prev_s = 1e-4, prev_f = positive_branch(prev_s);
  for (int i = 1; i <= scan_points; ++i) {
    double s = 1e-4 + (s_max - 1e-4) * i / scan_points;
    double f = positive_branch(s);
    if (prev_f * f < 0.0) out.push_back(std::pow(bisect(positive_branch, prev_s, s), 2));
    prev_s = s;
    prev_f = f;
  }
  return out;
}

}  // namespace oracles
