#include "slp/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

namespace slp {

ScanResult scan_eigenvalues(const ValidatedProblem& problem, double lambda_min,
                            double lambda_max, int grid_points, int jobs,
                            const IvpOptions& opts) {
  if (!(lambda_min < lambda_max))
    throw Error(errc::invalid_argument, "lambda_min must be below lambda_max");
  if (grid_points < 2) throw Error(errc::invalid_argument, "grid_points must be at least 2");

  std::vector<double> values(grid_points);
  std::vector<char> ok(grid_points, 1);
  auto node = [&](int i) {
    return lambda_min + (lambda_max - lambda_min) * i / double(grid_points - 1);
  };
  auto eval_range = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      try {
        values[i] = characteristic(problem, node(i), opts);
      } catch (const Error&) {
        ok[i] = 0;
      }
    }
  };

  if (jobs <= 1) {
    eval_range(0, grid_points);
  } else {
    int n_threads = std::min<int>(jobs, grid_points);
    std::vector<std::thread> pool;
    int chunk = (grid_points + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
      int b = t * chunk, e = std::min(grid_points, b + chunk);
      if (b < e) pool.emplace_back(eval_range, b, e);
    }
    for (auto& th : pool) th.join();
  }

  ScanResult out;
  int prev = -1;
  for (int i = 0; i < grid_points; ++i) {
    if (!ok[i]) {
      out.skipped_nodes.push_back(node(i));
      continue;
    }
    if (prev >= 0) {
      if (values[prev] == 0.0) {
        // An exact grid-node zero: pair it with its neighbor.
        out.brackets.push_back({node(prev), node(i)});
      } else if (values[prev] * values[i] < 0.0) {
        out.brackets.push_back({node(prev), node(i)});
      }
    }
    prev = i;
  }
  return out;
}

double refine_eigenvalue(const ValidatedProblem& problem, Bracket bracket, double tol,
                         const IvpOptions& opts) {
  double a = bracket.lo, b = bracket.hi;
  if (!(a < b)) throw Error(errc::bracket_invalid, "bracket endpoints out of order");
  double fa = characteristic(problem, a, opts);
  double fb = characteristic(problem, b, opts);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw Error(errc::bracket_invalid, "no sign change over [" + std::to_string(a) + ", " +
                                           std::to_string(b) + "]");
  if (b - a <= tol) return 0.5 * (a + b);

  // Bisection with a secant trial each round: robust bracket contraction,
  // fast terminal convergence.
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    double mid = 0.5 * (a + b);
    double trial = mid;
    double denom = fb - fa;
    if (denom != 0.0) {
      double secant = a - fa * (b - a) / denom;
      double margin = 0.01 * (b - a);
      if (secant > a + margin && secant < b - margin) trial = secant;
    }
    double ft = characteristic(problem, trial, opts);
    if (ft == 0.0) return trial;
    if (fa * ft < 0.0) {
      b = trial;
      fb = ft;
    } else {
      a = trial;
      fa = ft;
    }
    // Guarantee geometric contraction: if the secant step barely moved the
    // bracket, take a plain bisection step too.
    if ((b - a) > tol) {
      mid = 0.5 * (a + b);
      double fm = characteristic(problem, mid, opts);
      if (fm == 0.0) return mid;
      if (fa * fm < 0.0) {
        b = mid;
        fb = fm;
      } else {
        a = mid;
        fa = fm;
      }
    }
  }
  // Linear interpolation of the final bracket.
  double denom = fb - fa;
  if (denom != 0.0) {
    double z = a - fa * (b - a) / denom;
    if (z >= a && z <= b) return z;
  }
  return 0.5 * (a + b);
}

Eigenpair normalize_eigenpair(const ValidatedProblem& problem, double lambda_n,
                              const IvpOptions& opts) {
  auto sol = std::make_shared<PiecewiseSolution>(build_left_solution(problem, lambda_n, opts));
  auto end = sol->piece(2).at_end();
  BoundaryForms forms = boundary_forms(problem, end.u, end.up);

  HilbertElement raw = element_from_solution(sol, forms.du_form);
  double norm = h_norm(problem, raw);
  if (!(norm > 1e-12))
    throw Error(errc::zero_norm, "candidate eigenfunction has vanishing norm");

  double scale = 1.0 / norm;
  // Deterministic sign: first sample with |u| above threshold is positive.
  [&] {
    for (int piece = 0; piece < 3; ++piece)
      for (const auto& node : sol->piece(piece).nodes())
        if (std::fabs(node.second[0]) > 1e-6) {
          if (node.second[0] * scale < 0.0) scale = -scale;
          return;
        }
  }();
  sol->scale(scale);

  Eigenpair pair;
  pair.lambda = lambda_n;
  pair.eigenfunction = sol;
  pair.boundary_scalar = forms.du_form * scale;
  pair.norm_check = h_norm(problem, eigen_element(pair));
  return pair;
}

std::vector<Eigenpair> compute_eigenpairs(const ValidatedProblem& problem, double lambda_min,
                                          double lambda_max, int grid_points, double refine_tol,
                                          int jobs) {
  ScanResult scan = scan_eigenvalues(problem, lambda_min, lambda_max, grid_points, jobs);
  std::vector<Eigenpair> pairs;
  pairs.reserve(scan.brackets.size());
  for (const Bracket& br : scan.brackets) {
    double lambda = refine_eigenvalue(problem, br, refine_tol);
    pairs.push_back(normalize_eigenpair(problem, lambda));
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Eigenpair& a, const Eigenpair& b) { return a.lambda < b.lambda; });
  return pairs;
}

HilbertElement eigen_element(const Eigenpair& pair) {
  return element_from_solution(pair.eigenfunction, pair.boundary_scalar);
}

RealityProbeReport reality_probe(const ValidatedProblem& problem,
                                 const std::vector<std::complex<double>>& samples,
                                 const IvpOptions& opts) {
  RealityProbeReport report;
  for (const auto& lambda : samples) {
    if (std::fabs(lambda.imag()) < 0.1)
      throw Error(errc::invalid_argument,
                  "probe sample must satisfy |Im lambda| >= 0.1, got Im = " +
                      std::to_string(lambda.imag()));
    double a = std::abs(characteristic_complex(problem, lambda, opts));
    report.samples.push_back({lambda, a});
  }
  report.min_abs = 0.0;
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    double a = report.samples[i].abs_characteristic;
    report.min_abs = i == 0 ? a : std::min(report.min_abs, a);
  }
  return report;
}

}  // namespace slp
