#include "slp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace slp {

DiscreteOperator discretize(const ValidatedProblem& problem, int M) {
  if (M < 8) throw Error(errc::invalid_argument, "at least 8 nodes per piece required");
  const ProblemSpec& s = problem.spec();

  DiscreteOperator op;
  op.nodes_per_piece = M;
  std::array<double, 3> h{};
  for (int k = 0; k < 3; ++k) {
    double lo = problem.piece_lo(k), hi = problem.piece_hi(k);
    h[k] = (hi - lo) / (M - 1);
    op.nodes[k].resize(M);
    for (int i = 0; i < M; ++i) op.nodes[k][i] = lo + (hi - lo) * i / (M - 1);
    op.nodes[k].back() = hi;
  }

  const int dim = op.dimension();
  const int zi = dim - 1;        // augmented scalar
  const int u_one = 3 * M - 1;   // node at x = 1
  op.a_full = Eigen::MatrixXd::Zero(dim, dim);
  op.b_full = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd& A = op.a_full;
  Eigen::MatrixXd& B = op.b_full;

  // interior rows: -(p u')' + q u = lambda r u, conservative central stencil
  for (int k = 0; k < 3; ++k) {
    for (int i = 1; i < M - 1; ++i) {
      int g = k * M + i;
      double x = op.nodes[k][i];
      double pm = problem.p(k, x - 0.5 * h[k]);
      double pp = problem.p(k, x + 0.5 * h[k]);
      double h2 = h[k] * h[k];
      A(g, g - 1) = -pm / h2;
      A(g, g) = (pm + pp) / h2 + problem.q(k, x);
      A(g, g + 1) = -pp / h2;
      B(g, g) = problem.r(k, x);
    }
  }

  // u(-1) = 0
  A(0, 0) = 1.0;

  // transmission rows at the duplicated breakpoint nodes; one-sided
  // second-order derivative stencils
  auto interface_rows = [&](int left_end, int right_start, double hl, double hr, double g_val,
                            double d_val, double g_der, double d_der) {
    A(left_end, left_end) = g_val;
    A(left_end, right_start) = -d_val;
    int row = right_start;
    A(row, left_end) += 3.0 * g_der / (2.0 * hl);
    A(row, left_end - 1) += -4.0 * g_der / (2.0 * hl);
    A(row, left_end - 2) += g_der / (2.0 * hl);
    A(row, right_start) += 3.0 * d_der / (2.0 * hr);
    A(row, right_start + 1) += -4.0 * d_der / (2.0 * hr);
    A(row, right_start + 2) += d_der / (2.0 * hr);
  };
  interface_rows(M - 1, M, h[0], h[1], s.gamma[0], s.delta[0], s.gamma[1], s.delta[1]);
  interface_rows(2 * M - 1, 2 * M, h[1], h[2], s.gamma[2], s.delta[2], s.gamma[3], s.delta[3]);

  // right boundary: backward stencil for u'(1)
  const double inv2h = 1.0 / (2.0 * h[2]);
  // z definition: alpha1 u(1) - alpha2 u'(1) - z = 0
  A(u_one, u_one) = s.alpha1 - 3.0 * s.alpha2 * inv2h;
  A(u_one, u_one - 1) = 4.0 * s.alpha2 * inv2h;
  A(u_one, u_one - 2) = -s.alpha2 * inv2h;
  A(u_one, zi) = -1.0;
  // -(u)_1 = lambda z
  A(zi, u_one) = -s.beta1 + 3.0 * s.beta2 * inv2h;
  A(zi, u_one - 1) = -4.0 * s.beta2 * inv2h;
  A(zi, u_one - 2) = s.beta2 * inv2h;
  B(zi, zi) = 1.0;

  // ---------------------------------------------------------------------
  // Reduced symmetric pencil
  op.symmetric_path = symmetry_condition_check(problem).holds && s.alpha2 != 0.0;
  if (!op.symmetric_path) return op;

  Eigen::MatrixXd As = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd Bs = Eigen::VectorXd::Zero(dim);
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i + 1 < M; ++i) {
      int g = k * M + i;
      double mid = 0.5 * (op.nodes[k][i] + op.nodes[k][i + 1]);
      double kp = problem.p(k, mid) / h[k];
      As(g, g) += kp;
      As(g + 1, g + 1) += kp;
      As(g, g + 1) -= kp;
      As(g + 1, g) -= kp;
    }
    for (int i = 0; i < M; ++i) {
      int g = k * M + i;
      double w = (i == 0 || i == M - 1) ? 0.5 : 1.0;
      double x = op.nodes[k][i];
      As(g, g) += problem.q(k, x) * h[k] * w;
      Bs(g) += problem.r(k, x) * h[k] * w;
    }
  }
  const double p1 = problem.p_at_one();
  const double rho = problem.rho();
  As(u_one, u_one) += -p1 * s.alpha1 / s.alpha2;
  As(u_one, zi) += p1 / s.alpha2;
  As(zi, u_one) += p1 / s.alpha2;
  As(zi, zi) += -p1 * s.beta2 / (rho * s.alpha2);
  Bs(zi) += p1 / rho;

  // fold the value constraints: u(-1) = 0 dropped; breakpoint plus-side
  // nodes slaved with the jump ratio
  const double c1 = s.gamma[0] / s.delta[0];
  const double c2 = s.gamma[2] / s.delta[2];
  std::vector<int> red_index(dim, -1);
  std::vector<double> factor(dim, 1.0);
  int next = 0;
  for (int d = 0; d < dim; ++d) {
    if (d == 0) continue;
    if (d == M || d == 2 * M) continue;
    red_index[d] = next++;
  }
  red_index[M] = red_index[M - 1];
  factor[M] = c1;
  red_index[2 * M] = red_index[2 * M - 1];
  factor[2 * M] = c2;

  const int rdim = op.reduced_dimension();
  op.a_reduced = Eigen::MatrixXd::Zero(rdim, rdim);
  op.b_reduced = Eigen::VectorXd::Zero(rdim);
  for (int i = 0; i < dim; ++i) {
    if (red_index[i] < 0) continue;
    op.b_reduced(red_index[i]) += factor[i] * factor[i] * Bs(i);
    for (int j = 0; j < dim; ++j) {
      if (red_index[j] < 0 || As(i, j) == 0.0) continue;
      op.a_reduced(red_index[i], red_index[j]) += factor[i] * factor[j] * As(i, j);
    }
  }
  return op;
}

DiscreteEigenSolution oracle_eigen_solve(const DiscreteOperator& op, int k) {
  if (!op.symmetric_path)
    throw Error(errc::eig_solve_failure, "reduced symmetric pencil not available");
  const int n = op.reduced_dimension();
  if (k > n) throw Error(errc::length_mismatch, "requested more eigenvalues than unknowns");

  Eigen::VectorXd scale = op.b_reduced.array().sqrt().inverse().matrix();
  Eigen::MatrixXd C = scale.asDiagonal() * op.a_reduced * scale.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(C);
  if (solver.info() != Eigen::Success)
    throw Error(errc::eig_solve_failure, "dense symmetric eigensolve failed");

  DiscreteEigenSolution out;
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
  out.vectors = scale.asDiagonal() * solver.eigenvectors().leftCols(k);
  return out;
}

namespace {

std::vector<double> qz_eigenvalues(const DiscreteOperator& op, int k) {
  Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> solver;
  solver.compute(op.a_full, op.b_full, false);
  if (solver.info() != Eigen::Success)
    throw Error(errc::eig_solve_failure, "dense QZ eigensolve failed");

  const double scale = std::max(1.0, op.a_full.norm());
  std::vector<double> vals;
  for (int i = 0; i < solver.alphas().size(); ++i) {
    std::complex<double> a = solver.alphas()(i);
    double b = solver.betas()(i);
    if (std::fabs(b) < 1e-12 * scale) continue;  // infinite pair from constraint rows
    std::complex<double> lam = a / b;
    if (std::fabs(lam.imag()) > 1e-6 * (1.0 + std::fabs(lam.real()))) continue;
    if (std::fabs(lam.real()) > 1e10) continue;
    vals.push_back(lam.real());
  }
  std::sort(vals.begin(), vals.end());
  if (static_cast<int>(vals.size()) < k)
    throw Error(errc::length_mismatch, "QZ solve produced fewer finite eigenvalues than requested");
  vals.resize(k);
  return vals;
}

}  // namespace

std::vector<double> oracle_eigenvalues(const DiscreteOperator& op, int k) {
  if (op.symmetric_path) return oracle_eigen_solve(op, k).eigenvalues;
  return qz_eigenvalues(op, k);
}

std::vector<double> oracle_eigenvalues(const ValidatedProblem& problem, int M, int k) {
  return oracle_eigenvalues(discretize(problem, M), k);
}

SpectraComparison compare_spectra(const std::vector<double>& shooting,
                                  const std::vector<double>& oracle, double mesh_width,
                                  std::size_t k) {
  if (shooting.size() < k || oracle.size() < k)
    throw Error(errc::length_mismatch,
                "need " + std::to_string(k) + " values on both sides, have " +
                    std::to_string(shooting.size()) + " and " + std::to_string(oracle.size()));
  SpectraComparison cmp;
  cmp.all_pass = true;
  for (std::size_t n = 0; n < k; ++n) {
    SpectraComparison::Row row;
    row.shooting = shooting[n];
    row.oracle = oracle[n];
    row.scaled_diff = std::fabs(shooting[n] - oracle[n]) / (1.0 + std::fabs(shooting[n]));
    row.tol = 5.0 * mesh_width * mesh_width * std::fabs(shooting[n]) + 1e-6;
    row.pass = row.scaled_diff <= row.tol;
    cmp.all_pass = cmp.all_pass && row.pass;
    cmp.rows.push_back(row);
  }
  return cmp;
}

}  // namespace slp
