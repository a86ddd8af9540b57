#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "slp/problem.hpp"

namespace slp {

/// Dense discretization of the full boundary-value problem on three uniform
/// per-piece grids with the breakpoints duplicated as one-sided nodes, plus
/// one augmented scalar unknown z = alpha1 u(1) - alpha2 u'(1).
///
/// Two assemblies are kept:
///  - the row-replacement pencil (a_full, b_full) of dimension 3M+1: interior
///    second-order central differences, transmission rows with one-sided
///    second-order derivative stencils at the duplicated nodes, the row
///    u(-1) = 0, and the last two rows tying z to the boundary data and
///    encoding -(u)_1 = lambda z;
///  - when the transmission symmetry conditions hold (and alpha2 != 0), an
///    equivalent reduced pencil (a_reduced, b_reduced) that is symmetric with
///    diagonal positive mass after weighting with r at the nodes and
///    p(1)/rho on z: value constraints are folded congruently and the
///    derivative jumps hold as natural interface conditions of the
///    variational form.
struct DiscreteOperator {
  int nodes_per_piece = 0;
  std::array<std::vector<double>, 3> nodes;
  Eigen::MatrixXd a_full, b_full;
  bool symmetric_path = false;
  Eigen::MatrixXd a_reduced;   // empty unless symmetric_path
  Eigen::VectorXd b_reduced;   // diagonal entries

  int dimension() const { return 3 * nodes_per_piece + 1; }
  int reduced_dimension() const { return 3 * nodes_per_piece - 2; }
};

DiscreteOperator discretize(const ValidatedProblem& problem, int M);

/// k smallest eigenvalues, ascending. Uses the symmetric-definite reduced
/// pencil when available, otherwise a dense QZ solve of the full pencil with
/// the spurious (infinite / complex) pairs filtered out.
std::vector<double> oracle_eigenvalues(const DiscreteOperator& op, int k);
std::vector<double> oracle_eigenvalues(const ValidatedProblem& problem, int M, int k);

/// Reduced-pencil eigenpairs (symmetric path only): eigenvalues ascending and
/// eigenvectors normalized to unit mass (B) norm.
struct DiscreteEigenSolution {
  std::vector<double> eigenvalues;
  Eigen::MatrixXd vectors;  // columns, in reduced coordinates
};
DiscreteEigenSolution oracle_eigen_solve(const DiscreteOperator& op, int k);

struct SpectraComparison {
  struct Row {
    double shooting = 0.0;
    double oracle = 0.0;
    double scaled_diff = 0.0;  // |shooting - oracle| / (1 + |shooting|)
    double tol = 0.0;
    bool pass = false;
  };
  std::vector<Row> rows;
  bool all_pass = false;
};

/// Pairwise comparison of the first k values with the mesh-dependent
/// tolerance profile  5 * h^2 * |lambda| + 1e-6  on the scaled difference.
SpectraComparison compare_spectra(const std::vector<double>& shooting,
                                  const std::vector<double>& oracle, double mesh_width,
                                  std::size_t k);

}  // namespace slp
