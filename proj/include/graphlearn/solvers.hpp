#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "graphlearn/adjacency.hpp"
#include "graphlearn/data_io.hpp"
#include "graphlearn/projections.hpp"

namespace graphlearn {

/// mu(A) = max{lambda_2(A), -lambda_N(A)} with eigenvalues sorted
/// descending: the worst-case per-step contraction factor of the averaging
/// iteration x <- A x on symmetric weights with row sums one. mu < 1 means
/// the iteration converges to the mean, and smaller is faster.
/// Throws for N < 2 (lambda_2 does not exist).
double mu_value(const Eigen::MatrixXd& a);
double mu_value(const AdjacencyMatrix& a);

/// A subgradient of mu at a, valid on the affine set {A = A^T, A1 = 1}:
/// +vv^T for the lambda_2 branch (v the extreme eigenvector of
/// A - (1/N)11^T, hence orthogonal to the ones direction) and -vv^T for
/// the -lambda_N branch. Ties within 1e-12 take the lambda_2 branch.
Eigen::MatrixXd mu_subgradient(const Eigen::MatrixXd& a);

/// Sparsity threshold 1/(n - k + 1): pushing the edge-sparsity weight eta
/// above this value forces the consensus design into at least k connected
/// components. At eta > 1 the design collapses to the identity.
double split_threshold(int n, int k);

struct SolverOptions {
  int max_iter = 20000;
  /// Initial step of the diminishing schedule step0 / sqrt(t).
  /// 0 picks the per-problem default: 1 for consensus design,
  /// 1 / (1 + |X^T X|_F / M) for graph learning.
  double step0 = 0.0;
  /// Stop once the best objective improved by less than this relative
  /// amount over stop_window consecutive iterations.
  double stop_rel_improvement = 1e-8;
  int stop_window = 100;
  double projection_tol = 1e-9;
  int projection_max_cycles = 1000;
  /// Per-constraint residual bound the returned solution must meet for the
  /// report to count as converged.
  double feasibility_tol = 1e-6;
};

/// Residuals of the returned matrix against each constraint of its
/// problem; entries for constraints a problem does not impose are 0.
struct FeasibilityResiduals {
  double negativity = 0.0;    // |min(0, min entry)|
  double rowsum = 0.0;        // max_k |sum_l A_kl - 1|
  double diagonal = 0.0;      // max_k |A_kk| (zero-diagonal problems only)
  double off_support = 0.0;   // max |A_kl| outside the support
  double spectral_cap = 0.0;  // max(0, lambda_max(A - 11^T/N) - (1 - eps))

  double max() const;
  std::string summary() const;
};

struct SolveReport {
  AdjacencyMatrix a = AdjacencyMatrix::zero(1);
  std::vector<double> objective_trace;  // objective at every iterate
  FeasibilityResiduals feasibility;
  double objective = 0.0;  // objective of the returned (best) iterate
  double margin = 0.0;     // connectedness_margin(a)
  int iterations = 0;
  bool converged = false;
  std::vector<std::string> warnings;
};

/// Sparse consensus weight design: minimize mu(A) + eta * tr(I - A) over
/// symmetric nonnegative A with row sums one and support restricted to the
/// given edge set (self-weights are always free).
struct ConsensusProblem {
  SupportMask support;
  double eta = 0.0;
  bool connected = false;  // add the spectral cap lambda_max(A - 11^T/N) <= 1 - epsilon
  double epsilon = 0.01;
};

/// Graph learning from signals: minimize (1/M) tr(X (I - A) X^T) over
/// symmetric nonnegative A with zero diagonal and row sums one, i.e. find
/// the edge weights under which the observed signals vary most smoothly.
struct SpgProblem {
  SignalMatrix x;
  double epsilon = 0.01;
  bool connected = true;
};

/// Projected subgradient with diminishing steps and best-iterate tracking,
/// started from the identity (the lazy consensus matrix). Throws
/// InfeasibleError when connected is set but the support graph is not
/// itself connected.
SolveReport consensus_design(const ConsensusProblem& p, const SolverOptions& opts = {});

/// Projected gradient (the objective is linear in A) with Dykstra
/// projection each step, started from the uniform complete graph.
SolveReport spg_learn(const SpgProblem& p, const SolverOptions& opts = {});

/// Runs x(t+1) = A x(t) for the given number of steps. Returns the
/// (steps+1) x N trajectory including x(0). Requires symmetric A with row
/// sums one so the mean is preserved; when mu(A) < 1 the rows converge
/// geometrically to the mean of x0.
Eigen::MatrixXd simulate_consensus(const AdjacencyMatrix& a, const Eigen::VectorXd& x0,
                                   int steps);

}  // namespace graphlearn
