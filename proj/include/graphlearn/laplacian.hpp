#pragma once

#include <Eigen/Dense>

#include "graphlearn/adjacency.hpp"

namespace graphlearn {

/// Weighted graph Laplacian L = diag(A1) - A.
///
/// Row sums are zero, so 1 is always in the null space; for nonnegative A
/// the matrix is positive semi-definite and the dimension of its null space
/// equals the number of connected components of the graph. That makes the
/// spectrum of L the analytical handle on connectedness used throughout
/// this library.
class WeightedLaplacian {
 public:
  explicit WeightedLaplacian(const AdjacencyMatrix& a);

  int n() const { return static_cast<int>(l_.rows()); }
  const Eigen::MatrixXd& matrix() const { return l_; }

 private:
  Eigen::MatrixXd l_;
};

WeightedLaplacian weighted_laplacian(const AdjacencyMatrix& a);

/// x^T L x evaluated through the edge sum  sum_{k<l} A_kl (x_k - x_l)^2,
/// without forming L. Nonnegative for nonnegative A.
double laplacian_quadratic_form(const AdjacencyMatrix& a, const Eigen::VectorXd& x);

/// Number of eigenvalues of L below eig_tol * max(1, lambda_max(L)), i.e.
/// the numerical null-space dimension of L, which equals the number of
/// connected components. The threshold is relative so the count is
/// invariant to uniform weight scaling.
int spectral_component_count(const AdjacencyMatrix& a, double eig_tol = 1e-8);

/// lambda_min(L + (1/N) 11^T). Strictly positive iff the graph is
/// connected; this is the slack available to a constraint of the form
/// L + (1/N) 11^T >= eps I.
double connectedness_margin(const AdjacencyMatrix& a);

/// connectedness_margin(a) > eig_tol. A single node counts as connected.
bool is_connected(const AdjacencyMatrix& a, double eig_tol = 1e-8);

}  // namespace graphlearn
