#pragma once

#include <Eigen/Dense>
#include <tuple>
#include <vector>

namespace graphlearn {

/// Symmetric nonnegative edge-weight matrix of an undirected graph.
/// A_kl != 0 means nodes k and l share an edge of that strength.
///
/// Instances are immutable and exactly symmetric bit-for-bit; construction
/// symmetrizes by averaging and rejects input whose asymmetry exceeds 1e-9
/// relative. Negative entries are rejected except for clamp-to-zero noise
/// below 1e-12 relative (the sign-pattern transform is the only entry point
/// that accepts genuinely signed data).
class AdjacencyMatrix {
 public:
  static AdjacencyMatrix fromWeights(Eigen::MatrixXd w);

  /// Builds an n-node graph from (k, l, weight) triples. Symmetric pairs are
  /// set together; k == l sets a self-weight.
  static AdjacencyMatrix fromEdges(
      int n, const std::vector<std::tuple<int, int, double>>& edges);

  static AdjacencyMatrix zero(int n);

  int n() const { return static_cast<int>(w_.rows()); }
  const Eigen::MatrixXd& weights() const { return w_; }

 private:
  explicit AdjacencyMatrix(Eigen::MatrixXd w) : w_(std::move(w)) {}
  Eigen::MatrixXd w_;
};

/// Partition of nodes into connected components; ids are contiguous and
/// 0-based in order of first discovery.
struct ComponentLabeling {
  std::vector<int> labels;
  int count = 0;
};

/// Exact connected-component labeling by breadth-first traversal.
/// An edge exists where A_kl > weight_tol (default: strictly positive).
ComponentLabeling component_count_bfs(const AdjacencyMatrix& a,
                                      double weight_tol = 0.0);

/// Symmetric matrix of entries in {-1, 0, +1}.
class SignPattern {
 public:
  static SignPattern fromMatrix(Eigen::MatrixXi s);
  /// Entrywise sign of m.
  static SignPattern signOf(const Eigen::MatrixXd& m);

  int n() const { return static_cast<int>(s_.rows()); }
  const Eigen::MatrixXi& signs() const { return s_; }

 private:
  explicit SignPattern(Eigen::MatrixXi s) : s_(std::move(s)) {}
  Eigen::MatrixXi s_;
};

/// Flips the signs of a symmetric matrix entrywise so a known sign pattern
/// yields a nonnegative adjacency matrix: A~_ij = s_ij * a_ij. Lets the
/// spectral connectedness machinery run on problems (such as inverse
/// covariance estimates) whose raw weights are signed.
/// Throws NegativeResultError if any s_ij * a_ij < -1e-12.
AdjacencyMatrix sign_pattern_transform(const Eigen::MatrixXd& a,
                                       const SignPattern& s);

}  // namespace graphlearn
