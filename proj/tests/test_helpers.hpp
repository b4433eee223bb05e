#pragma once

#include <Eigen/Dense>
#include <vector>

#include "graphlearn/adjacency.hpp"
#include "graphlearn/rng.hpp"

namespace test_helpers {

inline double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline Eigen::MatrixXd random_symmetric(graphlearn::Rng& rng, int n, double lo = -1.0,
                                        double hi = 1.0) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = rng.uniform(lo, hi);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

// Random nonnegative weights with zero diagonal: each edge present with
// probability edge_prob, weight uniform in [wlo, whi].
inline Eigen::MatrixXd random_graph_weights(graphlearn::Rng& rng, int n, double edge_prob,
                                            double wlo = 0.1, double whi = 10.0) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform01() < edge_prob) {
        const double v = rng.uniform(wlo, whi);
        m(i, j) = v;
        m(j, i) = v;
      }
    }
  }
  return m;
}

// Exactly feasible consensus matrix: A = I - L(W)/c with c above the max
// degree, hence symmetric, nonnegative, row sums one and spectral radius <= 1.
inline Eigen::MatrixXd random_consensus_matrix(graphlearn::Rng& rng, int n,
                                               double edge_prob = 0.7) {
  const Eigen::MatrixXd w = random_graph_weights(rng, n, edge_prob, 0.1, 2.0);
  Eigen::VectorXd deg = w.rowwise().sum();
  const double c = deg.maxCoeff() * (1.0 + rng.uniform01()) + 1.0;
  Eigen::MatrixXd a = w / c;
  for (int i = 0; i < n; ++i) a(i, i) = 1.0 - deg(i) / c;
  return a;
}

// Random spanning tree on n nodes (random attachment), unit weights.
inline Eigen::MatrixXd random_tree_weights(graphlearn::Rng& rng, int n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const int parent = rng.uniform_int(0, i - 1);
    m(i, parent) = 1.0;
    m(parent, i) = 1.0;
  }
  return m;
}

inline Eigen::MatrixXd path_graph_weights(int n, double w = 1.0) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = w;
    m(i + 1, i) = w;
  }
  return m;
}

inline Eigen::MatrixXd complete_graph_weights(int n, double w = 1.0) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, w);
  m.diagonal().setZero();
  return m;
}

}  // namespace test_helpers
