#include "graphlearn/adjacency.hpp"

#include <cmath>
#include <deque>

#include "graphlearn/errors.hpp"

namespace graphlearn {

namespace {

void require_square(const Eigen::MatrixXd& w) {
  if (w.rows() < 1 || w.rows() != w.cols()) {
    throw DimensionError("adjacency matrix must be square with n >= 1");
  }
}

}  // namespace

AdjacencyMatrix AdjacencyMatrix::fromWeights(Eigen::MatrixXd w) {
  require_square(w);
  if (!w.allFinite()) {
    throw std::invalid_argument("adjacency weights must be finite");
  }
  // (w + w^T)/2 is bit-symmetric: both halves compute the same sum.
  Eigen::MatrixXd s = (w + w.transpose()) / 2.0;
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  const double correction = (w - s).cwiseAbs().maxCoeff();
  if (correction > 1e-9 * scale) {
    throw std::invalid_argument("adjacency weights are asymmetric beyond 1e-9 relative");
  }
  if (s.minCoeff() < -1e-12 * scale) {
    throw std::invalid_argument("adjacency weights must be nonnegative");
  }
  s = s.cwiseMax(0.0);
  return AdjacencyMatrix(std::move(s));
}

AdjacencyMatrix AdjacencyMatrix::fromEdges(
    int n, const std::vector<std::tuple<int, int, double>>& edges) {
  if (n < 1) throw DimensionError("node count must be >= 1");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [k, l, weight] : edges) {
    if (k < 0 || l < 0 || k >= n || l >= n) {
      throw DimensionError("edge endpoint out of range");
    }
    w(k, l) = weight;
    w(l, k) = weight;
  }
  return fromWeights(std::move(w));
}

AdjacencyMatrix AdjacencyMatrix::zero(int n) {
  if (n < 1) throw DimensionError("node count must be >= 1");
  return AdjacencyMatrix(Eigen::MatrixXd::Zero(n, n));
}

ComponentLabeling component_count_bfs(const AdjacencyMatrix& a, double weight_tol) {
  if (weight_tol < 0.0) throw std::invalid_argument("weight_tol must be >= 0");
  const int n = a.n();
  const Eigen::MatrixXd& w = a.weights();
  ComponentLabeling out;
  out.labels.assign(n, -1);
  std::deque<int> queue;
  for (int start = 0; start < n; ++start) {
    if (out.labels[start] != -1) continue;
    const int id = out.count++;
    out.labels[start] = id;
    queue.push_back(start);
    while (!queue.empty()) {
      const int k = queue.front();
      queue.pop_front();
      for (int l = 0; l < n; ++l) {
        if (out.labels[l] == -1 && w(k, l) > weight_tol) {
          out.labels[l] = id;
          queue.push_back(l);
        }
      }
    }
  }
  return out;
}

SignPattern SignPattern::fromMatrix(Eigen::MatrixXi s) {
  if (s.rows() < 1 || s.rows() != s.cols()) {
    throw DimensionError("sign pattern must be square with n >= 1");
  }
  if (s != s.transpose().eval()) {
    throw std::invalid_argument("sign pattern must be symmetric");
  }
  if ((s.array().abs() > 1).any()) {
    throw std::invalid_argument("sign pattern entries must be -1, 0 or +1");
  }
  return SignPattern(std::move(s));
}

SignPattern SignPattern::signOf(const Eigen::MatrixXd& m) {
  Eigen::MatrixXi s(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      s(i, j) = m(i, j) > 0.0 ? 1 : (m(i, j) < 0.0 ? -1 : 0);
    }
  }
  return fromMatrix(std::move(s));
}

AdjacencyMatrix sign_pattern_transform(const Eigen::MatrixXd& a, const SignPattern& s) {
  require_square(a);
  if (a.rows() != s.n()) {
    throw DimensionError("matrix and sign pattern dimensions differ");
  }
  const int n = s.n();
  Eigen::MatrixXd t(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t(i, j) = static_cast<double>(s.signs()(i, j)) * a(i, j);
      if (t(i, j) < -1e-12) {
        throw NegativeResultError("sign pattern is inconsistent with the matrix");
      }
    }
  }
  return AdjacencyMatrix::fromWeights(std::move(t));
}

}  // namespace graphlearn
