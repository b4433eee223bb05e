#include "graphlearn/laplacian.hpp"

#include <cmath>

#include "graphlearn/errors.hpp"
#include "graphlearn/sym_eigen.hpp"

namespace graphlearn {

WeightedLaplacian::WeightedLaplacian(const AdjacencyMatrix& a) {
  const Eigen::MatrixXd& w = a.weights();
  l_ = -w;
  for (int k = 0; k < a.n(); ++k) {
    double degree = 0.0;
    for (int m = 0; m < a.n(); ++m) {
      if (m != k) degree += w(k, m);
    }
    l_(k, k) = degree;
  }
}

WeightedLaplacian weighted_laplacian(const AdjacencyMatrix& a) {
  return WeightedLaplacian(a);
}

double laplacian_quadratic_form(const AdjacencyMatrix& a, const Eigen::VectorXd& x) {
  if (x.size() != a.n()) {
    throw DimensionError("vector length does not match node count");
  }
  const Eigen::MatrixXd& w = a.weights();
  double acc = 0.0;
  for (int k = 0; k < a.n(); ++k) {
    for (int l = k + 1; l < a.n(); ++l) {
      const double d = x(k) - x(l);
      acc += w(k, l) * d * d;
    }
  }
  return acc;
}

int spectral_component_count(const AdjacencyMatrix& a, double eig_tol) {
  if (eig_tol <= 0.0) throw std::invalid_argument("eig_tol must be > 0");
  const Eigen::VectorXd w = sym_eigenvalues(weighted_laplacian(a).matrix());
  const double threshold = eig_tol * std::max(1.0, w(w.size() - 1));
  int count = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) <= threshold) ++count;
  }
  return count;
}

double connectedness_margin(const AdjacencyMatrix& a) {
  const int n = a.n();
  Eigen::MatrixXd m = weighted_laplacian(a).matrix();
  m.array() += 1.0 / static_cast<double>(n);
  return sym_eigen_min(m);
}

bool is_connected(const AdjacencyMatrix& a, double eig_tol) {
  return connectedness_margin(a) > eig_tol;
}

}  // namespace graphlearn
