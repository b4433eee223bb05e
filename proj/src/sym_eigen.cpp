#include "graphlearn/sym_eigen.hpp"

#include "graphlearn/errors.hpp"

namespace graphlearn {

SymEigenResult sym_eigen(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) {
    throw NumericError("symmetric eigendecomposition did not converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericError("symmetric eigendecomposition did not converge");
  }
  return es.eigenvalues();
}

double sym_eigen_max(const Eigen::MatrixXd& m) {
  const Eigen::VectorXd w = sym_eigenvalues(m);
  return w(w.size() - 1);
}

double sym_eigen_min(const Eigen::MatrixXd& m) { return sym_eigenvalues(m)(0); }

Eigen::VectorXd canonical_sign(Eigen::VectorXd v, double tol) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > tol) {
      if (v(i) < 0.0) v = -v;
      break;
    }
  }
  return v;
}

}  // namespace graphlearn
