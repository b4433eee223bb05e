#pragma once

#include <Eigen/Dense>

namespace graphlearn {

struct SymEigenResult {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column i pairs with values[i], orthonormal
};

/// Full spectral decomposition of a symmetric matrix
/// (Householder tridiagonalization + implicit-shift QL/QR).
/// Throws NumericError if the iteration fails to converge.
SymEigenResult sym_eigen(const Eigen::MatrixXd& m);

/// Eigenvalues only, ascending.
Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& m);

double sym_eigen_max(const Eigen::MatrixXd& m);
double sym_eigen_min(const Eigen::MatrixXd& m);

/// Flips v so its first coordinate with |v_i| > tol is positive.
/// Fixes the sign ambiguity of eigenvectors for logging and tests.
Eigen::VectorXd canonical_sign(Eigen::VectorXd v, double tol = 1e-12);

}  // namespace graphlearn
