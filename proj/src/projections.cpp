#include "graphlearn/projections.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "graphlearn/errors.hpp"
#include "graphlearn/sym_eigen.hpp"

namespace graphlearn {

namespace {

void require_square_sym(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": matrix must be square with n >= 1");
  }
}

// Mirrors the upper triangle so the result is bit-for-bit symmetric.
void symmetrize_exact(Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      m(i, j) = v;
      m(j, i) = v;
    }
  }
}

}  // namespace

SupportMask SupportMask::full(int n) {
  SupportMask mask;
  mask.allowed = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, true);
  return mask;
}

SupportMask SupportMask::fromEdges(int n, const std::vector<std::pair<int, int>>& edges,
                                   bool allow_diagonal) {
  SupportMask mask;
  mask.allowed = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false);
  for (const auto& [k, l] : edges) {
    if (k < 0 || l < 0 || k >= n || l >= n) {
      throw DimensionError("support edge endpoint out of range");
    }
    mask.allowed(k, l) = true;
    mask.allowed(l, k) = true;
  }
  if (allow_diagonal) {
    for (int i = 0; i < n; ++i) mask.allowed(i, i) = true;
  }
  return mask;
}

SupportMask SupportMask::fromPositiveEntries(const Eigen::MatrixXd& a, bool allow_diagonal) {
  require_square_sym(a, "support mask");
  const int n = static_cast<int>(a.rows());
  SupportMask mask;
  mask.allowed = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && (a(i, j) > 0.0 || a(j, i) > 0.0)) {
        mask.allowed(i, j) = true;
        mask.allowed(j, i) = true;
      }
    }
  }
  if (allow_diagonal) {
    for (int i = 0; i < n; ++i) mask.allowed(i, i) = true;
  }
  return mask;
}

bool SupportMask::symmetric() const {
  for (Eigen::Index i = 0; i < allowed.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < allowed.cols(); ++j) {
      if (allowed(i, j) != allowed(j, i)) return false;
    }
  }
  return true;
}

Eigen::MatrixXd proj_box_sym(const Eigen::MatrixXd& m, bool zero_diagonal) {
  require_square_sym(m, "proj_box_sym");
  Eigen::MatrixXd r = m.cwiseMax(0.0);
  if (zero_diagonal) r.diagonal().setZero();
  return r;
}

Eigen::MatrixXd proj_rowsum_affine(const Eigen::MatrixXd& m) {
  require_square_sym(m, "proj_rowsum_affine");
  const int n = static_cast<int>(m.rows());
  // Nearest symmetric matrix with row sums one: X = m + u1^T + 1u^T where
  // the dual u solves (N I + 11^T) (2u) = 2r, r = 1 - m*1. The KKT matrix
  // has the closed-form inverse (1/N)(I - 11^T / (2N)).
  const Eigen::VectorXd r = Eigen::VectorXd::Ones(n) - m.rowwise().sum();
  const double sigma = r.sum() / (2.0 * n);
  const Eigen::VectorXd u = (r.array() - sigma).matrix() / static_cast<double>(n);
  Eigen::MatrixXd x(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = m(i, j) + u(i) + u(j);
      x(i, j) = v;
      x(j, i) = v;
    }
  }
  return x;
}

Eigen::MatrixXd proj_spectral_cap(const Eigen::MatrixXd& m, double cap) {
  require_square_sym(m, "proj_spectral_cap");
  if (cap <= 0.0) throw std::invalid_argument("spectral cap must be > 0");
  const int n = static_cast<int>(m.rows());
  const double shift = 1.0 / static_cast<double>(n);
  Eigen::MatrixXd b = m;
  b.array() -= shift;
  const SymEigenResult eig = sym_eigen(b);
  if (eig.values(n - 1) <= cap) {
    return m;  // already feasible; exact idempotence
  }
  const Eigen::VectorXd clipped = eig.values.cwiseMin(cap);
  Eigen::MatrixXd r = eig.vectors * clipped.asDiagonal() * eig.vectors.transpose();
  r.array() += shift;
  symmetrize_exact(r);
  return r;
}

Eigen::MatrixXd proj_support(const Eigen::MatrixXd& m, const SupportMask& mask) {
  require_square_sym(m, "proj_support");
  if (mask.allowed.rows() != m.rows() || mask.allowed.cols() != m.cols()) {
    throw DimensionError("support mask dimensions do not match matrix");
  }
  return mask.allowed.select(m, Eigen::MatrixXd::Zero(m.rows(), m.cols()));
}

ConstraintSpec& ConstraintSpec::add(BoxSym s) {
  if (box_) throw std::invalid_argument("duplicate BoxSym constraint");
  box_ = s;
  return *this;
}

ConstraintSpec& ConstraintSpec::add(SupportMask s) {
  if (support_) throw std::invalid_argument("duplicate SupportMask constraint");
  if (!s.symmetric()) throw std::invalid_argument("support mask must be symmetric");
  support_ = std::move(s);
  return *this;
}

ConstraintSpec& ConstraintSpec::add(RowSumAffine s) {
  if (rowsum_) throw std::invalid_argument("duplicate RowSumAffine constraint");
  rowsum_ = s;
  return *this;
}

ConstraintSpec& ConstraintSpec::add(SpectralCap s) {
  if (cap_) throw std::invalid_argument("duplicate SpectralCap constraint");
  if (!(s.cap > 0.0) || s.cap > 1.0) {
    throw std::invalid_argument("spectral cap must lie in (0, 1]");
  }
  cap_ = s;
  return *this;
}

bool ConstraintSpec::empty() const { return size() == 0; }

int ConstraintSpec::size() const {
  return static_cast<int>(box_.has_value()) + static_cast<int>(support_.has_value()) +
         static_cast<int>(rowsum_.has_value()) + static_cast<int>(cap_.has_value());
}

std::vector<std::string> ConstraintSpec::set_names() const {
  std::vector<std::string> names;
  if (box_) names.push_back(box_->zero_diagonal ? "box(zero-diag)" : "box");
  if (support_) names.push_back("support");
  if (rowsum_) names.push_back("rowsum");
  if (cap_) names.push_back("spectral-cap");
  return names;
}

double ProjectionReport::max_residual() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

std::string ProjectionReport::residual_summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (i) os << ", ";
    os << residual_names[i] << "=" << residuals[i];
  }
  return os.str();
}

namespace {

using ProjFn = std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>;

std::vector<ProjFn> make_projectors(const ConstraintSpec& spec) {
  std::vector<ProjFn> out;
  if (spec.box()) {
    const bool zd = spec.box()->zero_diagonal;
    out.push_back([zd](const Eigen::MatrixXd& m) { return proj_box_sym(m, zd); });
  }
  if (spec.support()) {
    const SupportMask& mask = *spec.support();
    out.push_back([mask](const Eigen::MatrixXd& m) { return proj_support(m, mask); });
  }
  if (spec.rowsum()) {
    out.push_back([](const Eigen::MatrixXd& m) { return proj_rowsum_affine(m); });
  }
  if (spec.cap()) {
    const double cap = spec.cap()->cap;
    out.push_back([cap](const Eigen::MatrixXd& m) { return proj_spectral_cap(m, cap); });
  }
  return out;
}

std::vector<double> set_residuals(const Eigen::MatrixXd& x, const std::vector<ProjFn>& projs) {
  std::vector<double> res;
  res.reserve(projs.size());
  for (const auto& p : projs) res.push_back((x - p(x)).norm());
  return res;
}

}  // namespace

ProjectionReport dykstra_project(const Eigen::MatrixXd& m, const ConstraintSpec& spec,
                                 double tol, int max_cycles) {
  require_square_sym(m, "dykstra_project");
  if (spec.empty()) throw std::invalid_argument("constraint spec is empty");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (max_cycles < 1) throw std::invalid_argument("max_cycles must be >= 1");

  const std::vector<ProjFn> projs = make_projectors(spec);
  const std::size_t k = projs.size();

  ProjectionReport report;
  report.residual_names = spec.set_names();

  Eigen::MatrixXd x = m;
  std::vector<Eigen::MatrixXd> increments(
      k, Eigen::MatrixXd::Zero(m.rows(), m.cols()));

  bool settled = false;
  for (int cycle = 1; cycle <= max_cycles; ++cycle) {
    const Eigen::MatrixXd x_prev = x;
    for (std::size_t i = 0; i < k; ++i) {
      const Eigen::MatrixXd shifted = x + increments[i];
      Eigen::MatrixXd y = projs[i](shifted);
      increments[i] = shifted - y;
      x = std::move(y);
    }
    report.cycles = cycle;
    const double change = (x - x_prev).norm();
    if (change <= tol) {
      // Iterates have settled; accept only if x is near every set. A settled
      // iterate that stays far from some set indicates the sets do not meet.
      report.residuals = set_residuals(x, projs);
      const double worst = report.max_residual();
      if (worst <= tol) {
        report.converged = true;
        report.status = ProjectionStatus::Converged;
        settled = true;
        break;
      }
      if (worst > 10.0 * tol) {
        report.status = ProjectionStatus::EmptyIntersectionSuspected;
        settled = true;
        break;
      }
    }
  }

  if (!settled) report.residuals = set_residuals(x, projs);
  report.result = std::move(x);
  return report;
}

}  // namespace graphlearn
