#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace graphlearn {

/// {A symmetric : A >= 0 entrywise, optionally diag(A) = 0}.
struct BoxSym {
  bool zero_diagonal = true;
};

/// {A symmetric : A1 = 1}.
struct RowSumAffine {};

/// {A symmetric : A - (1/N) 11^T <= cap * I}. With cap = 1 - eps and row
/// sums fixed to 1 this is the eigenvalue form of the connectedness
/// constraint L + (1/N) 11^T >= eps I, and it projects in closed form by
/// clipping eigenvalues.
struct SpectralCap {
  double cap = 0.99;
};

/// {A symmetric : A_kl = 0 for (k,l) with allowed(k,l) == false}.
/// `allowed` must be symmetric; the diagonal allowance is explicit.
struct SupportMask {
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> allowed;

  static SupportMask full(int n);
  /// Edges (k,l) from the list plus, when allow_diagonal, all (k,k).
  static SupportMask fromEdges(int n, const std::vector<std::pair<int, int>>& edges,
                               bool allow_diagonal);
  /// Positive off-diagonal entries of a define the allowed edges.
  static SupportMask fromPositiveEntries(const Eigen::MatrixXd& a, bool allow_diagonal);

  bool symmetric() const;
};

Eigen::MatrixXd proj_box_sym(const Eigen::MatrixXd& m, bool zero_diagonal);
Eigen::MatrixXd proj_rowsum_affine(const Eigen::MatrixXd& m);
Eigen::MatrixXd proj_spectral_cap(const Eigen::MatrixXd& m, double cap);
Eigen::MatrixXd proj_support(const Eigen::MatrixXd& m, const SupportMask& mask);

/// Declarative description of a feasible set as an intersection of the
/// elementary sets above, at most one of each kind. Projection sweeps run
/// in the fixed order box, support, row-sum, spectral cap: cheapest first,
/// the eigenvalue set last so every cycle ends feasible with respect to it.
class ConstraintSpec {
 public:
  ConstraintSpec& add(BoxSym s);
  ConstraintSpec& add(SupportMask s);
  ConstraintSpec& add(RowSumAffine s);
  ConstraintSpec& add(SpectralCap s);  // requires cap in (0, 1]

  const std::optional<BoxSym>& box() const { return box_; }
  const std::optional<SupportMask>& support() const { return support_; }
  const std::optional<RowSumAffine>& rowsum() const { return rowsum_; }
  const std::optional<SpectralCap>& cap() const { return cap_; }

  bool empty() const;
  int size() const;
  /// Names of the active sets in projection order.
  std::vector<std::string> set_names() const;

 private:
  std::optional<BoxSym> box_;
  std::optional<SupportMask> support_;
  std::optional<RowSumAffine> rowsum_;
  std::optional<SpectralCap> cap_;
};

enum class ProjectionStatus {
  Converged,
  NotConverged,                // tolerance not reached within max_cycles
  EmptyIntersectionSuspected,  // iterates settled while residuals stayed > 10*tol
};

struct ProjectionReport {
  Eigen::MatrixXd result;
  int cycles = 0;
  std::vector<double> residuals;  // Frobenius distance of result to each set,
                                  // ordered as ConstraintSpec::set_names()
  std::vector<std::string> residual_names;
  bool converged = false;
  ProjectionStatus status = ProjectionStatus::NotConverged;

  double max_residual() const;
  std::string residual_summary() const;
};

/// Dykstra's alternating-projection scheme for the Frobenius projection of
/// m onto the intersection of the sets in spec. Plain alternating
/// projections find some point of the intersection; the correction terms
/// make the limit the nearest one, which projected-gradient solvers rely
/// on. Convergence requires both the cycle-to-cycle change and every
/// per-set residual to drop below tol.
ProjectionReport dykstra_project(const Eigen::MatrixXd& m, const ConstraintSpec& spec,
                                 double tol = 1e-9, int max_cycles = 1000);

}  // namespace graphlearn
