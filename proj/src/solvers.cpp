#include "graphlearn/solvers.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "graphlearn/errors.hpp"
#include "graphlearn/laplacian.hpp"
#include "graphlearn/sym_eigen.hpp"

namespace graphlearn {

namespace {

constexpr double k_mu_tie_tol = 1e-12;

void require_mu_input(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw DimensionError("mu: matrix must be square");
  if (a.rows() < 2) {
    throw std::invalid_argument("mu is undefined for N < 2 (lambda_2 does not exist)");
  }
}

}  // namespace

double mu_value(const Eigen::MatrixXd& a) {
  require_mu_input(a);
  const Eigen::VectorXd w = sym_eigenvalues(a);  // ascending
  const double lambda2 = w(w.size() - 2);
  const double lambdaN = w(0);
  return std::max(lambda2, -lambdaN);
}

double mu_value(const AdjacencyMatrix& a) { return mu_value(a.weights()); }

Eigen::MatrixXd mu_subgradient(const Eigen::MatrixXd& a) {
  require_mu_input(a);
  const int n = static_cast<int>(a.rows());
  const Eigen::VectorXd w = sym_eigenvalues(a);
  const double lambda2 = w(n - 2);
  const double lambdaN = w(0);
  if (lambda2 >= -lambdaN - k_mu_tie_tol) {
    // lambda_2 branch. Extract the extreme eigenvector from the centered
    // matrix B = A - (1/N)11^T: on the row-sum-1 affine set the ones vector
    // is a 0-eigenvector of B, so the top eigenvector of B is the lambda_2
    // eigenvector of A chosen orthogonal to the ones direction even when
    // the top eigenvalue of A is degenerate.
    Eigen::MatrixXd b = a;
    b.array() -= 1.0 / static_cast<double>(n);
    const SymEigenResult eig = sym_eigen(b);
    const Eigen::VectorXd v = canonical_sign(eig.vectors.col(n - 1));
    return v * v.transpose();
  }
  const SymEigenResult eig = sym_eigen(a);
  const Eigen::VectorXd v = canonical_sign(eig.vectors.col(0));
  return -(v * v.transpose());
}

double split_threshold(int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 1 || k > n) {
    throw std::invalid_argument("k must satisfy 1 <= k <= n");
  }
  return 1.0 / static_cast<double>(n - k + 1);
}

double FeasibilityResiduals::max() const {
  double m = negativity;
  m = std::max(m, rowsum);
  m = std::max(m, diagonal);
  m = std::max(m, off_support);
  m = std::max(m, spectral_cap);
  return m;
}

std::string FeasibilityResiduals::summary() const {
  std::ostringstream os;
  os << "negativity=" << negativity << ", rowsum=" << rowsum << ", diagonal=" << diagonal
     << ", off_support=" << off_support << ", spectral_cap=" << spectral_cap;
  return os.str();
}

namespace {

struct LoopOutcome {
  Eigen::MatrixXd best;
  double best_objective = 0.0;
  std::vector<double> trace;
  int iterations = 0;
  bool stop_rule_fired = false;
  bool projection_failed = false;
  std::string projection_diagnostics;
};

// Projected subgradient with diminishing steps step0/sqrt(t) and
// best-iterate tracking. a0 must already be feasible.
LoopOutcome projected_subgradient(
    const Eigen::MatrixXd& a0,
    const std::function<double(const Eigen::MatrixXd&)>& objective,
    const std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>& subgradient,
    const ConstraintSpec& spec, double step0, const SolverOptions& opts) {
  LoopOutcome out;
  Eigen::MatrixXd x = a0;
  out.best = x;
  out.best_objective = objective(x);
  out.trace.push_back(out.best_objective);
  std::vector<double> best_history{out.best_objective};

  for (int t = 1; t <= opts.max_iter; ++t) {
    const double step = step0 / std::sqrt(static_cast<double>(t));
    const Eigen::MatrixXd y = x - step * subgradient(x);
    const ProjectionReport pr =
        dykstra_project(y, spec, opts.projection_tol, opts.projection_max_cycles);
    if (!pr.converged && pr.max_residual() > opts.feasibility_tol) {
      std::ostringstream os;
      os << "projection failed at iteration " << t << " ("
         << (pr.status == ProjectionStatus::EmptyIntersectionSuspected
                 ? "empty intersection suspected"
                 : "not converged")
         << "): " << pr.residual_summary();
      out.projection_failed = true;
      out.projection_diagnostics = os.str();
      out.iterations = t;
      return out;
    }
    x = pr.result;
    const double f = objective(x);
    out.trace.push_back(f);
    if (f < out.best_objective) {
      out.best_objective = f;
      out.best = x;
    }
    best_history.push_back(out.best_objective);
    out.iterations = t;

    if (t >= opts.stop_window) {
      const double before = best_history[best_history.size() - 1 - opts.stop_window];
      const double improvement =
          (before - out.best_objective) / std::max(1.0, std::abs(out.best_objective));
      if (improvement < opts.stop_rel_improvement) {
        out.stop_rule_fired = true;
        break;
      }
    }
  }
  return out;
}

FeasibilityResiduals compute_residuals(const Eigen::MatrixXd& w, bool zero_diagonal,
                                       const SupportMask* support, bool has_cap,
                                       double cap) {
  FeasibilityResiduals r;
  r.negativity = std::max(0.0, -w.minCoeff());
  r.rowsum = (w.rowwise().sum().array() - 1.0).abs().maxCoeff();
  if (zero_diagonal) r.diagonal = w.diagonal().cwiseAbs().maxCoeff();
  if (support != nullptr) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      for (Eigen::Index j = 0; j < w.cols(); ++j) {
        if (!support->allowed(i, j)) worst = std::max(worst, std::abs(w(i, j)));
      }
    }
    r.off_support = worst;
  }
  if (has_cap) {
    Eigen::MatrixXd b = w;
    b.array() -= 1.0 / static_cast<double>(w.rows());
    r.spectral_cap = std::max(0.0, sym_eigen_max(b) - cap);
  }
  return r;
}

SolveReport finalize_report(const LoopOutcome& loop,
                            const std::function<double(const Eigen::MatrixXd&)>& objective,
                            bool zero_diagonal, const SupportMask* support, bool has_cap,
                            double cap, const SolverOptions& opts,
                            std::vector<std::string> warnings) {
  SolveReport report;
  // Exact entrywise clamp so the result satisfies nonnegativity bit-for-bit;
  // the shift is within the projection tolerance.
  Eigen::MatrixXd w = loop.best.cwiseMax(0.0);
  report.a = AdjacencyMatrix::fromWeights(std::move(w));
  report.objective_trace = loop.trace;
  report.iterations = loop.iterations;
  report.objective = objective(report.a.weights());
  report.feasibility =
      compute_residuals(report.a.weights(), zero_diagonal, support, has_cap, cap);
  report.margin = connectedness_margin(report.a);
  report.warnings = std::move(warnings);
  if (loop.projection_failed) {
    report.converged = false;
    report.warnings.push_back(loop.projection_diagnostics);
  } else {
    report.converged = report.feasibility.max() <= opts.feasibility_tol;
    if (!loop.stop_rule_fired) {
      report.warnings.push_back("iteration budget exhausted before the objective stabilized");
    }
  }
  return report;
}

}  // namespace

SolveReport consensus_design(const ConsensusProblem& p, const SolverOptions& opts) {
  const int n = static_cast<int>(p.support.allowed.rows());
  if (n < 2 || p.support.allowed.cols() != n) {
    throw DimensionError("consensus support must be square with n >= 2");
  }
  if (!p.support.symmetric()) {
    throw std::invalid_argument("consensus support must be symmetric");
  }
  if (p.eta < 0.0) throw std::invalid_argument("eta must be >= 0");
  if (p.connected && (p.epsilon <= 0.0 || p.epsilon >= 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }

  // Self-weights are always part of the design variable.
  SupportMask mask = p.support;
  for (int i = 0; i < n; ++i) mask.allowed(i, i) = true;

  Eigen::MatrixXd support_graph = Eigen::MatrixXd::Zero(n, n);
  int edge_count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (mask.allowed(i, j)) {
        support_graph(i, j) = support_graph(j, i) = 1.0;
        ++edge_count;
      }
    }
  }
  if (edge_count == 0) {
    throw std::invalid_argument("consensus support graph has no edges");
  }
  if (p.connected) {
    const ComponentLabeling c =
        component_count_bfs(AdjacencyMatrix::fromWeights(support_graph));
    if (c.count != 1) {
      std::ostringstream os;
      os << "connected design requested but the support graph has " << c.count
         << " components";
      throw InfeasibleError(os.str());
    }
  }

  ConstraintSpec spec;
  spec.add(BoxSym{.zero_diagonal = false}).add(mask).add(RowSumAffine{});
  if (p.connected) spec.add(SpectralCap{1.0 - p.epsilon});

  Eigen::MatrixXd a0 = Eigen::MatrixXd::Identity(n, n);
  if (p.connected) {
    // The identity violates the cap; move to the feasible set first.
    const ProjectionReport pr =
        dykstra_project(a0, spec, opts.projection_tol, opts.projection_max_cycles);
    if (pr.status == ProjectionStatus::EmptyIntersectionSuspected) {
      throw InfeasibleError(
          "support and connectedness constraints appear incompatible: " +
          pr.residual_summary());
    }
    a0 = pr.result;
  }

  const double eta = p.eta;
  const double nd = static_cast<double>(n);
  const auto objective = [eta, nd](const Eigen::MatrixXd& a) {
    return mu_value(a) + eta * (nd - a.trace());
  };
  const auto subgradient = [eta, n](const Eigen::MatrixXd& a) {
    Eigen::MatrixXd g = mu_subgradient(a);
    g.diagonal().array() -= eta;
    return g;
  };

  const double step0 = opts.step0 > 0.0 ? opts.step0 : 1.0;
  const LoopOutcome loop =
      projected_subgradient(a0, objective, subgradient, spec, step0, opts);

  std::vector<std::string> warnings;
  SolveReport report =
      finalize_report(loop, objective, /*zero_diagonal=*/false, &mask, p.connected,
                      1.0 - p.epsilon, opts, std::move(warnings));
  if (mu_value(report.a) >= 1.0) {
    report.warnings.push_back(
        "mu(A) >= 1: the averaging iteration is not guaranteed to converge");
  }
  return report;
}

SolveReport spg_learn(const SpgProblem& p, const SolverOptions& opts) {
  const int n = p.x.nodes();
  const int m = p.x.samples();
  if (n < 2) throw DimensionError("graph learning needs at least 2 nodes");
  if (p.connected && (p.epsilon <= 0.0 || p.epsilon >= 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }

  const Eigen::MatrixXd& x = p.x.values();
  const Eigen::MatrixXd gram = (x.transpose() * x) / static_cast<double>(m);
  const double smoothness_const = x.squaredNorm() / static_cast<double>(m);

  std::vector<std::string> warnings;
  {
    // A gram matrix proportional to 11^T makes every feasible A equally
    // smooth; the solve still runs but the result is arbitrary.
    const double mean = gram.mean();
    const Eigen::MatrixXd flat = Eigen::MatrixXd::Constant(n, n, mean);
    if ((gram - flat).norm() <= 1e-12 * std::max(1.0, gram.norm())) {
      warnings.push_back(
          "degenerate data: X^T X is numerically a multiple of 11^T, the "
          "smoothness objective cannot distinguish edges");
    }
  }

  ConstraintSpec spec;
  spec.add(BoxSym{.zero_diagonal = true}).add(RowSumAffine{});
  if (p.connected) spec.add(SpectralCap{1.0 - p.epsilon});

  // Uniform complete graph: feasible for every N >= 2, cap included.
  Eigen::MatrixXd a0 = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n - 1));
  a0.diagonal().setZero();

  const auto objective = [&gram, smoothness_const](const Eigen::MatrixXd& a) {
    return smoothness_const - gram.cwiseProduct(a).sum();
  };
  const auto subgradient = [&gram](const Eigen::MatrixXd&) -> Eigen::MatrixXd {
    return -gram;
  };

  const double step0 = opts.step0 > 0.0 ? opts.step0 : 1.0 / (1.0 + gram.norm());
  const LoopOutcome loop =
      projected_subgradient(a0, objective, subgradient, spec, step0, opts);

  return finalize_report(loop, objective, /*zero_diagonal=*/true, nullptr, p.connected,
                         1.0 - p.epsilon, opts, std::move(warnings));
}

Eigen::MatrixXd simulate_consensus(const AdjacencyMatrix& a, const Eigen::VectorXd& x0,
                                   int steps) {
  if (x0.size() != a.n()) {
    throw DimensionError("x0 length does not match node count");
  }
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  const double rowsum_err =
      (a.weights().rowwise().sum().array() - 1.0).abs().maxCoeff();
  if (rowsum_err > 1e-8) {
    throw std::invalid_argument("consensus weights must have row sums one");
  }
  Eigen::MatrixXd traj(steps + 1, a.n());
  traj.row(0) = x0.transpose();
  Eigen::VectorXd cur = x0;
  for (int t = 1; t <= steps; ++t) {
    cur = a.weights() * cur;
    traj.row(t) = cur.transpose();
  }
  return traj;
}

}  // namespace graphlearn
