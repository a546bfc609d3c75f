#include "scband/stability.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace scband {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

StabilityStep stability_step(const StabilityProblem& problem) {
  const int n = static_cast<int>(problem.potential.size());
  require(n >= 16, "stability grid needs at least 16 points");
  require(problem.circumference > 0.0, "circumference must be positive");
  for (double p : problem.potential)
    require(std::isfinite(p), "potential must be finite");

  const double h = problem.circumference / n;
  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(n, n);
  const double w = 1.0 / (h * h);
  for (int i = 0; i < n; ++i) {
    op(i, i) = 2.0 * w + problem.potential[i];
    op(i, (i + 1) % n) -= w;
    op(i, (i + n - 1) % n) -= w;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op);
  require(solver.info() == Eigen::Success, "eigensolve failed");
  const double lambda0 = solver.eigenvalues()(0);
  Eigen::VectorXd phi = solver.eigenvectors().col(0);
  if (phi.sum() < 0.0) phi = -phi;
  const double mx = phi.maxCoeff();
  if (mx <= 0.0) throw numerical_error("ground state is not sign-definite");
  phi /= mx;

  std::vector<double> values(phi.data(), phi.data() + n);

  // Sampled profile on [0, L] with the seam value repeated.
  std::vector<double> ts(n + 1), vs(n + 1);
  for (int i = 0; i <= n; ++i) {
    ts[i] = h * i;
    vs[i] = values[i % n];
  }
  return StabilityStep{lambda0, std::move(values),
                       Profile::sampled(std::move(ts), std::move(vs))};
}

SymmetrizationReport verify_symmetrization_invariant(
    const StabilityProblem& problem, const StabilityStep& step, double sigma,
    double tol) {
  const int n = static_cast<int>(problem.potential.size());
  require(static_cast<int>(step.phi.size()) == n,
          "step and problem grids differ");
  const double h = problem.circumference / n;

  // Periodic 5-point second derivative, 4th order.
  const auto d2 = [&](int i) {
    const auto at = [&](int k) { return step.phi[((k % n) + n) % n]; };
    return (-at(i - 2) + 16.0 * at(i - 1) - 30.0 * at(i) + 16.0 * at(i + 1) -
            at(i + 2)) /
           (12.0 * h * h);
  };

  SymmetrizationReport report;
  report.sigma = sigma;
  report.min_sc = std::numeric_limits<double>::infinity();
  report.identity_residual = 0.0;
  for (int i = 0; i < n; ++i) {
    const double phi = step.phi[i];
    if (phi <= 0.0) throw numerical_error("eigenfunction not positive");
    const double sc = -2.0 * d2(i) / phi;
    const double expected = 2.0 * (step.lambda0 - problem.potential[i]);
    report.min_sc = std::min(report.min_sc, sc);
    report.identity_residual =
        std::max(report.identity_residual, std::fabs(sc - expected));
  }
  report.holds = report.min_sc >= sigma - tol;
  return report;
}

}  // namespace scband
