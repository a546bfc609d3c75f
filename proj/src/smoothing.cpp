#include "scband/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "scband/embedding.hpp"
#include "scband/warped.hpp"

namespace scband {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

BendingFamily::BendingFamily(std::vector<double> h_,
                             std::vector<double> a_new_,
                             std::vector<double> a_old_, double eps)
    : h(std::move(h_)),
      a_new(std::move(a_new_)),
      a_old(std::move(a_old_)),
      epsilon(eps) {
  require(!h.empty(), "empty fiber");
  require(a_new.size() == h.size() && a_old.size() == h.size(),
          "bending forms must match the fiber dimension");
  require(epsilon > 0.0, "epsilon must be positive");
  for (double v : h) require(v > 0.0, "initial metric must be positive");
  // h_ii(t) > 0 on [0, eps]: a quadratic with positive endpoints can only
  // dip in between, so check the vertex as well.
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto value = [&](double t) {
      return h[i] + t * a_new[i] +
             t * t / (2.0 * epsilon) * (a_old[i] - a_new[i]);
    };
    require(value(epsilon) > 0.0, "metric degenerates at t = eps");
    const double quad = (a_old[i] - a_new[i]) / (2.0 * epsilon);
    if (quad > 0.0) {
      const double t_vertex = -a_new[i] / (2.0 * quad);
      if (t_vertex > 0.0 && t_vertex < epsilon)
        require(value(t_vertex) > 0.0, "metric degenerates inside [0, eps]");
    }
  }
}

std::vector<double> bending_metric(const BendingFamily& fam, double t) {
  require(t >= 0.0 && t <= fam.epsilon, "t outside [0, eps]");
  std::vector<double> out(fam.h.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = fam.h[i] + t * fam.a_new[i] +
             t * t / (2.0 * fam.epsilon) * (fam.a_old[i] - fam.a_new[i]);
    require(out[i] > 0.0, "metric not positive");
  }
  return out;
}

std::vector<double> bending_metric_d1(const BendingFamily& fam, double t) {
  require(t >= 0.0 && t <= fam.epsilon, "t outside [0, eps]");
  std::vector<double> out(fam.h.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = fam.a_new[i] + t / fam.epsilon * (fam.a_old[i] - fam.a_new[i]);
  return out;
}

double bending_scalar_curvature(const BendingFamily& fam, double t) {
  require(t > 0.0 && t < fam.epsilon, "t must be interior to (0, eps)");
  const auto h = bending_metric(fam, t);
  const auto hd = bending_metric_d1(fam, t);
  // phi = sqrt(h): f = phi'/phi = h'/2h, phi''/phi = h''/2h - f^2.
  double sc = 0.0;
  double sum_f = 0.0;
  double sum_f2 = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double hdd = (fam.a_old[i] - fam.a_new[i]) / fam.epsilon;
    const double f = hd[i] / (2.0 * h[i]);
    sc += -2.0 * (hdd / (2.0 * h[i]) - f * f);
    sum_f += f;
    sum_f2 += f * f;
  }
  sc -= sum_f * sum_f - sum_f2;
  return sc;
}

double weyl_ricci_normal(const BendingFamily& fam, double t) {
  require(t >= 0.0 && t <= fam.epsilon, "t outside [0, eps]");
  const auto h = bending_metric(fam, t);
  const auto hd = bending_metric_d1(fam, t);
  double sum = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double hdd = (fam.a_old[i] - fam.a_new[i]) / fam.epsilon;
    const double s = hd[i] / (2.0 * h[i]);  // shape operator eigenvalue
    const double s_dot = hdd / (2.0 * h[i]) - 2.0 * s * s;
    sum += s_dot + s * s;
  }
  return -sum;
}

double weyl_ricci_residual(const BendingFamily& fam, double t) {
  require(t > 0.0 && t < fam.epsilon, "t must be interior to (0, eps)");
  // Independent route: sample phi_i = sqrt(h_ii) and differentiate
  // numerically through the warped-metric machinery.
  const int m = fam.fiber_dim();
  const std::size_t kNodes = 1201;
  std::vector<double> nodes(kNodes);
  for (std::size_t i = 0; i < kNodes; ++i)
    nodes[i] = fam.epsilon * static_cast<double>(i) /
               static_cast<double>(kNodes - 1);
  std::vector<Profile> profiles;
  for (int i = 0; i < m; ++i) {
    std::vector<double> vs(kNodes);
    for (std::size_t k = 0; k < kNodes; ++k)
      vs[k] = std::sqrt(bending_metric(fam, nodes[k])[i]);
    profiles.push_back(Profile::sampled(nodes, std::move(vs)));
  }
  const WarpedBandMetric metric(m + 1, std::move(profiles),
                                Interval{0.0, fam.epsilon});
  const double via_profiles = ricci_normal_direction(metric, t);
  return std::fabs(via_profiles - weyl_ricci_normal(fam, t));
}

TubeCurvatures rounding_tube(const RoundingProblem& prob) {
  require(prob.m >= 2, "V must have dimension >= 2");
  require(prob.rho > 0.0, "rho must be positive");
  require(prob.epsilon > 0.0 && prob.epsilon < prob.rho / 4.0,
          "tube parameter must satisfy 0 < eps < rho/4");
  require(prob.theta >= -M_PI / 2.0 && prob.theta <= M_PI / 2.0,
          "theta outside [-pi/2, pi/2]");

  const int k = prob.m - 1;  // sphere directions of the corner
  const double spine = prob.rho - prob.epsilon;
  const double radial = spine + prob.epsilon * std::cos(prob.theta);

  TubeCurvatures out;
  out.lambda_n = 1.0 / prob.epsilon;
  out.lambdas.assign(k, std::cos(prob.theta) / radial);
  double sum = out.lambda_n;
  double sum2 = out.lambda_n * out.lambda_n;
  for (double l : out.lambdas) {
    sum += l;
    sum2 += l * l;
  }
  out.sc = sum * sum - sum2;

  // Finite-difference check on the explicit revolution chart in R^{m+1}:
  // (omega, theta) -> ((spine + eps cos theta) u(omega), eps sin theta).
  ParametrizedSurface surface;
  surface.param_dim = prob.m;
  surface.ambient_dim = prob.m + 1;
  const double eps = prob.epsilon;
  const int m = prob.m;
  surface.chart = [spine, eps, m](const Eigen::VectorXd& u) {
    Eigen::VectorXd x(m + 1);
    const double r = spine + eps * std::cos(u(m - 1));
    double sin_prod = 1.0;
    for (int j = 0; j + 1 < m; ++j) {
      x(j) = r * sin_prod * std::cos(u(j));
      sin_prod *= std::sin(u(j));
    }
    x(m - 1) = r * sin_prod;
    x(m) = eps * std::sin(u(m - 1));
    return x;
  };
  Eigen::VectorXd params(prob.m);
  for (int i = 0; i + 1 < prob.m; ++i) params(i) = 1.0 + 0.1 * i;
  params(prob.m - 1) = prob.theta;

  const auto fd = embedded_curvature_fd(surface, params, 1e-4);
  std::vector<double> got(fd.principal[0].data(),
                          fd.principal[0].data() + prob.m);
  std::vector<double> want = out.lambdas;
  want.push_back(out.lambda_n);
  for (auto& v : got) v = std::fabs(v);
  for (auto& v : want) v = std::fabs(v);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  out.fd_residual = 0.0;
  for (int i = 0; i < prob.m; ++i)
    out.fd_residual = std::max(
        out.fd_residual,
        std::fabs(got[i] - want[i]) / std::max(1.0, std::fabs(want[i])));
  return out;
}

DecayReport quadratic_decay_profile(double alpha, double radius) {
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  require(radius > 1.0, "radius must exceed 1");
  const Profile phi = Profile::power(alpha, Interval{0.0, radius});
  double min_sc = std::numeric_limits<double>::infinity();
  const int kSamples = 2048;
  for (int i = 1; i <= kSamples; ++i) {
    const double t = radius * static_cast<double>(i) / kSamples;
    min_sc = std::min(min_sc, radial_scalar_curvature(phi, t));
  }
  DecayReport report;
  report.min_sc = min_sc;
  report.bound = 4.0 * M_PI * M_PI / (radius * radius);
  report.within_bound = report.min_sc <= report.bound;
  return report;
}

}  // namespace scband
