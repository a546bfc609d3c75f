#include "scband/warped.hpp"

#include <algorithm>
#include <cmath>

namespace scband {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

double band_scalar_curvature_from_bundles(
    const std::vector<DerivativeBundle>& b) {
  double sc = 0.0;
  double sum_f = 0.0;
  double sum_f2 = 0.0;
  for (const auto& x : b) {
    sc += -2.0 * x.d2 / x.value;
    const double f = x.d1 / x.value;
    sum_f += f;
    sum_f2 += f * f;
  }
  // 2 sum_{i<j} f_i f_j = (sum f)^2 - sum f^2
  sc -= sum_f * sum_f - sum_f2;
  return sc;
}

}  // namespace

WarpedBandMetric::WarpedBandMetric(int n, std::vector<Profile> profiles,
                                   Interval interval)
    : n_(n), profiles_(std::move(profiles)), interval_(interval) {
  require(n_ >= 2, "band dimension must be >= 2");
  require(static_cast<int>(profiles_.size()) == n_ - 1,
          "a warped band needs n-1 warping profiles");
  require(interval_.lo < interval_.hi, "empty band interval");
  for (const auto& p : profiles_) {
    require(p.domain().lo <= interval_.lo && p.domain().hi >= interval_.hi,
            "profile domain does not cover the band interval");
  }
}

WarpedBandMetric WarpedBandMetric::equal_warp(int n, const Profile& phi,
                                              Interval interval) {
  return WarpedBandMetric(n, std::vector<Profile>(n - 1, phi), interval);
}

WarpedBandMetric WarpedBandMetric::rescaled(double lambda) const {
  std::vector<Profile> scaled;
  scaled.reserve(profiles_.size());
  for (const auto& p : profiles_) scaled.push_back(p.rescaled(lambda));
  return WarpedBandMetric(
      n_, std::move(scaled),
      Interval{interval_.lo * lambda, interval_.hi * lambda});
}

double scalar_curvature_band(const WarpedBandMetric& metric, double t) {
  require(metric.interval().contains_interior(t),
          "curvature evaluated outside the band interior");
  std::vector<DerivativeBundle> b;
  b.reserve(metric.profiles().size());
  for (const auto& p : metric.profiles()) b.push_back(p.eval(t));
  return band_scalar_curvature_from_bundles(b);
}

double scalar_curvature_single_warp(const Profile& phi, int n, double t) {
  require(n >= 2, "dimension must be >= 2");
  require(phi.domain().contains_interior(t),
          "curvature evaluated outside the profile interior");
  const DerivativeBundle b = phi.eval(t);
  const double f = b.d1 / b.value;
  return -2.0 * (n - 1) * b.d2 / b.value - (n - 1.0) * (n - 2.0) * f * f;
}

double radial_scalar_curvature(const Profile& phi, double t) {
  require(t > 0.0, "radial curvature needs t > 0");
  require(phi.domain().contains_interior(t) || phi.domain().hi == t,
          "radius outside the profile domain");
  const DerivativeBundle b = phi.eval(t);
  return -2.0 * b.d2 / b.value;
}

double mean_curvature_slice(const WarpedBandMetric& metric, double t) {
  require(metric.interval().contains(t),
          "slice outside the band interval");
  double sum = 0.0;
  for (const auto& p : metric.profiles()) {
    const DerivativeBundle b = p.eval(t);
    sum += b.d1 / b.value;
  }
  return sum;
}

double ricci_normal_direction(const WarpedBandMetric& metric, double t) {
  require(metric.interval().contains_interior(t),
          "Ricci evaluated outside the band interior");
  // -sum (s_i' + s_i^2) with s_i = phi_i'/phi_i collapses to -sum phi_i''/phi_i.
  double sum = 0.0;
  for (const auto& p : metric.profiles()) {
    const DerivativeBundle b = p.eval(t);
    sum += b.d2 / b.value;
  }
  return -sum;
}

CurvatureReport cross_validate(const WarpedBandMetric& metric,
                               const std::vector<double>& grid) {
  require(!grid.empty(), "empty cross-validation grid");
  for (double t : grid)
    require(metric.interval().contains_interior(t),
            "cross-validation grid must be interior");

  const double t0 = *std::min_element(grid.begin(), grid.end());
  const double t1 = *std::max_element(grid.begin(), grid.end());

  // Finite-difference route: uniform resampling with a 4-step margin so
  // every query stays clear of the sampled ends.
  const std::size_t kNodes = 2001;
  const double h = std::max((t1 - t0), 1e-3) / static_cast<double>(kNodes - 9);
  const double lo = std::max(metric.interval().lo, t0 - 4.0 * h);
  const double hi = std::min(metric.interval().hi, t1 + 4.0 * h);
  std::vector<double> nodes(kNodes);
  for (std::size_t i = 0; i < kNodes; ++i)
    nodes[i] = lo + (hi - lo) * static_cast<double>(i) /
                        static_cast<double>(kNodes - 1);
  std::vector<Profile> sampled;
  sampled.reserve(metric.profiles().size());
  for (const auto& p : metric.profiles()) sampled.push_back(p.sample(nodes));

  CurvatureReport report;
  report.ts = grid;
  report.residual_max = 0.0;
  for (double t : grid) {
    const double sc = scalar_curvature_band(metric, t);
    report.sc.push_back(sc);
    report.mean_curv.push_back(mean_curvature_slice(metric, t));
    report.ricci_tt.push_back(ricci_normal_direction(metric, t));

    std::vector<DerivativeBundle> fd;
    fd.reserve(sampled.size());
    for (const auto& p : sampled) fd.push_back(p.eval(t));
    const double sc_fd = band_scalar_curvature_from_bundles(fd);
    report.residual_max = std::max(report.residual_max, std::fabs(sc - sc_fd));
  }
  return report;
}

}  // namespace scband
