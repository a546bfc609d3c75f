#pragma once

#include <vector>

#include "scband/profile.hpp"

namespace scband {

// Torical warped-product band metric g = dt^2 + sum_i phi_i(t)^2 dtau_i^2
// over a flat (n-1)-torus fiber, t in [interval.lo, interval.hi].
class WarpedBandMetric {
 public:
  WarpedBandMetric(int n, std::vector<Profile> profiles, Interval interval);

  int dimension() const { return n_; }
  Interval interval() const { return interval_; }
  const std::vector<Profile>& profiles() const { return profiles_; }

  // All n-1 profiles equal to phi.
  static WarpedBandMetric equal_warp(int n, const Profile& phi,
                                     Interval interval);

  // Metric scaled by lambda^2 (interval and profiles scaled by lambda).
  WarpedBandMetric rescaled(double lambda) const;

 private:
  int n_;
  std::vector<Profile> profiles_;
  Interval interval_;
};

struct CurvatureReport {
  std::vector<double> ts;
  std::vector<double> sc;         // scalar curvature, units length^-2
  std::vector<double> mean_curv;  // slice mean curvature, units length^-1
  std::vector<double> ricci_tt;   // Ricci(d/dt, d/dt)
  double residual_max;            // max |closed form - finite difference|
};

// Sc(g) = -2 sum_i phi_i''/phi_i - 2 sum_{i<j} (phi_i'/phi_i)(phi_j'/phi_j).
double scalar_curvature_band(const WarpedBandMetric& metric, double t);

// Single warping function over a flat fiber:
// Sc = -2(n-1) phi''/phi - (n-1)(n-2) (phi'/phi)^2.
double scalar_curvature_single_warp(const Profile& phi, int n, double t);

// Radial 2D metric dt^2 + phi(t)^2 dtheta^2: Sc = -2 phi''/phi, t > 0.
double radial_scalar_curvature(const Profile& phi, double t);

// Mean curvature of the slice {t} x T^{n-1} with respect to +d/dt:
// sum_i phi_i'/phi_i.
double mean_curvature_slice(const WarpedBandMetric& metric, double t);

// Ricci(d/dt, d/dt) = -sum_i (s_i' + s_i^2) with shape-operator eigenvalues
// s_i = phi_i'/phi_i (equivalently -sum_i phi_i''/phi_i).
double ricci_normal_direction(const WarpedBandMetric& metric, double t);

// Evaluates Sc both from analytic profile derivatives and from sampled
// copies of the profiles differentiated by finite differences; the two
// routes share only the algebraic curvature formula.
CurvatureReport cross_validate(const WarpedBandMetric& metric,
                               const std::vector<double>& grid);

}  // namespace scband
