#pragma once

#include <vector>

#include "scband/profile.hpp"

namespace scband {

// Diagonal metric deformation h(t) = h + t A_new + (t^2 / 2 eps)(A_old - A_new)
// on [0, eps]: resets the boundary second fundamental form from A_new back to
// A_old while the scalar curvature picks up -trace(A_old - A_new)/eps to
// leading order.
struct BendingFamily {
  std::vector<double> h;      // initial diagonal entries, positive
  std::vector<double> a_new;  // dh/dt at t = 0
  std::vector<double> a_old;  // dh/dt at t = eps
  double epsilon;

  BendingFamily(std::vector<double> h_, std::vector<double> a_new_,
                std::vector<double> a_old_, double eps);

  int fiber_dim() const { return static_cast<int>(h.size()); }
};

// Componentwise h_ii(t); endpoint derivative identities hold exactly.
std::vector<double> bending_metric(const BendingFamily& fam, double t);
std::vector<double> bending_metric_d1(const BendingFamily& fam, double t);

// Sc of g = sum h_ii(t) dtau_i^2 + dt^2 over a flat fiber, evaluated through
// the warped-product band formula with phi_i = sqrt(h_ii).
double bending_scalar_curvature(const BendingFamily& fam, double t);

// Weyl's formula Ricci(d/dt, d/dt) = -trace(dA*/dt + (A*)^2) with the shape
// operator A* = (1/2) h^{-1} dh/dt, cross-checked against the warped-metric
// route on sampled profiles. Returns the algebraic value; the residual
// between the two routes is available separately.
double weyl_ricci_normal(const BendingFamily& fam, double t);
double weyl_ricci_residual(const BendingFamily& fam, double t);

// Edge rounding of the flat ball V = B^m(rho) x {0} in V x R: the corner
// tube of radius eps at angle theta.
struct RoundingProblem {
  int m;           // dimension of V
  double rho;      // radius of the round domain
  double epsilon;  // tube radius, 0 < eps < rho/4
  double theta;    // angle along the rounding arc, [-pi/2, pi/2]
};

struct TubeCurvatures {
  std::vector<double> lambdas;  // m-1 sphere-direction curvatures
  double lambda_n;              // arc direction, 1/eps
  double sc;                    // flat-ambient Gauss: (sum)^2 - sum of squares
  double fd_residual;           // closed form vs finite-difference chart
};

TubeCurvatures rounding_tube(const RoundingProblem& prob);

// Quadratic-decay radial metric dt^2 + t^{2 alpha} dtheta^2 over a flat
// fiber: min of Sc over the ball of radius R is 2 alpha (1 - alpha) / R^2,
// compared against the 4 pi^2 / R^2 decay bound.
struct DecayReport {
  double min_sc;
  double bound;
  bool within_bound;
};

DecayReport quadratic_decay_profile(double alpha, double radius);

}  // namespace scband
