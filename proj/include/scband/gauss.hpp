#pragma once

#include <vector>

#include "scband/profile.hpp"

namespace scband {

enum class Ambient { sphere, euclidean };

// Principal curvatures c_1..c_{n-1} of a hypersurface point in the unit
// n-sphere or in R^n.
struct PrincipalCurvatures {
  std::vector<double> values;
  Ambient ambient = Ambient::sphere;
  int n = 0;  // ambient dimension
};

// Theorema egregium: Sc(Y) = Sc(S^{n-1}) + (sum c_i)^2 - sum c_i^2, with
// Sc(S^{n-1}) = (n-1)(n-2) dropped in the Euclidean case.
double gauss_scalar_curvature(const PrincipalCurvatures& pc);

// sqrt(n-k-1)/k: curvature lower bound for codimension-k submanifolds of S^n
// carrying no metric of positive scalar curvature. k = n-1 gives the vacuous
// bound 0.
double curvature_lower_bound(int n, int k);

// Max |c_ij| of the balanced embedding of S^{n_1} x ... x S^{n_k} into the
// unit sphere, measured in the ambient Euclidean space via a
// finite-difference second fundamental form of the explicit parametrization
// (the factor circles of radius 1/sqrt(k) give sqrt(k)).
double sphere_product_curvature(const std::vector<int>& factor_dims);

struct SubsphereData {
  double focal_radius;  // arcsin(rho)
  double curvature;     // sqrt(1-rho^2)/rho
};

// Focal radius and geodesic curvature of the distance sphere S^m(rho) in the
// unit sphere.
SubsphereData subsphere_data(double rho);

}  // namespace scband
