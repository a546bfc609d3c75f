#pragma once

#include <map>
#include <memory>
#include <vector>

#include "scband/pointcloud.hpp"

namespace scband {

struct PairCoefficients {
  double c1;
  double c2;
  double r_cross;
};

// Scaling coefficients for the product of tori with focal radii r1, r2:
// c1^2 + c2^2 = 1, c1 r1 = c2 r2, giving r_cross = r1 r2 / sqrt(r1^2 + r2^2).
PairCoefficients combine_pair(double r1, double r2);

// Focal radius of the rescaled tube around a product torus of focal radius
// r_cross: r_cross / (2 + r_cross).
double offset_radius(double r_cross);

// r(2) = 1 (circle), r(3) = pi/4 (Clifford value transported from S^3),
// r(2m) = r(m)/(2 sqrt(2) + r(m)), r(2m+1) from the (m, m+1) pair followed
// by the tube offset. Covers every n in [2, n_max].
std::map<int, double> focal_radius_table(int n_max);

// 2 r(n): width of the normal band transported to the sphere by the radial
// expanding map.
double spherical_width_lower_bound(int n);

// Lip(f) >= (d / 2 pi) sqrt(sigma n / (n-1)) for nonzero-degree maps from
// manifolds with Sc >= sigma to a sphere containing a toric band of width d.
double lipschitz_lower_bound(int n, double sigma, double band_width);

// Smallest n in [n_lo, n_hi] where (1/3)/(pi sqrt(n)) exceeds the classical
// bound n/(2^n pi).
int crossover_vs_classical(int n_lo = 2, int n_hi = 20);

// Recursive torus construction: a circle, a scaled pair product, or the
// rescaled tube around a pair. Every node carries its ambient dimension and
// exact focal radius.
class TorusConstruction {
 public:
  enum class Kind { circle, pair, offset };

  static TorusConstruction circle();
  static TorusConstruction pair_of(TorusConstruction left,
                                   TorusConstruction right);
  static TorusConstruction offset_of(TorusConstruction pair_node);

  // Y(2) = circle, Y(4) = tube around the scaled pair of two circles.
  static TorusConstruction y_construction(int n);

  Kind kind() const { return kind_; }
  int ambient_dim() const { return ambient_dim_; }
  double focal_radius() const { return focal_radius_; }
  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double delta() const { return delta_; }
  double rescale() const { return rescale_; }
  const TorusConstruction& left() const { return *left_; }
  const TorusConstruction& right() const { return *right_; }

 private:
  TorusConstruction() = default;

  Kind kind_ = Kind::circle;
  int ambient_dim_ = 2;
  double focal_radius_ = 1.0;
  double c1_ = 0.0, c2_ = 0.0;       // pair nodes
  double delta_ = 0.0, rescale_ = 1.0;  // offset nodes
  std::shared_ptr<const TorusConstruction> left_, right_;
};

// Realizes the construction in its ambient space with `resolution` samples
// per angle. Circle and offset nodes are hypersurfaces with one outward
// normal per point; pair nodes have codimension 2 and carry a two-vector
// normal frame. Ambient dimension is capped at 5.
PointCloud embed_and_sample(const TorusConstruction& construction,
                            int resolution);

}  // namespace scband
