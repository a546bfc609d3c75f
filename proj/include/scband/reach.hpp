#pragma once

#include "scband/pointcloud.hpp"

namespace scband {

struct FocalRadiusOptions {
  // Clouds at or below this size are processed by one exhaustive pass.
  std::size_t max_exhaustive = 40000;
  // Target size of the coarse subsample for the global pass.
  std::size_t coarse_target = 32000;
  // Coarse pairs within this factor of the running minimum are refined at
  // full resolution.
  double refine_threshold = 1.3;
  std::size_t max_regions = 48;
};

// Estimate of the normal injectivity radius of the sampled submanifold: the
// infimum over ordered sample pairs of the radius at which the normal
// segment from one point first comes closer to the other point than to its
// own base, |q-p|^2 / (2 |proj_normal(q-p)|). Equivalently, the largest r
// such that no sampled normal segment of length r re-approaches the surface
// and no two segments collide. Exact curvature circles contribute their
// radii exactly, independent of resolution.
//
// Throws std::invalid_argument on degenerate clouds (duplicate points).
double brute_force_focal_radius(const PointCloud& cloud,
                                const FocalRadiusOptions& options = {});

}  // namespace scband
