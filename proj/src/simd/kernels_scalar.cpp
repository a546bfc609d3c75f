#include "scband/simd/kernels.hpp"

#include <cmath>
#include <limits>

namespace scband::simd {
namespace {

ReachResult reach_codim1_scalar(const double* p, const double* nu,
                                const BatchRef& batch, double threshold) {
  const int dim = batch.dim;
  double min_q = std::numeric_limits<double>::infinity();
  double cutoff = threshold;
  double min_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < batch.count; ++j) {
    double dist2 = 0.0;
    double dot = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double d = batch.coord[k][j] - p[k];
      dist2 += d * d;
      dot += nu[k] * d;
    }
    if (dist2 < min_d2) min_d2 = dist2;
    // dist2 / (2|dot|) < cutoff, compared without dividing.
    if (dist2 < 2.0 * cutoff * std::fabs(dot) &&
        dist2 >= kCoincidentDist2) {
      const double q = dist2 / (2.0 * std::fabs(dot));
      if (q < min_q) {
        min_q = q;
        cutoff = q;
      }
    }
  }
  return {min_q, min_d2};
}

ReachResult reach_codim2_scalar(const double* p, const double* n1,
                                const double* n2, const BatchRef& batch,
                                double threshold) {
  const int dim = batch.dim;
  double min_q = std::numeric_limits<double>::infinity();
  double cutoff2 = 4.0 * threshold * threshold;
  double min_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < batch.count; ++j) {
    double dist2 = 0.0;
    double dot1 = 0.0;
    double dot2 = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double d = batch.coord[k][j] - p[k];
      dist2 += d * d;
      dot1 += n1[k] * d;
      dot2 += n2[k] * d;
    }
    if (dist2 < min_d2) min_d2 = dist2;
    const double norm2 = dot1 * dot1 + dot2 * dot2;
    // dist2 / (2 sqrt(norm2)) < cutoff, squared to avoid the sqrt.
    if (dist2 * dist2 < cutoff2 * norm2 && dist2 >= kCoincidentDist2) {
      const double q = dist2 / (2.0 * std::sqrt(norm2));
      if (q < min_q) {
        min_q = q;
        cutoff2 = 4.0 * q * q;
      }
    }
  }
  return {min_q, min_d2};
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{"scalar", reach_codim1_scalar,
                               reach_codim2_scalar};
  return backend;
}

}  // namespace scband::simd
