#pragma once

#include <cstddef>

namespace scband::simd {

// Candidate points in structure-of-arrays layout: coord[k][j] is the k-th
// coordinate of the j-th candidate. Up to 5 ambient dimensions.
struct BatchRef {
  const double* coord[5] = {nullptr, nullptr, nullptr, nullptr, nullptr};
  std::size_t count = 0;
  int dim = 0;
};

struct ReachResult {
  double min_quotient;  // min quotient found below the threshold, else +inf
  double min_dist2;     // min over batch of |q-p|^2 (duplicate detection)
};

// Squared distance below which a candidate is considered coincident with the
// focus point and excluded from the quotient (it still feeds min_dist2).
inline constexpr double kCoincidentDist2 = 1e-24;

// Reach quotient |q-p|^2 / (2 |<nu, q-p>|) minimized over the batch, counting
// only quotients strictly below `threshold`. The comparison is done without
// divisions (dist2 < 2*threshold*|dot|), so passing the running minimum as
// the threshold keeps the hot loop division-free. One normal per point
// (hypersurface); |<nu, d>| probes both sides of the surface.
using reach_codim1_fn = ReachResult (*)(const double* p, const double* nu,
                                        const BatchRef& batch,
                                        double threshold);

// Two-vector normal frame (codimension 2): denominator is twice the norm of
// the projection of d onto the normal plane, 2 sqrt(<n1,d>^2 + <n2,d>^2).
using reach_codim2_fn = ReachResult (*)(const double* p, const double* n1,
                                        const double* n2,
                                        const BatchRef& batch,
                                        double threshold);

struct Backend {
  const char* name;
  reach_codim1_fn reach_codim1;
  reach_codim2_fn reach_codim2;
};

const Backend& scalar_backend();

// Returns nullptr when AVX2 is unavailable (not compiled in or not supported
// by the running CPU).
const Backend* avx2_backend();

// Backend chosen at first use: AVX2 when the CPU supports it, scalar otherwise.
const Backend& active_backend();

// Test hook; pass nullptr to restore automatic selection.
void set_active_backend(const Backend* backend);

}  // namespace scband::simd
