// AVX2 variants of the reach kernels. This translation unit is compiled with
// -mavx2 -mfma; callers must go through the runtime dispatch in dispatch.cpp.
//
// The hot loop only compares (division-free); lanes that beat the running
// cutoff are rare, so their exact quotients are resolved in a scalar slow
// path that also tightens the cutoff.

#include "scband/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace scband::simd {
namespace {

inline double hmin(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_min_pd(lo, hi);
  m = _mm_min_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(m);
}

ReachResult reach_codim1_avx2(const double* p, const double* nu,
                              const BatchRef& batch, double threshold) {
  const int dim = batch.dim;
  const std::size_t n4 = batch.count & ~std::size_t{3};
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d min_d2 = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  double min_q = std::numeric_limits<double>::infinity();
  double cutoff = threshold;
  __m256d two_cutoff = _mm256_set1_pd(2.0 * cutoff);

  std::size_t j = 0;
  for (; j < n4; j += 4) {
    __m256d dist2 = _mm256_setzero_pd();
    __m256d dot = _mm256_setzero_pd();
    for (int k = 0; k < dim; ++k) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(batch.coord[k] + j),
                                      _mm256_set1_pd(p[k]));
      dist2 = _mm256_fmadd_pd(d, d, dist2);
      dot = _mm256_fmadd_pd(_mm256_set1_pd(nu[k]), d, dot);
    }
    min_d2 = _mm256_min_pd(min_d2, dist2);
    const __m256d bound =
        _mm256_mul_pd(two_cutoff, _mm256_andnot_pd(sign_mask, dot));
    const int hot = _mm256_movemask_pd(_mm256_cmp_pd(dist2, bound, _CMP_LT_OQ));
    if (hot == 0) continue;
    alignas(32) double d2[4], dt[4];
    _mm256_store_pd(d2, dist2);
    _mm256_store_pd(dt, dot);
    for (int lane = 0; lane < 4; ++lane) {
      if (!(hot & (1 << lane)) || d2[lane] < kCoincidentDist2) continue;
      const double q = d2[lane] / (2.0 * std::fabs(dt[lane]));
      if (q < min_q) {
        min_q = q;
        cutoff = q;
      }
    }
    two_cutoff = _mm256_set1_pd(2.0 * cutoff);
  }

  ReachResult r{min_q, hmin(min_d2)};
  for (; j < batch.count; ++j) {
    double dist2 = 0.0, dot = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double d = batch.coord[k][j] - p[k];
      dist2 += d * d;
      dot += nu[k] * d;
    }
    if (dist2 < r.min_dist2) r.min_dist2 = dist2;
    if (dist2 < 2.0 * cutoff * std::fabs(dot) &&
        dist2 >= kCoincidentDist2) {
      const double q = dist2 / (2.0 * std::fabs(dot));
      if (q < r.min_quotient) {
        r.min_quotient = q;
        cutoff = q;
      }
    }
  }
  return r;
}

ReachResult reach_codim2_avx2(const double* p, const double* n1,
                              const double* n2, const BatchRef& batch,
                              double threshold) {
  const int dim = batch.dim;
  const std::size_t n4 = batch.count & ~std::size_t{3};
  __m256d min_d2 = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  double min_q = std::numeric_limits<double>::infinity();
  double cutoff2 = 4.0 * threshold * threshold;
  __m256d vcut2 = _mm256_set1_pd(cutoff2);

  std::size_t j = 0;
  for (; j < n4; j += 4) {
    __m256d dist2 = _mm256_setzero_pd();
    __m256d dot1 = _mm256_setzero_pd();
    __m256d dot2 = _mm256_setzero_pd();
    for (int k = 0; k < dim; ++k) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(batch.coord[k] + j),
                                      _mm256_set1_pd(p[k]));
      dist2 = _mm256_fmadd_pd(d, d, dist2);
      dot1 = _mm256_fmadd_pd(_mm256_set1_pd(n1[k]), d, dot1);
      dot2 = _mm256_fmadd_pd(_mm256_set1_pd(n2[k]), d, dot2);
    }
    min_d2 = _mm256_min_pd(min_d2, dist2);
    const __m256d norm2 =
        _mm256_fmadd_pd(dot1, dot1, _mm256_mul_pd(dot2, dot2));
    const __m256d dist4 = _mm256_mul_pd(dist2, dist2);
    const int hot = _mm256_movemask_pd(
        _mm256_cmp_pd(dist4, _mm256_mul_pd(vcut2, norm2), _CMP_LT_OQ));
    if (hot == 0) continue;
    alignas(32) double d2[4], nn[4];
    _mm256_store_pd(d2, dist2);
    _mm256_store_pd(nn, norm2);
    for (int lane = 0; lane < 4; ++lane) {
      if (!(hot & (1 << lane)) || d2[lane] < kCoincidentDist2) continue;
      const double q = d2[lane] / (2.0 * std::sqrt(nn[lane]));
      if (q < min_q) {
        min_q = q;
        cutoff2 = 4.0 * q * q;
      }
    }
    vcut2 = _mm256_set1_pd(cutoff2);
  }

  ReachResult r{min_q, hmin(min_d2)};
  for (; j < batch.count; ++j) {
    double dist2 = 0.0, a = 0.0, b = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double d = batch.coord[k][j] - p[k];
      dist2 += d * d;
      a += n1[k] * d;
      b += n2[k] * d;
    }
    if (dist2 < r.min_dist2) r.min_dist2 = dist2;
    const double norm2 = a * a + b * b;
    if (dist2 * dist2 < cutoff2 * norm2 && dist2 >= kCoincidentDist2) {
      const double q = dist2 / (2.0 * std::sqrt(norm2));
      if (q < r.min_quotient) {
        r.min_quotient = q;
        cutoff2 = 4.0 * q * q;
      }
    }
  }
  return r;
}

const Backend kAvx2Backend{"avx2", reach_codim1_avx2, reach_codim2_avx2};

}  // namespace

const Backend* avx2_backend_impl() { return &kAvx2Backend; }

}  // namespace scband::simd

#else

namespace scband::simd {
const Backend* avx2_backend_impl() { return nullptr; }
}  // namespace scband::simd

#endif
