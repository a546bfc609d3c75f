#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "scband/simd/kernels.hpp"

using namespace scband::simd;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Deterministic pseudo-random doubles in [-1, 1].
struct Lcg {
  std::uint64_t state = 0x2545f4914f6cdd1dULL;
  double next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) / 9007199254740992.0 * 2.0 - 1.0;
  }
};

struct TestData {
  std::vector<double> coords[5];
  double p[5];
  double n0[5];
  double n1[5];
  BatchRef batch(int dim, std::size_t count) {
    BatchRef b;
    b.dim = dim;
    b.count = count;
    for (int k = 0; k < dim; ++k) b.coord[k] = coords[k].data();
    return b;
  }
};

TestData make_data(int dim, std::size_t count, Lcg& rng) {
  TestData d;
  for (int k = 0; k < dim; ++k) {
    d.coords[k].resize(count);
    for (std::size_t j = 0; j < count; ++j) d.coords[k][j] = rng.next();
  }
  double norm0 = 0.0, norm1 = 0.0;
  for (int k = 0; k < dim; ++k) {
    d.p[k] = rng.next();
    d.n0[k] = rng.next();
    d.n1[k] = rng.next();
    norm0 += d.n0[k] * d.n0[k];
    norm1 += d.n1[k] * d.n1[k];
  }
  for (int k = 0; k < dim; ++k) {
    d.n0[k] /= std::sqrt(norm0);
    d.n1[k] /= std::sqrt(norm1);
  }
  return d;
}

// Plain double-loop reference, independent of the kernel implementations.
ReachResult reference_codim1(const TestData& d, int dim, std::size_t count,
                             double threshold) {
  ReachResult r{kInf, kInf};
  for (std::size_t j = 0; j < count; ++j) {
    double dist2 = 0.0, dot = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double diff = d.coords[k][j] - d.p[k];
      dist2 += diff * diff;
      dot += d.n0[k] * diff;
    }
    r.min_dist2 = std::min(r.min_dist2, dist2);
    if (dist2 < kCoincidentDist2) continue;
    const double q = dist2 / (2.0 * std::fabs(dot));
    if (q < threshold) r.min_quotient = std::min(r.min_quotient, q);
  }
  return r;
}

}  // namespace

TEST_CASE("scalar and reference kernels agree") {
  Lcg rng;
  for (int dim : {2, 3, 4, 5}) {
    for (std::size_t count : {1u, 5u, 64u, 301u}) {
      auto d = make_data(dim, count, rng);
      const auto batch = d.batch(dim, count);
      for (double threshold : {kInf, 1.0, 0.3}) {
        const auto got =
            scalar_backend().reach_codim1(d.p, d.n0, batch, threshold);
        const auto want = reference_codim1(d, dim, count, threshold);
        CHECK(got.min_dist2 == doctest::Approx(want.min_dist2).epsilon(1e-12));
        if (std::isinf(want.min_quotient)) {
          CHECK(std::isinf(got.min_quotient));
        } else {
          CHECK(got.min_quotient ==
                doctest::Approx(want.min_quotient).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("scalar and AVX2 backends are equivalent") {
  const Backend* avx2 = avx2_backend();
  if (!avx2) return;  // not an x86 host or no AVX2: nothing to compare
  Lcg rng;
  for (int dim : {2, 4, 5}) {
    for (std::size_t count : {3u, 17u, 256u, 1003u}) {
      auto d = make_data(dim, count, rng);
      const auto batch = d.batch(dim, count);
      for (double threshold : {kInf, 0.8}) {
        const auto s =
            scalar_backend().reach_codim1(d.p, d.n0, batch, threshold);
        const auto v = avx2->reach_codim1(d.p, d.n0, batch, threshold);
        CHECK(v.min_dist2 == doctest::Approx(s.min_dist2).epsilon(1e-12));
        if (std::isinf(s.min_quotient)) {
          CHECK(std::isinf(v.min_quotient));
        } else {
          CHECK(v.min_quotient ==
                doctest::Approx(s.min_quotient).epsilon(1e-12));
        }

        const auto s2 =
            scalar_backend().reach_codim2(d.p, d.n0, d.n1, batch, threshold);
        const auto v2 =
            avx2->reach_codim2(d.p, d.n0, d.n1, batch, threshold);
        CHECK(v2.min_dist2 == doctest::Approx(s2.min_dist2).epsilon(1e-12));
        if (std::isinf(s2.min_quotient)) {
          CHECK(std::isinf(v2.min_quotient));
        } else {
          CHECK(v2.min_quotient ==
                doctest::Approx(s2.min_quotient).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("threshold semantics: quotients at or above the cutoff vanish") {
  Lcg rng;
  auto d = make_data(3, 128, rng);
  const auto batch = d.batch(3, 128);
  const auto all = scalar_backend().reach_codim1(d.p, d.n0, batch, kInf);
  REQUIRE(std::isfinite(all.min_quotient));
  const auto below = scalar_backend().reach_codim1(
      d.p, d.n0, batch, all.min_quotient * 1.0000001);
  CHECK(below.min_quotient == all.min_quotient);
  const auto above = scalar_backend().reach_codim1(
      d.p, d.n0, batch, all.min_quotient * 0.999);
  CHECK(std::isinf(above.min_quotient));
}

TEST_CASE("coincident candidates feed min_dist2 but not the quotient") {
  TestData d;
  const int dim = 3;
  d.coords[0] = {0.5, 0.0};
  d.coords[1] = {0.0, 0.0};
  d.coords[2] = {0.0, 0.0};
  d.p[0] = d.p[1] = d.p[2] = 0.0;
  d.n0[0] = 1.0;
  d.n0[1] = d.n0[2] = 0.0;
  const auto r =
      scalar_backend().reach_codim1(d.p, d.n0, d.batch(dim, 2), kInf);
  CHECK(r.min_dist2 == 0.0);
  CHECK(r.min_quotient == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("orthogonal normals give infinite quotients, not NaN") {
  TestData d;
  d.coords[0] = {0.0};
  d.coords[1] = {0.7};
  d.p[0] = d.p[1] = 0.0;
  d.n0[0] = 1.0;  // candidate offset is orthogonal to the normal
  d.n0[1] = 0.0;
  const auto r =
      scalar_backend().reach_codim1(d.p, d.n0, d.batch(2, 1), kInf);
  CHECK(std::isinf(r.min_quotient));
  CHECK_FALSE(std::isnan(r.min_quotient));
}

TEST_CASE("runtime dispatch selects a backend and honors overrides") {
  const Backend& active = active_backend();
  CHECK((std::string(active.name) == "scalar" ||
         std::string(active.name) == "avx2"));
  set_active_backend(&scalar_backend());
  CHECK(std::string(active_backend().name) == "scalar");
  set_active_backend(nullptr);
}
