#include <doctest.h>

#include <cmath>
#include <vector>

#include "scband/bands.hpp"

using namespace scband;

TEST_CASE("width bound table over the band classes") {
  for (int n : {2, 3, 5, 9}) {
    const double sigma = n * (n - 1.0);
    const double base = 2.0 * M_PI / n;
    CHECK(width_bound(BandClass::overtorical, n, sigma) ==
          doctest::Approx(base).epsilon(1e-14));
    CHECK(width_bound(BandClass::iso_enlargeable_compact, n, sigma) ==
          doctest::Approx(base).epsilon(1e-14));
    CHECK(width_bound(BandClass::iso_enlargeable, n, sigma) ==
          doctest::Approx(2.0 * base).epsilon(1e-14));
    CHECK(width_bound(BandClass::sys, n, sigma) ==
          doctest::Approx(2.0 * base).epsilon(1e-14));
    CHECK(width_bound(BandClass::syse, n, sigma) ==
          doctest::Approx(4.0 * base).epsilon(1e-14));
  }
  CHECK(width_bound(BandClass::overtorical, 2, 2.0) ==
        doctest::Approx(M_PI).epsilon(1e-14));
  // General sigma scales like sigma^{-1/2}.
  CHECK(width_bound(BandClass::overtorical, 5, 20.0) ==
        doctest::Approx(2.0 * M_PI * std::sqrt(4.0 / 100.0)).epsilon(1e-14));
  CHECK_THROWS_AS((void)width_bound(BandClass::sys, 3, 0.0),
                  std::invalid_argument);
}

TEST_CASE("Riccati solution matches tan for positive constant sigma") {
  for (int n : {2, 3, 7}) {
    const auto spec = BandSpec::constant_sigma(n, n * (n - 1.0));
    const auto sol = riccati_two_sided(spec, 0.0, 0.0);
    REQUIRE(sol.blow_up_low.has_value());
    REQUIRE(sol.blow_up_high.has_value());
    CHECK(*sol.blow_up_high == doctest::Approx(M_PI / n).epsilon(1e-8));
    CHECK(*sol.blow_up_low == doctest::Approx(-M_PI / n).epsilon(1e-8));

    // |f(t)| = tan(n|t|/2) along the trace.
    for (std::size_t i = 0; i < sol.ts.size(); i += 7) {
      const double t = sol.ts[i];
      if (std::fabs(t) > 0.9 * M_PI / n) continue;
      CHECK(std::fabs(sol.fs[i]) ==
            doctest::Approx(std::tan(0.5 * n * std::fabs(t)))
                .epsilon(1e-7));
    }
  }
}

TEST_CASE("Riccati solution matches tanh for negative constant sigma") {
  const int n = 4;
  BandSpec spec = BandSpec::constant_sigma(n, -n * (n - 1.0));
  spec.t_range = {-3.0, 3.0};
  const auto sol = integrate_riccati(spec, 0.0, 0.0, +1);
  CHECK_FALSE(sol.blow_up_high.has_value());
  CHECK(sol.ts.back() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sol.fs.back() ==
        doctest::Approx(std::tanh(0.5 * n * 3.0)).epsilon(1e-9));
}

TEST_CASE("Riccati with sigma = 0 reproduces f = 1/(1+t)") {
  BandSpec spec = BandSpec::constant_sigma(2, 0.0);
  spec.t_range = {-5.0, 5.0};
  const auto fwd = integrate_riccati(spec, 1.0, 0.0, +1);
  CHECK_FALSE(fwd.blow_up_high.has_value());
  CHECK(fwd.fs.back() == doctest::Approx(1.0 / 6.0).epsilon(1e-9));

  const auto bwd = integrate_riccati(spec, 1.0, 0.0, -1);
  REQUIRE(bwd.blow_up_low.has_value());
  CHECK(*bwd.blow_up_low == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("maximal band width: unconstrained optimal band reaches 2pi/n") {
  for (int n : {2, 3, 5, 10}) {
    const auto r = max_band_width(BandSpec::constant_sigma(n, n * (n - 1.0)));
    REQUIRE(r.status == BandFeasibility::feasible);
    CHECK(r.width == doctest::Approx(2.0 * M_PI / n).epsilon(1e-8));
  }
}

TEST_CASE("maximal band width: mean-convex boundary data with positive "
          "curvature is infeasible") {
  // f must decrease, so it cannot run from -M-/(n-1) = 0 up to M+/(n-1) = 0.
  const auto r = max_band_width(BandSpec::constant_sigma(3, 6.0, 0.0, 0.0));
  CHECK(r.status == BandFeasibility::infeasible);
}

TEST_CASE("maximal band width with one-sided constraints") {
  const int n = 3;
  // Constrained bottom (f starts at 1), free top: f falls from 1 to -inf.
  const auto r = max_band_width(
      BandSpec::constant_sigma(n, n * (n - 1.0), -(n - 1.0) * 1.0, {}));
  REQUIRE(r.status == BandFeasibility::feasible);
  // f = -tan((n/2)(t - t0)) started at f = 1: remaining time to blow-down is
  // (pi/2 + arctan 1)/(n/2).
  const double expected = (M_PI / 2.0 + std::atan(1.0)) * 2.0 / n;
  CHECK(r.width == doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("hyperbolic rigidity: equality data degenerate, perturbed data "
          "infeasible") {
  for (int n : {2, 3, 5}) {
    const double m = n - 1.0;
    const auto eq =
        max_band_width(BandSpec::constant_sigma(n, -n * (n - 1.0), -m, m));
    CHECK(eq.status == BandFeasibility::degenerate);
    CHECK(eq.fixed_point == doctest::Approx(1.0).epsilon(1e-12));

    const auto up = max_band_width(
        BandSpec::constant_sigma(n, -n * (n - 1.0), -m + 0.1, m + 0.1));
    CHECK(up.status == BandFeasibility::infeasible);

    const auto down = max_band_width(
        BandSpec::constant_sigma(n, -n * (n - 1.0), -m - 0.1, m + 0.1));
    CHECK(down.status == BandFeasibility::infeasible);
  }
}

TEST_CASE("hyperbolic data below the equality threshold is unbounded") {
  const int n = 3;
  const double m = n - 1.0;
  const auto r = max_band_width(
      BandSpec::constant_sigma(n, -n * (n - 1.0), -m, m - 0.2));
  CHECK(r.status == BandFeasibility::unbounded);
}

TEST_CASE("scaling covariance of the maximal width") {
  const int n = 3;
  for (double lambda : {0.5, 2.0, 5.0}) {
    const auto base =
        BandSpec::constant_sigma(n, n * (n - 1.0), -4.0, -1.0);
    const auto scaled = BandSpec::constant_sigma(
        n, n * (n - 1.0) / (lambda * lambda), -4.0 / lambda, -1.0 / lambda);
    const auto w0 = max_band_width(base);
    const auto w1 = max_band_width(scaled);
    REQUIRE(w0.status == BandFeasibility::feasible);
    REQUIRE(w1.status == BandFeasibility::feasible);
    CHECK(w1.width == doctest::Approx(lambda * w0.width).epsilon(1e-8));
  }
}

TEST_CASE("width is monotone in sigma and in the top boundary bound") {
  const int n = 4;
  double previous = 1e9;
  for (double sigma : {3.0, 6.0, 12.0, 24.0}) {
    const auto r =
        max_band_width(BandSpec::constant_sigma(n, sigma, -6.0, -1.0));
    REQUIRE(r.status == BandFeasibility::feasible);
    CHECK(r.width <= previous + 1e-9);
    previous = r.width;
  }
  previous = 1e9;
  for (double m_plus : {-6.0, -3.0, 0.0, 3.0}) {
    const auto r =
        max_band_width(BandSpec::constant_sigma(n, 12.0, -6.0, m_plus));
    REQUIRE(r.status == BandFeasibility::feasible);
    CHECK(r.width <= previous + 1e-9);
    previous = r.width;
  }
}

TEST_CASE("symmetrization corollary bound") {
  const int n = 3;
  const double sigma0 = n * (n - 1.0);

  // Wide positive zone: blow-up happens inside it.
  const auto wide = symmetrization_corollary_bound(n, sigma0, 1.2 * M_PI / n,
                                                   0.0);
  CHECK_FALSE(wide.unbounded);
  CHECK(wide.half_width > 0.0);
  CHECK(wide.half_width < 1.2 * M_PI / n + 2.0);

  // Narrow zones still force a finite bound with eps = 0, growing as the
  // zone shrinks.
  const auto narrow = symmetrization_corollary_bound(n, sigma0, 0.05, 0.0);
  const auto narrower = symmetrization_corollary_bound(n, sigma0, 0.02, 0.0);
  CHECK_FALSE(narrow.unbounded);
  CHECK_FALSE(narrower.unbounded);
  CHECK(narrower.half_width > narrow.half_width);
  CHECK(narrow.half_width > wide.half_width);

  // Degenerate zone: sigma = 0 everywhere admits f = 0 forever.
  CHECK(symmetrization_corollary_bound(n, sigma0, 0.0, 0.0).unbounded);

  // eps sweep: a threshold separates bounded from unbounded (tanh escape).
  const double delta0 = 0.3;
  bool seen_bounded = false, seen_unbounded = false;
  double last_bounded_eps = -1.0, first_unbounded_eps = -1.0;
  for (double eps : {1e-4, 1e-3, 1e-2, 0.1, 1.0, 10.0}) {
    const auto r = symmetrization_corollary_bound(n, sigma0, delta0, eps);
    if (r.unbounded) {
      if (!seen_unbounded) first_unbounded_eps = eps;
      seen_unbounded = true;
    } else {
      CHECK_FALSE(seen_unbounded);  // transition is monotone
      seen_bounded = true;
      last_bounded_eps = eps;
    }
  }
  CHECK(seen_bounded);
  CHECK(seen_unbounded);
  CHECK(last_bounded_eps < first_unbounded_eps);
}

TEST_CASE("band spec validation") {
  BandSpec bad = BandSpec::constant_sigma(1, 1.0);
  bad.n = 1;
  CHECK_THROWS_AS((void)max_band_width(bad), std::invalid_argument);
  CHECK_THROWS_AS((void)symmetrization_corollary_bound(3, -1.0, 0.1, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)symmetrization_corollary_bound(3, 1.0, -0.1, 0.0),
                  std::invalid_argument);
}
