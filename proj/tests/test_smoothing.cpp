#include <doctest.h>

#include <cmath>
#include <vector>

#include "scband/smoothing.hpp"

using namespace scband;

TEST_CASE("bending endpoint identities hold exactly") {
  const BendingFamily fam({1.0, 2.0, 0.5}, {0.3, -0.1, 0.2},
                          {1.0, 0.0, -0.2}, 0.25);
  const auto h0 = bending_metric(fam, 0.0);
  for (int i = 0; i < 3; ++i) CHECK(h0[i] == fam.h[i]);
  const auto d0 = bending_metric_d1(fam, 0.0);
  for (int i = 0; i < 3; ++i) CHECK(d0[i] == fam.a_new[i]);
  const auto d1 = bending_metric_d1(fam, fam.epsilon);
  for (int i = 0; i < 3; ++i) CHECK(d1[i] == fam.a_old[i]);
}

TEST_CASE("equal forms reduce the family to h + tA") {
  const BendingFamily fam({1.0, 1.5}, {0.4, -0.2}, {0.4, -0.2}, 0.5);
  for (double t : {0.0, 0.2, 0.5}) {
    const auto h = bending_metric(fam, t);
    CHECK(h[0] == doctest::Approx(1.0 + 0.4 * t).epsilon(1e-15));
    CHECK(h[1] == doctest::Approx(1.5 - 0.2 * t).epsilon(1e-15));
  }
  // No 1/eps term: Sc stays bounded along the eps ladder.
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const BendingFamily f({1.0, 1.0, 1.0}, {0.3, 0.1, 0.0},
                          {0.3, 0.1, 0.0}, eps);
    CHECK(std::fabs(bending_scalar_curvature(f, eps / 2.0)) < 10.0);
  }
}

TEST_CASE("bending scalar curvature follows -trace(A_old - A_new)/eps") {
  // Nonzero trace difference: eps * Sc settles on -trace uniformly over the
  // middle of the collar, tighter as eps shrinks (monotone envelope).
  const std::vector<double> a_new = {0.2, 0.0, 0.1};
  const std::vector<double> a_old = {0.7, 0.4, 0.1};
  const double trace = 0.9;
  double previous_sup = 1e9;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const BendingFamily fam({1.0, 1.0, 1.0}, a_new, a_old, eps);
    double sup = 0.0;
    for (int i = 1; i <= 9; ++i) {
      const double t = eps * i / 10.0;
      sup = std::max(sup,
                     std::fabs(eps * bending_scalar_curvature(fam, t) +
                               trace));
    }
    CHECK(sup < previous_sup + 1e-12);
    previous_sup = sup;
  }
  CHECK(previous_sup < 0.05);

  // The acceptance family: h = id on a 3-torus, A_new = 0, A_old = e11.
  const BendingFamily fam({1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0},
                          1e-4);
  CHECK(1e-4 * bending_scalar_curvature(fam, 5e-5) ==
        doctest::Approx(-1.0).epsilon(0.01));
}

TEST_CASE("Weyl Ricci formula") {
  // Static family: no bending, no curvature.
  const BendingFamily still({1.0, 1.0}, {0.0, 0.0}, {0.0, 0.0}, 0.5);
  CHECK(weyl_ricci_normal(still, 0.25) == 0.0);

  // Family osculating h_ii = e^{2t}: Ricci(d/dt,d/dt) = -m at t = 0.
  for (int m : {2, 3}) {
    const double eps = 0.125;
    const std::vector<double> h(m, 1.0);
    const std::vector<double> a_new(m, 2.0);
    const std::vector<double> a_old(m, 2.0 + 4.0 * eps);
    const BendingFamily fam(h, a_new, a_old, eps);
    CHECK(weyl_ricci_normal(fam, 0.0) ==
          doctest::Approx(-static_cast<double>(m)).epsilon(1e-13));
  }

  // Generic diagonal family: algebraic route agrees with the sampled
  // warped-metric route.
  const BendingFamily fam({1.0, 1.3, 0.8}, {0.5, -0.2, 0.1},
                          {-0.3, 0.4, 0.2}, 0.5);
  CHECK(weyl_ricci_residual(fam, 0.2) < 1e-8);
  CHECK(weyl_ricci_residual(fam, 0.4) < 1e-8);
}

TEST_CASE("bending family validation") {
  CHECK_THROWS_AS(BendingFamily({1.0}, {0.0}, {0.0}, -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(BendingFamily({1.0}, {0.0, 0.0}, {0.0}, 0.1),
                  std::invalid_argument);
  // Metric dips through zero inside [0, eps].
  CHECK_THROWS_AS(BendingFamily({1.0}, {-4.0}, {-4.0}, 1.0),
                  std::invalid_argument);
  const BendingFamily fam({1.0}, {0.0}, {1.0}, 0.1);
  CHECK_THROWS_AS((void)bending_metric(fam, 0.2), std::invalid_argument);
  CHECK_THROWS_AS((void)bending_scalar_curvature(fam, 0.0),
                  std::invalid_argument);
}

TEST_CASE("rounding tube curvatures and scalar curvature") {
  // theta = pi/2: the sphere directions flatten out and the 1/eps term in
  // Sc is killed.
  const auto side = rounding_tube({3, 1.0, 0.01, M_PI / 2.0});
  CHECK(side.lambdas[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(side.sc == doctest::Approx(0.0).epsilon(1e-10));

  // theta = 0, eps -> 0: eps * Sc -> 2 * mean.curv = 2(m-1)/rho.
  for (int m : {2, 3, 4}) {
    const double rho = 1.0;
    double previous = 1e9;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      const auto tube = rounding_tube({m, rho, eps, 0.0});
      const double limit = 2.0 * (m - 1.0) / rho;
      const double err = std::fabs(eps * tube.sc - limit);
      CHECK(err < previous + 1e-12);
      previous = err;
      CHECK(eps * tube.lambda_n == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK(previous < 0.01 * 2.0 * (m - 1.0));
  }

  // Mean-curvature positivity transfer: Sc(W) >= Sc(V) = 0 for all theta.
  for (double eps : {1e-2, 1e-3}) {
    for (int i = 0; i <= 16; ++i) {
      const double theta = -M_PI / 2.0 + M_PI * i / 16.0;
      const auto tube = rounding_tube({3, 1.0, eps, theta});
      CHECK(tube.sc >= -1e-9);
    }
  }
}

TEST_CASE("rounding tube closed form matches the finite-difference chart") {
  for (int m : {2, 3, 4}) {
    for (double theta : {0.0, 0.6, 1.2}) {
      const auto tube = rounding_tube({m, 1.0, 0.05, theta});
      CHECK(tube.fd_residual < 1e-6);
    }
  }
}

TEST_CASE("rounding tube validation") {
  CHECK_THROWS_AS((void)rounding_tube({3, 1.0, 0.3, 0.0}),
                  std::invalid_argument);  // eps >= rho/4
  CHECK_THROWS_AS((void)rounding_tube({3, 1.0, 0.01, 2.0}),
                  std::invalid_argument);  // theta out of range
  CHECK_THROWS_AS((void)rounding_tube({1, 1.0, 0.01, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("quadratic decay reports") {
  for (double radius : {2.0, 10.0}) {
    const auto half = quadratic_decay_profile(0.5, radius);
    CHECK(half.min_sc ==
          doctest::Approx(0.5 / (radius * radius)).epsilon(1e-10));
    CHECK(half.within_bound);
  }
  // alpha -> 1: the end flattens out.
  const auto flat = quadratic_decay_profile(0.99, 5.0);
  CHECK(flat.min_sc < 1e-3);
  // 2 alpha (1 - alpha) <= 1/2 < 4 pi^2 for every alpha.
  for (int i = 1; i <= 9; ++i) {
    const auto r = quadratic_decay_profile(0.1 * i, 3.0);
    CHECK(r.within_bound);
    CHECK(r.min_sc <= 0.5 / 9.0 + 1e-12);
  }
  CHECK_THROWS_AS((void)quadratic_decay_profile(1.0, 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)quadratic_decay_profile(0.5, 0.5),
                  std::invalid_argument);
}
