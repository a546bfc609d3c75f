#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "scband/gauss.hpp"

using namespace scband;

TEST_CASE("theorema egregium examples") {
  // Totally geodesic equator.
  for (int n : {3, 5, 8}) {
    PrincipalCurvatures flat{std::vector<double>(n - 1, 0.0),
                             Ambient::sphere, n};
    CHECK(gauss_scalar_curvature(flat) == (n - 1.0) * (n - 2.0));
  }
  // Clifford torus in S^3 is intrinsically flat.
  PrincipalCurvatures clifford{{1.0, -1.0}, Ambient::sphere, 3};
  CHECK(gauss_scalar_curvature(clifford) == 0.0);
  // Umbilic points: (n-1)(n-2)(1 + lambda^2).
  for (int n : {3, 6}) {
    for (double lambda : {0.3, 1.0, 2.5}) {
      PrincipalCurvatures umbilic{std::vector<double>(n - 1, lambda),
                                  Ambient::sphere, n};
      CHECK(gauss_scalar_curvature(umbilic) ==
            doctest::Approx((n - 1.0) * (n - 2.0) * (1.0 + lambda * lambda))
                .epsilon(1e-13));
    }
  }
  // Euclidean ambient drops the constant term.
  PrincipalCurvatures euclidean{{1.0, 1.0, 1.0}, Ambient::euclidean, 4};
  CHECK(gauss_scalar_curvature(euclidean) == doctest::Approx(6.0));
  CHECK_THROWS_AS(
      (void)gauss_scalar_curvature(
          PrincipalCurvatures{{1.0}, Ambient::sphere, 3}),
      std::invalid_argument);
}

TEST_CASE("gauss curvature is invariant under permutation and sign flip") {
  const std::vector<std::vector<double>> sets = {
      {0.5, -1.2, 2.0}, {1.0, 1.0, -3.0}, {0.1, 0.2, 0.3}};
  for (const auto& values : sets) {
    PrincipalCurvatures pc{values, Ambient::sphere, 4};
    const double base = gauss_scalar_curvature(pc);
    auto permuted = values;
    std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
    CHECK(gauss_scalar_curvature({permuted, Ambient::sphere, 4}) ==
          doctest::Approx(base).epsilon(1e-14));
    auto flipped = values;
    for (auto& v : flipped) v = -v;
    CHECK(gauss_scalar_curvature({flipped, Ambient::sphere, 4}) ==
          doctest::Approx(base).epsilon(1e-14));
  }
}

TEST_CASE("umbilic consistency with the round distance sphere") {
  for (int n : {3, 4, 7, 10}) {
    for (int i = 1; i <= 10; ++i) {
      const double rho = 0.1 * i;
      const double lambda = subsphere_data(rho).curvature;
      PrincipalCurvatures umbilic{std::vector<double>(n - 1, lambda),
                                  Ambient::sphere, n};
      CHECK(std::fabs(gauss_scalar_curvature(umbilic) -
                      (n - 1.0) * (n - 2.0) / (rho * rho)) < 1e-10);
    }
  }
}

TEST_CASE("codimension-k curvature lower bound") {
  CHECK(curvature_lower_bound(5, 1) == doctest::Approx(std::sqrt(3.0)));
  CHECK(curvature_lower_bound(9, 1) == doctest::Approx(std::sqrt(7.0)));
  CHECK(curvature_lower_bound(5, 4) == 0.0);  // n-k-1 = 0: vacuous
  CHECK(curvature_lower_bound(10, 3) ==
        doctest::Approx(std::sqrt(6.0) / 3.0));
  CHECK_THROWS_AS((void)curvature_lower_bound(5, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)curvature_lower_bound(5, 5), std::invalid_argument);
}

TEST_CASE("subsphere data") {
  const auto equator = subsphere_data(1.0);
  CHECK(equator.focal_radius == doctest::Approx(M_PI / 2.0).epsilon(1e-14));
  CHECK(equator.curvature == 0.0);

  const auto clifford = subsphere_data(1.0 / std::sqrt(2.0));
  CHECK(clifford.focal_radius == doctest::Approx(M_PI / 4.0).epsilon(1e-13));
  CHECK(clifford.curvature == doctest::Approx(1.0).epsilon(1e-13));

  for (int n : {2, 3, 9}) {
    const auto d = subsphere_data(1.0 / std::sqrt(n));
    CHECK(d.curvature == doctest::Approx(std::sqrt(n - 1.0)).epsilon(1e-13));
  }
  CHECK_THROWS_AS((void)subsphere_data(0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)subsphere_data(1.5), std::invalid_argument);
}

TEST_CASE("balanced sphere products measured by the embedded-curvature "
          "oracle") {
  // One factor: the unit sphere itself, curvature 1 in the ambient space.
  CHECK(sphere_product_curvature({2}) == doctest::Approx(1.0).epsilon(1e-6));
  // Two circle factors (Clifford in S^3): factor circles of radius
  // 1/sqrt(2) have ambient curvature sqrt(2).
  CHECK(sphere_product_curvature({1, 1}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  // Two equal higher-dimensional factors.
  CHECK(sphere_product_curvature({2, 2}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  // Three circles (Clifford T^3 in S^5).
  CHECK(sphere_product_curvature({1, 1, 1}) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-6));

  // Consistency with the distance-sphere picture: ambient curvature
  // sqrt(k) corresponds to spherical curvature sqrt(k-1), which is the
  // subsphere value at rho = 1/sqrt(k).
  for (int k : {2, 3}) {
    std::vector<int> circles(k, 1);
    const double ambient = sphere_product_curvature(circles);
    const double spherical = std::sqrt(ambient * ambient - 1.0);
    CHECK(spherical ==
          doctest::Approx(subsphere_data(1.0 / std::sqrt(k)).curvature)
              .epsilon(1e-5));
  }

  CHECK_THROWS_AS((void)sphere_product_curvature({}), std::invalid_argument);
  CHECK_THROWS_AS((void)sphere_product_curvature({0}),
                  std::invalid_argument);
}
