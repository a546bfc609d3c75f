#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "scband/profile.hpp"

using namespace scband;

namespace {

std::vector<double> uniform_grid(double lo, double hi, int count) {
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i)
    g[i] = lo + (hi - lo) * i / static_cast<double>(count - 1);
  return g;
}

// Independent 5-point stencil on the closed form itself, used to confirm
// the hand-derived analytic derivatives.
DerivativeBundle fd_oracle(const Profile& p, double t, double h) {
  const auto f = [&](double x) { return p.value(x); };
  const double d1 =
      (f(t - 2 * h) - 8 * f(t - h) + 8 * f(t + h) - f(t + 2 * h)) / (12 * h);
  const double d2 = (-f(t - 2 * h) + 16 * f(t - h) - 30 * f(t) +
                     16 * f(t + h) - f(t + 2 * h)) /
                    (12 * h * h);
  return {f(t), d1, d2};
}

}  // namespace

TEST_CASE("exponential profile at zero") {
  const auto p = Profile::exponential({-1.0, 1.0});
  const auto b = p.eval(0.0);
  CHECK(b.value == 1.0);
  CHECK(b.d1 == 1.0);
  CHECK(b.d2 == 1.0);
}

TEST_CASE("power profile alpha=1/2 at t=4") {
  const auto p = Profile::power(0.5, {0.0, 8.0});
  const auto b = p.eval(4.0);
  CHECK(b.value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(b.d1 == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(b.d2 == doctest::Approx(-1.0 / 32.0).epsilon(1e-14));
}

TEST_CASE("cos-power n=2 at zero") {
  const auto p = Profile::cos_power(2, {-1.5, 1.5});
  const auto b = p.eval(0.0);
  CHECK(b.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(b.d1 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(b.d2 == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("cos-power analytic derivatives match a finite-difference oracle") {
  for (int n : {2, 3, 4, 7}) {
    const double edge = M_PI / n;
    const auto p = Profile::cos_power(n, {-edge, edge});
    for (double t : {-0.6 * edge, -0.2 * edge, 0.13 * edge, 0.55 * edge}) {
      const auto a = p.eval(t);
      const auto o = fd_oracle(p, t, 1e-4 * edge);
      CHECK(a.d1 == doctest::Approx(o.d1).epsilon(1e-8));
      CHECK(a.d2 == doctest::Approx(o.d2).epsilon(1e-8));
    }
  }
}

TEST_CASE("sampling a constant profile reproduces it exactly") {
  const auto p = Profile::constant(3.0, {0.0, 1.0});
  const auto s = p.sample(uniform_grid(0.0, 1.0, 17));
  for (int i = 2; i <= 14; ++i) {
    const double t = i / 16.0;
    CHECK(s.eval(t).value == 3.0);
  }
}

TEST_CASE("sampling the exponential hits e^t at the grid points") {
  const auto p = Profile::exponential({0.0, 1.0});
  const auto grid = uniform_grid(0.0, 1.0, 101);
  const auto s = p.sample(grid);
  for (int i = 2; i <= 98; ++i)
    CHECK(s.eval(grid[i]).value == std::exp(grid[i]));
}

TEST_CASE("cos-power(4) stays positive on [-pi/8, pi/8]") {
  const auto p = Profile::cos_power(4, {-M_PI / 8.0, M_PI / 8.0});
  const auto s = p.sample(uniform_grid(-M_PI / 8.0, M_PI / 8.0, 33));
  for (int i = 2; i <= 30; ++i) {
    const double t = -M_PI / 8.0 + (M_PI / 4.0) * i / 32.0;
    CHECK(s.eval(t).value > 0.0);
  }
}

TEST_CASE("finite differences of a 1001-point sampling track analytic "
          "derivatives below 1e-6") {
  struct Case {
    Profile profile;
    double lo, hi;
  };
  const std::vector<Case> cases = {
      {Profile::exponential({0.0, 1.0}), 0.0, 1.0},
      {Profile::power(0.5, {0.5, 1.5}), 0.5, 1.5},
      {Profile::cos_power(3, {-0.5, 0.5}), -0.5, 0.5},
      {Profile::constant(2.5, {0.0, 1.0}), 0.0, 1.0},
  };
  for (const auto& c : cases) {
    const auto grid = uniform_grid(c.lo, c.hi, 1001);
    const auto s = c.profile.sample(grid);
    for (int i = 10; i < 1000; i += 37) {
      const auto exact = c.profile.eval(grid[i]);
      const auto fd = s.eval(grid[i]);
      CHECK(std::fabs(fd.d1 - exact.d1) < 1e-6);
      CHECK(std::fabs(fd.d2 - exact.d2) < 1e-6);
    }
    // Off-grid queries go through the spline and noncentered weights.
    const double t = 0.5 * (grid[500] + grid[501]);
    const auto exact = c.profile.eval(t);
    const auto fd = s.eval(t);
    CHECK(std::fabs(fd.value - exact.value) < 1e-9);
    CHECK(std::fabs(fd.d1 - exact.d1) < 1e-6);
    CHECK(std::fabs(fd.d2 - exact.d2) < 1e-6);
  }
}

TEST_CASE("eval is bit-deterministic") {
  const auto p = Profile::cos_power(5, {-0.5, 0.5});
  const auto a = p.eval(0.37);
  const auto b = p.eval(0.37);
  CHECK(a.value == b.value);
  CHECK(a.d1 == b.d1);
  CHECK(a.d2 == b.d2);
}

TEST_CASE("domain and validity errors") {
  CHECK_THROWS_AS((void)Profile::exponential({-1.0, 1.0}).eval(2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)Profile::constant(-1.0, {0.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)Profile::cos_power(2, {-3.0, 3.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)Profile::power(0.5, {-1.0, 1.0}),
                  std::invalid_argument);

  // Sampled grids: too short, not increasing, nonpositive interior values.
  CHECK_THROWS_AS((void)Profile::sampled({0, 1, 2}, {1, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)Profile::sampled({0, 1, 1, 2, 3}, {1, 1, 1, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)Profile::sampled({0, 1, 2, 3, 4}, {1, 1, -1, 1, 1}),
      std::invalid_argument);

  // Sampled evaluation must stay two grid steps from the ends.
  const auto s = Profile::exponential({0.0, 1.0}).sample(
      uniform_grid(0.0, 1.0, 11));
  CHECK_THROWS_AS((void)s.eval(0.05), std::invalid_argument);
  CHECK_THROWS_AS((void)s.eval(0.97), std::invalid_argument);
  CHECK_NOTHROW((void)s.eval(0.5));
}

TEST_CASE("fd_weights reduce to the classical centered stencils on uniform "
          "grids") {
  const auto w = fd_weights(0.0, {-2, -1, 0, 1, 2}, 2);
  const std::vector<double> d1 = {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3,
                                  -1.0 / 12};
  const std::vector<double> d2 = {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3,
                                  -1.0 / 12};
  for (int i = 0; i < 5; ++i) {
    CHECK(w[1][i] == doctest::Approx(d1[i]).epsilon(1e-14));
    CHECK(w[2][i] == doctest::Approx(d2[i]).epsilon(1e-14));
  }
}
