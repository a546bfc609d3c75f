#include "scband/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "scband/bands.hpp"
#include "scband/gauss.hpp"
#include "scband/profile.hpp"
#include "scband/reach.hpp"
#include "scband/smoothing.hpp"
#include "scband/torus.hpp"
#include "scband/warped.hpp"

namespace scband {

namespace {

struct Check {
  bool ok = true;
  double worst = 0.0;

  void expect(bool cond) { ok = ok && cond; }
  void within(double value, double target, double tol) {
    const double err = std::fabs(value - target);
    worst = std::max(worst, err);
    ok = ok && (err <= tol);
  }
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

WarpedBandMetric extremal_band(int n, double fraction = 0.9) {
  const double l = fraction * M_PI / n;
  return WarpedBandMetric::equal_warp(
      n, Profile::cos_power(n, Interval{-M_PI / n, M_PI / n}),
      Interval{-l, l});
}

WarpedBandMetric hyperbolic_band(int n, double l = 1.0) {
  return WarpedBandMetric::equal_warp(
      n, Profile::exponential(Interval{-l, l}), Interval{-l, l});
}

CriterionResult criterion_extremal_width() {
  Check c;
  for (int n = 2; n <= 10; ++n) {
    const auto spec = BandSpec::constant_sigma(n, n * (n - 1.0));
    const auto sol = riccati_two_sided(spec, 0.0, 0.0);
    c.expect(sol.blow_up_low.has_value() && sol.blow_up_high.has_value());
    if (!c.ok) break;
    c.within(*sol.blow_up_high - *sol.blow_up_low, 2.0 * M_PI / n, 1e-6);
  }
  return {1, "Riccati blow-up interval = 2pi/n for sigma = n(n-1), n=2..10",
          c.ok, fmt("max |interval - 2pi/n| = %.3g", c.worst)};
}

CriterionResult criterion_extremal_curvature() {
  Check c;
  for (int n = 2; n <= 10; ++n) {
    const auto metric = extremal_band(n, 0.95);
    const double l = 0.9 * M_PI / n;
    for (int i = 0; i < 1001; ++i) {
      const double t = -l + 2.0 * l * i / 1000.0;
      c.within(scalar_curvature_band(metric, t), n * (n - 1.0), 1e-8);
    }
  }
  return {2, "cos(nt/2)^{2/n} band has Sc = n(n-1) on a 1001-point grid",
          c.ok, fmt("max |Sc - n(n-1)| = %.3g", c.worst)};
}

CriterionResult criterion_hyperbolic_model() {
  Check c;
  for (int n = 2; n <= 8; ++n) {
    const auto metric = hyperbolic_band(n);
    for (int i = 0; i <= 40; ++i) {
      const double t = -0.99 + 1.98 * i / 40.0;
      c.within(scalar_curvature_band(metric, t), -n * (n - 1.0), 1e-10);
      c.within(mean_curvature_slice(metric, t), n - 1.0, 1e-10);
      c.within(ricci_normal_direction(metric, t), -(n - 1.0), 1e-10);
    }
  }
  return {3, "e^t model: Sc = -n(n-1), slice mean curvature n-1, "
             "Ricci_tt = -(n-1)",
          c.ok, fmt("max deviation = %.3g", c.worst)};
}

CriterionResult criterion_hyperbolic_rigidity() {
  Check c;
  for (int n = 2; n <= 6; ++n) {
    const double sigma = -n * (n - 1.0);
    const double m = n - 1.0;
    const auto perturbed_up = max_band_width(
        BandSpec::constant_sigma(n, sigma, -m + 0.1, m + 0.1));
    c.expect(perturbed_up.status == BandFeasibility::infeasible);
    const auto perturbed_down = max_band_width(
        BandSpec::constant_sigma(n, sigma, -m - 0.1, m + 0.1));
    c.expect(perturbed_down.status == BandFeasibility::infeasible);
    const auto equality =
        max_band_width(BandSpec::constant_sigma(n, sigma, -m, m));
    c.expect(equality.status == BandFeasibility::degenerate);
    c.within(equality.fixed_point, 1.0, 1e-9);
  }
  return {4, "sigma = -n(n-1): perturbed boundary data infeasible, equality "
             "case degenerate at f = 1",
          c.ok, fmt("fixed point error = %.3g", c.worst)};
}

CriterionResult criterion_torus_table() {
  Check c;
  const auto table = focal_radius_table(1024);
  const double r4 = 1.0 / (1.0 + 2.0 * std::sqrt(2.0));
  c.within(table.at(4), r4, 1e-12);
  const double r8 = r4 / (2.0 * std::sqrt(2.0) + r4);
  c.within(table.at(8), r8, 1e-12);
  c.expect(table.at(8) > 1.0 / 13.0);
  c.expect(std::fabs(table.at(8) - 0.0845) < 1e-4);
  for (int n = 2; n <= 1024; ++n) {
    const double scaled = table.at(n) * std::pow(n, 1.5);
    c.expect(scaled > 1.0 / 3.0);
    if ((n & (n - 1)) == 0) c.expect(scaled > 1.0);
  }
  return {5, "focal radius table: r(4) = 1/(1+2sqrt2), r(8) > 1/13, "
             "r(n) n^{3/2} > 1/3 (n <= 1024) and > 1 (n = 2^i)",
          c.ok, fmt("r(4) = %.12g, r(8) = %.12g", table.at(4), table.at(8))};
}

CriterionResult criterion_lipschitz() {
  Check c;
  c.within(lipschitz_lower_bound(3, 6.0, M_PI / 2.0), 0.75, 1e-15);
  c.expect(crossover_vs_classical() == 6);
  return {6, "Lip bound (n=3, sigma=6, d=pi/2) = 3/4; crossover vs n/(2^n pi) "
             "at n = 6",
          c.ok, fmt("bound = %.12g", lipschitz_lower_bound(3, 6.0, M_PI / 2))};
}

CriterionResult criterion_focal_oracle() {
  Check c;
  const auto start = std::chrono::steady_clock::now();

  const double circle = brute_force_focal_radius(
      embed_and_sample(TorusConstruction::circle(), 128));
  c.expect(std::fabs(circle - 1.0) <= 0.01);

  const auto pair =
      TorusConstruction::pair_of(TorusConstruction::circle(),
                                 TorusConstruction::circle());
  const double product = brute_force_focal_radius(embed_and_sample(pair, 128));
  const double product_true = 1.0 / std::sqrt(2.0);
  c.expect(std::fabs(product - product_true) <= 0.02 * product_true);

  const auto y4 = TorusConstruction::y_construction(4);
  const double tube = brute_force_focal_radius(embed_and_sample(y4, 128));
  c.expect(std::fabs(tube - y4.focal_radius()) <= 0.05 * y4.focal_radius());

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  c.expect(seconds < 60.0);
  std::ostringstream detail;
  detail << "circle " << circle << ", product " << product << ", Y(4) "
         << tube << " vs " << y4.focal_radius() << ", " << seconds << " s";
  return {7, "normal-injectivity oracle matches stored focal radii "
             "(1%/2%/5%, < 60 s)",
          c.ok, detail.str()};
}

CriterionResult criterion_gauss() {
  Check c;
  PrincipalCurvatures clifford{{1.0, -1.0}, Ambient::sphere, 3};
  c.expect(gauss_scalar_curvature(clifford) == 0.0);
  for (int n = 3; n <= 10; ++n) {
    for (int i = 1; i <= 10; ++i) {
      const double rho = 0.1 * i;
      const double lambda = std::sqrt(1.0 - rho * rho) / rho;
      PrincipalCurvatures umbilic{std::vector<double>(n - 1, lambda),
                                  Ambient::sphere, n};
      c.within(gauss_scalar_curvature(umbilic),
               (n - 1.0) * (n - 2.0) / (rho * rho), 1e-10);
    }
  }
  return {8, "theorema egregium: Clifford (1,-1) gives 0; umbilic matches "
             "(n-1)(n-2)/rho^2",
          c.ok, fmt("max umbilic deviation = %.3g", c.worst)};
}

CriterionResult criterion_bending() {
  Check c;
  const std::vector<double> eps_ladder = {1e-2, 1e-3, 1e-4};
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double eps : eps_ladder) {
    BendingFamily fam({1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, eps);
    const double sc = bending_scalar_curvature(fam, eps / 2.0);
    const double x = 1.0 / eps;
    sx += x;
    sy += sc;
    sxx += x * x;
    sxy += x * sc;
  }
  const double m = eps_ladder.size();
  const double c1 = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  c.within(c1, -1.0, 0.01);
  return {9, "bending law: fitted 1/eps coefficient of Sc equals "
             "-trace(A_old - A_new) = -1 within 1%",
          c.ok, fmt("fitted coefficient = %.6g", c1)};
}

CriterionResult criterion_rounding() {
  Check c;
  const double eps = 1e-4;
  const auto at_zero = rounding_tube({3, 1.0, eps, 0.0});
  c.within(eps * at_zero.lambda_n, 1.0, 1e-15);
  c.within(eps * at_zero.sc, 4.0, 0.04);
  const auto at_right_angle = rounding_tube({3, 1.0, eps, M_PI / 2.0});
  c.expect(std::fabs(at_right_angle.sc) <= 1e-9);
  return {10, "rounding law: eps*lambda_n = 1, eps*Sc -> 2*mn = 4 at theta=0, "
              "1/eps term vanishes at theta=pi/2",
          c.ok,
          fmt("eps*sc(0) = %.6g, sc(pi/2) = %.3g", eps * at_zero.sc,
              at_right_angle.sc)};
}

CriterionResult criterion_decay() {
  Check c;
  for (int i = 1; i <= 19; ++i) {
    const double alpha = 0.05 * i;
    for (double radius : {1.5, 2.0, 5.0, 10.0}) {
      const auto report = quadratic_decay_profile(alpha, radius);
      c.within(report.min_sc, 2.0 * alpha * (1.0 - alpha) / (radius * radius),
               1e-8);
      c.expect(report.within_bound);
    }
  }
  return {11, "quadratic decay: min Sc over B(R) = 2a(1-a)/R^2 <= 4pi^2/R^2",
          c.ok, fmt("max deviation = %.3g", c.worst)};
}

CriterionResult criterion_property_suites() {
  Check c;

  // Scaling covariance over >= 20 deterministic parameter draws.
  int draws = 0;
  for (int n = 2; n <= 6; ++n) {
    for (double lambda : {0.5, 2.0, 10.0}) {
      const auto metric = extremal_band(n, 0.8);
      const auto scaled = metric.rescaled(lambda);
      for (double t : {-0.5 * 0.8 * M_PI / n, 0.11, 0.6 * 0.8 * M_PI / n}) {
        const double sc = scalar_curvature_band(metric, t);
        const double sc_scaled = scalar_curvature_band(scaled, lambda * t);
        c.within(sc_scaled * lambda * lambda, sc, 1e-9 * (1.0 + std::fabs(sc)));
        const double mc = mean_curvature_slice(metric, t);
        c.within(mean_curvature_slice(scaled, lambda * t) * lambda, mc,
                 1e-9 * (1.0 + std::fabs(mc)));
      }
      ++draws;
    }
  }
  c.expect(draws >= 15);

  // Finite-difference cross-validation on closed-form metrics.
  int combos = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int kind = 0; kind < 4; ++kind) {
      WarpedBandMetric metric = [&]() -> WarpedBandMetric {
        switch (kind) {
          case 0:
            return hyperbolic_band(n);
          case 1:
            return extremal_band(n, 0.8);
          case 2:
            return WarpedBandMetric::equal_warp(
                n, Profile::constant(2.0, Interval{-1.0, 1.0}),
                Interval{-1.0, 1.0});
          default:
            return WarpedBandMetric::equal_warp(
                n, Profile::power(0.5, Interval{0.25, 2.0}),
                Interval{0.5, 1.5});
        }
      }();
      std::vector<double> grid;
      const Interval iv = metric.interval();
      const double margin = 0.05 * iv.length();
      for (int i = 0; i <= 40; ++i)
        grid.push_back(iv.lo + margin +
                       (iv.length() - 2 * margin) * i / 40.0);
      const auto report = cross_validate(metric, grid);
      c.expect(report.residual_max < 1e-6);
      ++combos;
    }
  }
  c.expect(combos >= 20);

  // Width-bound monotonicity in sigma and M+.
  {
    const int n = 3;
    std::vector<std::vector<double>> widths;
    for (double sigma : {2.0, 4.0, 6.0, 8.0, 10.0}) {
      std::vector<double> row;
      for (double m_plus : {-3.0, -2.0, -1.0, 0.0, 1.0}) {
        const auto r = max_band_width(
            BandSpec::constant_sigma(n, sigma, -3.0, m_plus));
        c.expect(r.status == BandFeasibility::feasible);
        row.push_back(r.width);
      }
      widths.push_back(row);
    }
    for (std::size_t i = 0; i < widths.size(); ++i)
      for (std::size_t j = 0; j < widths[i].size(); ++j) {
        if (i + 1 < widths.size())
          c.expect(widths[i + 1][j] <= widths[i][j] + 1e-9);
        if (j + 1 < widths[i].size())
          c.expect(widths[i][j + 1] <= widths[i][j] + 1e-9);
      }
  }

  // Odd symmetry of the maximizing profile for even sigma and equal
  // boundary bounds.
  int symmetry_draws = 0;
  for (int n = 2; n <= 5; ++n) {
    for (double m_bound : {-3.0, -2.0, -1.2}) {
      for (double sigma : {0.5 * n * (n - 1.0), n * (n - 1.0)}) {
        const auto spec =
            BandSpec::constant_sigma(n, sigma, m_bound, m_bound);
        const auto r = max_band_width(spec);
        c.expect(r.status == BandFeasibility::feasible);
        if (r.status != BandFeasibility::feasible) continue;
        const double l = 0.5 * r.width;
        const double f0 = -m_bound / (n - 1.0);
        for (int i = 1; i <= 7; ++i) {
          const double t = 0.7 * l * i / 7.0;
          BandSpec fwd = spec;
          fwd.t_range = Interval{-l, t};
          const auto sol_fwd = integrate_riccati(fwd, f0, -l, +1);
          BandSpec bwd = spec;
          bwd.t_range = Interval{-l, -t};
          const auto sol_bwd = integrate_riccati(bwd, f0, -l, +1);
          if (sol_fwd.fs.empty() || sol_bwd.fs.empty()) {
            c.expect(false);
            continue;
          }
          c.within(sol_fwd.fs.back() + sol_bwd.fs.back(), 0.0, 1e-6);
        }
        ++symmetry_draws;
      }
    }
  }
  c.expect(symmetry_draws >= 20);

  return {12, "property suites: scaling covariance, FD cross-validation, "
              "width monotonicity, Riccati odd symmetry",
          c.ok, fmt("worst tolerance slack = %.3g", c.worst)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> results;
  results.push_back(criterion_extremal_width());
  results.push_back(criterion_extremal_curvature());
  results.push_back(criterion_hyperbolic_model());
  results.push_back(criterion_hyperbolic_rigidity());
  results.push_back(criterion_torus_table());
  results.push_back(criterion_lipschitz());
  results.push_back(criterion_focal_oracle());
  results.push_back(criterion_gauss());
  results.push_back(criterion_bending());
  results.push_back(criterion_rounding());
  results.push_back(criterion_decay());
  results.push_back(criterion_property_suites());
  return results;
}

int run_acceptance(std::ostream& os) {
  int failures = 0;
  for (const auto& r : run_acceptance()) {
    os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name
       << "  (" << r.detail << ")\n";
    if (!r.passed) ++failures;
  }
  os << (failures == 0 ? "all criteria passed\n" : "criteria failed\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace scband
