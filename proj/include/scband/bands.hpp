#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "scband/profile.hpp"

namespace scband {

enum class BandClass {
  overtorical,
  iso_enlargeable,
  iso_enlargeable_compact,
  sys,
  syse,
};

// Width bound k * pi * sqrt((n-1)/(sigma n)) with k = 2 for overtorical and
// compact iso-enlargeable bands, 4 for iso-enlargeable and SYS, 8 for SYSE.
double width_bound(BandClass cls, int n, double sigma);

// Scalar-curvature lower-bound data for a band centered on the separating
// hypersurface: Sc(V)(v) >= sigma(t) at signed distance t, with boundary
// mean-curvature lower bounds (outward normals; convex boundaries positive).
// An unset bound leaves that end unconstrained.
struct BandSpec {
  int n;
  std::function<double(double)> sigma;
  Interval t_range;
  std::optional<double> m_minus;
  std::optional<double> m_plus;
  bool horizon_range = false;  // t_range is a search horizon, not a wall

  static BandSpec constant_sigma(int n, double sigma,
                                 std::optional<double> m_minus = {},
                                 std::optional<double> m_plus = {},
                                 double horizon = 1e3);
};

// Solution record of -2f' - n f^2 = sigma(t)/(n-1).
struct RiccatiSolution {
  std::vector<double> ts;
  std::vector<double> fs;  // finite on the recorded grid, |f| <= 1e8
  std::optional<double> blow_up_low;   // f -> +inf going backward
  std::optional<double> blow_up_high;  // f -> -inf going forward
};

// |f| beyond this value is reported as blow-up. Locations are resolved by
// tracking u = 1/f through the asymptote, so the reported position is the
// root of u rather than a threshold crossing.
inline constexpr double kRiccatiDivergence = 1e8;

// Integrates f' = -(sigma(t)/(n-1) + n f^2)/2 from (t0, f0) in the given
// direction (+1 forward, -1 backward) until the range end or blow-up.
// Adaptive embedded Runge-Kutta 5(4), relative tolerance 1e-10. Step
// underflow throws numerical_error.
RiccatiSolution integrate_riccati(const BandSpec& spec, double f0, double t0,
                                  int direction);

// Both directions from (t0, f0); convenience for blow-up interval length.
RiccatiSolution riccati_two_sided(const BandSpec& spec, double f0, double t0);

enum class BandFeasibility { feasible, unbounded, infeasible, degenerate };

struct BandWidthResult {
  BandFeasibility status;
  double width = 0.0;        // set when feasible
  double fixed_point = 0.0;  // set when degenerate
};

// Supremum of widths 2l admitting a profile f on [-l, l] with
//   -2f' - n f^2 >= sigma(t)/(n-1),
//   f(-l) <= -M_-/(n-1)  (when constrained),
//   f(+l) >=  M_+/(n-1)  (when constrained).
// Shooting from the most permissive start (f(-l) = -M_-/(n-1), or from the
// f = +inf asymptote when unconstrained); the band cannot extend past a
// downward blow-up of f, which marks a collapsed end. Bisection on l to the
// given tolerance. "infeasible" and "unbounded" are values, not errors;
// a pinned Riccati fixed point (boundary data met exactly by f = const) is
// reported as "degenerate".
BandWidthResult max_band_width(const BandSpec& spec, double tol = 1e-10);

struct CorollaryBound {
  bool unbounded;
  double half_width;  // max l when bounded
};

// sigma(t) = sigma0 on [-delta0, delta0] and -eps outside, no boundary
// constraints: the bound comes from Riccati blow-up alone.
CorollaryBound symmetrization_corollary_bound(int n, double sigma0,
                                              double delta0, double eps);

}  // namespace scband
