#include "scband/bands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace scband {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Dormand-Prince 5(4) single adaptive step for a scalar ODE. Returns the
// accepted step size actually taken (signed) and updates (t, y); h_next is
// the proposed next step.
struct Dopri5 {
  std::function<double(double, double)> rhs;
  double rtol = 1e-10;
  double atol = 1e-13;

  // One accepted step from (t, y), not exceeding t_limit. Returns false when
  // the step size underflows.
  bool step(double& t, double& y, double& h, double t_limit) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                            c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113,
                            b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                            e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double dir = (h >= 0) ? 1.0 : -1.0;
    for (int attempt = 0; attempt < 200; ++attempt) {
      if (dir * (t + h - t_limit) > 0.0) h = t_limit - t;
      if (std::fabs(h) < 1e-14 * std::max(1.0, std::fabs(t))) return false;

      const double k1 = rhs(t, y);
      const double k2 = rhs(t + c2 * h, y + h * a21 * k1);
      const double k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
      const double k4 =
          rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
      const double k5 = rhs(
          t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      const double k6 =
          rhs(t + h,
              y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      const double y5 =
          y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const double k7 = rhs(t + h, y5);
      const double err_raw =
          h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
      const double tol =
          atol + rtol * std::max(std::fabs(y), std::fabs(y5));
      const double err = std::fabs(err_raw) / tol;

      if (err <= 1.0) {
        t += h;
        y = y5;
        const double grow =
            (err == 0.0) ? 5.0
                         : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= grow;
        return true;
      }
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
    }
    return false;
  }
};

// Riccati flow tracked in f or, near the asymptotes, in u = 1/f:
//   f' = -(sigma(t)/(n-1) + n f^2)/2
//   u' =  (n + sigma(t) u^2/(n-1))/2
// The flow switches representation with hysteresis at |f| = 2 and |u| = 2,
// so both tracked variables stay within [-2.5, 2.5]. A zero crossing of u is
// the blow-up of f; its time is refined by bisection with sub-integration.
class RiccatiFlow {
 public:
  RiccatiFlow(const BandSpec& spec, int direction)
      : spec_(spec), dir_(direction) {
    require(direction == 1 || direction == -1, "direction must be +1 or -1");
    f_rhs_ = [this](double t, double f) {
      return -(spec_.sigma(t) / (spec_.n - 1) + spec_.n * f * f) / 2.0;
    };
    u_rhs_ = [this](double t, double u) {
      return (spec_.n + spec_.sigma(t) * u * u / (spec_.n - 1)) / 2.0;
    };
  }

  struct Outcome {
    bool blew_up = false;
    double blow_up_t = 0.0;
    double t_end = 0.0;
    double f_end = 0.0;  // meaningless when blew_up
  };

  // Runs from (t0, f0) to the range end in the chosen direction, optionally
  // recording the trace. f0 may be +-infinity (start on the asymptote).
  Outcome run(double f0, double t0, RiccatiSolution* trace) {
    const double t_limit =
        (dir_ > 0) ? spec_.t_range.hi : spec_.t_range.lo;
    require(spec_.t_range.contains(t0), "t0 outside the sigma range");

    double t = t0;
    bool in_u = std::isinf(f0) || std::fabs(f0) > 2.0;
    double y = in_u ? (std::isinf(f0) ? std::copysign(0.0, f0) : 1.0 / f0)
                    : f0;
    double h = dir_ * 1e-4 * std::max(1.0, std::fabs(t_limit - t0));
    record(trace, t, in_u, y);

    Dopri5 stepper;
    while (dir_ * (t_limit - t) > 1e-14 * std::max(1.0, std::fabs(t))) {
      const double t_prev = t;
      const double y_prev = y;
      stepper.rhs = in_u ? u_rhs_ : f_rhs_;
      if (!stepper.step(t, y, h, t_limit))
        throw numerical_error("Riccati step underflow");

      if (in_u && y_prev * y < 0.0) {
        const double t_cross = locate_u_zero(t_prev, y_prev, t);
        Outcome out;
        out.blew_up = true;
        out.blow_up_t = t_cross;
        out.t_end = t_cross;
        return out;
      }
      // Representation switch with hysteresis.
      if (!in_u && std::fabs(y) > 2.0) {
        y = 1.0 / y;
        in_u = true;
      } else if (in_u && std::fabs(y) > 2.0) {
        y = 1.0 / y;
        in_u = false;
      }
      record(trace, t, in_u, y);
    }
    Outcome out;
    out.t_end = t;
    out.f_end = in_u ? 1.0 / y : y;
    return out;
  }

 private:
  void record(RiccatiSolution* trace, double t, bool in_u, double y) const {
    if (!trace) return;
    const double f = in_u ? 1.0 / y : y;
    if (std::fabs(f) <= kRiccatiDivergence) {
      trace->ts.push_back(t);
      trace->fs.push_back(f);
    }
  }

  // u has opposite signs at t_a and t_b (one accepted step apart); bisect by
  // re-integrating the sub-step until the crossing is pinned down.
  double locate_u_zero(double t_a, double u_a, double t_b) const {
    Dopri5 stepper;
    stepper.rhs = u_rhs_;
    for (int it = 0; it < 200; ++it) {
      const double t_mid = 0.5 * (t_a + t_b);
      if (std::fabs(t_b - t_a) < 1e-13 * std::max(1.0, std::fabs(t_mid)))
        break;
      double t = t_a;
      double u = u_a;
      double h = (t_mid - t_a) * 0.5;
      bool ok = true;
      while (std::fabs(t - t_mid) > 1e-15 * std::max(1.0, std::fabs(t_mid))) {
        if (!stepper.step(t, u, h, t_mid)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      if (u_a * u <= 0.0) {
        t_b = t_mid;
      } else {
        t_a = t_mid;
        u_a = u;
      }
    }
    return 0.5 * (t_a + t_b);
  }

  const BandSpec& spec_;
  int dir_;
  std::function<double(double, double)> f_rhs_;
  std::function<double(double, double)> u_rhs_;
};

}  // namespace

double width_bound(BandClass cls, int n, double sigma) {
  require(n >= 2, "dimension must be >= 2");
  require(sigma > 0.0, "width bound needs sigma > 0");
  double k = 0.0;
  switch (cls) {
    case BandClass::overtorical:
    case BandClass::iso_enlargeable_compact:
      k = 2.0;
      break;
    case BandClass::iso_enlargeable:
    case BandClass::sys:
      k = 4.0;
      break;
    case BandClass::syse:
      k = 8.0;
      break;
  }
  return k * M_PI * std::sqrt((n - 1.0) / (sigma * n));
}

BandSpec BandSpec::constant_sigma(int n, double sigma,
                                  std::optional<double> m_minus,
                                  std::optional<double> m_plus,
                                  double horizon) {
  BandSpec spec;
  spec.n = n;
  spec.sigma = [sigma](double) { return sigma; };
  spec.t_range = Interval{-horizon, horizon};
  spec.m_minus = m_minus;
  spec.m_plus = m_plus;
  spec.horizon_range = true;
  return spec;
}

RiccatiSolution integrate_riccati(const BandSpec& spec, double f0, double t0,
                                  int direction) {
  require(spec.n >= 2, "dimension must be >= 2");
  RiccatiSolution sol;
  RiccatiFlow flow(spec, direction);
  const auto out = flow.run(f0, t0, &sol);
  if (out.blew_up) {
    if (direction > 0)
      sol.blow_up_high = out.blow_up_t;
    else
      sol.blow_up_low = out.blow_up_t;
  }
  if (direction < 0) {
    std::reverse(sol.ts.begin(), sol.ts.end());
    std::reverse(sol.fs.begin(), sol.fs.end());
  }
  return sol;
}

RiccatiSolution riccati_two_sided(const BandSpec& spec, double f0, double t0) {
  RiccatiSolution back = integrate_riccati(spec, f0, t0, -1);
  RiccatiSolution fwd = integrate_riccati(spec, f0, t0, +1);
  RiccatiSolution sol;
  sol.ts = std::move(back.ts);
  sol.fs = std::move(back.fs);
  if (!sol.ts.empty()) {  // drop the duplicated anchor point
    sol.ts.pop_back();
    sol.fs.pop_back();
  }
  sol.ts.insert(sol.ts.end(), fwd.ts.begin(), fwd.ts.end());
  sol.fs.insert(sol.fs.end(), fwd.fs.begin(), fwd.fs.end());
  sol.blow_up_low = back.blow_up_low;
  sol.blow_up_high = fwd.blow_up_high;
  return sol;
}

BandWidthResult max_band_width(const BandSpec& spec, double tol) {
  require(spec.n >= 2, "dimension must be >= 2");
  const double nm1 = spec.n - 1.0;
  const double f_start = spec.m_minus ? -*spec.m_minus / nm1 : kInf;
  const double f_target = spec.m_plus ? *spec.m_plus / nm1 : -kInf;

  // A Riccati fixed point pinned to the boundary data admits f = const for
  // every l: the equality case, reported as degenerate.
  if (spec.m_minus && spec.m_plus &&
      std::fabs(f_start - f_target) <=
          1e-9 * std::max(1.0, std::fabs(f_start))) {
    double max_rhs = 0.0;
    for (int i = 0; i <= 32; ++i) {
      const double t = spec.t_range.lo +
                       (spec.t_range.hi - spec.t_range.lo) * i / 32.0;
      const double rhs =
          -(spec.sigma(t) / nm1 + spec.n * f_start * f_start) / 2.0;
      max_rhs = std::max(max_rhs, std::fabs(rhs));
    }
    if (max_rhs <= 1e-9 * std::max(1.0, std::fabs(f_start) * spec.n)) {
      BandWidthResult r;
      r.status = BandFeasibility::degenerate;
      r.fixed_point = f_start;
      return r;
    }
  }

  const double l_max = std::min(-spec.t_range.lo, spec.t_range.hi);
  require(l_max > 0.0, "sigma range must contain a neighbourhood of 0");

  const auto feasible = [&](double l) -> bool {
    BandSpec clipped = spec;
    clipped.t_range = Interval{-l, l};
    RiccatiFlow flow(clipped, +1);
    const auto out = flow.run(f_start, -l, nullptr);
    if (out.blew_up) return false;  // collapsed before reaching +l
    return out.f_end >= f_target - 1e-14 * std::max(1.0, std::fabs(f_target));
  };

  // Geometric scan for the last feasible half-width, then bisection.
  constexpr int kScan = 160;
  const double l_lo = std::max(tol, l_max * 1e-9);
  double last_feasible = -1.0;
  double first_infeasible_after = -1.0;
  for (int i = 0; i <= kScan; ++i) {
    const double l =
        l_lo * std::pow(l_max / l_lo, static_cast<double>(i) / kScan);
    if (feasible(l)) {
      last_feasible = l;
      first_infeasible_after = -1.0;
    } else if (first_infeasible_after < 0.0) {
      first_infeasible_after = l;
    }
  }

  BandWidthResult r;
  if (last_feasible < 0.0) {
    r.status = BandFeasibility::infeasible;
    return r;
  }
  if (first_infeasible_after < 0.0) {
    // Feasible out to the end of the range.
    if (spec.horizon_range) {
      r.status = BandFeasibility::unbounded;
    } else {
      r.status = BandFeasibility::feasible;
      r.width = 2.0 * l_max;
    }
    return r;
  }
  double a = last_feasible;
  double b = first_infeasible_after;
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (feasible(mid))
      a = mid;
    else
      b = mid;
  }
  r.status = BandFeasibility::feasible;
  r.width = a + b;  // 2 * midpoint
  return r;
}

CorollaryBound symmetrization_corollary_bound(int n, double sigma0,
                                              double delta0, double eps) {
  require(sigma0 > 0.0, "sigma0 must be positive");
  require(delta0 >= 0.0, "delta0 must be nonnegative");
  require(eps >= 0.0, "eps must be nonnegative");
  BandSpec spec;
  spec.n = n;
  spec.sigma = [sigma0, delta0, eps](double t) {
    return (std::fabs(t) <= delta0) ? sigma0 : -eps;
  };
  spec.t_range = Interval{-1e3, 1e3};
  spec.horizon_range = true;
  const BandWidthResult r = max_band_width(spec);
  CorollaryBound out;
  out.unbounded = (r.status == BandFeasibility::unbounded);
  out.half_width = out.unbounded ? kInf : 0.5 * r.width;
  return out;
}

}  // namespace scband
