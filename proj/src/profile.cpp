#include "scband/profile.hpp"

#include <algorithm>
#include <cmath>

namespace scband {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Natural cubic spline: second derivatives at the nodes from the standard
// tridiagonal system, zero curvature at both ends.
std::vector<double> spline_second_derivatives(const std::vector<double>& ts,
                                              const std::vector<double>& vs) {
  const std::size_t n = ts.size();
  std::vector<double> d2(n, 0.0), u(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double sig = (ts[i] - ts[i - 1]) / (ts[i + 1] - ts[i - 1]);
    const double p = sig * d2[i - 1] + 2.0;
    d2[i] = (sig - 1.0) / p;
    const double slope_r = (vs[i + 1] - vs[i]) / (ts[i + 1] - ts[i]);
    const double slope_l = (vs[i] - vs[i - 1]) / (ts[i] - ts[i - 1]);
    u[i] = (6.0 * (slope_r - slope_l) / (ts[i + 1] - ts[i - 1]) -
            sig * u[i - 1]) /
           p;
  }
  for (std::size_t i = n - 1; i-- > 1;) d2[i] = d2[i] * d2[i + 1] + u[i];
  d2[0] = d2[n - 1] = 0.0;
  return d2;
}

}  // namespace

std::vector<std::vector<double>> fd_weights(double x,
                                            const std::vector<double>& nodes,
                                            int max_order) {
  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<double>> w(
      max_order + 1, std::vector<double>(nodes.size(), 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x;
  w[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, max_order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int m = mn; m >= 1; --m)
          w[m][i] = c1 * (m * w[m - 1][i - 1] - c5 * w[m][i - 1]) / c2;
        w[0][i] = -c1 * c5 * w[0][i - 1] / c2;
      }
      for (int m = mn; m >= 1; --m)
        w[m][j] = (c4 * w[m][j] - m * w[m - 1][j]) / c3;
      w[0][j] = c4 * w[0][j] / c3;
    }
    c1 = c2;
  }
  return w;
}

Profile Profile::constant(double c, Interval domain) {
  require(c > 0.0, "constant profile must be positive");
  require(domain.lo < domain.hi, "empty profile domain");
  Profile p;
  p.kind_ = ProfileKind::constant;
  p.domain_ = domain;
  p.param_ = c;
  return p;
}

Profile Profile::power(double alpha, Interval domain) {
  require(domain.lo >= 0.0 && domain.lo < domain.hi,
          "power profile needs a domain in t >= 0");
  Profile p;
  p.kind_ = ProfileKind::power;
  p.domain_ = domain;
  p.param_ = alpha;
  return p;
}

Profile Profile::exponential(Interval domain) {
  require(domain.lo < domain.hi, "empty profile domain");
  Profile p;
  p.kind_ = ProfileKind::exponential;
  p.domain_ = domain;
  return p;
}

Profile Profile::cos_power(int n, Interval domain) {
  require(n >= 1, "cos_power order must be >= 1");
  const double edge = M_PI / n;
  require(domain.lo >= -edge && domain.hi <= edge && domain.lo < domain.hi,
          "cos_power domain must lie within [-pi/n, pi/n]");
  Profile p;
  p.kind_ = ProfileKind::cos_power;
  p.domain_ = domain;
  p.param_ = static_cast<double>(n);
  return p;
}

Profile Profile::sampled(std::vector<double> ts, std::vector<double> vs) {
  require(ts.size() == vs.size(), "grid/value size mismatch");
  require(ts.size() >= 5, "sampled profile needs at least 5 points");
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    require(ts[i] < ts[i + 1], "sampled grid must be strictly increasing");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const bool endpoint = (i == 0 || i + 1 == vs.size());
    require(vs[i] > 0.0 || (endpoint && vs[i] == 0.0),
            "profile values must be positive on the interior");
  }
  Profile p;
  p.kind_ = ProfileKind::sampled;
  p.domain_ = Interval{ts.front(), ts.back()};
  p.spline_d2_ = spline_second_derivatives(ts, vs);
  p.ts_ = std::move(ts);
  p.vs_ = std::move(vs);
  return p;
}

DerivativeBundle Profile::eval_closed_form(double t) const {
  // scale_ implements the pullback lambda * f(t/lambda).
  const double s = scale_;
  const double u = t / s;
  double v = 0.0, d1 = 0.0, d2 = 0.0;
  switch (kind_) {
    case ProfileKind::constant:
      v = param_;
      break;
    case ProfileKind::power: {
      const double a = param_;
      v = std::pow(u, a);
      d1 = a * std::pow(u, a - 1.0);
      d2 = a * (a - 1.0) * std::pow(u, a - 2.0);
      break;
    }
    case ProfileKind::exponential:
      v = std::exp(u);
      d1 = v;
      d2 = v;
      break;
    case ProfileKind::cos_power: {
      const double n = param_;
      const double w = 0.5 * n * u;
      const double c = std::cos(w);
      const double sn = std::sin(w);
      v = std::pow(c, 2.0 / n);
      d1 = -sn * std::pow(c, 2.0 / n - 1.0);
      // phi'' = -(n/2) [ cos^{2/n} + (n-2)/n * sin^2 * cos^{2/n - 2} ]
      d2 = -0.5 * n *
           (v + (n - 2.0) / n * sn * sn * std::pow(c, 2.0 / n - 2.0));
      break;
    }
    case ProfileKind::sampled:
      break;  // unreachable
  }
  return {s * v, d1, d2 / s};
}

DerivativeBundle Profile::eval_sampled(double t) const {
  const std::size_t n = ts_.size();
  require(t >= ts_[2] && t <= ts_[n - 3],
          "sampled profile evaluated within two grid steps of an end");
  // Segment index by binary search.
  const auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
  std::size_t hi = static_cast<std::size_t>(it - ts_.begin());
  hi = std::clamp<std::size_t>(hi, 1, n - 1);
  const std::size_t lo = hi - 1;

  // Value from the natural cubic spline on [ts_[lo], ts_[hi]].
  const double h = ts_[hi] - ts_[lo];
  const double a = (ts_[hi] - t) / h;
  const double b = (t - ts_[lo]) / h;
  const double value =
      a * vs_[lo] + b * vs_[hi] +
      ((a * a * a - a) * spline_d2_[lo] + (b * b * b - b) * spline_d2_[hi]) *
          (h * h) / 6.0;

  // Derivatives from the 5 nearest nodes (4th-order centered stencil on
  // uniform grids; Fornberg weights handle nonuniform grids and off-node t).
  std::size_t c = (b < 0.5) ? lo : hi;
  c = std::clamp<std::size_t>(c, 2, n - 3);
  const std::vector<double> nodes(ts_.begin() + (c - 2), ts_.begin() + (c + 3));
  const auto w = fd_weights(t, nodes, 2);
  double d1 = 0.0, d2 = 0.0;
  for (int i = 0; i < 5; ++i) {
    d1 += w[1][i] * vs_[c - 2 + i];
    d2 += w[2][i] * vs_[c - 2 + i];
  }
  return {value, d1, d2};
}

DerivativeBundle Profile::eval(double t) const {
  require(domain_.contains(t), "profile evaluated outside its domain");
  const DerivativeBundle out = (kind_ == ProfileKind::sampled)
                                   ? eval_sampled(t)
                                   : eval_closed_form(t);
  if (!std::isfinite(out.value) || !std::isfinite(out.d1) ||
      !std::isfinite(out.d2))
    throw numerical_error("non-finite profile derivatives");
  if (out.value < 0.0 ||
      (out.value == 0.0 && domain_.contains_interior(t)))
    throw std::invalid_argument("profile not positive at evaluation point");
  return out;
}

Profile Profile::sample(const std::vector<double>& grid) const {
  require(grid.size() >= 5, "sampling grid needs at least 5 points");
  for (double t : grid)
    require(domain_.contains(t), "sampling grid outside profile domain");
  std::vector<double> vs;
  vs.reserve(grid.size());
  for (double t : grid) {
    // Endpoint values may legitimately be zero (collapsed band ends).
    if (kind_ == ProfileKind::sampled)
      vs.push_back(eval(t).value);
    else
      vs.push_back(eval_closed_form(t).value);
  }
  return sampled(grid, std::move(vs));
}

Profile Profile::rescaled(double lambda) const {
  require(lambda > 0.0, "rescaling factor must be positive");
  require(kind_ != ProfileKind::sampled,
          "rescaling is provided for closed-form profiles");
  Profile p = *this;
  p.scale_ *= lambda;
  p.domain_ = Interval{domain_.lo * lambda, domain_.hi * lambda};
  return p;
}

}  // namespace scband
