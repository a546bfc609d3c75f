#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace scband {

// Thrown when an evaluation runs into non-finite values or an iteration
// fails to converge; CLI maps it to exit code 3.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Interval {
  double lo;
  double hi;

  bool contains(double t) const { return t >= lo && t <= hi; }
  bool contains_interior(double t) const { return t > lo && t < hi; }
  double length() const { return hi - lo; }
};

// Value and first two derivatives of a profile at a point.
struct DerivativeBundle {
  double value;
  double d1;
  double d2;
};

enum class ProfileKind { constant, power, exponential, cos_power, sampled };

// One-variable scalar profile used as a warping function: a closed-form
// family (constant c, t^alpha, e^t, cos(n t/2)^{2/n}) or a sampled grid.
// Profiles are immutable and strictly positive on the interior of their
// domain; a zero at a domain endpoint marks a collapsed band end.
class Profile {
 public:
  static Profile constant(double c, Interval domain);
  // t^alpha; requires domain.lo >= 0.
  static Profile power(double alpha, Interval domain);
  static Profile exponential(Interval domain);
  // cos(n t / 2)^{2/n}; requires domain within [-pi/n, pi/n].
  static Profile cos_power(int n, Interval domain);
  // Grid must be strictly increasing with at least 5 points; values must be
  // positive away from the endpoints.
  static Profile sampled(std::vector<double> ts, std::vector<double> vs);

  ProfileKind kind() const { return kind_; }
  Interval domain() const { return domain_; }

  // Closed-form kinds return analytic derivatives; the sampled kind uses the
  // interpolating natural cubic spline for the value and 5-point centered
  // finite differences (4th order on uniform grids) for d1 and d2. Sampled
  // profiles require t at least two grid steps from either end.
  DerivativeBundle eval(double t) const;

  double value(double t) const { return eval(t).value; }

  // Restriction to a grid (strictly increasing, inside the domain); the
  // result agrees with the source exactly at the grid points.
  Profile sample(const std::vector<double>& grid) const;

  // Profile scaled as under t -> t/lambda pullback of the metric scaling
  // g -> lambda^2 g: returns s(t) = lambda * f(t/lambda) on the scaled domain.
  Profile rescaled(double lambda) const;

 private:
  Profile() = default;

  ProfileKind kind_ = ProfileKind::constant;
  Interval domain_{0.0, 1.0};
  double param_ = 0.0;  // c for constant, alpha for power, n for cos_power
  double scale_ = 1.0;  // metric rescaling factor applied to closed forms

  // sampled kind
  std::vector<double> ts_;
  std::vector<double> vs_;
  std::vector<double> spline_d2_;  // natural cubic spline second derivatives

  DerivativeBundle eval_closed_form(double t) const;
  DerivativeBundle eval_sampled(double t) const;
};

// Finite-difference weights for derivatives 0..max_order at point x over the
// given nodes (Fornberg's algorithm). weights[m][i] multiplies f(nodes[i]) in
// the m-th derivative. Exact for polynomials of degree < nodes.size().
std::vector<std::vector<double>> fd_weights(double x,
                                            const std::vector<double>& nodes,
                                            int max_order);

}  // namespace scband
