#include "scband/gauss.hpp"

#include <cmath>
#include <numeric>

#include "scband/embedding.hpp"

namespace scband {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

double gauss_scalar_curvature(const PrincipalCurvatures& pc) {
  require(pc.n >= 2, "ambient dimension must be >= 2");
  require(static_cast<int>(pc.values.size()) == pc.n - 1,
          "a hypersurface in dimension n has n-1 principal curvatures");
  double sum = 0.0;
  double sum2 = 0.0;
  for (double c : pc.values) {
    sum += c;
    sum2 += c * c;
  }
  const double intrinsic = sum * sum - sum2;
  if (pc.ambient == Ambient::sphere)
    return (pc.n - 1.0) * (pc.n - 2.0) + intrinsic;
  return intrinsic;
}

double curvature_lower_bound(int n, int k) {
  require(k >= 1 && k <= n - 1, "codimension k must satisfy 1 <= k <= n-1");
  return std::sqrt(static_cast<double>(n - k - 1)) / k;
}

double sphere_product_curvature(const std::vector<int>& factor_dims) {
  const int k = static_cast<int>(factor_dims.size());
  require(k >= 1, "needs at least one factor");
  int p = 0;
  for (int d : factor_dims) {
    require(d >= 1, "factor dimensions must be >= 1");
    p += d;
  }
  require(p <= 6, "parametrization capped at 6 chart dimensions");

  const double scale = 1.0 / std::sqrt(static_cast<double>(k));
  const int ambient = p + k;

  // Each factor S^{m}(scale) in spherical coordinates, factors concatenated.
  ParametrizedSurface surface;
  surface.param_dim = p;
  surface.ambient_dim = ambient;
  surface.chart = [factor_dims, scale](const Eigen::VectorXd& u) {
    Eigen::VectorXd x(u.size() + factor_dims.size());
    int ui = 0;
    int xi = 0;
    for (int m : factor_dims) {
      double sin_prod = scale;
      for (int j = 0; j < m; ++j) {
        x(xi++) = sin_prod * std::cos(u(ui + j));
        sin_prod *= std::sin(u(ui + j));
      }
      x(xi++) = sin_prod;
      ui += m;
    }
    return x;
  };

  // Generic evaluation point away from chart degeneracies.
  Eigen::VectorXd params(p);
  for (int i = 0; i < p; ++i) params(i) = 0.9 + 0.13 * i;

  return embedded_curvature_fd(surface, params, 1e-3).max_abs_curvature;
}

SubsphereData subsphere_data(double rho) {
  require(rho > 0.0 && rho <= 1.0, "rho must lie in (0, 1]");
  return {std::asin(rho), std::sqrt(1.0 - rho * rho) / rho};
}

}  // namespace scband
