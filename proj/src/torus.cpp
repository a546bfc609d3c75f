#include "scband/torus.hpp"

#include <cmath>
#include <stdexcept>

#include "scband/profile.hpp"

namespace scband {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

constexpr double kPairTol = 1e-12;

}  // namespace

PairCoefficients combine_pair(double r1, double r2) {
  require(r1 > 0.0 && r1 <= 1.0 && r2 > 0.0 && r2 <= 1.0,
          "focal radii must lie in (0, 1]");
  const double norm = std::sqrt(r1 * r1 + r2 * r2);
  return {r2 / norm, r1 / norm, r1 * r2 / norm};
}

double offset_radius(double r_cross) {
  require(r_cross > 0.0 && r_cross <= 1.0, "focal radius must lie in (0, 1]");
  return r_cross / (2.0 + r_cross);
}

std::map<int, double> focal_radius_table(int n_max) {
  require(n_max >= 2, "table needs n_max >= 2");
  std::map<int, double> r;
  r[2] = 1.0;
  if (n_max >= 3) r[3] = M_PI / 4.0;  // Clifford torus in S^3
  for (int n = 4; n <= n_max; ++n) {
    if (n % 2 == 0) {
      r[n] = r[n / 2] / (2.0 * std::sqrt(2.0) + r[n / 2]);
    } else {
      const auto pc = combine_pair(r[n / 2], r[n / 2 + 1]);
      r[n] = offset_radius(pc.r_cross);
    }
  }
  return r;
}

double spherical_width_lower_bound(int n) {
  require(n >= 2, "n must be >= 2");
  return 2.0 * focal_radius_table(n).at(n);
}

double lipschitz_lower_bound(int n, double sigma, double band_width) {
  require(n >= 2, "n must be >= 2");
  require(sigma > 0.0, "sigma must be positive");
  require(band_width > 0.0, "band width must be positive");
  return band_width / (2.0 * M_PI) * std::sqrt(sigma * n / (n - 1.0));
}

int crossover_vs_classical(int n_lo, int n_hi) {
  require(n_lo <= 2 && n_hi >= 20, "range must contain [2, 20]");
  for (int n = n_lo; n <= n_hi; ++n) {
    const double ours = (1.0 / 3.0) / (M_PI * std::sqrt(n));
    const double classical = n / (std::pow(2.0, n) * M_PI);
    if (ours > classical) return n;
  }
  throw numerical_error("no crossover in the given range");
}

TorusConstruction TorusConstruction::circle() {
  TorusConstruction t;
  t.kind_ = Kind::circle;
  t.ambient_dim_ = 2;
  t.focal_radius_ = 1.0;
  return t;
}

TorusConstruction TorusConstruction::pair_of(TorusConstruction left,
                                             TorusConstruction right) {
  TorusConstruction t;
  t.kind_ = Kind::pair;
  t.ambient_dim_ = left.ambient_dim_ + right.ambient_dim_;
  const auto pc = combine_pair(left.focal_radius_, right.focal_radius_);
  t.c1_ = pc.c1;
  t.c2_ = pc.c2;
  t.focal_radius_ = pc.r_cross;
  require(std::fabs(pc.c1 * pc.c1 + pc.c2 * pc.c2 - 1.0) <= kPairTol,
          "pair coefficients must satisfy c1^2 + c2^2 = 1");
  require(std::fabs(pc.c1 * left.focal_radius_ -
                    pc.c2 * right.focal_radius_) <= kPairTol,
          "pair coefficients must satisfy c1 r1 = c2 r2");
  t.left_ = std::make_shared<const TorusConstruction>(std::move(left));
  t.right_ = std::make_shared<const TorusConstruction>(std::move(right));
  return t;
}

TorusConstruction TorusConstruction::offset_of(TorusConstruction pair_node) {
  require(pair_node.kind_ == Kind::pair, "offset wraps a pair node");
  TorusConstruction t;
  t.kind_ = Kind::offset;
  t.ambient_dim_ = pair_node.ambient_dim_;
  t.delta_ = 0.5 * pair_node.focal_radius_;
  t.rescale_ = 1.0 / (1.0 + t.delta_);
  t.focal_radius_ = offset_radius(pair_node.focal_radius_);
  t.left_ = std::make_shared<const TorusConstruction>(std::move(pair_node));
  return t;
}

TorusConstruction TorusConstruction::y_construction(int n) {
  require(n == 2 || n == 4, "realized constructions cover Y(2) and Y(4)");
  if (n == 2) return circle();
  return offset_of(pair_of(circle(), circle()));
}

namespace {

// Realization of the nodes realizable in ambient dimension <= 5:
// circle, pair of circles, and the tube around a pair of circles.
PointCloud embed_circle(int resolution) {
  PointCloud cloud;
  cloud.dim = 2;
  cloud.codim = 1;
  cloud.points.reserve(2 * resolution);
  cloud.normals.reserve(2 * resolution);
  for (int i = 0; i < resolution; ++i) {
    const double a = 2.0 * M_PI * i / resolution;
    const double c = std::cos(a), s = std::sin(a);
    cloud.points.insert(cloud.points.end(), {c, s});
    cloud.normals.insert(cloud.normals.end(), {c, s});
  }
  return cloud;
}

PointCloud embed_pair_of_circles(const TorusConstruction& node,
                                 int resolution) {
  const double c1 = node.c1(), c2 = node.c2();
  PointCloud cloud;
  cloud.dim = 4;
  cloud.codim = 2;
  const std::size_t n = static_cast<std::size_t>(resolution) * resolution;
  cloud.points.reserve(4 * n);
  cloud.normals.reserve(8 * n);
  for (int i = 0; i < resolution; ++i) {
    const double a = 2.0 * M_PI * i / resolution;
    const double ca = std::cos(a), sa = std::sin(a);
    for (int j = 0; j < resolution; ++j) {
      const double b = 2.0 * M_PI * j / resolution;
      const double cb = std::cos(b), sb = std::sin(b);
      cloud.points.insert(cloud.points.end(),
                          {c1 * ca, c1 * sa, c2 * cb, c2 * sb});
      cloud.normals.insert(cloud.normals.end(), {ca, sa, 0.0, 0.0});
      cloud.normals.insert(cloud.normals.end(), {0.0, 0.0, cb, sb});
    }
  }
  return cloud;
}

PointCloud embed_tube_around_pair(const TorusConstruction& node,
                                  int resolution) {
  const TorusConstruction& base = node.left();
  const double c1 = base.c1(), c2 = base.c2();
  const double delta = node.delta();
  const double rescale = node.rescale();
  PointCloud cloud;
  cloud.dim = 4;
  cloud.codim = 1;
  const std::size_t n =
      static_cast<std::size_t>(resolution) * resolution * resolution;
  cloud.points.reserve(4 * n);
  cloud.normals.reserve(4 * n);
  for (int i = 0; i < resolution; ++i) {
    const double a = 2.0 * M_PI * i / resolution;
    const double ca = std::cos(a), sa = std::sin(a);
    for (int j = 0; j < resolution; ++j) {
      const double b = 2.0 * M_PI * j / resolution;
      const double cb = std::cos(b), sb = std::sin(b);
      for (int k = 0; k < resolution; ++k) {
        const double psi = 2.0 * M_PI * k / resolution;
        const double u = c1 + delta * std::cos(psi);
        const double v = c2 + delta * std::sin(psi);
        cloud.points.insert(
            cloud.points.end(),
            {rescale * u * ca, rescale * u * sa, rescale * v * cb,
             rescale * v * sb});
        // The tube's outward normal is the offset direction itself.
        cloud.normals.insert(cloud.normals.end(),
                             {std::cos(psi) * ca, std::cos(psi) * sa,
                              std::sin(psi) * cb, std::sin(psi) * sb});
      }
    }
  }
  return cloud;
}

}  // namespace

PointCloud embed_and_sample(const TorusConstruction& construction,
                            int resolution) {
  require(construction.ambient_dim() <= 5,
          "realization capped at ambient dimension 5");
  require(resolution >= 16, "resolution must be at least 16 per angle");

  switch (construction.kind()) {
    case TorusConstruction::Kind::circle:
      return embed_circle(resolution);
    case TorusConstruction::Kind::pair:
      require(construction.left().kind() == TorusConstruction::Kind::circle &&
                  construction.right().kind() ==
                      TorusConstruction::Kind::circle,
              "realized pair nodes combine two circles");
      return embed_pair_of_circles(construction, resolution);
    case TorusConstruction::Kind::offset:
      require(construction.left().left().kind() ==
                      TorusConstruction::Kind::circle &&
                  construction.left().right().kind() ==
                      TorusConstruction::Kind::circle,
              "realized offset nodes wrap a pair of circles");
      return embed_tube_around_pair(construction, resolution);
  }
  throw std::logic_error("unreachable");
}

}  // namespace scband
