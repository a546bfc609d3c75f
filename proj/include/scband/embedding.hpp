#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace scband {

// Explicit parametrization F: R^p -> R^d of a p-dimensional submanifold.
struct ParametrizedSurface {
  int param_dim;
  int ambient_dim;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> chart;
};

// Second-fundamental-form data measured by centered finite differences of the
// chart: first fundamental form, an orthonormal normal frame, and the
// principal curvatures per normal direction.
struct EmbeddedCurvature {
  Eigen::MatrixXd metric;                        // p x p
  std::vector<Eigen::MatrixXd> second_forms;     // codim entries, p x p
  std::vector<Eigen::VectorXd> principal;        // per normal, p eigenvalues
  double max_abs_curvature;                      // max over normals/directions
};

// h is the finite-difference step in parameter space (4th-order stencils).
EmbeddedCurvature embedded_curvature_fd(const ParametrizedSurface& surface,
                                        const Eigen::VectorXd& params,
                                        double h = 1e-3);

}  // namespace scband
