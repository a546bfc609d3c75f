#include "scband/embedding.hpp"

#include <cmath>
#include <stdexcept>

namespace scband {

namespace {

// 4th-order centered first and second derivatives of the chart along
// parameter axes; mixed second derivatives from the 4-point cross stencil
// applied to the 4th-order first-derivative operator.
Eigen::VectorXd d1_axis(const ParametrizedSurface& s, Eigen::VectorXd u,
                        int a, double h) {
  const auto at = [&](double off) {
    Eigen::VectorXd v = u;
    v(a) += off;
    return s.chart(v);
  };
  return (at(-2 * h) - 8.0 * at(-h) + 8.0 * at(h) - at(2 * h)) / (12.0 * h);
}

Eigen::VectorXd d2_axis(const ParametrizedSurface& s, Eigen::VectorXd u,
                        int a, double h) {
  const auto at = [&](double off) {
    Eigen::VectorXd v = u;
    v(a) += off;
    return s.chart(v);
  };
  return (-at(-2 * h) + 16.0 * at(-h) - 30.0 * at(0.0) + 16.0 * at(h) -
          at(2 * h)) /
         (12.0 * h * h);
}

Eigen::VectorXd d2_mixed(const ParametrizedSurface& s, Eigen::VectorXd u,
                         int a, int b, double h) {
  const auto at = [&](double da, double db) {
    Eigen::VectorXd v = u;
    v(a) += da;
    v(b) += db;
    return s.chart(v);
  };
  // 4th-order cross stencil.
  return (8.0 * (at(-h, 2 * h) + at(2 * h, -h) + at(-2 * h, h) +
                 at(h, -2 * h)) -
          8.0 * (at(h, 2 * h) + at(2 * h, h) + at(-2 * h, -h) +
                 at(-h, -2 * h)) -
          (at(2 * h, -2 * h) + at(-2 * h, 2 * h) - at(-2 * h, -2 * h) -
           at(2 * h, 2 * h)) +
          64.0 * (at(h, h) + at(-h, -h)) - 64.0 * (at(h, -h) + at(-h, h))) /
         (144.0 * h * h);
}

}  // namespace

EmbeddedCurvature embedded_curvature_fd(const ParametrizedSurface& surface,
                                        const Eigen::VectorXd& params,
                                        double h) {
  const int p = surface.param_dim;
  const int d = surface.ambient_dim;
  if (params.size() != p) throw std::invalid_argument("parameter size");
  if (p >= d) throw std::invalid_argument("not a positive-codimension chart");

  Eigen::MatrixXd tangents(d, p);
  for (int a = 0; a < p; ++a) tangents.col(a) = d1_axis(surface, params, a, h);

  std::vector<std::vector<Eigen::VectorXd>> hess(
      p, std::vector<Eigen::VectorXd>(p));
  for (int a = 0; a < p; ++a) {
    hess[a][a] = d2_axis(surface, params, a, h);
    for (int b = a + 1; b < p; ++b)
      hess[a][b] = hess[b][a] = d2_mixed(surface, params, a, b, h);
  }

  EmbeddedCurvature out;
  out.metric = tangents.transpose() * tangents;

  // Orthonormal normal frame: the null space of the tangent span.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(tangents, Eigen::ComputeFullU);
  const int codim = d - p;
  Eigen::MatrixXd normals = svd.matrixU().rightCols(codim);

  for (int j = 0; j < codim; ++j) {
    Eigen::MatrixXd ii(p, p);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        ii(a, b) = normals.col(j).dot(hess[a][b]);
    out.second_forms.push_back(ii);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(ii,
                                                                 out.metric);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("shape operator eigensolve failed");
    out.principal.push_back(es.eigenvalues());
  }

  // Largest normal curvature over all unit normals and metric-unit tangent
  // directions: max_w ||II(w,w)|| with w^T G w = 1. Substituting w = L^{-T} z
  // reduces it to maximizing sum_j (z^T S_j z)^2 on the Euclidean sphere,
  // which a rank-one tensor power iteration solves from deterministic starts.
  Eigen::LLT<Eigen::MatrixXd> llt(out.metric);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("degenerate first fundamental form");
  const Eigen::MatrixXd linv =
      llt.matrixL().solve(Eigen::MatrixXd::Identity(p, p));
  std::vector<Eigen::MatrixXd> s;
  for (const auto& ii : out.second_forms)
    s.push_back(linv * ii * linv.transpose());

  const auto value = [&](const Eigen::VectorXd& z) {
    double f = 0.0;
    for (const auto& m : s) {
      const double q = z.dot(m * z);
      f += q * q;
    }
    return f;
  };
  const auto polish = [&](Eigen::VectorXd z) {
    z.normalize();
    for (int it = 0; it < 200; ++it) {
      Eigen::VectorXd g = Eigen::VectorXd::Zero(p);
      for (const auto& m : s) g += z.dot(m * z) * (m * z);
      const double norm = g.norm();
      if (norm < 1e-14) break;
      g /= norm;
      if ((g - z).norm() < 1e-13 && it > 2) {
        z = g;
        break;
      }
      z = g;
    }
    return value(z);
  };

  double best = 0.0;
  for (int a = 0; a < p; ++a) {
    best = std::max(best, polish(Eigen::VectorXd::Unit(p, a)));
    for (int b = a + 1; b < p; ++b) {
      Eigen::VectorXd z = Eigen::VectorXd::Zero(p);
      z(a) = 1.0;
      z(b) = 1.0;
      best = std::max(best, polish(z));
      z(b) = -1.0;
      best = std::max(best, polish(z));
    }
  }
  for (int trial = 0; trial < 32; ++trial) {
    Eigen::VectorXd z(p);
    for (int i = 0; i < p; ++i)
      z(i) = std::sin(1.7 * (trial + 1) * (i + 1) + 0.4 * trial);
    best = std::max(best, polish(z));
  }
  out.max_abs_curvature = std::sqrt(best);
  return out;
}

}  // namespace scband
