#include "scband/pointcloud.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace scband {

void PointCloud::validate() const {
  if (dim < 1 || dim > 5) throw std::invalid_argument("cloud dimension");
  if (codim < 1 || codim > 2) throw std::invalid_argument("normal frame size");
  if (points.size() % dim != 0)
    throw std::invalid_argument("point buffer size");
  if (normals.size() != size() * static_cast<std::size_t>(codim * dim))
    throw std::invalid_argument("normal buffer size");
  for (std::size_t i = 0; i < size(); ++i) {
    for (int j = 0; j < codim; ++j) {
      const double* nu = normal(i, j);
      double norm2 = 0.0;
      for (int k = 0; k < dim; ++k) norm2 += nu[k] * nu[k];
      if (std::fabs(norm2 - 1.0) > 1e-10)
        throw std::invalid_argument("normals must be unit length");
    }
  }
}

void PointCloud::write_csv(std::ostream& os) const {
  for (int k = 0; k < dim; ++k) os << (k ? ",x" : "x") << k;
  for (int j = 0; j < codim; ++j)
    for (int k = 0; k < dim; ++k) os << ",n" << j << "_" << k;
  os << "\n";
  char buf[32];
  for (std::size_t i = 0; i < size(); ++i) {
    for (int k = 0; k < dim; ++k) {
      std::snprintf(buf, sizeof buf, "%.12g", point(i)[k]);
      os << (k ? "," : "") << buf;
    }
    for (int j = 0; j < codim; ++j)
      for (int k = 0; k < dim; ++k) {
        std::snprintf(buf, sizeof buf, "%.12g", normal(i, j)[k]);
        os << "," << buf;
      }
    os << "\n";
  }
}

}  // namespace scband
