#pragma once

#include <iosfwd>
#include <vector>

namespace scband {

// Sampled submanifold of R^dim with a unit normal frame per point: one
// vector for hypersurfaces, two for codimension-2 products.
struct PointCloud {
  int dim = 0;
  int codim = 1;
  std::vector<double> points;   // row-major, size() * dim
  std::vector<double> normals;  // row-major, size() * codim * dim

  std::size_t size() const {
    return dim == 0 ? 0 : points.size() / static_cast<std::size_t>(dim);
  }
  const double* point(std::size_t i) const { return points.data() + i * dim; }
  const double* normal(std::size_t i, int j = 0) const {
    return normals.data() + (i * codim + j) * dim;
  }

  // Checks sizes and unit normals (to 1e-10); throws std::invalid_argument.
  void validate() const;

  // One row per point: coordinates, then the normal frame components.
  void write_csv(std::ostream& os) const;
};

}  // namespace scband
