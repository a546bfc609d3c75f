#include "scband/reach.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "scband/simd/kernels.hpp"

namespace scband {

namespace {

using simd::BatchRef;
using simd::ReachResult;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDuplicateDist2 = 1e-20;

// Structure-of-arrays block in cell-sorted order, so hash buckets are
// contiguous kernel batches.
struct SoaCloud {
  int dim = 0;
  int codim = 1;
  std::size_t n = 0;
  std::vector<double> coord[5];
  std::vector<double> norm0[5];
  std::vector<double> norm1[5];

  void reserve(std::size_t count) {
    for (int k = 0; k < dim; ++k) {
      coord[k].reserve(count);
      norm0[k].reserve(count);
      if (codim == 2) norm1[k].reserve(count);
    }
  }

  void push(const PointCloud& cloud, std::size_t i) {
    const double* p = cloud.point(i);
    const double* n0 = cloud.normal(i, 0);
    const double* n1 = (codim == 2) ? cloud.normal(i, 1) : nullptr;
    for (int k = 0; k < dim; ++k) {
      coord[k].push_back(p[k]);
      norm0[k].push_back(n0[k]);
      if (n1) norm1[k].push_back(n1[k]);
    }
    ++n;
  }

  BatchRef batch(std::size_t begin, std::size_t end) const {
    BatchRef b;
    b.dim = dim;
    b.count = end - begin;
    for (int k = 0; k < dim; ++k) b.coord[k] = coord[k].data() + begin;
    return b;
  }

  void focus(std::size_t i, double* p, double* n0, double* n1) const {
    for (int k = 0; k < dim; ++k) {
      p[k] = coord[k][i];
      n0[k] = norm0[k][i];
      if (codim == 2) n1[k] = norm1[k][i];
    }
  }
};

// Quotient sweep of one focus point against candidate ranges, skipping the
// focus itself when it falls inside a range. `threshold` prunes: quotients
// at or above it are not resolved (the kernels compare without dividing).
struct PairProbe {
  const SoaCloud* cloud;
  const simd::Backend* backend = &simd::active_backend();
  double threshold = kInf;
  double min_quotient = kInf;  // min of quotients found below the threshold
  double min_dist2 = kInf;

  void run(std::size_t focus, std::size_t begin, std::size_t end,
           std::size_t self) {
    double p[5], n0[5], n1[5];
    cloud->focus(focus, p, n0, n1);
    run_with(p, n0, n1, begin, end, self);
  }

  void run_with(const double* p, const double* n0, const double* n1,
                std::size_t begin, std::size_t end, std::size_t self) {
    const auto sweep = [&](std::size_t b, std::size_t e) {
      if (b >= e) return;
      const BatchRef batch = cloud->batch(b, e);
      const double cut = std::min(threshold, min_quotient);
      const ReachResult r =
          (cloud->codim == 2)
              ? backend->reach_codim2(p, n0, n1, batch, cut)
              : backend->reach_codim1(p, n0, batch, cut);
      min_quotient = std::min(min_quotient, r.min_quotient);
      min_dist2 = std::min(min_dist2, r.min_dist2);
    };
    if (self >= begin && self < end) {
      sweep(begin, self);
      sweep(self + 1, end);
    } else {
      sweep(begin, end);
    }
  }
};

struct HashedCloud {
  SoaCloud soa;
  double lo[5] = {0, 0, 0, 0, 0};
  double cell = 1.0;
  int dim = 0;
  std::vector<std::uint64_t> cell_keys;  // one per occupied cell, sorted
  std::vector<std::uint32_t> cell_start;  // parallel; cell i = [start, next)
  std::unordered_map<std::uint64_t, std::uint32_t> index;  // key -> cell id
  std::vector<std::uint32_t> original;  // sorted position -> original index

  std::uint64_t key_of_cells(const std::int64_t* c) const {
    std::uint64_t key = 0;
    for (int k = 0; k < dim; ++k)
      key = (key << 12) | static_cast<std::uint64_t>((c[k] + 2048) & 0xfff);
    return key;
  }

  std::uint64_t key_of(const double* p) const {
    std::int64_t c[5];
    cells_of(p, c);
    return key_of_cells(c);
  }

  void cells_of(const double* p, std::int64_t* c) const {
    for (int k = 0; k < dim; ++k)
      c[k] = static_cast<std::int64_t>(std::floor((p[k] - lo[k]) / cell));
  }

  std::pair<std::uint32_t, std::uint32_t> range_of(std::uint32_t cell_id)
      const {
    const std::uint32_t b = cell_start[cell_id];
    const std::uint32_t e = (cell_id + 1 < cell_start.size())
                                ? cell_start[cell_id + 1]
                                : static_cast<std::uint32_t>(soa.n);
    return {b, e};
  }

  // Visits the point ranges of all cells within `reach` cells of p.
  template <typename Fn>
  void for_ranges_near(const double* p, int reach, Fn&& fn) const {
    std::int64_t base[5];
    cells_of(p, base);
    const std::int64_t span = 2 * reach + 1;
    std::int64_t total = 1;
    for (int k = 0; k < dim; ++k) total *= span;
    std::int64_t c[5];
    for (std::int64_t idx = 0; idx < total; ++idx) {
      std::int64_t rem = idx;
      for (int k = 0; k < dim; ++k) {
        c[k] = base[k] + rem % span - reach;
        rem /= span;
      }
      const auto it = index.find(key_of_cells(c));
      if (it == index.end()) continue;
      const auto [b, e] = range_of(it->second);
      fn(b, e);
    }
  }
};

HashedCloud build_hashed(const PointCloud& cloud,
                         const std::vector<std::uint32_t>& subset,
                         double cell) {
  HashedCloud out;
  out.dim = cloud.dim;
  out.cell = cell;
  for (int k = 0; k < cloud.dim; ++k) out.lo[k] = kInf;
  for (std::uint32_t i : subset)
    for (int k = 0; k < cloud.dim; ++k)
      out.lo[k] = std::min(out.lo[k], cloud.point(i)[k]);

  std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed;
  keyed.reserve(subset.size());
  for (std::uint32_t i : subset)
    keyed.emplace_back(out.key_of(cloud.point(i)), i);
  std::sort(keyed.begin(), keyed.end());

  out.soa.dim = cloud.dim;
  out.soa.codim = cloud.codim;
  out.soa.reserve(keyed.size());
  out.original.reserve(keyed.size());
  for (const auto& [key, idx] : keyed) {
    out.soa.push(cloud, idx);
    out.original.push_back(idx);
  }
  for (std::size_t s = 0; s < keyed.size();) {
    std::size_t e = s;
    while (e < keyed.size() && keyed[e].first == keyed[s].first) ++e;
    out.index.emplace(keyed[s].first,
                      static_cast<std::uint32_t>(out.cell_keys.size()));
    out.cell_keys.push_back(keyed[s].first);
    out.cell_start.push_back(static_cast<std::uint32_t>(s));
    s = e;
  }
  return out;
}

double bounding_diagonal(const PointCloud& cloud) {
  double lo[5], hi[5];
  for (int k = 0; k < cloud.dim; ++k) {
    lo[k] = kInf;
    hi[k] = -kInf;
  }
  for (std::size_t i = 0; i < cloud.size(); ++i)
    for (int k = 0; k < cloud.dim; ++k) {
      lo[k] = std::min(lo[k], cloud.point(i)[k]);
      hi[k] = std::max(hi[k], cloud.point(i)[k]);
    }
  double d2 = 0.0;
  for (int k = 0; k < cloud.dim; ++k) d2 += (hi[k] - lo[k]) * (hi[k] - lo[k]);
  return std::sqrt(d2);
}

// All ordered pairs within one SoA block. Per-focus minima stay exact up to
// `margin` times the running global minimum, so near-minimal tie regions
// survive for later refinement.
struct ExhaustiveScan {
  double margin = 1.5;
  double min_quotient = kInf;
  double min_dist2 = kInf;
  std::vector<double> per_focus_quotient;
  std::vector<double> per_focus_dist2;

  void run(const SoaCloud& soa) {
    per_focus_quotient.assign(soa.n, kInf);
    per_focus_dist2.assign(soa.n, kInf);
    for (std::size_t i = 0; i < soa.n; ++i) {
      PairProbe probe{&soa};
      probe.threshold = min_quotient * margin;  // inf on the first focus
      probe.run(i, 0, soa.n, i);
      per_focus_quotient[i] = probe.min_quotient;
      per_focus_dist2[i] = probe.min_dist2;
      min_quotient = std::min(min_quotient, probe.min_quotient);
      min_dist2 = std::min(min_dist2, probe.min_dist2);
    }
  }
};

// Scalar re-scan of one focus to recover the argmin candidate.
std::size_t argmin_candidate(const SoaCloud& soa, std::size_t focus) {
  double p[5], n0[5], n1[5];
  soa.focus(focus, p, n0, n1);
  double best = kInf;
  std::size_t arg = focus;
  for (std::size_t j = 0; j < soa.n; ++j) {
    if (j == focus) continue;
    double dist2 = 0.0, d0 = 0.0, d1 = 0.0;
    for (int k = 0; k < soa.dim; ++k) {
      const double d = soa.coord[k][j] - p[k];
      dist2 += d * d;
      d0 += n0[k] * d;
      if (soa.codim == 2) d1 += n1[k] * d;
    }
    if (dist2 < simd::kCoincidentDist2) continue;
    const double denom = (soa.codim == 2)
                             ? 2.0 * std::sqrt(d0 * d0 + d1 * d1)
                             : 2.0 * std::fabs(d0);
    const double q = dist2 / denom;
    if (q < best) {
      best = q;
      arg = j;
    }
  }
  return arg;
}

}  // namespace

double brute_force_focal_radius(const PointCloud& cloud,
                                const FocalRadiusOptions& options) {
  cloud.validate();
  const std::size_t n = cloud.size();
  if (n < 8) throw std::invalid_argument("cloud too small");

  std::vector<std::uint32_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  const double diag = bounding_diagonal(cloud);
  if (diag <= 0.0)
    throw std::invalid_argument("degenerate cloud (duplicate points)");

  if (n <= options.max_exhaustive) {
    HashedCloud hashed = build_hashed(cloud, all, diag);  // single cell
    ExhaustiveScan scan;
    scan.run(hashed.soa);
    if (scan.min_dist2 < kDuplicateDist2)
      throw std::invalid_argument("degenerate cloud (duplicate points)");
    return scan.min_quotient;
  }

  // Coarse global pass on an odd-stride subsample (odd strides cover all
  // residues of the power-of-two angle grids).
  std::size_t stride = std::max<std::size_t>(1, n / options.coarse_target);
  if (stride % 2 == 0) ++stride;
  std::vector<std::uint32_t> coarse;
  coarse.reserve(n / stride + 1);
  for (std::size_t i = 0; i < n; i += stride)
    coarse.push_back(static_cast<std::uint32_t>(i));
  HashedCloud coarse_cloud = build_hashed(cloud, coarse, diag);
  ExhaustiveScan coarse_scan;
  coarse_scan.run(coarse_cloud.soa);
  double r_hat = coarse_scan.min_quotient;

  // Coarse inter-sample spacing sizes the refinement regions below.
  std::vector<double> d2s = coarse_scan.per_focus_dist2;
  std::nth_element(d2s.begin(), d2s.begin() + d2s.size() / 2, d2s.end());
  const double coarse_spacing = std::sqrt(d2s[d2s.size() / 2]);

  // Full-resolution near field: cells sized for single-digit occupancy,
  // swept cell against neighbor cell so each hash lookup is amortized over
  // a whole bucket. The subsample spacing seeds the cell size; one rebuild
  // corrects it when the exact occupancy lands outside [2, 32].
  const double cell_floor = diag * 2e-3;  // 12-bit cell keys cap the grid
  double cell = std::clamp(0.5 * coarse_spacing, cell_floor, diag / 8.0);
  HashedCloud full = build_hashed(cloud, all, cell);
  {
    const double occupancy =
        static_cast<double>(n) / static_cast<double>(full.cell_keys.size());
    double corrected = cell;
    if (occupancy > 32.0)
      corrected = std::max(0.5 * cell, cell_floor);
    else if (occupancy < 2.0)
      corrected = std::min(2.0 * cell, diag / 8.0);
    if (corrected != cell) {
      cell = corrected;
      full = build_hashed(cloud, all, cell);
    }
  }
  double min_dist2 = coarse_scan.min_dist2;
  {
    const std::size_t cells = full.cell_keys.size();
    for (std::size_t ci = 0; ci < cells; ++ci) {
      const auto [fb, fe] = full.range_of(static_cast<std::uint32_t>(ci));
      double anchor[5];
      double dummy0[5], dummy1[5];
      full.soa.focus(fb, anchor, dummy0, dummy1);
      // Candidate ranges shared by every focus in this cell.
      std::vector<std::pair<std::uint32_t, std::uint32_t>> ranges;
      full.for_ranges_near(anchor, 1,
                           [&](std::uint32_t b, std::uint32_t e) {
                             ranges.emplace_back(b, e);
                           });
      for (std::uint32_t i = fb; i < fe; ++i) {
        PairProbe probe{&full.soa};
        probe.threshold = r_hat;
        for (const auto& [b, e] : ranges) probe.run(i, b, e, i);
        r_hat = std::min(r_hat, probe.min_quotient);
        min_dist2 = std::min(min_dist2, probe.min_dist2);
      }
    }
  }
  if (min_dist2 < kDuplicateDist2)
    throw std::invalid_argument("degenerate cloud (duplicate points)");

  // Refine the best coarse candidates at full resolution: the true
  // minimizing pair lies within a coarse spacing of a coarse minimizer.
  std::vector<std::uint32_t> order(coarse_cloud.soa.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return coarse_scan.per_focus_quotient[a] <
           coarse_scan.per_focus_quotient[b];
  });

  struct Region {
    double a[5];
    double b[5];
  };
  std::vector<Region> regions;
  const double region_radius = 1.5 * coarse_spacing;
  const std::size_t max_candidates = 16;
  for (std::size_t rank = 0;
       rank < std::min(max_candidates, order.size()) &&
       regions.size() < options.max_regions;
       ++rank) {
    const std::uint32_t i = order[rank];
    if (coarse_scan.per_focus_quotient[i] > r_hat * options.refine_threshold)
      break;
    const std::size_t j = argmin_candidate(coarse_cloud.soa, i);
    Region reg;
    double dummy0[5], dummy1[5];
    coarse_cloud.soa.focus(i, reg.a, dummy0, dummy1);
    coarse_cloud.soa.focus(j, reg.b, dummy0, dummy1);
    bool dup = false;
    for (const Region& seen : regions) {
      double da = 0.0, db = 0.0;
      for (int k = 0; k < cloud.dim; ++k) {
        da += (seen.a[k] - reg.a[k]) * (seen.a[k] - reg.a[k]);
        db += (seen.b[k] - reg.b[k]) * (seen.b[k] - reg.b[k]);
      }
      if (da < region_radius * region_radius &&
          db < region_radius * region_radius) {
        dup = true;
        break;
      }
    }
    if (!dup) regions.push_back(reg);
  }

  const int reach = std::max(1, static_cast<int>(std::ceil(
                                    region_radius / full.cell)));
  for (const Region& reg : regions) {
    const auto gather = [&](const double* center) {
      SoaCloud block;
      block.dim = cloud.dim;
      block.codim = cloud.codim;
      full.for_ranges_near(center, reach,
                           [&](std::uint32_t b, std::uint32_t e) {
                             for (std::uint32_t s = b; s < e; ++s)
                               block.push(cloud, full.original[s]);
                           });
      return block;
    };
    const SoaCloud block_a = gather(reg.a);
    const SoaCloud block_b = gather(reg.b);
    const auto sweep = [&](const SoaCloud& foci, const SoaCloud& cands) {
      for (std::size_t i = 0; i < foci.n; ++i) {
        double fp[5], fn0[5], fn1[5];
        foci.focus(i, fp, fn0, fn1);
        PairProbe probe{&cands};
        probe.threshold = r_hat;
        probe.run_with(fp, fn0, fn1, 0, cands.n, cands.n);
        r_hat = std::min(r_hat, probe.min_quotient);
      }
    };
    sweep(block_a, block_b);
    sweep(block_b, block_a);
  }
  return r_hat;
}

}  // namespace scband
