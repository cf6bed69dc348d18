// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "dual_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "hull.hpp"
#include "parallel.hpp"

namespace multitangent {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double SceneRadius(const Scene& scene) {
  double r = 0.0;
  for (const Shape& s : scene.shapes) {
    Vec lo, hi;
    s.BoundingBox(&lo, &hi);
    r = std::max({r, lo.norm(), hi.norm(), lo.cwiseAbs().cwiseMax(hi.cwiseAbs()).norm()});
  }
  return r;
}

long IntPow(int base, int exp) {
  long out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

}  // namespace

bool InHStar(const Scene& scene, const Vec& covector, double tol) {
  for (const Shape& s : scene.shapes) {
    if (!Meets(s, covector, tol)) return false;
  }
  return true;
}

AffineChart DualChart(const ProjPoint& p) { return AffineChart(p.coords); }

double RasterTolerance(const Scene& scene, const AffineChart& chart,
                       const Vec& x, double cell_diagonal) {
  const Vec lambda = chart.LiftRaw(x);
  const double grad = lambda.tail(scene.n).norm();
  const double radius = SceneRadius(scene);
  if (!(grad > 0.0)) return kInf;
  return 0.5 * cell_diagonal * std::sqrt(1.0 + radius * radius) / grad;
}

DualRegionSample SampleHStarBox(const Scene& scene, const ProjPoint& p,
                                const Vec& lo, const Vec& hi, int resolution) {
  scene.Validate();
  if (resolution < 2) {
    throw Error(ErrorCode::kInvalidArgument, "resolution must be at least 2");
  }
  const int n = scene.n;
  DualRegionSample out;
  out.p = p;
  out.chart = DualChart(p);
  out.lo = lo;
  out.hi = hi;
  out.resolution = resolution;
  const Vec h = (hi - lo) / resolution;
  const double diag = h.norm();
  const double radius = SceneRadius(scene);
  const double lift_scale = std::sqrt(1.0 + radius * radius);
  const long total = IntPow(resolution, n);

  std::vector<char> inside(static_cast<size_t>(total), 0);
  auto center_of = [&](long idx) {
    Vec x(n);
    long rest = idx;
    for (int k = 0; k < n; ++k) {
      x[k] = lo[k] + (static_cast<double>(rest % resolution) + 0.5) * h[k];
      rest /= resolution;
    }
    return x;
  };
  ParallelChunks(total, [&](long begin, long end, int) {
    for (long idx = begin; idx < end; ++idx) {
      const Vec lambda = out.chart.LiftRaw(center_of(idx));
      const double grad = lambda.tail(n).norm();
      const double tol = grad > 0.0 ? 0.5 * diag * lift_scale / grad : kInf;
      inside[static_cast<size_t>(idx)] = InHStar(scene, lambda, tol) ? 1 : 0;
    }
  });

  for (long idx = 0; idx < total; ++idx) {
    if (!inside[static_cast<size_t>(idx)]) continue;
    bool boundary = false;
    bool surface = false;
    long rest = idx;
    long stride = 1;
    for (int k = 0; k < n; ++k) {
      const long i = rest % resolution;
      rest /= resolution;
      if (i == 0 || i == resolution - 1) {
        boundary = true;
        surface = true;
      } else if (!inside[static_cast<size_t>(idx - stride)] ||
                 !inside[static_cast<size_t>(idx + stride)]) {
        surface = true;
      }
      stride *= resolution;
    }
    out.members.push_back(center_of(idx));
    out.boundary_flags.push_back(boundary ? 1 : 0);
    out.surface_flags.push_back(surface ? 1 : 0);
    out.cell_sizes.push_back(h.maxCoeff());
  }
  out.empty_region_warning = out.members.empty() && resolution >= 64;
  return out;
}

DualRegionSample SampleHStar(const Scene& scene, const ProjPoint& p,
                             int resolution, double bounds) {
  if (!(bounds > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "bounds must be positive");
  }
  const Vec lo = Vec::Constant(scene.n, -bounds);
  const Vec hi = Vec::Constant(scene.n, bounds);
  return SampleHStarBox(scene, p, lo, hi, resolution);
}

BoundednessReport BoundednessCheck(const DualRegionSample& sample, double margin) {
  BoundednessReport rep;
  rep.min_p_incidence = kInf;
  rep.bounded = true;
  const Vec p_unit = NormalizeKeepSign(sample.p.coords);
  for (size_t i = 0; i < sample.members.size(); ++i) {
    const Vec& x = sample.members[i];
    rep.max_norm = std::max(rep.max_norm, x.norm());
    if (sample.boundary_flags[i]) rep.boundary_members = true;
    for (int k = 0; k < sample.n(); ++k) {
      if (x[k] < sample.lo[k] + margin || x[k] > sample.hi[k] - margin) {
        rep.bounded = false;
      }
    }
    const Vec lambda = NormalizeKeepSign(sample.Covector(x));
    rep.min_p_incidence = std::min(rep.min_p_incidence, std::abs(lambda.dot(p_unit)));
  }
  if (rep.boundary_members) rep.bounded = false;
  return rep;
}

int DefaultDualResolution(int n) { return n >= 3 ? 96 : 256; }

AutoSampleResult SampleHStarAuto(const Scene& scene, const ProjPoint& p,
                                 const AutoSampleOptions& options) {
  const int n = scene.n;
  const int res = options.resolution > 0 ? options.resolution : DefaultDualResolution(n);
  AutoSampleResult out;

  double bounds = options.initial_bounds;
  for (;;) {
    out.sample = SampleHStar(scene, p, res, bounds);
    const double cell = 2.0 * bounds / res;
    out.boundedness = BoundednessCheck(out.sample, cell);
    out.bounds_used = bounds;
    if (!out.sample.empty() && out.boundedness.bounded) break;
    if (bounds * 2.0 > options.bounds_cap) {
      out.compact = false;
      return out;
    }
    bounds *= 2.0;
  }

  // Refit the box around the member cloud.
  for (int attempt = 0; attempt < 6; ++attempt) {
    Vec lo = out.sample.members.front();
    Vec hi = lo;
    for (const Vec& x : out.sample.members) {
      lo = lo.cwiseMin(x);
      hi = hi.cwiseMax(x);
    }
    const double cell = out.sample.cell_sizes.front();
    const Vec pad = ((hi - lo) * 0.05).array() + 2.0 * cell;
    lo -= pad * (1 << attempt);
    hi += pad * (1 << attempt);
    DualRegionSample refit = SampleHStarBox(scene, p, lo, hi, res);
    const double margin = refit.cell_sizes.empty() ? 0.0 : 0.5 * refit.cell_sizes.front();
    const BoundednessReport rep = BoundednessCheck(refit, margin);
    if (!refit.empty() && rep.bounded) {
      out.sample = std::move(refit);
      out.boundedness = rep;
      break;
    }
  }
  out.compact = true;

  if (options.local_refinement <= 1 || out.sample.empty()) return out;

  // Local refinement around hull vertices of the member cloud.
  DualRegionSample& s = out.sample;
  const Vec h = (s.hi - s.lo) / s.resolution;
  std::vector<Vec> surface;
  for (size_t i = 0; i < s.members.size(); ++i) {
    if (s.surface_flags[i]) surface.push_back(s.members[i]);
  }
  const ExtremeSet ext = ExtremePoints(surface);
  auto cell_of = [&](const Vec& x) {
    std::vector<long> idx(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      idx[static_cast<size_t>(k)] = static_cast<long>(std::floor((x[k] - s.lo[k]) / h[k]));
    }
    return idx;
  };
  std::set<std::vector<long>> refine;
  const int neighborhood = IntPow(3, n);
  for (int e : ext.indices) {
    const std::vector<long> base = cell_of(surface[static_cast<size_t>(e)]);
    for (int off = 0; off < neighborhood; ++off) {
      std::vector<long> c = base;
      int rest = off;
      bool ok = true;
      for (int k = 0; k < n; ++k) {
        c[static_cast<size_t>(k)] += rest % 3 - 1;
        rest /= 3;
        if (c[static_cast<size_t>(k)] < 0 || c[static_cast<size_t>(k)] >= s.resolution) ok = false;
      }
      if (ok) refine.insert(c);
    }
  }

  const int sub = options.local_refinement;
  const Vec fine = h / sub;
  const double fine_diag = fine.norm();
  DualRegionSample refined = s;
  refined.members.clear();
  refined.boundary_flags.clear();
  refined.surface_flags.clear();
  refined.cell_sizes.clear();
  for (size_t i = 0; i < s.members.size(); ++i) {
    if (refine.count(cell_of(s.members[i]))) continue;
    refined.members.push_back(s.members[i]);
    refined.boundary_flags.push_back(s.boundary_flags[i]);
    refined.surface_flags.push_back(s.surface_flags[i]);
    refined.cell_sizes.push_back(s.cell_sizes[i]);
  }
  const long sub_total = IntPow(sub, n);
  for (const auto& c : refine) {
    for (long j = 0; j < sub_total; ++j) {
      Vec x(n);
      long rest = j;
      for (int k = 0; k < n; ++k) {
        x[k] = s.lo[k] + static_cast<double>(c[static_cast<size_t>(k)]) * h[k] +
               (static_cast<double>(rest % sub) + 0.5) * fine[k];
        rest /= sub;
      }
      const double tol = RasterTolerance(scene, s.chart, x, fine_diag);
      if (!InHStar(scene, s.Covector(x), tol)) continue;
      refined.members.push_back(x);
      refined.boundary_flags.push_back(0);
      refined.surface_flags.push_back(1);
      refined.cell_sizes.push_back(fine.maxCoeff());
    }
  }
  out.sample = std::move(refined);
  return out;
}

}  // namespace multitangent
