// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_DUAL_REGION_HPP
#define MULTITANGENT_CORE_DUAL_REGION_HPP

#include <vector>

#include "shape.hpp"

namespace multitangent {

/// Is the hyperplane in H*, i.e. does it meet every shape?
bool InHStar(const Scene& scene, const Vec& covector, double tol);
inline bool InHStar(const Scene& scene, const ProjHyperplane& h, double tol) {
  return InHStar(scene, h.covector, tol);
}

/// Affine chart U_p of the dual space: hyperplanes not through p. A chart
/// point x stands for the covector p/|p| + sum x_k f_k, which pairs with
/// p/|p| to exactly 1.
AffineChart DualChart(const ProjPoint& p);

/// Raster of H* inside U_p over an axis-aligned box of chart coordinates.
struct DualRegionSample {
  ProjPoint p;
  AffineChart chart;
  Vec lo;
  Vec hi;
  int resolution = 0;
  /// Cell centers (dual chart coordinates) of member cells, grid order.
  std::vector<Vec> members;
  /// Member lies on the outermost layer of the grid.
  std::vector<char> boundary_flags;
  /// Member has a face neighbour outside H* or on the grid boundary.
  std::vector<char> surface_flags;
  /// Edge length of the member's cell (finer for locally refined cells).
  std::vector<double> cell_sizes;
  /// Set when the raster came back empty at resolution >= 64.
  bool empty_region_warning = false;

  int n() const { return static_cast<int>(lo.size()); }
  bool empty() const { return members.empty(); }
  Vec Covector(const Vec& x) const { return chart.LiftRaw(x); }
  ProjHyperplane Hyperplane(const Vec& x) const {
    return ProjHyperplane::FromCovector(chart.LiftRaw(x));
  }
};

/// Meeting tolerance for a cell of the given diagonal centered at chart
/// point x: half the diagonal, mapped to primal signed distance.
double RasterTolerance(const Scene& scene, const AffineChart& chart,
                       const Vec& x, double cell_diagonal);

/// Rasterizes [lo, hi] at `resolution` cells per axis.
DualRegionSample SampleHStarBox(const Scene& scene, const ProjPoint& p,
                                const Vec& lo, const Vec& hi, int resolution);

/// Rasterizes the cube [-bounds, bounds]^n.
DualRegionSample SampleHStar(const Scene& scene, const ProjPoint& p,
                             int resolution, double bounds);

struct BoundednessReport {
  bool bounded = false;
  bool boundary_members = false;
  double max_norm = 0.0;
  /// min |incidence(p, H)| over member hyperplanes (normalized vectors).
  double min_p_incidence = 0.0;
};

/// True iff no member is flagged on the grid boundary and every member is
/// at least `margin` inside the box.
BoundednessReport BoundednessCheck(const DualRegionSample& sample, double margin);

struct AutoSampleOptions {
  /// 0 selects 256 for n<=2 and 96 for n=3.
  int resolution = 0;
  double initial_bounds = 2.0;
  double bounds_cap = 1024.0;
  int local_refinement = 4;
};

struct AutoSampleResult {
  DualRegionSample sample;
  BoundednessReport boundedness;
  double bounds_used = 0.0;
  bool compact = false;
};

int DefaultDualResolution(int n);

/// Doubles the box from `initial_bounds` until the raster is bounded, refits
/// the box to the member cloud, then refines the cells around hull vertices
/// of the member cloud by `local_refinement` per axis.
AutoSampleResult SampleHStarAuto(const Scene& scene, const ProjPoint& p,
                                 const AutoSampleOptions& options = {});

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_DUAL_REGION_HPP
