// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_HULL_HPP
#define MULTITANGENT_CORE_HULL_HPP

#include <span>
#include <vector>

#include "types.hpp"

namespace multitangent {

/// Indices of the strict convex hull of planar points in counter-clockwise
/// order, starting at the lexicographically smallest point. Collinear
/// boundary points are dropped.
std::vector<int> ConvexHull2D(std::span<const Vec> points);

struct ExtremeSet {
  std::vector<int> indices;  // lexicographic order of the points
  int affine_dim = 0;        // dimension of the affine span
};

/// Vertices of the convex hull of points in R^d, d in {1, 2, 3}. When the
/// points span fewer than d dimensions the hull is computed inside their
/// affine span.
ExtremeSet ExtremePoints(std::span<const Vec> points);

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_HULL_HPP
