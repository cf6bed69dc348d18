// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_ORACLE_HPP
#define MULTITANGENT_CORE_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "support.hpp"

namespace multitangent {

struct SweepCandidate {
  Vec covector;
  double residual = 0.0;
};

struct SweepResult {
  std::vector<SweepCandidate> candidates;
  std::vector<SupportCertificate> clusters;
  int angular_grid = 0;
  double sweep_tolerance = 0.0;
  int bisection_depth = 60;
};

/// 720 for n = 2, 256 (per angle) for n = 3.
int DefaultOracleGrid(int n);

/// Exhaustive sweep over hyperplane normals. For each normal the support
/// interval of every shape is known exactly; hyperplanes where one
/// endpoint per shape coincides are common supports. Sign changes of the
/// endpoint differences are bracketed on the grid, sharpened (bisection in
/// the planar case), refined and verified.
SweepResult BruteForceSupports(const Scene& scene, int angular_grid = 0,
                               const RefineOptions& refine = {},
                               double dedup_angle = 1e-4);

/// Every sampled random line missing the loop's vertices crosses the
/// closed polyline an even number of times. Loops must be planar.
bool ParityCheck(const Shape& loop, int trials, uint64_t seed = 1);

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_ORACLE_HPP
