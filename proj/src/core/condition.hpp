// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_CONDITION_HPP
#define MULTITANGENT_CORE_CONDITION_HPP

#include <optional>
#include <vector>

#include "shape.hpp"

namespace multitangent {

struct ConditionOptions {
  /// Sampled hyperplanes through p; 0 selects 4096 (n<=2) or 16384 (n=3).
  int directions = 0;
  double clearance_floor = 1e-6;
  /// Distance below which p counts as lying on a shape.
  double point_tolerance = 1e-9;
  /// Meeting tolerance used for rejection witnesses.
  double incidence = 1e-9;
};

int DefaultDirections(int n);

struct ConditionSample {
  Vec covector;        // hyperplane through p
  int missed_shape = -1;
  double clearance = 0.0;
};

/// Evidence that no sampled hyperplane through p meets every shape.
struct ConditionCertificate {
  ProjPoint p;
  std::vector<ConditionSample> samples;
  double min_clearance = 0.0;
  /// True when every shape is analytic, so each per-sample miss is exact.
  bool exact_miss_tests = false;
};

struct ConditionOutcome {
  bool accepted = false;
  ConditionCertificate certificate;  // valid when accepted
  ProjHyperplane witness;            // valid when rejected
  /// Rejected because the witness meets all shapes (false: only marginal
  /// clearance below the floor).
  bool witness_meets_all = false;
};

/// Deterministic low-discrepancy covectors of hyperplanes through p, one
/// per class of the pencil (RP^{n-1}).
std::vector<Vec> PencilThrough(const ProjPoint& p, int count);

/// Throws kPointOnShape when p lies on a shape, kInvalidArgument when
/// fewer than 64 directions are requested.
ConditionOutcome CheckCondition(const Scene& scene, const ProjPoint& p,
                                const ConditionOptions& options = {});

struct SearchResult {
  std::optional<ConditionOutcome> accepted;
  int candidates_tested = 0;
  /// Every tested candidate was rejected; empty when something was accepted.
  std::vector<ProjPoint> rejected;
  /// Outcome for the first rejected candidate, with its witness.
  std::optional<ConditionOutcome> first_rejection;
};

/// Candidate points: seeds derived from the shape centroids, then a grid
/// over the faces of the cube [-1,1]^{n+1} mapped into the scene's frame
/// (covering every point of RP^n, including points at infinity).
std::vector<ProjPoint> ConditionCandidates(const Scene& scene, int grid);

/// First accepted candidate. An empty result is not a proof that no such
/// point exists.
SearchResult SearchConditionPoint(const Scene& scene, int grid = 8,
                                  const ConditionOptions& options = {});

/// Experimental tester for the weaker hypothesis based on the sets C_i
/// (union of (n-2)-flats meeting the hulls of all other shapes). Entry i is
/// true iff some probe point of shape i lies outside the interior of C_i.
/// Interior is taken inside the working chart, with margin 1e-3 * scene
/// diameter. Throws kUnsupportedDimension unless n is 2 or 3.
std::vector<bool> InteriorityCheck(const Scene& scene, int samples = 1000);

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_CONDITION_HPP
