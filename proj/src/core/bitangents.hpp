// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_BITANGENTS_HPP
#define MULTITANGENT_CORE_BITANGENTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "implicit_curve.hpp"
#include "support.hpp"

namespace multitangent {

struct BitangentLine {
  ProjHyperplane h;
  bool self = false;
  int a = 0;  // oval indices; a == b for self bitangents
  int b = 0;
  std::vector<Vec> contacts;
};

struct PairTally {
  int a = 0;
  int b = 0;
  int count = 0;
  bool nested = false;
  bool degenerate = false;
};

struct BitangentTally {
  int components = 0;
  int cross_pairs = 0;
  int self = 0;
  int total = 0;
  std::vector<PairTally> pairs;
  std::vector<BitangentLine> lines;
};

/// Lines bridging a concavity of a planar loop: hull edges whose endpoints
/// are not neighbours along the loop and whose pocket is deeper than
/// depth_fraction of the loop's diameter.
std::vector<BitangentLine> SelfBitangents(const Shape& loop, int index,
                                          double depth_fraction = 1e-3);

/// Common tangents of every requested oval pair (all pairs when `pairs` is
/// empty) plus the self bitangents of every oval.
BitangentTally CurveBitangents(const std::vector<Shape>& ovals,
                               const std::vector<std::pair<int, int>>& pairs = {},
                               const SupportOptions& options = {});

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_BITANGENTS_HPP
