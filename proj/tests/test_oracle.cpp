// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "implicit_curve.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace multitangent;
using testutil::V;

namespace {

std::vector<Shape> TrottOvals() {
  const Polynomial2 f({{4, 0, 144}, {0, 4, 144}, {2, 2, 350}, {2, 0, -225}, {0, 2, -225},
                       {0, 0, 81}});
  return IngestImplicitCurve(f, {-1.5, -1.5, 1.5, 1.5}, {512});
}

Shape Ngon(int k, double r, double cx, double cy) {
  std::vector<Vec> pts;
  for (int i = 0; i < k; ++i) {
    const double t = 2 * std::numbers::pi * i / k;
    pts.push_back(V({cx + r * std::cos(t), cy + r * std::sin(t)}));
  }
  return Shape::Loop(pts);
}

}  // namespace

TEST_CASE("oracle on two circles matches the closed form") {
  const SweepResult r = BruteForceSupports(testutil::TwoCircles(0, 0, 1, 4, 0, 1));
  CHECK(testutil::SameClasses(r.clusters, oracle::CircleTangents({0, 0}, 1, {4, 0}, 1), 1e-6));
  CHECK(testutil::CovectorError(r.clusters, oracle::CircleTangents({0, 0}, 1, {4, 0}, 1)) <
        1e-6);
  CHECK(r.angular_grid == DefaultOracleGrid(2));
  for (const auto& c : r.clusters) CHECK(c.backend == Backend::kOracle);
}

TEST_CASE("oracle on intersecting circles finds the two outer tangents") {
  const SweepResult r = BruteForceSupports(testutil::TwoCircles(0, 0, 1, 1, 0, 1));
  CHECK(testutil::SameClasses(r.clusters, oracle::CircleTangents({0, 0}, 1, {1, 0}, 1), 1e-6));
}

TEST_CASE("oracle on a segment in RP^1") {
  Scene s;
  s.n = 1;
  s.shapes = {Shape::Polytope({V({0}), V({1})})};
  const SweepResult r = BruteForceSupports(s);
  CHECK(testutil::SameClasses(r.clusters, {V({0, 1}), V({-1, 1})}, 1e-9));
}

TEST_CASE("oracle on every pair of Trott ovals") {
  const auto ovals = TrottOvals();
  REQUIRE(ovals.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = i + 1; j < 4; ++j) {
      Scene s;
      s.n = 2;
      s.shapes = {ovals[i], ovals[j]};
      CAPTURE(i);
      CAPTURE(j);
      CHECK(BruteForceSupports(s).clusters.size() == 4);
    }
  }
}

TEST_CASE("oracle contains the pipeline output") {
  const std::vector<Scene> scenes = {
      testutil::TwoCircles(0, 0, 1, 5, 1, 0.5),
      testutil::TwoCircles(-1, 2, 0.7, 3, -1, 1.3),
  };
  for (const Scene& s : scenes) {
    const FindResult r = FindSupports(s, Backend::kDualExtremal);
    const SweepResult o = BruteForceSupports(s);
    for (const auto& c : r.certificates) {
      double best = 1e9;
      for (const auto& k : o.clusters) best = std::min(best, ProjectiveAngle(c.h.covector,
                                                                             k.h.covector));
      CHECK(best < 1e-4);
    }
  }
}

TEST_CASE("parity check") {
  CHECK(ParityCheck(Ngon(200, 1, 0, 0), 1000));
  CHECK(ParityCheck(Ngon(5, 2, 1, -1), 1000, 7));
  for (const Shape& oval : TrottOvals()) CHECK(ParityCheck(oval, 500));
}
