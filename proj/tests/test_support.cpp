// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "implicit_curve.hpp"
#include "oracle.hpp"
#include "support.hpp"
#include "test_util.hpp"

using namespace multitangent;
using testutil::V;

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::vector<oracle::V> TwoCircleExpected() {
  return oracle::CircleTangents({0, 0}, 1, {4, 0}, 1);
}

DualRegionSample ManualSample(std::vector<Vec> members) {
  DualRegionSample s;
  const int n = static_cast<int>(members.front().size());
  s.lo = Vec::Constant(n, -10);
  s.hi = Vec::Constant(n, 10);
  s.members = std::move(members);
  return s;
}

}  // namespace

TEST_CASE("closed-form two-circle oracle sanity") {
  const auto e = TwoCircleExpected();
  REQUIRE(e.size() == 4);
  const std::vector<oracle::V> known = {V({-1, 0, 1}), V({1, 0, 1}), V({-2, 1, -kSqrt3}),
                                        V({-2, 1, kSqrt3})};
  for (const auto& k : known) {
    int hits = 0;
    for (const auto& x : e) hits += oracle::ClassAngle(x, k) < 1e-12;
    CHECK(hits == 1);
  }
}

TEST_CASE("extreme points") {
  SUBCASE("square corners and center") {
    const auto ext = ExtremePointsOf(ManualSample(
        {V({0, 0}), V({1, 0}), V({1, 1}), V({0, 1}), V({0.5, 0.5})}));
    CHECK(ext.points.size() == 4);
    CHECK_FALSE(ext.low_dimensional);
    for (const Vec& p : ext.points) CHECK((p - V({0.5, 0.5})).norm() > 0.1);
    // Lexicographic order.
    for (size_t k = 1; k < ext.points.size(); ++k) {
      CHECK(std::lexicographical_compare(ext.points[k - 1].begin(), ext.points[k - 1].end(),
                                         ext.points[k].begin(), ext.points[k].end()));
    }
  }
  SUBCASE("collinear members") {
    const auto ext = ExtremePointsOf(ManualSample({V({0, 0}), V({1, 1}), V({2, 2}), V({3, 3})}));
    CHECK(ext.low_dimensional);
    REQUIRE(ext.points.size() == 2);
    CHECK(ext.points[0] == V({0, 0}));
    CHECK(ext.points[1] == V({3, 3}));
  }
  SUBCASE("agrees with a brute-force hull on random clouds") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g;
    for (int t = 0; t < 30; ++t) {
      std::vector<Vec> pts;
      std::vector<Eigen::Vector2d> raw;
      for (int k = 0; k < 25; ++k) {
        raw.emplace_back(g(rng), g(rng));
        pts.push_back(V({raw.back().x(), raw.back().y()}));
      }
      CHECK(ExtremePointsOf(ManualSample(pts)).points.size() ==
            oracle::HullVerticesBrute(raw).size());
    }
  }
}

TEST_CASE("refine support") {
  const Scene s = testutil::TwoCircles(0, 0, 1, 4, 0, 1);
  SUBCASE("outer tangent y = 1") {
    const SupportCertificate c = RefineSupport(s, {Normalize(V({-1.05, 0.02, 1}))});
    CHECK(ProjectiveAngle(c.h.covector, V({-1, 0, 1})) < 1e-8);
    REQUIRE(c.contacts.size() == 2);
    CHECK((c.contacts[0] - V({0, 1})).norm() < 1e-6);
    CHECK((c.contacts[1] - V({4, 1})).norm() < 1e-6);
    CHECK(c.residual <= 1e-8);
  }
  SUBCASE("inner tangent x - sqrt(3) y - 2 = 0") {
    const SupportCertificate c = RefineSupport(s, {Normalize(V({-2.1, 1, -1.7}))});
    CHECK(ProjectiveAngle(c.h.covector, V({-2, 1, -kSqrt3})) < 1e-8);
    const Vec l = c.h.covector / c.h.covector.tail(2).norm();
    CHECK(std::abs(l[0]) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(l[0] + 4 * l[1]) == doctest::Approx(1.0).epsilon(1e-8));
    for (size_t i = 0; i < 2; ++i) {
      const Vec& x = c.contacts[i];
      CHECK(std::abs(l[0] + l[1] * x[0] + l[2] * x[1]) < 1e-7);
      CHECK((x - s.shapes[i].center()).norm() == doctest::Approx(1.0));
    }
  }
  SUBCASE("three balls, plane z = 1") {
    const Scene b = testutil::ThreeBalls({V({0, 0, 0}), V({4, 0, 0}), V({2, 3, 0})});
    const SupportCertificate c = RefineSupport(b, {Normalize(V({-1.1, 0.01, -0.02, 1}))});
    CHECK(ProjectiveAngle(c.h.covector, V({-1, 0, 0, 1})) < 1e-8);
    for (size_t i = 0; i < 3; ++i) {
      CHECK((c.contacts[i] - (b.shapes[i].center() + V({0, 0, 1}))).norm() < 1e-6);
    }
  }
  SUBCASE("a start far from any tangent diverges") {
    try {
      RefineOptions o;
      o.max_iter = 3;
      o.newton_steps = 0;
      RefineSupport(s, {Normalize(V({-30, 0.3, 1}))}, o);
      FAIL("expected RefinementDiverged");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kRefinementDiverged);
    }
  }
}

TEST_CASE("verify support") {
  const Scene s = testutil::TwoCircles(0, 0, 1, 4, 0, 1);
  const SupportCertificate c = VerifySupport(s, {Normalize(V({-1, 0, 1}))}, 1e-7);
  CHECK(c.SideVector() == "++");
  try {
    VerifySupport(s, {V({0, 0, 1})}, 1e-7);
    FAIL("expected NotSupporting");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotSupporting);
  }
  try {
    VerifySupport(s, {Normalize(V({-1.1, 0, 1}))}, 1e-7);
    FAIL("expected NoContact");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoContact);
  }
}

TEST_CASE("calipers tangents") {
  SUBCASE("disjoint circles: four lines") {
    const Scene s = testutil::TwoCircles(0, 0, 1, 4, 0, 1);
    const CalipersResult r = CalipersTangents(s.shapes[0], s.shapes[1]);
    CHECK_FALSE(r.nested);
    CHECK_FALSE(r.degenerate);
    CHECK(testutil::SameClasses(r.certificates, TwoCircleExpected(), 1e-6));
    CHECK(testutil::CovectorError(r.certificates, TwoCircleExpected()) < 1e-6);
  }
  SUBCASE("overlapping circles: the two outer tangents") {
    const Scene s = testutil::TwoCircles(0, 0, 1, 1, 0, 1);
    const CalipersResult r = CalipersTangents(s.shapes[0], s.shapes[1]);
    CHECK(testutil::SameClasses(r.certificates, oracle::CircleTangents({0, 0}, 1, {1, 0}, 1),
                                1e-6));
    CHECK(r.certificates.size() == 2);
  }
  SUBCASE("concentric circles are nested") {
    const Scene s = testutil::TwoCircles(0, 0, 1, 0, 0, 3);
    const CalipersResult r = CalipersTangents(s.shapes[0], s.shapes[1]);
    CHECK(r.nested);
    CHECK(r.certificates.empty());
  }
  SUBCASE("unequal circles match the closed form") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-3, 3), rr(0.3, 1.5);
    for (int t = 0; t < 20; ++t) {
      const Eigen::Vector2d c1(u(rng), u(rng)), c2(u(rng) + 8, u(rng));
      const double r1 = rr(rng), r2 = rr(rng);
      const Scene s = testutil::TwoCircles(c1.x(), c1.y(), r1, c2.x(), c2.y(), r2);
      const CalipersResult r = CalipersTangents(s.shapes[0], s.shapes[1]);
      CHECK(testutil::SameClasses(r.certificates, oracle::CircleTangents(c1, r1, c2, r2), 1e-6));
    }
  }
}

TEST_CASE("find supports") {
  SUBCASE("two disjoint circles, every backend") {
    const Scene s = testutil::TwoCircles(0, 0, 1, 4, 0, 1);
    for (Backend b : {Backend::kAuto, Backend::kDualExtremal, Backend::kCalipers,
                      Backend::kOracle}) {
      const FindResult r = FindSupports(s, b);
      CHECK(testutil::SameClasses(r.certificates, TwoCircleExpected(), 1e-6));
    }
    const FindResult dual = FindSupports(s, Backend::kDualExtremal);
    CHECK(dual.failed_refinements == 0);
    CHECK(dual.condition_point.has_value());
    CHECK(dual.boundedness->bounded);
  }
  SUBCASE("dual backend without a condition point") {
    try {
      FindSupports(testutil::TwoCircles(0, 0, 1, 1, 0, 1), Backend::kDualExtremal);
      FAIL("expected ConditionNotEstablished");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kConditionNotEstablished);
    }
  }
  SUBCASE("Trott ovals 1 and 2 agree with the oracle sweep") {
    const Polynomial2 f({{4, 0, 144}, {0, 4, 144}, {2, 2, 350}, {2, 0, -225}, {0, 2, -225},
                         {0, 0, 81}});
    const auto ovals = IngestImplicitCurve(f, {-1.5, -1.5, 1.5, 1.5}, {512});
    Scene s;
    s.n = 2;
    s.shapes = {ovals[0], ovals[1]};
    const FindResult r = FindSupports(s, Backend::kAuto);
    const SweepResult o = BruteForceSupports(s);
    REQUIRE(r.certificates.size() == 4);
    REQUIRE(o.clusters.size() == 4);
    std::vector<oracle::V> expected;
    for (const auto& c : o.clusters) expected.push_back(c.h.covector);
    CHECK(testutil::SameClasses(r.certificates, expected, 1e-4));
  }
  SUBCASE("three balls: eight planes, closed form and oracle") {
    const Scene s = testutil::ThreeBalls({V({0, 0, 0}), V({4, 0, 0}), V({2, 3, 0})});
    const auto closed =
        oracle::BallTangentPlanes({Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(4, 0, 0),
                                   Eigen::Vector3d(2, 3, 0)},
                                  {1, 1, 1});
    REQUIRE(closed.size() == 8);
    const FindResult r = FindSupports(s, Backend::kAuto);
    CHECK(r.backend == Backend::kDualExtremal);
    CHECK(testutil::SameClasses(r.certificates, closed, 1e-6));
    CHECK(testutil::SameClasses(BruteForceSupports(s).clusters, closed, 1e-6));
  }
}

TEST_CASE("count supports") {
  SUBCASE("two disjoint circles") {
    const CountResult c = CountSupports(testutil::TwoCircles(0, 0, 1, 4, 0, 1));
    CHECK(c.count == 4);
    CHECK(c.side_histogram.size() == 4);
    CHECK_FALSE(c.continuum_family);
  }
  SUBCASE("three generic balls hit every sign pattern once") {
    const CountResult c =
        CountSupports(testutil::ThreeBalls({V({0, 0, 0}), V({4, 0, 0}), V({2, 3, 0})}));
    CHECK(c.count == 8);
    CHECK(c.side_histogram.size() == 8);
    for (const auto& [key, n] : c.side_histogram) CHECK(n == 1);
  }
}

TEST_CASE("backend agreement and lower bound on random disjoint circle pairs") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1, 1), rr(0.4, 1.2);
  for (int t = 0; t < 6; ++t) {
    const Scene s = testutil::TwoCircles(u(rng), u(rng), rr(rng), 5 + u(rng), u(rng), rr(rng));
    const FindResult dual = FindSupports(s, Backend::kDualExtremal);
    const FindResult cal = FindSupports(s, Backend::kCalipers);
    std::vector<oracle::V> expected;
    for (const auto& c : cal.certificates) expected.push_back(c.h.covector);
    CHECK(testutil::SameClasses(dual.certificates, expected, 1e-4));
    CHECK(dual.certificates.size() >= 3);
  }
}

TEST_CASE("families") {
  std::vector<SupportCertificate> certs;
  for (int k = 0; k < 40; ++k) {
    SupportCertificate c;
    const double t = 0.02 * k;
    c.h = ProjHyperplane{Normalize(V({-1, 0, std::cos(t), std::sin(t)}))};
    certs.push_back(c);
  }
  const auto fam = FindFamilies(certs, 1e-2);
  REQUIRE(fam.size() == 1);
  CHECK(fam[0].covectors.size() == 40);
  CHECK(fam[0].diameter > 0.5);
  certs.resize(1);
  CHECK(FindFamilies(certs, 1e-2).empty());
}
