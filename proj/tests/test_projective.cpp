// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "projective.hpp"
#include "test_util.hpp"

using namespace multitangent;
using testutil::V;

namespace {

bool Near(const Vec& a, const Vec& b, double tol = 1e-12) {
  return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(Near(Normalize(V({0, 0, 2})), V({0, 0, 1})));
  CHECK(Near(Normalize(V({-3, 0, 0})), V({1, 0, 0})));
  CHECK(Near(Normalize(V({1, 1, 0})), V({1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0})));
  CHECK_THROWS_AS(Normalize(V({0, 0, 0})), Error);
  try {
    Normalize(V({0, 0}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kZeroVector);
  }
}

TEST_CASE("normalize is idempotent and keeps the class") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int t = 0; t < 1000; ++t) {
    Vec v(4);
    for (int k = 0; k < 4; ++k) v[k] = g(rng);
    const Vec a = Normalize(v);
    CHECK(Normalize(a) == a);
    CHECK(ProjectiveAngle(a, v) < 1e-7);
  }
}

TEST_CASE("incidence") {
  const ProjHyperplane z{V({0, 0, 1})};
  CHECK(Incidence(ProjPoint::FromHomogeneous(V({1, 0, 0})), z) == 0.0);
  CHECK(Incidence(ProjPoint::FromHomogeneous(V({1, 1, 1})), z) ==
        doctest::Approx(1 / std::sqrt(3.0)));
  // Self pairing of a normalized vector is its squared norm.
  const ProjPoint q = ProjPoint::FromHomogeneous(V({1, 2, 3}));
  CHECK(Incidence(q, DualizePoint(q)) == doctest::Approx(1.0));
}

TEST_CASE("dualize") {
  CHECK(Near(Dualize(ProjHyperplane::FromCovector(V({1, 0, 0}))).coords, V({1, 0, 0})));
  CHECK(Near(DualizePoint(ProjPoint::FromHomogeneous(V({0, 1, 0}))).covector, V({0, 1, 0})));
  const ProjPoint q = ProjPoint::FromHomogeneous(V({1, 2, 3}));
  CHECK(Dualize(DualizePoint(q)).coords == q.coords);
  CHECK(Near(q.coords, V({1, 2, 3}) / std::sqrt(14.0)));
}

TEST_CASE("hyperplane through points") {
  SUBCASE("coordinate points in RP^2") {
    const ProjPoint pts[] = {ProjPoint::FromHomogeneous(V({1, 0, 0})),
                             ProjPoint::FromHomogeneous(V({0, 1, 0}))};
    const HyperplaneFit fit = HyperplaneThrough(pts);
    CHECK_FALSE(fit.degenerate_span);
    CHECK(ProjectiveAngle(fit.plane.covector, V({0, 0, 1})) < 1e-12);
  }
  SUBCASE("affine line through (0,0) and (1,1)") {
    const ProjPoint pts[] = {ProjPoint::FromAffine(V({0, 0})), ProjPoint::FromAffine(V({1, 1}))};
    const HyperplaneFit fit = HyperplaneThrough(pts);
    CHECK(Near(fit.plane.covector, V({0, 1, -1}) / std::sqrt(2.0), 1e-12));
  }
  SUBCASE("coordinate points in RP^3") {
    const ProjPoint pts[] = {ProjPoint::FromHomogeneous(V({1, 0, 0, 0})),
                             ProjPoint::FromHomogeneous(V({0, 1, 0, 0})),
                             ProjPoint::FromHomogeneous(V({0, 0, 1, 0}))};
    CHECK(ProjectiveAngle(HyperplaneThrough(pts).plane.covector, V({0, 0, 0, 1})) < 1e-12);
  }
  SUBCASE("identical points are flagged, not rejected") {
    const ProjPoint p = ProjPoint::FromAffine(V({1, 2}));
    const ProjPoint pts[] = {p, p};
    const HyperplaneFit fit = HyperplaneThrough(pts);
    CHECK(fit.degenerate_span);
    CHECK(std::abs(Incidence(p, fit.plane)) < 1e-12);
  }
  SUBCASE("residual on random well-conditioned inputs") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int n = 1; n <= 3; ++n) {
      for (int t = 0; t < 200; ++t) {
        std::vector<ProjPoint> pts;
        for (int i = 0; i < n; ++i) {
          Vec v(n + 1);
          for (int k = 0; k <= n; ++k) v[k] = g(rng);
          pts.push_back(ProjPoint::FromHomogeneous(v));
        }
        const HyperplaneFit fit = HyperplaneThrough(pts);
        if (fit.degenerate_span) continue;
        for (const auto& p : pts) CHECK(std::abs(Incidence(p, fit.plane)) <= 1e-12 * (n + 1));
      }
    }
  }
}

TEST_CASE("chart coordinates") {
  const AffineChart std2 = AffineChart::Standard(2);
  CHECK(Near(std2.Coords(V({2, 4, 6})), V({2, 3})));
  CHECK(Near(std2.Lift(V({0, 0})).coords, V({1, 0, 0})));
  try {
    std2.Coords(V({0, 1, 1}));
    FAIL("expected AtInfinity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAtInfinity);
  }
  SUBCASE("lift and coords are inverse in a tilted chart") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int t = 0; t < 200; ++t) {
      Vec inf(4);
      for (int k = 0; k < 4; ++k) inf[k] = g(rng);
      const AffineChart chart(inf);
      const Mat gram = chart.frame().transpose() * chart.frame();
      CHECK((gram - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
      Vec x(3);
      for (int k = 0; k < 3; ++k) x[k] = g(rng);
      CHECK(Near(chart.Coords(chart.Lift(x)), x, 1e-9));
    }
  }
}

TEST_CASE("duality involution and incidence duality on random inputs") {
  std::mt19937_64 rng(2026);
  std::normal_distribution<double> g;
  for (int t = 0; t < 10000; ++t) {
    const int n = 1 + t % 3;
    Vec a(n + 1), b(n + 1);
    for (int k = 0; k <= n; ++k) {
      a[k] = g(rng);
      b[k] = g(rng);
    }
    const ProjPoint q = ProjPoint::FromHomogeneous(a);
    const ProjHyperplane h = ProjHyperplane::FromCovector(b);
    REQUIRE(Dualize(DualizePoint(q)).coords == q.coords);
    REQUIRE(Incidence(q, h) == Incidence(Dualize(h), DualizePoint(q)));
  }
}

TEST_CASE("projective equivariance of incidence") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int t = 0; t < 500; ++t) {
    Mat m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = g(rng);
    if (std::abs(m.determinant()) < 1e-3) continue;
    Vec q(4), l(4);
    for (int k = 0; k < 4; ++k) {
      q[k] = g(rng);
      l[k] = g(rng);
    }
    const Vec tq = m * q;
    const Vec tl = m.inverse().transpose() * l;
    CHECK(tq.dot(tl) == doctest::Approx(q.dot(l)).epsilon(1e-9));
  }
}
