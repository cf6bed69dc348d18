// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "property_suites.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "dual_region.hpp"
#include "oracle.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace props {
namespace {

using multitangent::Scene;
using multitangent::Shape;
using multitangent::Vec;
using Rng = std::mt19937_64;

class Timer {
 public:
  explicit Timer(SuiteReport* r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_->seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  SuiteReport* r_;
  std::chrono::steady_clock::time_point start_;
};

void Fail(SuiteReport* r, const std::string& what) {
  if (r->failures++ == 0) r->first_failure = what;
}

Vec Gaussian(Rng& rng, int size) {
  std::normal_distribution<double> g;
  Vec v(size);
  for (int k = 0; k < size; ++k) v[k] = g(rng);
  return v;
}

// Star-shaped loop around (cx, cy); concave for most seeds.
std::vector<Vec> StarPoints(Rng& rng, double cx, double cy) {
  std::uniform_int_distribution<int> count(8, 30);
  std::uniform_real_distribution<double> radius(0.5, 1.5);
  const int k = count(rng);
  std::vector<Vec> pts;
  for (int i = 0; i < k; ++i) {
    const double t = 2 * std::numbers::pi * i / k;
    const double r = radius(rng);
    Vec p(2);
    p << cx + r * std::cos(t), cy + r * std::sin(t);
    pts.push_back(p);
  }
  return pts;
}

Vec Pt(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

Scene TwoLoops(Rng& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Scene s;
  s.n = 2;
  s.shapes = {Shape::Loop(StarPoints(rng, u(rng), u(rng))),
              Shape::Loop(StarPoints(rng, 5 + u(rng), u(rng)))};
  return s;
}

std::vector<Vec> Covectors(const std::vector<multitangent::SupportCertificate>& certs) {
  std::vector<Vec> out;
  for (const auto& c : certs) out.push_back(c.h.covector);
  return out;
}

// Every covector in `a` has exactly one partner in `b`, and sizes agree.
bool SameClassSets(const std::vector<Vec>& a, const std::vector<Vec>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (const Vec& x : a) {
    int hits = 0;
    for (const Vec& y : b) hits += oracle::ClassAngle(x, y) < tol;
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace

SuiteReport DualityInvolution(uint64_t seed, int cases) {
  SuiteReport r{"duality involution"};
  Timer timer(&r);
  Rng rng(seed);
  for (int t = 0; t < cases; ++t) {
    const int n = 1 + t % 3;
    const multitangent::ProjPoint q{multitangent::Normalize(Gaussian(rng, n + 1))};
    const multitangent::ProjHyperplane h{multitangent::Normalize(Gaussian(rng, n + 1))};
    ++r.cases;
    const auto back = multitangent::Dualize(multitangent::DualizePoint(q));
    if (oracle::ClassAngle(back.coords, q.coords) > 1e-12) {
      Fail(&r, "dualize twice moved a point");
      continue;
    }
    const double a = multitangent::Incidence(q, h);
    const double b = multitangent::Incidence(multitangent::Dualize(h),
                                             multitangent::DualizePoint(q));
    if (std::abs(a - b) > 1e-12) Fail(&r, "incidence not symmetric under duality");
  }
  return r;
}

SuiteReport LoopParity(uint64_t seed, int loops) {
  SuiteReport r{"parity on closed loops"};
  Timer timer(&r);
  Rng rng(seed);
  for (int t = 0; t < loops; ++t) {
    ++r.cases;
    const Shape loop = Shape::Loop(StarPoints(rng, 0, 0));
    if (!multitangent::ParityCheck(loop, 200, seed + static_cast<uint64_t>(t))) {
      Fail(&r, "odd crossing count on loop " + std::to_string(t));
    }
  }
  return r;
}

SuiteReport SegmentTransversal(uint64_t seed, int scenes, int lines) {
  SuiteReport r{"segment transversal"};
  Timer timer(&r);
  Rng rng(seed);
  std::uniform_real_distribution<double> offset(-3, 8);
  std::uniform_real_distribution<double> angle(0, std::numbers::pi);
  for (int t = 0; t < scenes; ++t) {
    const Scene s = TwoLoops(rng);
    for (int l = 0; l < lines; ++l) {
      const double th = angle(rng);
      Vec cov(3);
      cov << -offset(rng), std::cos(th), std::sin(th);
      for (const Shape& shape : s.shapes) {
        ++r.cases;
        // Brute force: a closed polyline meets the line iff two consecutive
        // vertices are on weakly opposite sides.
        const auto& v = shape.vertices();
        bool crosses = false;
        for (size_t i = 0; i < v.size() && !crosses; ++i) {
          const Vec& a = v[i];
          const Vec& b = v[(i + 1) % v.size()];
          const double fa = cov[0] + cov[1] * a[0] + cov[2] * a[1];
          const double fb = cov[0] + cov[1] * b[0] + cov[2] * b[1];
          crosses = (fa <= 1e-12 && fb >= -1e-12) || (fa >= -1e-12 && fb <= 1e-12);
        }
        if (multitangent::Meets(shape, cov, 1e-9) != crosses) {
          std::ostringstream os;
          os << "scene " << t << " line " << l << " disagrees";
          Fail(&r, os.str());
        }
      }
    }
  }
  return r;
}

SuiteReport HullSupportEquivalence(uint64_t seed, int scenes) {
  SuiteReport r{"hull-support equivalence"};
  Timer timer(&r);
  Rng rng(seed);
  for (int t = 0; t < scenes; ++t) {
    ++r.cases;
    const Scene s = TwoLoops(rng);
    Scene hulls = s;
    for (Shape& shape : hulls.shapes) shape = multitangent::ConvexHull(shape);
    try {
      const auto a = multitangent::CalipersTangents(s.shapes[0], s.shapes[1]);
      const auto b = multitangent::CalipersTangents(hulls.shapes[0], hulls.shapes[1]);
      if (!SameClassSets(Covectors(a.certificates), Covectors(b.certificates), 1e-9)) {
        Fail(&r, "scene " + std::to_string(t) + ": supports differ from the hull's");
        continue;
      }
      // Each support of the hull also supports the original shapes.
      for (const auto& c : b.certificates) {
        multitangent::VerifySupport(s, c.h, 1e-7);
      }
    } catch (const multitangent::Error& e) {
      Fail(&r, "scene " + std::to_string(t) + ": " + e.what());
    }
  }
  return r;
}

SuiteReport MonotoneRefinement(uint64_t seed, int scenes) {
  SuiteReport r{"monotone refinement"};
  Timer timer(&r);
  Rng rng(seed);
  std::uniform_real_distribution<double> u(-1, 1), rad(0.5, 1.2);
  const int coarse = 24;
  for (int t = 0; t < scenes; ++t) {
    ++r.cases;
    Scene s;
    s.n = 2;
    if (t % 2 == 0) {
      s.shapes = {Shape::Circle(Pt(u(rng), u(rng)), rad(rng)),
                  Shape::Circle(Pt(5 + u(rng), u(rng)), rad(rng))};
    } else {
      s = TwoLoops(rng);
    }
    Vec p(3);
    p << 1, 2.5 + u(rng), 6 + u(rng);
    const multitangent::ProjPoint pp{multitangent::Normalize(p)};
    const Vec lo = Vec::Constant(2, -3), hi = Vec::Constant(2, 3);
    const auto a = multitangent::SampleHStarBox(s, pp, lo, hi, coarse);
    const auto b = multitangent::SampleHStarBox(s, pp, lo, hi, 2 * coarse);
    auto index = [&](const Vec& x, int res) {
      const double h = 6.0 / res;
      const int i = static_cast<int>(std::floor((x[0] + 3) / h));
      const int j = static_cast<int>(std::floor((x[1] + 3) / h));
      return i * res + j;
    };
    std::set<int> coarse_members, fine_members;
    for (const Vec& x : a.members) coarse_members.insert(index(x, coarse));
    for (const Vec& x : b.members) fine_members.insert(index(x, 2 * coarse));
    for (int i = 0; i < coarse; ++i) {
      for (int j = 0; j < coarse; ++j) {
        bool all = true;
        for (int di = 0; di < 2 && all; ++di) {
          for (int dj = 0; dj < 2 && all; ++dj) {
            all = fine_members.count((2 * i + di) * 2 * coarse + 2 * j + dj) > 0;
          }
        }
        if (all && !coarse_members.count(i * coarse + j)) {
          Fail(&r, "scene " + std::to_string(t) + ": covered coarse cell left out");
        }
      }
    }
  }
  return r;
}

SuiteReport ProjectiveEquivariance(uint64_t seed, int scenes) {
  SuiteReport r{"projective equivariance"};
  Timer timer(&r);
  Rng rng(seed);
  std::uniform_real_distribution<double> small(-0.05, 0.05), u(-1, 1);
  for (int t = 0; t < scenes; ++t) {
    ++r.cases;
    Scene s;
    s.n = 2;
    s.shapes = {Shape::Polytope(StarPoints(rng, u(rng), u(rng))),
                Shape::Polytope(StarPoints(rng, 5 + u(rng), u(rng)))};
    // Near-identity projective map whose denominator stays positive on the
    // scene, so shapes stay bounded and convex hulls map to convex hulls.
    Eigen::Matrix3d T = Eigen::Matrix3d::Identity();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) T(i, j) += (i == 0 ? 0.5 : 4) * small(rng);
    }
    Scene moved = s;
    for (Shape& shape : moved.shapes) {
      std::vector<Vec> pts;
      for (const Vec& x : shape.vertices()) {
        const Eigen::Vector3d y = T * Eigen::Vector3d(1, x[0], x[1]);
        Vec z(2);
        z << y[1] / y[0], y[2] / y[0];
        pts.push_back(z);
      }
      shape = Shape::Polytope(pts);
    }
    try {
      const auto a = multitangent::CalipersTangents(s.shapes[0], s.shapes[1]);
      const auto b = multitangent::CalipersTangents(moved.shapes[0], moved.shapes[1]);
      const Eigen::Matrix3d M = T.inverse().transpose();
      std::vector<Vec> mapped;
      for (const auto& c : a.certificates) mapped.push_back(M * c.h.covector);
      if (!SameClassSets(mapped, Covectors(b.certificates), 1e-7)) {
        Fail(&r, "scene " + std::to_string(t) + ": transformed supports differ");
      }
    } catch (const multitangent::Error& e) {
      Fail(&r, "scene " + std::to_string(t) + ": " + e.what());
    }
  }
  return r;
}

std::vector<SuiteReport> RunAll(uint64_t seed) {
  return {DualityInvolution(seed),      LoopParity(seed + 1),
          SegmentTransversal(seed + 2), HullSupportEquivalence(seed + 3),
          MonotoneRefinement(seed + 4), ProjectiveEquivariance(seed + 5)};
}

}  // namespace props
