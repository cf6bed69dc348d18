// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "condition.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hull.hpp"

namespace multitangent {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckPointOffShapes(const Scene& scene, const ProjPoint& p, double tol) {
  if (std::abs(p.coords[0]) <= 1e-12) return;  // at infinity of every shape chart
  const Vec x = p.coords.tail(scene.n) / p.coords[0];
  for (size_t i = 0; i < scene.shapes.size(); ++i) {
    if (scene.shapes[i].DistanceTo(x) <= tol) {
      throw Error(ErrorCode::kPointOnShape,
                  "candidate point lies on shape " + std::to_string(i));
    }
  }
}

// Hemisphere of S^{d-1} (one representative per antipodal pair).
std::vector<Vec> HalfSphere(int d, int count) {
  std::vector<Vec> out;
  if (d == 1) {
    Vec u(1);
    u << 1.0;
    return {u};
  }
  out.reserve(static_cast<size_t>(count));
  if (d == 2) {
    for (int k = 0; k < count; ++k) {
      const double t = std::numbers::pi * (k + 0.5) / count;
      Vec u(2);
      u << std::cos(t), std::sin(t);
      out.push_back(u);
    }
    return out;
  }
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    const double z = (k + 0.5) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    Vec u(3);
    u << r * std::cos(golden * k), r * std::sin(golden * k), z;
    out.push_back(u);
  }
  return out;
}

// Does the line y + t d meet the (convex hull of the) shape?
bool LineMeets(const Shape& s, const Vec& y, const Vec& d) {
  const Vec dn = d.normalized();
  if (s.analytic()) {
    const Vec w = s.center() - y;
    return (w - w.dot(dn) * dn).norm() <= s.radius();
  }
  // Project along d and test the planar hull.
  Vec w1 = Vec::Zero(3);
  const int axis = std::abs(dn[0]) < 0.9 ? 0 : 1;
  w1[axis] = 1.0;
  w1 = (w1 - w1.dot(dn) * dn).normalized();
  Eigen::Vector3d a(dn[0], dn[1], dn[2]);
  Eigen::Vector3d b(w1[0], w1[1], w1[2]);
  const Eigen::Vector3d c3 = a.cross(b);
  Vec w2(3);
  w2 << c3[0], c3[1], c3[2];
  std::vector<Vec> proj;
  for (const Vec& v : s.support_vertices()) {
    Vec q(2);
    q << (v - y).dot(w1), (v - y).dot(w2);
    proj.push_back(q);
  }
  const std::vector<int> hull = ConvexHull2D(proj);
  if (hull.size() < 3) {
    // Degenerate projection: accept only if the origin is on the segment.
    for (size_t k = 0; k < hull.size(); ++k) {
      if (proj[static_cast<size_t>(hull[k])].norm() <= 1e-12) return true;
    }
    return false;
  }
  for (size_t k = 0; k < hull.size(); ++k) {
    const Vec& p = proj[static_cast<size_t>(hull[k])];
    const Vec& q = proj[static_cast<size_t>(hull[(k + 1) % hull.size()])];
    const double cross = (q[0] - p[0]) * (-p[1]) - (q[1] - p[1]) * (-p[0]);
    if (cross < -1e-12) return false;
  }
  return true;
}

// Is y on some line meeting both shapes (n = 3)?
bool OnCommonTransversal(const Shape& a, const Shape& b, const Vec& y,
                         const std::vector<Vec>& directions) {
  if (a.analytic() && b.analytic()) {
    const Vec wa = a.center() - y;
    const Vec wb = b.center() - y;
    const double da = wa.norm();
    const double db = wb.norm();
    if (da <= a.radius() || db <= b.radius()) return true;
    const double alpha = std::asin(a.radius() / da);
    const double beta = std::asin(b.radius() / db);
    double angle = std::acos(std::clamp(wa.dot(wb) / (da * db), -1.0, 1.0));
    angle = std::min(angle, std::numbers::pi - angle);
    return angle <= alpha + beta;
  }
  for (const Vec& d : directions) {
    if (LineMeets(a, y, d) && LineMeets(b, y, d)) return true;
  }
  return false;
}

// Inward distance of x to the boundary of the planar convex hull of s.
double InwardDepth2D(const Shape& s, const Vec& x) {
  if (s.analytic()) return s.radius() - (x - s.center()).norm();
  const auto& hull = s.support_vertices();
  if (hull.size() < 3) return -kInf;
  double depth = kInf;
  for (size_t k = 0; k < hull.size(); ++k) {
    const Vec& p = hull[k];
    const Vec& q = hull[(k + 1) % hull.size()];
    const Vec e = q - p;
    const double cross = e[0] * (x[1] - p[1]) - e[1] * (x[0] - p[0]);
    depth = std::min(depth, cross / e.norm());
  }
  return depth;
}

}  // namespace

int DefaultDirections(int n) { return n >= 3 ? 16384 : 4096; }

std::vector<Vec> PencilThrough(const ProjPoint& p, int count) {
  const AffineChart chart(p.coords);
  const int n = chart.dim();
  std::vector<Vec> out;
  for (const Vec& u : HalfSphere(n, count)) {
    Vec lambda = Vec::Zero(n + 1);
    for (int k = 0; k < n; ++k) lambda += u[k] * chart.frame().col(k + 1);
    out.push_back(lambda);
  }
  return out;
}

ConditionOutcome CheckCondition(const Scene& scene, const ProjPoint& p,
                                const ConditionOptions& options) {
  scene.Validate();
  if (p.coords.size() != scene.n + 1) {
    throw Error(ErrorCode::kInvalidArgument, "point dimension does not match scene");
  }
  const int directions =
      options.directions > 0 ? options.directions : DefaultDirections(scene.n);
  if (directions < 64) {
    throw Error(ErrorCode::kInvalidArgument, "at least 64 directions required");
  }
  CheckPointOffShapes(scene, p, options.point_tolerance);

  ConditionOutcome out;
  ConditionCertificate& cert = out.certificate;
  cert.p = p;
  cert.min_clearance = kInf;
  cert.exact_miss_tests = std::all_of(scene.shapes.begin(), scene.shapes.end(),
                                      [](const Shape& s) { return s.analytic(); });
  for (const Vec& lambda : PencilThrough(p, directions)) {
    int best = -1;
    double best_clearance = -kInf;
    bool meets_all = true;
    for (size_t i = 0; i < scene.shapes.size(); ++i) {
      const SignedRange r = SignedDistanceRange(scene.shapes[i], lambda);
      if (r.lo <= options.incidence && r.hi >= -options.incidence) continue;
      meets_all = false;
      const double clearance = r.lo > 0 ? r.lo : -r.hi;
      if (clearance > best_clearance) {
        best_clearance = clearance;
        best = static_cast<int>(i);
      }
    }
    if (meets_all || best_clearance < options.clearance_floor) {
      out.accepted = false;
      out.witness = ProjHyperplane::FromCovector(lambda);
      out.witness_meets_all = meets_all;
      out.certificate = {};
      return out;
    }
    cert.samples.push_back({lambda, best, best_clearance});
    cert.min_clearance = std::min(cert.min_clearance, best_clearance);
  }
  out.accepted = true;
  return out;
}

std::vector<ProjPoint> ConditionCandidates(const Scene& scene, int grid) {
  scene.Validate();
  if (grid < 8) {
    throw Error(ErrorCode::kInvalidArgument, "search grid must be at least 8");
  }
  const int n = scene.n;
  const Vec center = scene.Centroid();
  const double diam = std::max(scene.Diameter(), 1e-9);
  std::vector<ProjPoint> out;

  // Seeds: the point at infinity normal to the hyperplane through the shape
  // centroids, and points along that normal.
  std::vector<ProjPoint> centroids;
  for (const Shape& s : scene.shapes) centroids.push_back(ProjPoint::FromAffine(s.Centroid()));
  const HyperplaneFit fit = HyperplaneThrough(centroids);
  if (!fit.degenerate_span) {
    Vec normal = fit.plane.covector.tail(n);
    if (normal.norm() > 1e-12) {
      normal.normalize();
      Vec at_inf = Vec::Zero(n + 1);
      at_inf.tail(n) = normal;
      out.push_back(ProjPoint::FromHomogeneous(at_inf));
      for (double t : {1.0, -1.0, 2.0, -2.0, 4.0, -4.0}) {
        out.push_back(ProjPoint::FromAffine(center + t * diam * normal));
      }
    }
  }

  // Grid on the faces x_k = +1 of the cube; every projective class has a
  // representative there.
  const int per_face = static_cast<int>(std::pow(grid, n));
  for (int face = 0; face <= n; ++face) {
    for (int idx = 0; idx < per_face; ++idx) {
      Vec h(n + 1);
      int rest = idx;
      for (int k = 0; k <= n; ++k) {
        if (k == face) {
          h[k] = 1.0;
          continue;
        }
        const int g = rest % grid;
        rest /= grid;
        h[k] = -1.0 + 2.0 * g / (grid - 1);
      }
      Vec mapped(n + 1);
      mapped[0] = h[0];
      mapped.tail(n) = diam * h.tail(n) + h[0] * center;
      out.push_back(ProjPoint::FromHomogeneous(mapped));
    }
  }
  return out;
}

SearchResult SearchConditionPoint(const Scene& scene, int grid,
                                  const ConditionOptions& options) {
  SearchResult result;
  for (const ProjPoint& p : ConditionCandidates(scene, grid)) {
    ConditionOutcome outcome;
    try {
      outcome = CheckCondition(scene, p, options);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kPointOnShape) continue;
      throw;
    }
    ++result.candidates_tested;
    if (outcome.accepted) {
      result.accepted = std::move(outcome);
      result.rejected.clear();
      return result;
    }
    if (!result.first_rejection) result.first_rejection = outcome;
    result.rejected.push_back(p);
  }
  return result;
}

std::vector<bool> InteriorityCheck(const Scene& scene, int samples) {
  scene.Validate();
  if (scene.n != 2 && scene.n != 3) {
    throw Error(ErrorCode::kUnsupportedDimension, "conjecture check needs n in {2,3}");
  }
  if (samples < 1000) {
    throw Error(ErrorCode::kInvalidArgument, "at least 1000 samples required");
  }
  const double margin = 1e-3 * scene.Diameter();
  std::vector<bool> flags(scene.shapes.size(), false);

  if (scene.n == 2) {
    for (size_t i = 0; i < 2; ++i) {
      const Shape& other = scene.shapes[1 - i];
      for (const Vec& x : scene.shapes[i].SamplePoints(samples)) {
        if (InwardDepth2D(other, x) < margin) {
          flags[i] = true;
          break;
        }
      }
    }
    return flags;
  }

  const std::vector<Vec> directions = HalfSphere(3, samples);
  std::vector<Vec> offsets;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      for (int c = -1; c <= 1; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        if (std::abs(a) + std::abs(b) + std::abs(c) == 2) continue;
        Vec u(3);
        u << a, b, c;
        offsets.push_back(margin * u.normalized());
      }
    }
  }
  for (size_t i = 0; i < 3; ++i) {
    const Shape& a = scene.shapes[(i + 1) % 3];
    const Shape& b = scene.shapes[(i + 2) % 3];
    for (const Vec& x : scene.shapes[i].SamplePoints(std::min(samples, 1024))) {
      bool interior = OnCommonTransversal(a, b, x, directions);
      for (size_t k = 0; interior && k < offsets.size(); ++k) {
        interior = OnCommonTransversal(a, b, x + offsets[k], directions);
      }
      if (!interior) {
        flags[i] = true;
        break;
      }
    }
  }
  return flags;
}

}  // namespace multitangent
