// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "shape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hull.hpp"

namespace multitangent {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckFinite(const Vec& v, const char* what) {
  if (!v.allFinite()) {
    throw Error(ErrorCode::kInvalidShape, std::string(what) + " is not finite");
  }
}

double SegmentDistance(const Vec& x, const Vec& a, const Vec& b) {
  const Vec ab = b - a;
  const double len2 = ab.squaredNorm();
  double t = len2 > 0.0 ? (x - a).dot(ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (a + t * ab - x).norm();
}

bool InsidePolygon(const Vec& x, const std::vector<Vec>& poly) {
  bool inside = false;
  const size_t n = poly.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec& a = poly[i];
    const Vec& b = poly[j];
    if ((a[1] > x[1]) != (b[1] > x[1])) {
      const double xc = a[0] + (x[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
      if (x[0] < xc) inside = !inside;
    }
  }
  return inside;
}

std::vector<Vec> SphereSamples(const Vec& center, double radius, int count) {
  std::vector<Vec> out;
  const int dim = static_cast<int>(center.size());
  if (dim == 1) {
    Vec a = center, b = center;
    a[0] -= radius;
    b[0] += radius;
    return {a, b};
  }
  out.reserve(static_cast<size_t>(count));
  if (dim == 2) {
    for (int k = 0; k < count; ++k) {
      const double t = 2.0 * std::numbers::pi * k / count;
      Vec p(2);
      p << std::cos(t), std::sin(t);
      out.push_back(center + radius * p);
    }
    return out;
  }
  // Fibonacci sphere.
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    const double z = 1.0 - 2.0 * (k + 0.5) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    Vec p(3);
    p << r * std::cos(golden * k), r * std::sin(golden * k), z;
    out.push_back(center + radius * p);
  }
  return out;
}

}  // namespace

const char* ShapeKindName(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::kCircle: return "circle";
    case ShapeKind::kBall: return "ball";
    case ShapeKind::kPolytope: return "polytope";
    case ShapeKind::kLoop: return "loop";
    case ShapeKind::kRegion: return "region";
  }
  return "unknown";
}

const char* SideKindName(SideKind kind) {
  switch (kind) {
    case SideKind::kStrictPlus: return "StrictPlus";
    case SideKind::kStrictMinus: return "StrictMinus";
    case SideKind::kTouchPlus: return "TouchPlus";
    case SideKind::kTouchMinus: return "TouchMinus";
    case SideKind::kCut: return "Cut";
    case SideKind::kContained: return "Contained";
  }
  return "unknown";
}

Shape Shape::Circle(const Vec& center, double radius) {
  if (center.size() != 2) {
    throw Error(ErrorCode::kInvalidShape, "circle center must be 2d");
  }
  Shape s = Ball(center, radius);
  s.kind_ = ShapeKind::kCircle;
  return s;
}

Shape Shape::Ball(const Vec& center, double radius) {
  if (center.size() < 1 || center.size() > kMaxDim) {
    throw Error(ErrorCode::kInvalidShape, "ball dimension must be 1..3");
  }
  CheckFinite(center, "center");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::kInvalidShape, "radius must be positive");
  }
  Shape s;
  s.kind_ = ShapeKind::kBall;
  s.dim_ = static_cast<int>(center.size());
  s.center_ = center;
  s.radius_ = radius;
  s.filled_ = true;
  s.Finish();
  return s;
}

Shape Shape::Polytope(std::vector<Vec> vertices) {
  if (vertices.empty()) {
    throw Error(ErrorCode::kInvalidShape, "polytope needs at least one vertex");
  }
  Shape s;
  s.kind_ = ShapeKind::kPolytope;
  s.dim_ = static_cast<int>(vertices.front().size());
  s.filled_ = true;
  s.vertices_ = std::move(vertices);
  s.Finish();
  return s;
}

Shape Shape::Loop(std::vector<Vec> vertices) {
  if (vertices.size() < 3) {
    throw Error(ErrorCode::kInvalidShape, "loop needs at least 3 vertices");
  }
  if (vertices.front() == vertices.back()) {
    throw Error(ErrorCode::kInvalidShape,
                "loop closure is implicit; first and last vertex must differ");
  }
  for (size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) {
      throw Error(ErrorCode::kInvalidShape,
                  "consecutive loop vertices must be distinct");
    }
  }
  Shape s;
  s.kind_ = ShapeKind::kLoop;
  s.dim_ = static_cast<int>(vertices.front().size());
  s.vertices_ = std::move(vertices);
  s.Finish();
  return s;
}

Shape Shape::Region(std::vector<Vec> boundary, bool filled) {
  Shape s = Loop(std::move(boundary));
  if (s.dim_ != 2) {
    throw Error(ErrorCode::kInvalidShape, "regions are planar");
  }
  s.kind_ = ShapeKind::kRegion;
  s.filled_ = filled;
  return s;
}

void Shape::Finish() {
  if (dim_ < 1 || dim_ > kMaxDim) {
    throw Error(ErrorCode::kInvalidShape, "shape dimension must be 1..3");
  }
  for (const Vec& v : vertices_) {
    if (v.size() != dim_) {
      throw Error(ErrorCode::kInvalidShape, "mixed vertex dimensions");
    }
    CheckFinite(v, "vertex");
  }
  chart_ = AffineChart::Standard(dim_);
  if (analytic()) return;
  support_.clear();
  // Planar hulls are kept in counter-clockwise order.
  const std::vector<int> idx = dim_ == 2 && vertices_.size() >= 3
                                   ? ConvexHull2D(vertices_)
                                   : ExtremePoints(vertices_).indices;
  for (int i : idx) support_.push_back(vertices_[static_cast<size_t>(i)]);
}

SupportInterval Shape::Support(const Vec& direction) const {
  SupportInterval out;
  if (analytic()) {
    const double c = center_.dot(direction);
    const double norm = direction.norm();
    out.min = c - radius_ * norm;
    out.max = c + radius_ * norm;
    if (norm > 0.0) {
      out.argmin = center_ - radius_ * direction / norm;
      out.argmax = center_ + radius_ * direction / norm;
    } else {
      out.argmin = out.argmax = center_;
    }
    return out;
  }
  out.min = kInf;
  out.max = -kInf;
  for (const Vec& v : support_) {
    const double t = v.dot(direction);
    if (t < out.min) {
      out.min = t;
      out.argmin = v;
    }
    if (t > out.max) {
      out.max = t;
      out.argmax = v;
    }
  }
  return out;
}

Vec Shape::Centroid() const {
  if (analytic()) return center_;
  Vec sum = Vec::Zero(dim_);
  for (const Vec& v : vertices_) sum += v;
  return sum / static_cast<double>(vertices_.size());
}

void Shape::BoundingBox(Vec* lo, Vec* hi) const {
  if (analytic()) {
    *lo = center_.array() - radius_;
    *hi = center_.array() + radius_;
    return;
  }
  *lo = vertices_.front();
  *hi = vertices_.front();
  for (const Vec& v : vertices_) {
    *lo = lo->cwiseMin(v);
    *hi = hi->cwiseMax(v);
  }
}

double Shape::Diameter() const {
  Vec lo, hi;
  BoundingBox(&lo, &hi);
  return (hi - lo).norm();
}

std::vector<Vec> Shape::SamplePoints(int count) const {
  if (analytic()) return SphereSamples(center_, radius_, count);
  return vertices_;
}

double Shape::DistanceTo(const Vec& x) const {
  switch (kind_) {
    case ShapeKind::kCircle:
      return std::abs((x - center_).norm() - radius_);
    case ShapeKind::kBall:
      return std::max(0.0, (x - center_).norm() - radius_);
    case ShapeKind::kPolytope: {
      if (dim_ == 1) {
        return std::max({0.0, support_.front()[0] - x[0], x[0] - support_.back()[0]});
      }
      if (dim_ == 2 && support_.size() >= 3) {
        if (InsidePolygon(x, support_)) return 0.0;
        double best = kInf;
        for (size_t i = 0; i < support_.size(); ++i) {
          best = std::min(best, SegmentDistance(x, support_[i],
                                                support_[(i + 1) % support_.size()]));
        }
        return best;
      }
      // Vertex distance bound for degenerate or spatial polytopes.
      double best = kInf;
      for (const Vec& v : vertices_) best = std::min(best, (x - v).norm());
      return best;
    }
    case ShapeKind::kLoop:
    case ShapeKind::kRegion: {
      if (kind_ == ShapeKind::kRegion && filled_ && InsidePolygon(x, vertices_)) {
        return 0.0;
      }
      double best = kInf;
      for (size_t i = 0; i < vertices_.size(); ++i) {
        best = std::min(best, SegmentDistance(x, vertices_[i],
                                              vertices_[(i + 1) % vertices_.size()]));
      }
      return best;
    }
  }
  return kInf;
}

void Scene::Validate() const {
  if (n < 1 || n > kMaxDim) {
    throw Error(ErrorCode::kInvalidScene, "scene dimension must be 1..3");
  }
  if (static_cast<int>(shapes.size()) != n) {
    throw Error(ErrorCode::kInvalidScene,
                "scene needs exactly n shapes, got " + std::to_string(shapes.size()) +
                    " for n=" + std::to_string(n));
  }
  for (size_t i = 0; i < shapes.size(); ++i) {
    if (shapes[i].dim() != n) {
      throw Error(ErrorCode::kInvalidScene,
                  "shape " + std::to_string(i) + " has dimension " +
                      std::to_string(shapes[i].dim()));
    }
  }
}

double Scene::Diameter() const {
  Vec lo, hi;
  for (size_t i = 0; i < shapes.size(); ++i) {
    Vec a, b;
    shapes[i].BoundingBox(&a, &b);
    if (i == 0) {
      lo = a;
      hi = b;
    } else {
      lo = lo.cwiseMin(a);
      hi = hi.cwiseMax(b);
    }
  }
  return (hi - lo).norm();
}

Vec Scene::Centroid() const {
  Vec sum = Vec::Zero(n);
  for (const Shape& s : shapes) sum += s.Centroid();
  return sum / static_cast<double>(shapes.size());
}

AffineForm AffineForm::From(const ProjHyperplane& h, const AffineChart& chart) {
  return From(h.covector, chart);
}

AffineForm AffineForm::From(const Vec& covector, const AffineChart& chart) {
  AffineForm f;
  double a = 0.0;
  Vec b;
  chart.Restrict(covector, &a, &b);
  const double nb = b.norm();
  if (nb <= 1e-14 * covector.norm()) {
    f.at_infinity = true;
    f.offset = a;
    f.gradient = Vec::Zero(b.size());
    return f;
  }
  f.offset = a / nb;
  f.gradient = b / nb;
  return f;
}

double AffineForm::operator()(const Vec& x) const {
  if (at_infinity) return offset > 0 ? kInf : -kInf;
  return offset + gradient.dot(x);
}

SignedRange SignedDistanceRange(const Shape& shape, const Vec& covector) {
  const AffineForm form = AffineForm::From(covector, shape.chart());
  SignedRange r;
  if (form.at_infinity) {
    r.lo = r.hi = form.offset > 0 ? kInf : -kInf;
    r.lo_point = r.hi_point = shape.Centroid();
    return r;
  }
  const SupportInterval s = shape.Support(form.gradient);
  r.lo = form.offset + s.min;
  r.hi = form.offset + s.max;
  r.lo_point = s.argmin;
  r.hi_point = s.argmax;
  return r;
}

bool Meets(const Shape& shape, const Vec& covector, double tol) {
  const SignedRange r = SignedDistanceRange(shape, covector);
  return r.lo <= tol && r.hi >= -tol;
}

bool Meets(const Shape& shape, const ProjHyperplane& h, double tol) {
  return Meets(shape, h.covector, tol);
}

namespace {

std::vector<Vec> ClusterContacts(const Shape& shape, const AffineForm& form,
                                 double tol) {
  const double radius = 1e-3 * std::max(shape.Diameter(), 1e-12);
  struct Cluster {
    Vec rep;
    double value;
  };
  std::vector<Cluster> clusters;
  for (const Vec& v : shape.vertices()) {
    const double val = std::abs(form(v));
    if (val > tol) continue;
    bool merged = false;
    for (Cluster& c : clusters) {
      if ((c.rep - v).norm() <= radius) {
        if (val < c.value) c = {v, val};
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back({v, val});
  }
  std::vector<Vec> out;
  for (const Cluster& c : clusters) out.push_back(c.rep);
  return out;
}

}  // namespace

SideClassification Side(const Shape& shape, const ProjHyperplane& h,
                        double tol) {
  const AffineForm form = AffineForm::From(h, shape.chart());
  const SignedRange r = SignedDistanceRange(shape, h.covector);
  SideClassification out;
  out.lo = r.lo;
  out.hi = r.hi;
  if (r.lo > tol) {
    out.kind = SideKind::kStrictPlus;
  } else if (r.hi < -tol) {
    out.kind = SideKind::kStrictMinus;
  } else if (r.lo >= -tol && r.hi <= tol) {
    out.kind = SideKind::kContained;
    out.witnesses = {r.lo_point, r.hi_point};
  } else if (r.lo >= -tol) {
    out.kind = SideKind::kTouchPlus;
    out.witnesses = shape.analytic() ? std::vector<Vec>{r.lo_point}
                                     : ClusterContacts(shape, form, tol);
  } else if (r.hi <= tol) {
    out.kind = SideKind::kTouchMinus;
    out.witnesses = shape.analytic() ? std::vector<Vec>{r.hi_point}
                                     : ClusterContacts(shape, form, tol);
  } else {
    out.kind = SideKind::kCut;
    out.witnesses = {r.hi_point, r.lo_point};
  }
  return out;
}

std::vector<Vec> ContactPoints(const Shape& shape, const ProjHyperplane& h,
                               double tol) {
  SideClassification side = Side(shape, h, tol);
  if (!side.touching()) {
    throw Error(ErrorCode::kNotTouching,
                std::string("hyperplane is ") + SideKindName(side.kind) +
                    " for this shape");
  }
  return side.witnesses;
}

Shape ConvexHull(const Shape& shape, int samples, bool* approximate) {
  if (approximate) *approximate = shape.analytic();
  if (shape.analytic()) {
    return Shape::Polytope(SphereSamples(shape.center(), shape.radius(), samples));
  }
  return Shape::Polytope(shape.support_vertices());
}

}  // namespace multitangent
