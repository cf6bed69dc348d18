// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_SHAPE_HPP
#define MULTITANGENT_CORE_SHAPE_HPP

#include <string>
#include <vector>

#include "projective.hpp"

namespace multitangent {

enum class ShapeKind { kCircle, kBall, kPolytope, kLoop, kRegion };

const char* ShapeKindName(ShapeKind kind);

/// Extremes of a linear functional g . x over a shape.
struct SupportInterval {
  double min = 0.0;
  double max = 0.0;
  Vec argmin;
  Vec argmax;
};

/// A closed connected subset of an affine chart of RP^n.
///
/// Circle and Ball are analytic. Polytope is the convex hull of its
/// vertices. Loop is a closed polyline (closure implicit). Region is a Loop
/// boundary, optionally filled. Meeting and support queries only depend on
/// the convex hull, which is cached at construction.
class Shape {
 public:
  static Shape Circle(const Vec& center, double radius);
  static Shape Ball(const Vec& center, double radius);
  static Shape Polytope(std::vector<Vec> vertices);
  static Shape Loop(std::vector<Vec> vertices);
  static Shape Region(std::vector<Vec> boundary, bool filled);

  ShapeKind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool analytic() const {
    return kind_ == ShapeKind::kCircle || kind_ == ShapeKind::kBall;
  }
  bool filled() const { return filled_; }
  const Vec& center() const { return center_; }
  double radius() const { return radius_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  /// Hull vertices for vertex kinds; empty for analytic kinds.
  const std::vector<Vec>& support_vertices() const { return support_; }
  const AffineChart& chart() const { return chart_; }

  SupportInterval Support(const Vec& direction) const;

  /// Center for analytic kinds, vertex mean otherwise.
  Vec Centroid() const;
  double Diameter() const;
  void BoundingBox(Vec* lo, Vec* hi) const;

  /// Points describing the set for sampling purposes (vertices, or a
  /// regular sampling of the circle / sphere with `count` points).
  std::vector<Vec> SamplePoints(int count) const;

  /// Euclidean distance from x to the set.
  double DistanceTo(const Vec& x) const;

 private:
  Shape() = default;
  void Finish();

  ShapeKind kind_ = ShapeKind::kCircle;
  int dim_ = 2;
  Vec center_;
  double radius_ = 0.0;
  bool filled_ = false;
  std::vector<Vec> vertices_;
  std::vector<Vec> support_;
  AffineChart chart_;
};

/// n closed connected sets in RP^n.
struct Scene {
  int n = 2;
  std::vector<Shape> shapes;
  std::string label;

  /// Throws kInvalidScene when the shape count or dimensions are off.
  void Validate() const;
  double Diameter() const;
  Vec Centroid() const;
};

/// A hyperplane restricted to a shape's chart: value(x) = offset + gradient.x,
/// rescaled so that value is the signed Euclidean distance to the hyperplane.
/// When the hyperplane is the chart's infinity the gradient vanishes and
/// `at_infinity` is set; values are then +-infinity.
struct AffineForm {
  double offset = 0.0;
  Vec gradient;
  bool at_infinity = false;

  static AffineForm From(const ProjHyperplane& h, const AffineChart& chart);
  static AffineForm From(const Vec& covector, const AffineChart& chart);
  double operator()(const Vec& x) const;
};

/// Range of signed distances of a shape's points to a hyperplane.
struct SignedRange {
  double lo = 0.0;
  double hi = 0.0;
  Vec lo_point;
  Vec hi_point;
};

SignedRange SignedDistanceRange(const Shape& shape, const Vec& covector);

enum class SideKind { kStrictPlus, kStrictMinus, kTouchPlus, kTouchMinus, kCut, kContained };

const char* SideKindName(SideKind kind);

struct SideClassification {
  SideKind kind = SideKind::kStrictPlus;
  /// Touch: contact witnesses. Cut: {plus witness, minus witness}.
  std::vector<Vec> witnesses;
  double lo = 0.0;
  double hi = 0.0;

  bool touching() const {
    return kind == SideKind::kTouchPlus || kind == SideKind::kTouchMinus;
  }
};

bool Meets(const Shape& shape, const ProjHyperplane& h, double tol);
bool Meets(const Shape& shape, const Vec& covector, double tol);

SideClassification Side(const Shape& shape, const ProjHyperplane& h,
                        double tol);

/// Convex hull as a Polytope; analytic kinds are approximated by
/// `samples` boundary points and flagged through `approximate`.
Shape ConvexHull(const Shape& shape, int samples = 256,
                 bool* approximate = nullptr);

/// Points of the shape on the hyperplane, clustered. Throws kNotTouching
/// unless the side is TouchPlus or TouchMinus.
std::vector<Vec> ContactPoints(const Shape& shape, const ProjHyperplane& h,
                               double tol);

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_SHAPE_HPP
