// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_PROJECTIVE_HPP
#define MULTITANGENT_CORE_PROJECTIVE_HPP

#include <span>

#include "types.hpp"

namespace multitangent {

/// Scales v to unit norm with its first nonzero coordinate positive.
/// Throws kZeroVector on the zero vector.
Vec Normalize(const Vec& v);

/// Unit norm only, keeping the orientation of v.
Vec NormalizeKeepSign(const Vec& v);

/// A point of RP^n in homogeneous coordinates (length n+1).
struct ProjPoint {
  Vec coords;

  static ProjPoint FromHomogeneous(const Vec& v) { return {Normalize(v)}; }
  /// Affine point x in the standard chart x_0 = 1.
  static ProjPoint FromAffine(const Vec& x);
  int dim() const { return static_cast<int>(coords.size()) - 1; }
};

/// A hyperplane sum_k lambda_k x_k = 0 of RP^n.
struct ProjHyperplane {
  Vec covector;

  static ProjHyperplane FromCovector(const Vec& v) { return {Normalize(v)}; }
  int dim() const { return static_cast<int>(covector.size()) - 1; }
};

double Incidence(const ProjPoint& q, const ProjHyperplane& h);

ProjPoint Dualize(const ProjHyperplane& h);
ProjHyperplane DualizePoint(const ProjPoint& q);

/// Angle between two projective classes on the unit sphere, insensitive to
/// the sign of either representative. Range [0, pi/2].
double ProjectiveAngle(const Vec& a, const Vec& b);

struct HyperplaneFit {
  ProjHyperplane plane;
  bool degenerate_span = false;
  double smallest_singular_value = 0.0;
};

/// Hyperplane through n points of RP^n, taken as the right null vector of
/// the stacked coordinate matrix. Rank-deficient inputs return one member
/// of the pencil with degenerate_span set.
HyperplaneFit HyperplaneThrough(std::span<const ProjPoint> points,
                                double rank_threshold = 1e-10);

/// Affine chart of RP^n obtained by removing the hyperplane `infinity`.
/// frame column 0 is the unit covector of infinity; columns 1..n complete it
/// to an orthonormal basis. Chart coordinates of q are
/// (f_k . q) / (f_0 . q), k = 1..n.
class AffineChart {
 public:
  AffineChart() = default;
  explicit AffineChart(const Vec& infinity_covector);

  /// The chart x_0 = 1 with frame e_0..e_n.
  static AffineChart Standard(int n);

  int dim() const { return static_cast<int>(frame_.cols()) - 1; }
  const ProjHyperplane& infinity() const { return infinity_; }
  const Mat& frame() const { return frame_; }

  /// Unnormalized lift f_0 + sum x_k f_k; its pairing with infinity is 1.
  Vec LiftRaw(const Vec& x) const;
  ProjPoint Lift(const Vec& x) const { return {Normalize(LiftRaw(x))}; }

  /// Throws kAtInfinity when |f_0 . q| <= tol.
  Vec Coords(const Vec& homogeneous, double tol = 1e-9) const;
  Vec Coords(const ProjPoint& q, double tol = 1e-9) const {
    return Coords(q.coords, tol);
  }

  /// Restriction of a hyperplane to the chart as x -> offset + gradient . x.
  void Restrict(const Vec& covector, double* offset, Vec* gradient) const;

 private:
  ProjHyperplane infinity_;
  Mat frame_;
};

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_PROJECTIVE_HPP
