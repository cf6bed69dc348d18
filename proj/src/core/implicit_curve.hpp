// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_IMPLICIT_CURVE_HPP
#define MULTITANGENT_CORE_IMPLICIT_CURVE_HPP

#include <vector>

#include "shape.hpp"

namespace multitangent {

/// Bivariate polynomial sum c * x^i * y^j.
class Polynomial2 {
 public:
  struct Term {
    int i = 0;
    int j = 0;
    double c = 0.0;
  };

  Polynomial2() = default;
  explicit Polynomial2(std::vector<Term> terms);

  double operator()(double x, double y) const;
  void Gradient(double x, double y, double* gx, double* gy) const;
  const std::vector<Term>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

 private:
  std::vector<Term> terms_;
};

struct BBox2 {
  double xmin = -1.0;
  double ymin = -1.0;
  double xmax = 1.0;
  double ymax = 1.0;
};

struct IngestOptions {
  int resolution = 256;
  /// Residual bound relative to the box diagonal.
  double relative_tolerance = 1e-6;
};

/// Closed components of {f = 0} inside the box as counter-clockwise Loops,
/// traced with marching squares on a resolution x resolution sample grid
/// and projected back onto the curve with Newton steps along the gradient.
/// Throws kNoComponents when f has no sign change on the grid and
/// kOpenComponent when the zero set reaches the box boundary.
std::vector<Shape> IngestImplicitCurve(const Polynomial2& f, const BBox2& box,
                                       const IngestOptions& options = {});

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_IMPLICIT_CURVE_HPP
