// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "projective.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace multitangent {
namespace {

constexpr double kSignEpsilon = 1e-12;

}  // namespace

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kAtInfinity: return "AtInfinity";
    case ErrorCode::kInvalidShape: return "InvalidShape";
    case ErrorCode::kInvalidScene: return "InvalidScene";
    case ErrorCode::kChartNotFound: return "ChartNotFound";
    case ErrorCode::kNotTouching: return "NotTouching";
    case ErrorCode::kNoComponents: return "NoComponents";
    case ErrorCode::kOpenComponent: return "OpenComponent";
    case ErrorCode::kPointOnShape: return "PointOnShape";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kNoContact: return "NoContact";
    case ErrorCode::kNotSupporting: return "NotSupporting";
    case ErrorCode::kRefinementDiverged: return "RefinementDiverged";
    case ErrorCode::kConditionNotEstablished: return "ConditionNotEstablished";
    case ErrorCode::kRenderUnsupported: return "RenderUnsupported";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// Adding +0.0 drops signed zeros so equal classes print identically.
Vec NormalizeKeepSign(const Vec& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::kZeroVector, "cannot normalize a zero vector");
  }
  // Already unit up to rounding: leave it alone so normalizing is idempotent.
  if (std::abs(norm - 1.0) <= 4 * std::numeric_limits<double>::epsilon()) {
    return v.array() + 0.0;
  }
  return (v / norm).array() + 0.0;
}

Vec Normalize(const Vec& v) {
  Vec out = NormalizeKeepSign(v);
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    if (std::abs(out[k]) > kSignEpsilon) {
      if (out[k] < 0.0) out = (-out).array() + 0.0;
      break;
    }
  }
  return out;
}

ProjPoint ProjPoint::FromAffine(const Vec& x) {
  Vec h(x.size() + 1);
  h[0] = 1.0;
  h.tail(x.size()) = x;
  return FromHomogeneous(h);
}

double Incidence(const ProjPoint& q, const ProjHyperplane& h) {
  return q.coords.dot(h.covector);
}

ProjPoint Dualize(const ProjHyperplane& h) { return {h.covector}; }

ProjHyperplane DualizePoint(const ProjPoint& q) { return {q.coords}; }

double ProjectiveAngle(const Vec& a, const Vec& b) {
  const Vec ua = NormalizeKeepSign(a);
  const Vec ub = NormalizeKeepSign(b);
  // The chord form is accurate for tiny angles where acos is not.
  const double minus = (ua - ub).norm();
  const double plus = (ua + ub).norm();
  const double chord = std::min(minus, plus);
  return 2.0 * std::asin(std::min(1.0, chord / 2.0));
}

HyperplaneFit HyperplaneThrough(std::span<const ProjPoint> points,
                                double rank_threshold) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no points given");
  }
  const Eigen::Index cols = points.front().coords.size();
  const Eigen::Index rows = static_cast<Eigen::Index>(points.size());
  if (rows + 1 != cols) {
    throw Error(ErrorCode::kInvalidArgument,
                "hyperplane_through needs exactly n points in RP^n");
  }
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    m.row(i) = Normalize(points[static_cast<size_t>(i)].coords).transpose();
  }
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  HyperplaneFit fit;
  fit.plane = ProjHyperplane::FromCovector(svd.matrixV().col(cols - 1));
  fit.smallest_singular_value = sv[sv.size() - 1];
  fit.degenerate_span = fit.smallest_singular_value <= rank_threshold;
  return fit;
}

AffineChart::AffineChart(const Vec& infinity_covector) {
  const Vec f0 = NormalizeKeepSign(infinity_covector);
  infinity_ = ProjHyperplane{Normalize(f0)};
  const Eigen::Index size = f0.size();
  frame_ = Mat::Zero(size, size);
  frame_.col(0) = f0;
  Eigen::Index filled = 1;
  // Gram-Schmidt against the standard basis in order; keeps the standard
  // chart exact.
  for (Eigen::Index k = 0; k < size && filled < size; ++k) {
    Vec candidate = Vec::Zero(size);
    candidate[k] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < filled; ++j) {
        candidate -= frame_.col(j).dot(candidate) * frame_.col(j);
      }
    }
    const double norm = candidate.norm();
    if (norm > 1e-6) frame_.col(filled++) = candidate / norm;
  }
}

AffineChart AffineChart::Standard(int n) {
  Vec e0 = Vec::Zero(n + 1);
  e0[0] = 1.0;
  return AffineChart(e0);
}

Vec AffineChart::LiftRaw(const Vec& x) const {
  Vec out = frame_.col(0);
  for (Eigen::Index k = 0; k < x.size(); ++k) out += x[k] * frame_.col(k + 1);
  return out;
}

Vec AffineChart::Coords(const Vec& homogeneous, double tol) const {
  const Vec q = NormalizeKeepSign(homogeneous);
  const double w = frame_.col(0).dot(q);
  if (std::abs(w) <= tol) {
    throw Error(ErrorCode::kAtInfinity, "point lies on the chart's infinity");
  }
  Vec out(dim());
  for (int k = 0; k < dim(); ++k) out[k] = frame_.col(k + 1).dot(q) / w;
  return out;
}

void AffineChart::Restrict(const Vec& covector, double* offset,
                           Vec* gradient) const {
  *offset = covector.dot(frame_.col(0));
  gradient->resize(dim());
  for (int k = 0; k < dim(); ++k) {
    (*gradient)[k] = covector.dot(frame_.col(k + 1));
  }
}

}  // namespace multitangent
