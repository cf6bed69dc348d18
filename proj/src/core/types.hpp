// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_TYPES_HPP
#define MULTITANGENT_CORE_TYPES_HPP

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace multitangent {

// Ambient dimension is limited to RP^1..RP^3; homogeneous vectors have at
// most four coordinates and live on the stack.
inline constexpr int kMaxDim = 3;
inline constexpr int kMaxHomogeneous = kMaxDim + 1;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor,
                          kMaxHomogeneous, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                          Eigen::ColMajor, kMaxHomogeneous, kMaxHomogeneous>;

enum class ErrorCode {
  kZeroVector,
  kAtInfinity,
  kInvalidShape,
  kInvalidScene,
  kChartNotFound,
  kNotTouching,
  kNoComponents,
  kOpenComponent,
  kPointOnShape,
  kUnsupportedDimension,
  kNoContact,
  kNotSupporting,
  kRefinementDiverged,
  kConditionNotEstablished,
  kRenderUnsupported,
  kIo,
  kInvalidArgument,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Numerical defaults. Distances are measured in the affine chart the shapes
/// live in; angles are radians on the unit sphere of covectors.
struct Tolerances {
  double incidence = 1e-9;
  double rank_threshold = 1e-10;
  double contact = 1e-7;
  double residual = 1e-8;
  double clearance_floor = 1e-6;
  double dedup_angle = 1e-4;
  double family_angle = 1e-2;
};

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_TYPES_HPP
