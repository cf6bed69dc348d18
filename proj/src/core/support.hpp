// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_SUPPORT_HPP
#define MULTITANGENT_CORE_SUPPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "condition.hpp"
#include "dual_region.hpp"
#include "shape.hpp"

namespace multitangent {

enum class Backend { kAuto, kDualExtremal, kCalipers, kOracle };

const char* BackendName(Backend backend);
Backend ParseBackend(const std::string& name);

/// A hyperplane supporting every shape of a scene, with one contact point
/// and one touching side per shape.
struct SupportCertificate {
  ProjHyperplane h;  // unit covector; orientation chosen by the caller
  std::vector<Vec> contacts;
  std::vector<SideClassification> sides;
  double residual = 0.0;
  Backend backend = Backend::kDualExtremal;

  /// "+" for TouchPlus, "-" for TouchMinus, one character per shape.
  std::string SideVector() const;
};

/// Checks every shape touches H from one closed side. Throws kNoContact
/// (some shape strictly off H) or kNotSupporting (some shape cut or
/// contained) naming the first offending shape.
SupportCertificate VerifySupport(const Scene& scene, const ProjHyperplane& h,
                                 double tol);

/// Flips the covector so that it pairs positively with p (p must not lie on
/// the hyperplane); sides are re-labelled accordingly.
void OrientTowards(SupportCertificate* cert, const ProjPoint& p);

struct RefineOptions {
  int max_iter = 500;
  double residual = 1e-8;
  double contact = 1e-7;
  int newton_steps = 40;
};

/// Drives a hyperplane to touch every shape. The side each shape keeps is
/// read off the starting hyperplane; the residual per shape is the signed
/// distance of its nearest extreme point. Coordinate descent with golden
/// section line searches runs in a local dual chart centred at H0, followed
/// by Gauss-Newton polishing. Throws kRefinementDiverged if the result does
/// not verify.
SupportCertificate RefineSupport(const Scene& scene, const ProjHyperplane& h0,
                                 const RefineOptions& options = {});

/// Residual vector of the side-fixed tangency system at a covector.
std::vector<double> TangencyResiduals(const Scene& scene, const Vec& covector,
                                      const std::vector<int>& side_signs);

struct ExtremePointSet {
  std::vector<Vec> points;  // dual chart coordinates, lexicographic
  bool low_dimensional = false;
};

/// Hull vertices of the sampled dual region (surface members only).
ExtremePointSet ExtremePointsOf(const DualRegionSample& sample);

struct CalipersResult {
  std::vector<SupportCertificate> certificates;
  bool nested = false;
  /// Hulls touch or the tangent counts are otherwise degenerate.
  bool degenerate = false;
  int outer_candidates = 0;
  int inner_candidates = 0;
};

/// Common tangent lines of two planar shapes through their convex hulls,
/// swept with rotating support vertices; each candidate is refined and
/// verified against the original shapes.
CalipersResult CalipersTangents(const Shape& a, const Shape& b,
                                const RefineOptions& refine = {},
                                int circle_samples = 256);

struct Dedup {
  std::vector<SupportCertificate> kept;
  /// For each kept certificate, the covectors of all raw certificates merged
  /// into it (kept one included).
  std::vector<std::vector<Vec>> members;
};

/// Greedy angular deduplication keeping the lowest residual representative;
/// output sorted by canonical covector.
Dedup DeduplicateCertificates(std::vector<SupportCertificate> certs, double angle);

struct SupportOptions {
  Tolerances tol;
  RefineOptions refine;
  ConditionOptions condition;
  int search_grid = 8;
  AutoSampleOptions dual;
  int oracle_grid = 0;  // 0: backend default
  int circle_samples = 256;
  /// Orient certificates toward this point when set.
  std::optional<ProjPoint> orientation;
};

struct FindResult {
  Backend backend = Backend::kAuto;  // resolved backend
  std::vector<SupportCertificate> certificates;
  int raw_count = 0;
  int failed_refinements = 0;
  std::optional<ProjPoint> condition_point;
  std::optional<BoundednessReport> boundedness;
  int extreme_points = 0;
  bool low_dimensional = false;
  bool nested = false;
  bool degenerate = false;
};

/// Throws kConditionNotEstablished if the dual backend finds no condition
/// point.
FindResult FindSupports(const Scene& scene, Backend backend,
                        const SupportOptions& options = {});

struct FamilyCluster {
  std::vector<Vec> covectors;
  double diameter = 0.0;
};

struct CountResult {
  int count = 0;
  int raw_count = 0;
  Backend backend = Backend::kAuto;
  bool fell_back_to_oracle = false;
  std::optional<ProjPoint> condition_point;
  bool continuum_family = false;
  std::vector<FamilyCluster> families;
  std::map<std::string, int> side_histogram;
  std::vector<SupportCertificate> certificates;
};

/// Clusters certificates with single linkage at 5 * family_angle and reports
/// clusters whose angular diameter exceeds family_angle.
std::vector<FamilyCluster> FindFamilies(const std::vector<SupportCertificate>& certs,
                                        double family_angle);

CountResult CountSupports(const Scene& scene, const SupportOptions& options = {});

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_SUPPORT_HPP
