// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracle.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "parallel.hpp"

namespace multitangent {
namespace {

constexpr double kPi = std::numbers::pi;

// Affine hyperplane offset c such that {u.x = c} keeps shape 0 on its
// non-negative side, and the gaps to the matching extremes of the others.
struct Gaps {
  double c = 0.0;
  double g[kMaxDim] = {0.0, 0.0, 0.0};
};

Gaps Evaluate(const Scene& scene, const Vec& u, const int* signs) {
  Gaps out;
  out.c = scene.shapes[0].Support(u).min;
  for (size_t i = 1; i < scene.shapes.size(); ++i) {
    const SupportInterval s = scene.shapes[i].Support(u);
    out.g[i] = out.c - (signs[i] > 0 ? s.min : s.max);
  }
  return out;
}

Vec Covector(double c, const Vec& u) {
  Vec lambda(u.size() + 1);
  lambda[0] = -c;
  lambda.tail(u.size()) = u;
  return NormalizeKeepSign(lambda);
}

Vec Direction2(double theta) {
  Vec u(2);
  u << std::cos(theta), std::sin(theta);
  return u;
}

// The polar lattice degenerates at its poles, so they are tilted away from
// the coordinate axes where symmetric scenes put their tangent normals.
const Eigen::Matrix3d& SweepFrame() {
  static const Eigen::Matrix3d frame =
      Eigen::AngleAxisd(0.4142135623730951, Eigen::Vector3d(0.3, -0.7, 0.6).normalized())
          .toRotationMatrix();
  return frame;
}

Vec Direction3(double polar, double azimuth) {
  const Eigen::Vector3d u(std::sin(polar) * std::cos(azimuth),
                          std::sin(polar) * std::sin(azimuth), std::cos(polar));
  return SweepFrame() * u;
}

std::optional<SupportCertificate> TryRefine(const Scene& scene, const Vec& lambda,
                                            const RefineOptions& refine) {
  try {
    SupportCertificate cert = RefineSupport(scene, ProjHyperplane{lambda}, refine);
    cert.backend = Backend::kOracle;
    return cert;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void SweepLine(const Scene& scene, SweepResult* out) {
  for (const auto& endpoint : {0, 1}) {
    const SupportInterval s = scene.shapes[0].Support(Vec::Ones(1));
    const double x = endpoint == 0 ? s.min : s.max;
    Vec lambda(2);
    lambda << -x, 1.0;
    out->candidates.push_back({NormalizeKeepSign(lambda), 0.0});
  }
  if (out->candidates.front().covector.isApprox(out->candidates.back().covector)) {
    out->candidates.pop_back();
  }
}

void SweepPlane(const Scene& scene, const RefineOptions& refine, int grid,
                SweepResult* out) {
  const double step = 2.0 * kPi / grid;
  for (int s2 : {1, -1}) {
    const int signs[2] = {1, s2};
    auto gap = [&](double t) { return Evaluate(scene, Direction2(t), signs).g[1]; };
    double prev = gap(0.0);
    for (int k = 0; k < grid; ++k) {
      const double t0 = k * step;
      const double t1 = (k + 1) * step;
      const double next = gap(t1);
      const bool bracket = (prev <= 0.0 && next > 0.0) || (prev > 0.0 && next <= 0.0);
      if (bracket) {
        double a = t0, b = t1, fa = prev;
        for (int it = 0; it < out->bisection_depth; ++it) {
          const double m = 0.5 * (a + b);
          const double fm = gap(m);
          if ((fa <= 0.0) == (fm <= 0.0)) {
            a = m;
            fa = fm;
          } else {
            b = m;
          }
        }
        const double t = 0.5 * (a + b);
        const Vec u = Direction2(t);
        const Gaps g = Evaluate(scene, u, signs);
        const Vec lambda = Covector(g.c, u);
        if (auto cert = TryRefine(scene, lambda, refine)) {
          out->candidates.push_back({cert->h.covector, cert->residual});
        }
      }
      prev = next;
    }
  }
}

void SweepSpace(const Scene& scene, const RefineOptions& refine, int grid,
                SweepResult* out) {
  const double dp = kPi / grid;
  const double da = 2.0 * kPi / grid;
  for (int s2 : {1, -1}) {
    for (int s3 : {1, -1}) {
      const int signs[3] = {1, s2, s3};
      // Gap table on the (grid+1) x (grid+1) corner lattice.
      const int m = grid + 1;
      std::vector<Gaps> table(static_cast<size_t>(m * m));
      ParallelChunks(m, [&](long begin, long end, int) {
        for (long i = begin; i < end; ++i) {
          for (int j = 0; j < m; ++j) {
            table[static_cast<size_t>(i * m + j)] =
                Evaluate(scene, Direction3(i * dp, j * da), signs);
          }
        }
      });
      std::vector<Vec> starts;
      for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
          bool pos[2] = {false, false}, neg[2] = {false, false};
          Vec mean = Vec::Zero(3);
          for (int di : {0, 1}) {
            for (int dj : {0, 1}) {
              const Gaps& g = table[static_cast<size_t>((i + di) * m + j + dj)];
              for (int q = 0; q < 2; ++q) {
                pos[q] = pos[q] || g.g[q + 1] > 0.0;
                neg[q] = neg[q] || g.g[q + 1] <= 0.0;
              }
              mean += Direction3((i + di) * dp, (j + dj) * da);
            }
          }
          if (pos[0] && neg[0] && pos[1] && neg[1] && mean.norm() > 1e-12) {
            starts.push_back(mean.normalized());
          }
        }
      }
      const double reach = 4.0 * std::max(dp, da);
      for (const Vec& u : starts) {
        const Gaps g = Evaluate(scene, u, signs);
        const Vec lambda = Covector(g.c, u);
        // A neighbouring cell already converged close by.
        bool covered = false;
        for (const auto& cand : out->candidates) {
          covered = covered || ProjectiveAngle(cand.covector, lambda) < 0.5 * dp;
        }
        if (covered) continue;
        auto cert = TryRefine(scene, lambda, refine);
        if (!cert || ProjectiveAngle(cert->h.covector, lambda) > reach) continue;
        out->candidates.push_back({cert->h.covector, cert->residual});
      }
    }
  }
}

}  // namespace

int DefaultOracleGrid(int n) { return n == 3 ? 256 : 720; }

SweepResult BruteForceSupports(const Scene& scene, int angular_grid,
                               const RefineOptions& refine, double dedup_angle) {
  scene.Validate();
  SweepResult out;
  out.angular_grid = angular_grid > 0 ? angular_grid : DefaultOracleGrid(scene.n);
  if (out.angular_grid < 8) {
    throw Error(ErrorCode::kInvalidArgument, "oracle grid must be at least 8");
  }
  switch (scene.n) {
    case 1:
      out.sweep_tolerance = 0.0;
      SweepLine(scene, &out);
      break;
    case 2:
      out.sweep_tolerance = 2.0 * kPi / out.angular_grid;
      SweepPlane(scene, refine, out.angular_grid, &out);
      break;
    case 3:
      out.sweep_tolerance = 2.0 * kPi / out.angular_grid;
      SweepSpace(scene, refine, out.angular_grid, &out);
      break;
    default:
      throw Error(ErrorCode::kUnsupportedDimension, "oracle supports n = 1..3");
  }
  std::vector<SupportCertificate> certs;
  for (const auto& cand : out.candidates) {
    try {
      SupportCertificate cert =
          VerifySupport(scene, ProjHyperplane{cand.covector}, refine.contact);
      cert.residual = cand.residual;
      cert.backend = Backend::kOracle;
      certs.push_back(std::move(cert));
    } catch (const Error&) {
    }
  }
  out.clusters = DeduplicateCertificates(std::move(certs), dedup_angle).kept;
  return out;
}

bool ParityCheck(const Shape& loop, int trials, uint64_t seed) {
  if (loop.dim() != 2 || loop.vertices().size() < 3) {
    throw Error(ErrorCode::kInvalidArgument, "parity check needs a planar loop");
  }
  const auto& v = loop.vertices();
  Vec lo, hi;
  loop.BoundingBox(&lo, &hi);
  const double scale = std::max(1e-12, (hi - lo).norm());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int done = 0;
  for (int attempt = 0; done < trials && attempt < 100 * trials; ++attempt) {
    Eigen::Vector2d o(lo[0] + unit(rng) * (hi[0] - lo[0]),
                      lo[1] + unit(rng) * (hi[1] - lo[1]));
    const double t = unit(rng) * kPi;
    const Eigen::Vector2d nrm(-std::sin(t), std::cos(t));
    bool grazing = false;
    int crossings = 0;
    for (size_t k = 0; k < v.size() && !grazing; ++k) {
      const Eigen::Vector2d a(v[k][0], v[k][1]);
      const Eigen::Vector2d b(v[(k + 1) % v.size()][0], v[(k + 1) % v.size()][1]);
      const double da = nrm.dot(a - o);
      const double db = nrm.dot(b - o);
      if (std::abs(da) < 1e-9 * scale) grazing = true;
      if ((da < 0.0) != (db < 0.0)) ++crossings;
    }
    if (grazing) continue;
    ++done;
    if (crossings % 2 != 0) return false;
  }
  return done == trials;
}

}  // namespace multitangent
