// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hull.hpp"
#include "oracle.hpp"
#include "parallel.hpp"

namespace multitangent {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double WrapAngle(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0.0 ? t + kTwoPi : t;
}

bool LexLess(const Vec& a, const Vec& b) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

double GoldenSection(const std::function<double(double)>& f, double a, double b,
                     int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

SideKind Flip(SideKind kind) {
  switch (kind) {
    case SideKind::kStrictPlus: return SideKind::kStrictMinus;
    case SideKind::kStrictMinus: return SideKind::kStrictPlus;
    case SideKind::kTouchPlus: return SideKind::kTouchMinus;
    case SideKind::kTouchMinus: return SideKind::kTouchPlus;
    default: return kind;
  }
}

// Convex polygon with rotating support queries. Vertices counter-clockwise.
class SupportPolygon {
 public:
  explicit SupportPolygon(const std::vector<Vec>& ccw) {
    for (const Vec& v : ccw) v_.emplace_back(v[0], v[1]);
    const size_t m = v_.size();
    if (m < 2) return;
    for (size_t k = 0; k < m; ++k) {
      const Eigen::Vector2d e = v_[(k + 1) % m] - v_[k];
      events_.emplace_back(WrapAngle(std::atan2(-e.x(), e.y())),
                           static_cast<int>((k + 1) % m));
    }
    std::sort(events_.begin(), events_.end());
  }

  const std::vector<std::pair<double, int>>& events() const { return events_; }

  // Vertex maximizing u(theta) . v.
  const Eigen::Vector2d& Max(double theta) const {
    if (events_.empty()) return v_.front();
    theta = WrapAngle(theta);
    auto it = std::upper_bound(events_.begin(), events_.end(),
                               std::make_pair(theta, std::numeric_limits<int>::max()));
    const int idx = it == events_.begin() ? events_.back().second : std::prev(it)->second;
    return v_[static_cast<size_t>(idx)];
  }

  // Signed inward depth of x (positive inside).
  double Depth(const Eigen::Vector2d& x) const {
    if (v_.size() < 3) return -kInf;
    double depth = kInf;
    for (size_t k = 0; k < v_.size(); ++k) {
      const Eigen::Vector2d& p = v_[k];
      const Eigen::Vector2d e = v_[(k + 1) % v_.size()] - p;
      depth = std::min(depth, (e.x() * (x.y() - p.y()) - e.y() * (x.x() - p.x())) / e.norm());
    }
    return depth;
  }

  const std::vector<Eigen::Vector2d>& vertices() const { return v_; }

 private:
  std::vector<Eigen::Vector2d> v_;
  std::vector<std::pair<double, int>> events_;
};

bool Contains(const SupportPolygon& outer, const SupportPolygon& inner) {
  for (const auto& v : inner.vertices()) {
    if (outer.Depth(v) <= 0.0) return false;
  }
  return true;
}

// Zeros of h_a(theta) - h_b(theta + shift) over [0, 2pi).
std::vector<Vec> CommonTangentSweep(const SupportPolygon& a, const SupportPolygon& b,
                                    double shift, bool* touching) {
  std::vector<double> cuts = {0.0, kTwoPi};
  for (const auto& e : a.events()) cuts.push_back(e.first);
  for (const auto& e : b.events()) cuts.push_back(WrapAngle(e.first - shift));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Vec> out;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double t0 = cuts[k];
    const double t1 = cuts[k + 1];
    if (!(t1 > t0)) continue;
    const double mid = 0.5 * (t0 + t1);
    const Eigen::Vector2d pa = a.Max(mid);
    const Eigen::Vector2d pb = b.Max(mid + shift);
    const Eigen::Vector2d d = pa - pb;
    if (d.norm() <= 1e-14) {
      *touching = true;
      continue;
    }
    const double base = std::atan2(d.y(), d.x());
    for (double cand : {base + std::numbers::pi / 2, base + 3 * std::numbers::pi / 2}) {
      const double t = WrapAngle(cand);
      if (t < t0 - 1e-12 || t > t1 + 1e-12) continue;
      const Eigen::Vector2d u(std::cos(t), std::sin(t));
      Vec lambda(3);
      lambda << -u.dot(pa), u.x(), u.y();
      out.push_back(lambda);
    }
  }
  // Zeros on a cut are found from both neighbouring intervals.
  std::vector<Vec> unique;
  for (const Vec& l : out) {
    bool dup = false;
    for (const Vec& u : unique) dup = dup || ProjectiveAngle(l, u) < 1e-9;
    if (!dup) unique.push_back(l);
  }
  return unique;
}

}  // namespace

const char* BackendName(Backend backend) {
  switch (backend) {
    case Backend::kAuto: return "auto";
    case Backend::kDualExtremal: return "dual";
    case Backend::kCalipers: return "calipers";
    case Backend::kOracle: return "oracle";
  }
  return "unknown";
}

Backend ParseBackend(const std::string& name) {
  if (name == "auto") return Backend::kAuto;
  if (name == "dual" || name == "DualExtremal") return Backend::kDualExtremal;
  if (name == "calipers" || name == "Calipers") return Backend::kCalipers;
  if (name == "oracle" || name == "Oracle") return Backend::kOracle;
  throw Error(ErrorCode::kInvalidArgument, "unknown backend '" + name + "'");
}

std::string SupportCertificate::SideVector() const {
  std::string out;
  for (const auto& s : sides) out += s.kind == SideKind::kTouchPlus ? '+' : '-';
  return out;
}

SupportCertificate VerifySupport(const Scene& scene, const ProjHyperplane& h,
                                 double tol) {
  SupportCertificate cert;
  cert.h = h;
  for (size_t i = 0; i < scene.shapes.size(); ++i) {
    const Shape& shape = scene.shapes[i];
    SideClassification side = Side(shape, h, tol);
    if (side.kind == SideKind::kStrictPlus || side.kind == SideKind::kStrictMinus) {
      throw Error(ErrorCode::kNoContact, "shape " + std::to_string(i) + " is " +
                                             SideKindName(side.kind));
    }
    if (!side.touching()) {
      throw Error(ErrorCode::kNotSupporting, "shape " + std::to_string(i) + " is " +
                                                 SideKindName(side.kind));
    }
    const AffineForm form = AffineForm::From(h, shape.chart());
    const Vec* best = &side.witnesses.front();
    for (const Vec& w : side.witnesses) {
      if (std::abs(form(w)) < std::abs(form(*best))) best = &w;
    }
    cert.contacts.push_back(*best);
    cert.residual = std::max(cert.residual, side.kind == SideKind::kTouchPlus
                                                ? std::abs(side.lo)
                                                : std::abs(side.hi));
    cert.sides.push_back(std::move(side));
  }
  return cert;
}

void OrientTowards(SupportCertificate* cert, const ProjPoint& p) {
  if (cert->h.covector.dot(p.coords) >= 0.0) return;
  cert->h.covector = (-cert->h.covector).array() + 0.0;
  for (auto& s : cert->sides) {
    s.kind = Flip(s.kind);
    const double lo = s.lo;
    s.lo = -s.hi;
    s.hi = -lo;
  }
}

std::vector<double> TangencyResiduals(const Scene& scene, const Vec& covector,
                                      const std::vector<int>& side_signs) {
  std::vector<double> out(scene.shapes.size());
  for (size_t i = 0; i < scene.shapes.size(); ++i) {
    const SignedRange r = SignedDistanceRange(scene.shapes[i], covector);
    out[i] = side_signs[i] > 0 ? r.lo : r.hi;
  }
  return out;
}

SupportCertificate RefineSupport(const Scene& scene, const ProjHyperplane& h0,
                                 const RefineOptions& options) {
  const int n = scene.n;
  const AffineChart chart(h0.covector);
  std::vector<int> signs(scene.shapes.size());
  for (size_t i = 0; i < scene.shapes.size(); ++i) {
    const SignedRange r = SignedDistanceRange(scene.shapes[i], h0.covector);
    signs[i] = std::abs(r.lo) <= std::abs(r.hi) ? 1 : -1;
  }
  auto residuals = [&](const Vec& x) {
    return TangencyResiduals(scene, chart.LiftRaw(x), signs);
  };
  auto objective = [&](const Vec& x) {
    double sum = 0.0;
    for (double r : residuals(x)) sum += r * r;
    return std::isfinite(sum) ? sum : kInf;
  };

  Vec x = Vec::Zero(n);
  double best = objective(x);
  const double target = options.residual * options.residual;
  std::vector<double> step(static_cast<size_t>(n), 0.05);
  for (int iter = 0; iter < options.max_iter && best > target; ++iter) {
    const double before = best;
    for (int k = 0; k < n; ++k) {
      const double s = step[static_cast<size_t>(k)];
      auto along = [&](double t) {
        Vec y = x;
        y[k] += t;
        return objective(y);
      };
      const double t = GoldenSection(along, -s, s, 48);
      const double val = along(t);
      if (val < best) {
        x[k] += t;
        best = val;
      }
      step[static_cast<size_t>(k)] =
          std::abs(t) > 0.8 * s ? 2.0 * s : std::max(4.0 * std::abs(t), 1e-10);
    }
    // Slow progress means a curved valley; Gauss-Newton takes over.
    if (iter >= 3 && best > 0.5 * before) break;
  }

  for (int it = 0; it < options.newton_steps; ++it) {
    const std::vector<double> r = residuals(x);
    double rmax = 0.0;
    for (double v : r) rmax = std::max(rmax, std::abs(v));
    if (!std::isfinite(rmax) || rmax <= 1e-15) break;
    const Eigen::Index m = static_cast<Eigen::Index>(r.size());
    Eigen::MatrixXd jac(m, n);
    const double h = 1e-7;
    for (int k = 0; k < n; ++k) {
      Vec xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      const auto rp = residuals(xp);
      const auto rm = residuals(xm);
      for (Eigen::Index i = 0; i < m; ++i) {
        jac(i, k) = (rp[static_cast<size_t>(i)] - rm[static_cast<size_t>(i)]) / (2 * h);
      }
    }
    Eigen::VectorXd rhs(m);
    for (Eigen::Index i = 0; i < m; ++i) rhs[i] = -r[static_cast<size_t>(i)];
    const Eigen::VectorXd delta = jac.completeOrthogonalDecomposition().solve(rhs);
    if (!delta.allFinite()) break;
    double alpha = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 30; ++ls, alpha *= 0.5) {
      Vec y = x;
      for (int k = 0; k < n; ++k) y[k] += alpha * delta[k];
      const double val = objective(y);
      if (val < best) {
        x = y;
        best = val;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }

  const ProjHyperplane h{NormalizeKeepSign(chart.LiftRaw(x))};
  try {
    SupportCertificate cert = VerifySupport(scene, h, options.contact);
    double rmax = 0.0;
    for (double v : residuals(x)) rmax = std::max(rmax, std::abs(v));
    cert.residual = rmax;
    return cert;
  } catch (const Error& e) {
    throw Error(ErrorCode::kRefinementDiverged,
                "best residual " + std::to_string(std::sqrt(best)) + " (" + e.what() + ")");
  }
}

ExtremePointSet ExtremePointsOf(const DualRegionSample& sample) {
  ExtremePointSet out;
  std::vector<Vec> pts;
  for (size_t i = 0; i < sample.members.size(); ++i) {
    if (sample.surface_flags.empty() || sample.surface_flags[i]) {
      pts.push_back(sample.members[i]);
    }
  }
  if (pts.empty()) return out;
  const ExtremeSet ext = ExtremePoints(pts);
  out.low_dimensional = ext.affine_dim < sample.n();
  for (int i : ext.indices) out.points.push_back(pts[static_cast<size_t>(i)]);
  return out;
}

CalipersResult CalipersTangents(const Shape& a, const Shape& b,
                                const RefineOptions& refine, int circle_samples) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw Error(ErrorCode::kUnsupportedDimension, "calipers backend is planar");
  }
  CalipersResult out;
  const SupportPolygon pa(ConvexHull(a, circle_samples).support_vertices());
  const SupportPolygon pb(ConvexHull(b, circle_samples).support_vertices());
  if (Contains(pa, pb) || Contains(pb, pa)) {
    out.nested = true;
    return out;
  }
  bool touching = false;
  const std::vector<Vec> outer = CommonTangentSweep(pa, pb, 0.0, &touching);
  const std::vector<Vec> inner = CommonTangentSweep(pa, pb, std::numbers::pi, &touching);
  out.outer_candidates = static_cast<int>(outer.size());
  out.inner_candidates = static_cast<int>(inner.size());
  out.degenerate = touching || outer.size() != 2 ||
                   (inner.size() != 0 && inner.size() != 2);

  Scene pair;
  pair.n = 2;
  pair.shapes = {a, b};
  std::vector<Vec> candidates = outer;
  candidates.insert(candidates.end(), inner.begin(), inner.end());
  for (const Vec& lambda : candidates) {
    const ProjHyperplane h0{NormalizeKeepSign(lambda)};
    try {
      SupportCertificate cert = RefineSupport(pair, h0, refine);
      cert.backend = Backend::kCalipers;
      out.certificates.push_back(std::move(cert));
    } catch (const Error&) {
      try {
        SupportCertificate cert = VerifySupport(pair, h0, refine.contact);
        cert.backend = Backend::kCalipers;
        out.certificates.push_back(std::move(cert));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

Dedup DeduplicateCertificates(std::vector<SupportCertificate> certs, double angle) {
  std::stable_sort(certs.begin(), certs.end(), [](const auto& x, const auto& y) {
    if (x.residual != y.residual) return x.residual < y.residual;
    return LexLess(Normalize(x.h.covector), Normalize(y.h.covector));
  });
  Dedup out;
  for (auto& c : certs) {
    bool merged = false;
    for (size_t k = 0; k < out.kept.size(); ++k) {
      if (ProjectiveAngle(out.kept[k].h.covector, c.h.covector) < angle) {
        out.members[k].push_back(c.h.covector);
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.members.push_back({c.h.covector});
      out.kept.push_back(std::move(c));
    }
  }
  std::vector<size_t> order(out.kept.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    return LexLess(Normalize(out.kept[x].h.covector), Normalize(out.kept[y].h.covector));
  });
  Dedup sorted;
  for (size_t i : order) {
    sorted.kept.push_back(std::move(out.kept[i]));
    sorted.members.push_back(std::move(out.members[i]));
  }
  return sorted;
}

FindResult FindSupports(const Scene& scene, Backend backend,
                        const SupportOptions& options) {
  scene.Validate();
  FindResult out;
  out.backend = backend == Backend::kAuto
                    ? (scene.n == 2 ? Backend::kCalipers : Backend::kDualExtremal)
                    : backend;
  std::vector<SupportCertificate> raw;
  std::optional<ProjPoint> orient = options.orientation;

  switch (out.backend) {
    case Backend::kCalipers: {
      if (scene.n != 2) {
        throw Error(ErrorCode::kUnsupportedDimension, "calipers backend needs n = 2");
      }
      CalipersResult cal = CalipersTangents(scene.shapes[0], scene.shapes[1],
                                            options.refine, options.circle_samples);
      out.nested = cal.nested;
      out.degenerate = cal.degenerate;
      raw = std::move(cal.certificates);
      break;
    }
    case Backend::kOracle: {
      SweepResult sweep = BruteForceSupports(scene, options.oracle_grid, options.refine,
                                             options.tol.dedup_angle);
      out.raw_count = static_cast<int>(sweep.candidates.size());
      raw = std::move(sweep.clusters);
      break;
    }
    case Backend::kDualExtremal: {
      std::optional<ProjPoint> p = options.orientation;
      if (!p) {
        SearchResult search = SearchConditionPoint(scene, options.search_grid, options.condition);
        if (!search.accepted) {
          throw Error(ErrorCode::kConditionNotEstablished,
                      "no condition point found after " +
                          std::to_string(search.candidates_tested) + " candidates");
        }
        p = search.accepted->certificate.p;
      }
      out.condition_point = p;
      orient = p;
      const AutoSampleResult sampled = SampleHStarAuto(scene, *p, options.dual);
      out.boundedness = sampled.boundedness;
      const ExtremePointSet ext = ExtremePointsOf(sampled.sample);
      out.extreme_points = static_cast<int>(ext.points.size());
      out.low_dimensional = ext.low_dimensional;
      std::vector<std::optional<SupportCertificate>> results(ext.points.size());
      ParallelChunks(static_cast<long>(ext.points.size()), [&](long begin, long end, int) {
        for (long i = begin; i < end; ++i) {
          const Vec lambda = sampled.sample.Covector(ext.points[static_cast<size_t>(i)]);
          try {
            results[static_cast<size_t>(i)] =
                RefineSupport(scene, ProjHyperplane{NormalizeKeepSign(lambda)}, options.refine);
          } catch (const Error&) {
          }
        }
      });
      for (auto& r : results) {
        if (r) {
          r->backend = Backend::kDualExtremal;
          raw.push_back(std::move(*r));
        } else {
          ++out.failed_refinements;
        }
      }
      break;
    }
    case Backend::kAuto:
      break;
  }
  if (orient) {
    for (auto& c : raw) OrientTowards(&c, *orient);
  }
  if (out.backend != Backend::kOracle) out.raw_count = static_cast<int>(raw.size());
  out.certificates = DeduplicateCertificates(std::move(raw), options.tol.dedup_angle).kept;
  return out;
}

std::vector<FamilyCluster> FindFamilies(const std::vector<SupportCertificate>& certs,
                                        double family_angle) {
  const size_t m = certs.size();
  std::vector<int> parent(m);
  for (size_t i = 0; i < m; ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int i) {
    return parent[static_cast<size_t>(i)] == i ? i : parent[static_cast<size_t>(i)] = find(parent[static_cast<size_t>(i)]);
  };
  const double link = 5.0 * family_angle;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      if (ProjectiveAngle(certs[i].h.covector, certs[j].h.covector) <= link) {
        parent[static_cast<size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
      }
    }
  }
  std::map<int, std::vector<size_t>> groups;
  for (size_t i = 0; i < m; ++i) groups[find(static_cast<int>(i))].push_back(i);
  std::vector<FamilyCluster> out;
  for (const auto& [root, idx] : groups) {
    if (idx.size() < 2) continue;
    FamilyCluster cluster;
    for (size_t a : idx) {
      cluster.covectors.push_back(certs[a].h.covector);
      for (size_t b : idx) {
        cluster.diameter = std::max(cluster.diameter,
                                    ProjectiveAngle(certs[a].h.covector, certs[b].h.covector));
      }
    }
    if (cluster.diameter > family_angle) out.push_back(std::move(cluster));
  }
  return out;
}

CountResult CountSupports(const Scene& scene, const SupportOptions& options) {
  scene.Validate();
  CountResult out;
  SupportOptions opts = options;
  if (!opts.orientation) {
    SearchResult search = SearchConditionPoint(scene, opts.search_grid, opts.condition);
    if (search.accepted) opts.orientation = search.accepted->certificate.p;
  }
  out.condition_point = opts.orientation;
  FindResult found;
  try {
    found = FindSupports(scene, Backend::kAuto, opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kConditionNotEstablished) throw;
    found = FindSupports(scene, Backend::kOracle, opts);
    out.fell_back_to_oracle = true;
  }
  out.backend = found.backend;
  out.raw_count = found.raw_count;
  out.count = static_cast<int>(found.certificates.size());
  out.families = FindFamilies(found.certificates, opts.tol.family_angle);
  out.continuum_family = !out.families.empty();
  for (const auto& c : found.certificates) ++out.side_histogram[c.SideVector()];
  out.certificates = std::move(found.certificates);
  return out;
}

}  // namespace multitangent
