// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "hull.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace multitangent {
namespace {

bool LexLess(const Vec& a, const Vec& b) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

double Cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a,
              const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

std::vector<int> MonotoneChain(const std::vector<Eigen::Vector2d>& pts,
                               double eps) {
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pts[a].x() != pts[b].x()) return pts[a].x() < pts[b].x();
    if (pts[a].y() != pts[b].y()) return pts[a].y() < pts[b].y();
    return a < b;
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](int a, int b) { return pts[a] == pts[b]; }),
              order.end());
  if (order.size() < 3) return order;
  std::vector<int> hull(2 * order.size());
  size_t k = 0;
  for (int idx : order) {
    while (k >= 2 && Cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx]) <= eps) --k;
    hull[k++] = idx;
  }
  for (size_t i = order.size() - 1, t = k + 1; i-- > 0;) {
    const int idx = order[i];
    while (k >= t && Cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx]) <= eps) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);
  return hull;
}

// Incremental hull in R^3 on points normalized to the unit box.
class Hull3 {
 public:
  Hull3(const std::vector<Eigen::Vector3d>& pts, double eps)
      : pts_(pts), eps_(eps) {}

  // Returns false if the points are coplanar.
  bool Build() {
    const int n = static_cast<int>(pts_.size());
    if (n < 4) return false;
    int i0 = 0;
    for (int i = 1; i < n; ++i) {
      if (std::tie(pts_[i].x(), pts_[i].y(), pts_[i].z()) <
          std::tie(pts_[i0].x(), pts_[i0].y(), pts_[i0].z())) {
        i0 = i;
      }
    }
    int i1 = Farthest([&](int i) { return (pts_[i] - pts_[i0]).norm(); });
    if ((pts_[i1] - pts_[i0]).norm() <= eps_) return false;
    const Eigen::Vector3d dir = (pts_[i1] - pts_[i0]).normalized();
    int i2 = Farthest([&](int i) {
      return (pts_[i] - pts_[i0]).cross(dir).norm();
    });
    if ((pts_[i2] - pts_[i0]).cross(dir).norm() <= eps_) return false;
    int i3 = Farthest([&](int i) { return std::abs(Orient(i0, i1, i2, i)); });
    if (std::abs(Orient(i0, i1, i2, i3)) <= eps_) return false;

    interior_ = (pts_[i0] + pts_[i1] + pts_[i2] + pts_[i3]) / 4.0;
    AddOriented(i0, i1, i2);
    AddOriented(i0, i1, i3);
    AddOriented(i0, i2, i3);
    AddOriented(i1, i2, i3);

    for (int p = 0; p < n; ++p) {
      if (p == i0 || p == i1 || p == i2 || p == i3) continue;
      Insert(p);
    }
    return true;
  }

  // Hull vertices whose incident face normals span R^3.
  std::vector<int> StrictVertices() const {
    std::unordered_map<int, std::vector<Eigen::Vector3d>> normals;
    for (const Face& f : faces_) {
      if (!f.alive) continue;
      const Eigen::Vector3d nrm = Normal(f);
      for (int v : f.v) normals[v].push_back(nrm);
    }
    std::vector<int> out;
    for (auto& [v, list] : normals) {
      if (SpansSpace(list)) out.push_back(v);
    }
    return out;
  }

 private:
  struct Face {
    std::array<int, 3> v;
    bool alive = true;
  };

  template <typename F>
  int Farthest(F&& metric) const {
    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i < static_cast<int>(pts_.size()); ++i) {
      const double val = metric(i);
      if (val > best_val) {
        best_val = val;
        best = i;
      }
    }
    return best;
  }

  double Orient(int a, int b, int c, int d) const {
    return Orient(a, b, c, pts_[d]);
  }
  double Orient(int a, int b, int c, const Eigen::Vector3d& d) const {
    return (pts_[b] - pts_[a]).cross(pts_[c] - pts_[a]).dot(d - pts_[a]);
  }

  Eigen::Vector3d Normal(const Face& f) const {
    return (pts_[f.v[1]] - pts_[f.v[0]])
        .cross(pts_[f.v[2]] - pts_[f.v[0]])
        .normalized();
  }

  static bool SpansSpace(const std::vector<Eigen::Vector3d>& normals) {
    // Two distinct normals span a plane; a third off that plane spans R^3.
    const Eigen::Vector3d& a = normals.front();
    for (const auto& b : normals) {
      const Eigen::Vector3d ab = a.cross(b);
      if (ab.norm() <= 1e-9) continue;
      for (const auto& c : normals) {
        if (std::abs(ab.dot(c)) > 1e-9) return true;
      }
    }
    return false;
  }

  static uint64_t EdgeKey(int a, int b) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
           static_cast<uint32_t>(b);
  }

  void AddOriented(int a, int b, int c) {
    if (Orient(a, b, c, interior_) > 0) std::swap(b, c);
    AddFace(a, b, c);
  }

  void AddFace(int a, int b, int c) {
    const int id = static_cast<int>(faces_.size());
    faces_.push_back(Face{{a, b, c}});
    edges_[EdgeKey(a, b)] = id;
    edges_[EdgeKey(b, c)] = id;
    edges_[EdgeKey(c, a)] = id;
  }

  void Insert(int p) {
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
      if (!faces_[f].alive) continue;
      const auto& v = faces_[f].v;
      if (Orient(v[0], v[1], v[2], p) > eps_) visible.push_back(f);
    }
    if (visible.empty()) return;
    for (int f : visible) faces_[f].alive = false;
    std::vector<std::pair<int, int>> horizon;
    for (int f : visible) {
      const auto& v = faces_[f].v;
      for (int e = 0; e < 3; ++e) {
        const int a = v[e];
        const int b = v[(e + 1) % 3];
        auto it = edges_.find(EdgeKey(b, a));
        if (it != edges_.end() && faces_[it->second].alive) {
          horizon.emplace_back(a, b);
        }
      }
    }
    for (int f : visible) {
      const auto& v = faces_[f].v;
      for (int e = 0; e < 3; ++e) {
        auto it = edges_.find(EdgeKey(v[e], v[(e + 1) % 3]));
        if (it != edges_.end() && it->second == f) edges_.erase(it);
      }
    }
    for (const auto& [a, b] : horizon) AddFace(a, b, p);
  }

  const std::vector<Eigen::Vector3d>& pts_;
  double eps_;
  Eigen::Vector3d interior_;
  std::vector<Face> faces_;
  std::unordered_map<uint64_t, int> edges_;
};

// Orthonormal basis of the affine span of the points (columns), at most 3.
Eigen::MatrixXd SpanBasis(const std::vector<Eigen::VectorXd>& centered,
                          double eps) {
  const Eigen::Index d = centered.front().size();
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
  for (const auto& p : centered) mean += p;
  mean /= static_cast<double>(centered.size());
  Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(d, d);
  for (const auto& p : centered) scatter += (p - mean) * (p - mean).transpose();
  scatter /= static_cast<double>(centered.size());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(scatter);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = d - 1; k >= 0; --k) {
    if (std::sqrt(std::max(0.0, eig.eigenvalues()[k])) > eps) keep.push_back(k);
  }
  Eigen::MatrixXd basis(d, static_cast<Eigen::Index>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) {
    basis.col(static_cast<Eigen::Index>(j)) = eig.eigenvectors().col(keep[j]);
  }
  return basis;
}

}  // namespace

std::vector<int> ConvexHull2D(std::span<const Vec> points) {
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(points.size());
  for (const Vec& p : points) pts.emplace_back(p[0], p[1]);
  double extent = 0.0;
  for (const auto& p : pts) extent = std::max(extent, p.cwiseAbs().maxCoeff());
  const double eps = 1e-13 * std::max(1.0, extent * extent);
  return MonotoneChain(pts, eps);
}

ExtremeSet ExtremePoints(std::span<const Vec> points) {
  ExtremeSet out;
  if (points.empty()) return out;
  const Eigen::Index d = points.front().size();
  if (d < 1 || d > 3) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "extreme points supported for dimensions 1..3");
  }
  // Normalize to the unit box around the centroid.
  Eigen::VectorXd lo = points.front();
  Eigen::VectorXd hi = points.front();
  for (const Vec& p : points) {
    lo = lo.cwiseMin(Eigen::VectorXd(p));
    hi = hi.cwiseMax(Eigen::VectorXd(p));
  }
  const Eigen::VectorXd mid = (lo + hi) / 2.0;
  const double scale = std::max((hi - lo).maxCoeff() / 2.0, 1e-300);
  std::vector<Eigen::VectorXd> centered;
  centered.reserve(points.size());
  for (const Vec& p : points) centered.push_back((Eigen::VectorXd(p) - mid) / scale);

  constexpr double kEps = 1e-11;
  std::vector<int> hull;
  const Eigen::MatrixXd basis = SpanBasis(centered, 1e-9);
  out.affine_dim = static_cast<int>(basis.cols());
  if (out.affine_dim == 0) {
    hull.push_back(0);
  } else if (out.affine_dim == 1) {
    int lo_i = 0;
    int hi_i = 0;
    double lo_v = 0.0;
    double hi_v = 0.0;
    for (size_t i = 0; i < centered.size(); ++i) {
      const double t = basis.col(0).dot(centered[i]);
      if (i == 0 || t < lo_v) { lo_v = t; lo_i = static_cast<int>(i); }
      if (i == 0 || t > hi_v) { hi_v = t; hi_i = static_cast<int>(i); }
    }
    hull = {lo_i, hi_i};
  } else if (out.affine_dim == 2) {
    std::vector<Eigen::Vector2d> proj;
    proj.reserve(centered.size());
    for (const auto& p : centered) {
      proj.emplace_back(basis.col(0).dot(p), basis.col(1).dot(p));
    }
    hull = MonotoneChain(proj, kEps);
  } else {
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(centered.size());
    for (const auto& p : centered) pts.emplace_back(p[0], p[1], p[2]);
    Hull3 h(pts, kEps);
    if (!h.Build()) {
      throw Error(ErrorCode::kInvalidArgument, "degenerate 3d hull input");
    }
    hull = h.StrictVertices();
  }
  std::sort(hull.begin(), hull.end(), [&](int a, int b) {
    return LexLess(points[a], points[b]);
  });
  hull.erase(std::unique(hull.begin(), hull.end(),
                         [&](int a, int b) { return points[a] == points[b]; }),
             hull.end());
  out.indices = std::move(hull);
  return out;
}

}  // namespace multitangent
