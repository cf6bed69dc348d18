// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "implicit_curve.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace multitangent {
namespace {

double IntPow(double base, int exp) {
  double out = 1.0;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

}  // namespace

Polynomial2::Polynomial2(std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.i < 0 || t.j < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative exponent");
    }
    if (t.c != 0.0) terms_.push_back(t);
  }
}

double Polynomial2::operator()(double x, double y) const {
  double sum = 0.0;
  for (const Term& t : terms_) sum += t.c * IntPow(x, t.i) * IntPow(y, t.j);
  return sum;
}

void Polynomial2::Gradient(double x, double y, double* gx, double* gy) const {
  *gx = 0.0;
  *gy = 0.0;
  for (const Term& t : terms_) {
    if (t.i > 0) *gx += t.c * t.i * IntPow(x, t.i - 1) * IntPow(y, t.j);
    if (t.j > 0) *gy += t.c * t.j * IntPow(x, t.i) * IntPow(y, t.j - 1);
  }
}

std::vector<Shape> IngestImplicitCurve(const Polynomial2& f, const BBox2& box,
                                       const IngestOptions& options) {
  const int res = options.resolution;
  if (res < 16) {
    throw Error(ErrorCode::kInvalidArgument, "resolution must be at least 16");
  }
  if (f.zero()) {
    throw Error(ErrorCode::kInvalidArgument, "polynomial is zero");
  }
  if (!(box.xmax > box.xmin) || !(box.ymax > box.ymin)) {
    throw Error(ErrorCode::kInvalidArgument, "empty bounding box");
  }
  const double hx = (box.xmax - box.xmin) / (res - 1);
  const double hy = (box.ymax - box.ymin) / (res - 1);
  auto X = [&](double i) { return box.xmin + i * hx; };
  auto Y = [&](double j) { return box.ymin + j * hy; };

  std::vector<double> value(static_cast<size_t>(res) * res);
  auto at = [&](int i, int j) -> double& {
    return value[static_cast<size_t>(j) * res + i];
  };
  bool any_pos = false;
  bool any_neg = false;
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      at(i, j) = f(X(i), Y(j));
      (at(i, j) >= 0.0 ? any_pos : any_neg) = true;
    }
  }
  if (!(any_pos && any_neg)) {
    throw Error(ErrorCode::kNoComponents, "no sign change on the sample grid");
  }
  auto positive = [&](int i, int j) { return at(i, j) >= 0.0; };

  for (int k = 0; k + 1 < res; ++k) {
    if (positive(k, 0) != positive(k + 1, 0) ||
        positive(k, res - 1) != positive(k + 1, res - 1) ||
        positive(0, k) != positive(0, k + 1) ||
        positive(res - 1, k) != positive(res - 1, k + 1)) {
      throw Error(ErrorCode::kOpenComponent,
                  "zero set reaches the bounding box boundary");
    }
  }

  // Edge ids: horizontal (i,j)-(i+1,j) first, then vertical (i,j)-(i,j+1).
  const int num_h = (res - 1) * res;
  auto hedge = [&](int i, int j) { return j * (res - 1) + i; };
  auto vedge = [&](int i, int j) { return num_h + j * res + i; };
  const int num_edges = num_h + res * (res - 1);
  std::vector<std::array<int, 2>> links(static_cast<size_t>(num_edges), {-1, -1});
  auto link = [&](int a, int b) {
    auto add = [&](int from, int to) {
      auto& slot = links[static_cast<size_t>(from)];
      (slot[0] < 0 ? slot[0] : slot[1]) = to;
    };
    add(a, b);
    add(b, a);
  };

  for (int j = 0; j + 1 < res; ++j) {
    for (int i = 0; i + 1 < res; ++i) {
      const bool s0 = positive(i, j);
      const bool s1 = positive(i + 1, j);
      const bool s2 = positive(i + 1, j + 1);
      const bool s3 = positive(i, j + 1);
      const int e[4] = {hedge(i, j), vedge(i + 1, j), hedge(i, j + 1), vedge(i, j)};
      const bool cross[4] = {s0 != s1, s1 != s2, s2 != s3, s3 != s0};
      const int count = cross[0] + cross[1] + cross[2] + cross[3];
      if (count == 2) {
        int first = -1;
        for (int k = 0; k < 4; ++k) {
          if (!cross[k]) continue;
          if (first < 0) {
            first = e[k];
          } else {
            link(first, e[k]);
          }
        }
      } else if (count == 4) {
        // Saddle: the cell-center sign decides which corners connect.
        const bool center = f(X(i + 0.5), Y(j + 0.5)) >= 0.0;
        if (center == s0) {
          link(e[0], e[1]);
          link(e[2], e[3]);
        } else {
          link(e[0], e[3]);
          link(e[1], e[2]);
        }
      }
    }
  }

  const double diag = std::hypot(box.xmax - box.xmin, box.ymax - box.ymin);
  const double eps_curve = options.relative_tolerance * diag;
  auto crossing_point = [&](int id) {
    double x0, y0, x1, y1, v0, v1;
    if (id < num_h) {
      const int i = id % (res - 1);
      const int j = id / (res - 1);
      x0 = X(i); y0 = Y(j); x1 = X(i + 1); y1 = y0;
      v0 = at(i, j); v1 = at(i + 1, j);
    } else {
      const int local = id - num_h;
      const int i = local % res;
      const int j = local / res;
      x0 = X(i); y0 = Y(j); x1 = x0; y1 = Y(j + 1);
      v0 = at(i, j); v1 = at(i, j + 1);
    }
    const double t = v0 / (v0 - v1);
    double x = x0 + t * (x1 - x0);
    double y = y0 + t * (y1 - y0);
    for (int step = 0; step < 4; ++step) {
      const double fv = f(x, y);
      if (std::abs(fv) <= eps_curve * 1e-3) break;
      double gx, gy;
      f.Gradient(x, y, &gx, &gy);
      const double g2 = gx * gx + gy * gy;
      if (!(g2 > 0.0)) break;
      x -= fv * gx / g2;
      y -= fv * gy / g2;
    }
    Vec p(2);
    p << x, y;
    return p;
  };

  std::vector<char> visited(static_cast<size_t>(num_edges), 0);
  std::vector<Shape> loops;
  for (int start = 0; start < num_edges; ++start) {
    if (visited[static_cast<size_t>(start)] || links[static_cast<size_t>(start)][0] < 0) {
      continue;
    }
    std::vector<Vec> pts;
    int prev = -1;
    int cur = start;
    while (!visited[static_cast<size_t>(cur)]) {
      visited[static_cast<size_t>(cur)] = 1;
      Vec p = crossing_point(cur);
      if (pts.empty() || (p - pts.back()).norm() > 0.0) pts.push_back(std::move(p));
      const auto& nb = links[static_cast<size_t>(cur)];
      const int next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
      if (cur < 0) {
        throw Error(ErrorCode::kOpenComponent, "contour does not close");
      }
    }
    while (pts.size() > 1 && (pts.front() - pts.back()).norm() == 0.0) pts.pop_back();
    if (pts.size() < 3) continue;
    double area = 0.0;
    for (size_t k = 0; k < pts.size(); ++k) {
      const Vec& a = pts[k];
      const Vec& b = pts[(k + 1) % pts.size()];
      area += a[0] * b[1] - a[1] * b[0];
    }
    if (area < 0.0) std::reverse(pts.begin(), pts.end());
    loops.push_back(Shape::Loop(std::move(pts)));
  }
  if (loops.empty()) {
    throw Error(ErrorCode::kNoComponents, "no closed component found");
  }
  return loops;
}

}  // namespace multitangent
