// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "bitangents.hpp"

#include <algorithm>
#include <cmath>

#include "hull.hpp"

namespace multitangent {

std::vector<BitangentLine> SelfBitangents(const Shape& loop, int index,
                                          double depth_fraction) {
  if (loop.dim() != 2 || loop.vertices().size() < 3) {
    throw Error(ErrorCode::kInvalidArgument, "self bitangents need a planar loop");
  }
  const std::vector<Vec>& v = loop.vertices();
  const int m = static_cast<int>(v.size());
  std::vector<int> hull = ConvexHull2D(v);
  const double min_depth = depth_fraction * loop.Diameter();
  // Walk the hull in loop order so each bridge spans a forward arc.
  if (m >= 3) {
    const double area = [&] {
      double s = 0.0;
      for (int k = 0; k < m; ++k) {
        const Vec& p = v[static_cast<size_t>(k)];
        const Vec& q = v[static_cast<size_t>((k + 1) % m)];
        s += p[0] * q[1] - q[0] * p[1];
      }
      return s;
    }();
    if (area < 0.0) std::reverse(hull.begin(), hull.end());
  }
  std::vector<BitangentLine> out;
  const size_t h = hull.size();
  for (size_t k = 0; k < h && h >= 2; ++k) {
    const int i = hull[k];
    const int j = hull[(k + 1) % h];
    const int gap = ((j - i) % m + m) % m;
    if (gap <= 1) continue;
    const Vec& p = v[static_cast<size_t>(i)];
    const Vec& q = v[static_cast<size_t>(j)];
    Vec lambda(3);
    lambda << p[0] * q[1] - p[1] * q[0], p[1] - q[1], q[0] - p[0];
    const double scale = std::hypot(lambda[1], lambda[2]);
    if (scale <= 0.0) continue;
    double depth = 0.0;
    for (int t = 1; t < gap; ++t) {
      const Vec& x = v[static_cast<size_t>((i + t) % m)];
      depth = std::max(depth, std::abs(lambda[0] + lambda[1] * x[0] + lambda[2] * x[1]) / scale);
    }
    if (depth <= min_depth) continue;
    BitangentLine line;
    line.h = ProjHyperplane::FromCovector(lambda);
    line.self = true;
    line.a = line.b = index;
    line.contacts = {p, q};
    out.push_back(std::move(line));
  }
  return out;
}

BitangentTally CurveBitangents(const std::vector<Shape>& ovals,
                               const std::vector<std::pair<int, int>>& pairs,
                               const SupportOptions& options) {
  BitangentTally tally;
  tally.components = static_cast<int>(ovals.size());
  std::vector<std::pair<int, int>> todo = pairs;
  if (todo.empty()) {
    for (int a = 0; a < tally.components; ++a) {
      for (int b = a + 1; b < tally.components; ++b) todo.emplace_back(a, b);
    }
  }
  for (const auto& [a, b] : todo) {
    if (a < 0 || b < 0 || a >= tally.components || b >= tally.components || a == b) {
      throw Error(ErrorCode::kInvalidArgument,
                  "oval pair " + std::to_string(a) + "," + std::to_string(b) +
                      " out of range (" + std::to_string(tally.components) + " ovals)");
    }
    const CalipersResult cal =
        CalipersTangents(ovals[static_cast<size_t>(a)], ovals[static_cast<size_t>(b)],
                         options.refine, options.circle_samples);
    const auto kept = DeduplicateCertificates(cal.certificates, options.tol.dedup_angle).kept;
    tally.pairs.push_back({a, b, static_cast<int>(kept.size()), cal.nested, cal.degenerate});
    for (const auto& cert : kept) {
      BitangentLine line;
      line.h = ProjHyperplane::FromCovector(cert.h.covector);
      line.a = a;
      line.b = b;
      line.contacts = cert.contacts;
      tally.lines.push_back(std::move(line));
    }
    tally.cross_pairs += static_cast<int>(kept.size());
  }
  for (int k = 0; k < tally.components; ++k) {
    auto self = SelfBitangents(ovals[static_cast<size_t>(k)], k);
    tally.self += static_cast<int>(self.size());
    for (auto& line : self) tally.lines.push_back(std::move(line));
  }
  tally.total = tally.cross_pairs + tally.self;
  return tally;
}

}  // namespace multitangent
