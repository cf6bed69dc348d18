// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <utility>

namespace multitangent {
namespace {

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

struct View {
  double xmin, ymin, xmax, ymax, scale;
  double X(double x) const { return (x - xmin) * scale; }
  double Y(double y) const { return (ymax - y) * scale; }
};

// Segment of {a + b x + c y = 0} inside the view rectangle.
std::optional<std::pair<Eigen::Vector2d, Eigen::Vector2d>> Clip(const Vec& l, const View& v) {
  const double a = l[0], b = l[1], c = l[2];
  std::vector<Eigen::Vector2d> hits;
  auto add = [&](double x, double y) {
    const double eps = 1e-12 * std::max(1.0, v.xmax - v.xmin);
    if (x < v.xmin - eps || x > v.xmax + eps || y < v.ymin - eps || y > v.ymax + eps) return;
    for (const auto& h : hits) {
      if ((h - Eigen::Vector2d(x, y)).norm() <= eps) return;
    }
    hits.emplace_back(x, y);
  };
  if (std::abs(c) > 1e-15) {
    add(v.xmin, -(a + b * v.xmin) / c);
    add(v.xmax, -(a + b * v.xmax) / c);
  }
  if (std::abs(b) > 1e-15) {
    add(-(a + c * v.ymin) / b, v.ymin);
    add(-(a + c * v.ymax) / b, v.ymax);
  }
  if (hits.size() < 2) return std::nullopt;
  return std::make_pair(hits[0], hits[1]);
}

std::string PolygonPath(const std::vector<Vec>& pts, const View& v, bool close) {
  std::string d;
  for (size_t k = 0; k < pts.size(); ++k) {
    d += (k == 0 ? "M" : " L") + Fmt(v.X(pts[k][0])) + "," + Fmt(v.Y(pts[k][1]));
  }
  if (close) d += " Z";
  return d;
}

}  // namespace

std::string RenderSvg(const Scene& scene, const std::vector<SupportCertificate>& certs,
                      const SvgOptions& options) {
  if (scene.n != 2) {
    throw Error(ErrorCode::kRenderUnsupported, "SVG output needs a planar scene");
  }
  double xmin = 1e300, ymin = 1e300, xmax = -1e300, ymax = -1e300;
  auto grow = [&](const Vec& p) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  };
  for (const Shape& s : scene.shapes) {
    Vec lo, hi;
    s.BoundingBox(&lo, &hi);
    grow(lo);
    grow(hi);
  }
  const double extent = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double pad = options.padding * extent;
  View v{xmin - pad, ymin - pad, xmax + pad, ymax + pad, 0.0};
  v.scale = options.width / (v.xmax - v.xmin);
  const double height = (v.ymax - v.ymin) * v.scale;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(options.width) +
         "\" height=\"" + Fmt(height) + "\" viewBox=\"0 0 " + std::to_string(options.width) +
         " " + Fmt(height) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const Shape& s : scene.shapes) {
    std::string d;
    if (s.kind() == ShapeKind::kCircle) {
      const double r = s.radius() * v.scale;
      const double cx = v.X(s.center()[0]);
      const double cy = v.Y(s.center()[1]);
      d = "M" + Fmt(cx - r) + "," + Fmt(cy) + " A" + Fmt(r) + "," + Fmt(r) + " 0 1 0 " +
          Fmt(cx + r) + "," + Fmt(cy) + " A" + Fmt(r) + "," + Fmt(r) + " 0 1 0 " +
          Fmt(cx - r) + "," + Fmt(cy) + " Z";
    } else if (s.kind() == ShapeKind::kPolytope) {
      d = PolygonPath(s.support_vertices(), v, s.support_vertices().size() > 2);
    } else {
      d = PolygonPath(s.vertices(), v, true);
    }
    const bool filled = s.kind() == ShapeKind::kPolytope || s.filled();
    out += "  <path d=\"" + d + "\" fill=\"" + (filled ? "#dde6f0" : "none") +
           "\" stroke=\"#1f4e79\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& cert : certs) {
    if (auto seg = Clip(cert.h.covector, v)) {
      out += "  <line x1=\"" + Fmt(v.X(seg->first.x())) + "\" y1=\"" + Fmt(v.Y(seg->first.y())) +
             "\" x2=\"" + Fmt(v.X(seg->second.x())) + "\" y2=\"" +
             Fmt(v.Y(seg->second.y())) + "\" stroke=\"#c0392b\" stroke-width=\"1\"/>\n";
    }
  }
  for (const auto& cert : certs) {
    for (const Vec& c : cert.contacts) {
      out += "  <circle cx=\"" + Fmt(v.X(c[0])) + "\" cy=\"" + Fmt(v.Y(c[1])) +
             "\" r=\"3\" fill=\"#c0392b\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace multitangent
