// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_SCENE_IO_HPP
#define MULTITANGENT_CORE_SCENE_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dual_region.hpp"
#include "implicit_curve.hpp"
#include "support.hpp"

namespace multitangent {

using Json = nlohmann::ordered_json;

/// Scene files:
///   {"n": 2, "label": "...", "shapes": [
///     {"kind": "circle", "center": [x, y], "radius": r},
///     {"kind": "ball", "center": [...], "radius": r},
///     {"kind": "polytope", "vertices": [[...], ...]},
///     {"kind": "loop", "points": [[...], ...]},
///     {"kind": "region", "points": [[...], ...], "filled": true},
///     {"kind": "implicit", "coeffs": {"i,j": c, ...},
///      "bbox": [xmin, ymin, xmax, ymax], "resolution": k,
///      "component": 0}]}
/// Implicit entries expand at load into one Loop per component, or only the
/// listed component indices when "component" (integer or array) is given.
/// Malformed input throws kInvalidScene naming the offending field; JSON
/// syntax errors carry the line and column.
Scene SceneFromJson(const Json& doc);
Scene ParseScene(const std::string& text);
Scene LoadScene(const std::string& path);

/// Implicit entries are written back as the loops they expanded to, so
/// save(load(f)) reloads to the same scene.
Json SceneToJson(const Scene& scene);

/// Quartic files: {"label": "...", "coeffs": {"i,j": c, ...},
/// "bbox": [xmin, ymin, xmax, ymax], "resolution": 512}.
struct CurveSpec {
  std::string label;
  Polynomial2 f;
  BBox2 box;
  int resolution = 512;
};

CurveSpec CurveSpecFromJson(const Json& doc);
CurveSpec LoadCurveSpec(const std::string& path);
Polynomial2 PolynomialFromJson(const Json& coeffs, const std::string& field);
Json PolynomialToJson(const Polynomial2& f);

Json VecToJson(const Vec& v);
Json CertificateToJson(const SupportCertificate& cert);

/// One row per member: chart coordinates, then the normalized covector.
void WriteDualCsv(const DualRegionSample& sample, std::ostream& out);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_SCENE_IO_HPP
