// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTITANGENT_CORE_SVG_HPP
#define MULTITANGENT_CORE_SVG_HPP

#include <string>
#include <vector>

#include "support.hpp"

namespace multitangent {

struct SvgOptions {
  int width = 800;
  double padding = 0.15;  // fraction of the scene extent
};

/// Shapes as <path> elements, one clipped <line> per certificate and one
/// <circle> dot per contact. Output depends only on the inputs. Throws
/// kRenderUnsupported unless the scene is planar.
std::string RenderSvg(const Scene& scene, const std::vector<SupportCertificate>& certs,
                      const SvgOptions& options = {});

}  // namespace multitangent

#endif  // MULTITANGENT_CORE_SVG_HPP
