// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multitangent/multitangent.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitCondition = 2;
constexpr int kExitScene = 3;

int ExitCode(mt_status status) {
  switch (status) {
    case MT_OK: return kExitOk;
    case MT_ERR_CONDITION_NOT_ESTABLISHED: return kExitCondition;
    case MT_ERR_SCENE: return kExitScene;
    default: return kExitFailure;
  }
}

std::vector<double> ParsePoint(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument(text);
    out.push_back(v);
  }
  return out;
}

class Session {
 public:
  explicit Session(mt_options options) : options_(options) {}
  ~Session() {
    mt_result_free(result_);
    mt_scene_free(scene_);
  }

  // Scene load failures (including unreadable files) are scene errors.
  int Load(const std::string& path) {
    const mt_status s = mt_scene_load_file(path.c_str(), &scene_);
    if (s != MT_OK) {
      std::cerr << "error: " << mt_last_error() << "\n";
      return kExitScene;
    }
    return kExitOk;
  }

  // Prints the report (if any) and the diagnostic, returns the exit code.
  int Emit(mt_status status, const std::string& out_path = "") {
    if (result_) {
      std::cout << mt_result_json(result_);
      if (!out_path.empty() && mt_result_write(result_, out_path.c_str()) != MT_OK) {
        std::cerr << "error: " << mt_last_error() << "\n";
        return kExitFailure;
      }
    }
    if (status != MT_OK) std::cerr << "error: " << mt_last_error() << "\n";
    return ExitCode(status);
  }

  mt_scene* scene() { return scene_; }
  mt_result** result() { return &result_; }
  const mt_options* options() const { return &options_; }

 private:
  mt_options options_;
  mt_scene* scene_ = nullptr;
  mt_result* result_ = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Common supporting hyperplanes of n closed sets in RP^n"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(mt_version()));

  mt_options options;
  mt_options_default(&options);
  bool no_timings = false;
  int threads = 0;
  app.add_flag("--no-timings", no_timings, "Omit wall-clock timings from reports");
  app.add_option("--threads", threads, "Worker cap (sets MULTITANGENT_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--search-grid", options.search_grid, "Condition point search grid")
      ->check(CLI::Range(8, 1 << 16));
  app.add_option("--resolution", options.dual_resolution, "Dual raster cells per axis; curve grid for bitangents")
      ->check(CLI::Range(8, 1 << 14));
  app.add_option("--oracle-grid", options.oracle_grid, "Oracle angular grid")
      ->check(CLI::Range(8, 1 << 20));
  app.add_option("--circle-samples", options.circle_samples, "Polygon size for analytic hulls")
      ->check(CLI::Range(8, 1 << 20));
  app.add_option("--max-iter", options.max_iter, "Refinement iteration cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--clearance-floor", options.clearance_floor)->check(CLI::PositiveNumber);
  app.add_option("--dedup-angle", options.dedup_angle)->check(CLI::PositiveNumber);
  app.add_option("--family-angle", options.family_angle)->check(CLI::PositiveNumber);
  app.add_option("--contact-tol", options.contact_tolerance)->check(CLI::PositiveNumber);

  std::string scene_path, point_text, backend = "auto", out_path, svg_path, csv_path;
  std::string quartic_path, pairs = "all";

  auto* condition = app.add_subcommand("condition", "Check or search for a condition point");
  condition->add_option("--scene", scene_path)->required();
  condition->add_option("--p", point_text, "Point x,y[,z] (affine) or homogeneous");
  condition->add_option("--dirs", options.directions, "Sampled hyperplanes through p")
      ->check(CLI::Range(64, 1 << 24));

  auto* supports = app.add_subcommand("supports", "Find common supporting hyperplanes");
  supports->add_option("--scene", scene_path)->required();
  supports->add_option("--backend", backend)
      ->check(CLI::IsMember({"auto", "dual", "calipers", "oracle"}));
  supports->add_option("--out", out_path, "Write the JSON report here");
  supports->add_option("--svg", svg_path, "Write an SVG figure (n = 2)");

  auto* count = app.add_subcommand("count", "Count distinct supports and families");
  count->add_option("--scene", scene_path)->required();
  count->add_option("--out", out_path);

  auto* bitangents = app.add_subcommand("bitangents", "Bitangents of an implicit plane curve");
  bitangents->add_option("--quartic", quartic_path)->required();
  bitangents->add_option("--pairs", pairs, "all or i,j (0-based ovals)");
  bitangents->add_option("--out", out_path);

  auto* dual_dump = app.add_subcommand("dual-dump", "Write the sampled dual region as CSV");
  dual_dump->add_option("--scene", scene_path)->required();
  dual_dump->add_option("--p", point_text);
  dual_dump->add_option("--csv", csv_path)->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force hyperplane sweep");
  oracle->add_option("--scene", scene_path)->required();
  oracle->add_option("--out", out_path);

  auto* conjecture = app.add_subcommand("conjecture", "Experimental interiority flags");
  conjecture->add_option("--scene", scene_path)->required();
  conjecture->add_option("--samples", options.conjecture_samples)
      ->check(CLI::Range(1000, 1 << 24));

  CLI11_PARSE(app, argc, argv);

  if (threads > 0) setenv("MULTITANGENT_THREADS", std::to_string(threads).c_str(), 1);
  options.include_timings = no_timings ? 0 : 1;
  if (backend == "dual") options.backend = MT_BACKEND_DUAL;
  if (backend == "calipers") options.backend = MT_BACKEND_CALIPERS;
  if (backend == "oracle") options.backend = MT_BACKEND_ORACLE;

  std::optional<std::vector<double>> point;
  if (!point_text.empty()) {
    try {
      point = ParsePoint(point_text);
    } catch (const std::exception&) {
      std::cerr << "error: --p expects comma-separated numbers, got '" << point_text << "'\n";
      return kExitFailure;
    }
  }
  const double* p = point ? point->data() : nullptr;
  const size_t p_len = point ? point->size() : 0;

  Session session(options);
  if (*bitangents) {
    const mt_status s = mt_curve_bitangents(quartic_path.c_str(), pairs.c_str(),
                                            options.dual_resolution, session.options(),
                                            session.result());
    return session.Emit(s, out_path);
  }
  if (const int rc = session.Load(scene_path)) return rc;

  if (*condition) {
    return session.Emit(
        mt_check_condition(session.scene(), p, p_len, session.options(), session.result()));
  }
  if (*supports) {
    const mt_status s = mt_find_supports(session.scene(), session.options(), session.result());
    const int rc = session.Emit(s, out_path);
    if (rc == kExitOk && !svg_path.empty()) {
      const mt_status r = mt_render_svg(session.scene(), *session.result(), svg_path.c_str());
      if (r != MT_OK) {
        std::cerr << "error: " << mt_last_error() << "\n";
        return ExitCode(r);
      }
    }
    return rc;
  }
  if (*count) {
    return session.Emit(mt_count_supports(session.scene(), session.options(), session.result()),
                        out_path);
  }
  if (*dual_dump) {
    return session.Emit(mt_dual_dump(session.scene(), p, p_len, session.options(),
                                     csv_path.c_str(), session.result()));
  }
  if (*oracle) {
    return session.Emit(mt_oracle_supports(session.scene(), session.options(), session.result()),
                        out_path);
  }
  if (*conjecture) {
    return session.Emit(
        mt_conjecture_check(session.scene(), session.options(), session.result()));
  }
  return kExitFailure;
}
