// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "multitangent/multitangent.h"

#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "bitangents.hpp"
#include "condition.hpp"
#include "dual_region.hpp"
#include "oracle.hpp"
#include "scene_io.hpp"
#include "support.hpp"
#include "svg.hpp"

namespace mt = multitangent;

struct mt_scene {
  mt::Scene scene;
};

struct mt_result {
  std::string json;
  std::vector<mt::SupportCertificate> certificates;
};

namespace {

constexpr const char* kVersion = "1.0.0";

thread_local std::string g_last_error;

mt_status StatusOf(mt::ErrorCode code) {
  using mt::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidScene:
    case ErrorCode::kInvalidShape:
    case ErrorCode::kNoComponents:
    case ErrorCode::kOpenComponent:
      return MT_ERR_SCENE;
    case ErrorCode::kConditionNotEstablished:
      return MT_ERR_CONDITION_NOT_ESTABLISHED;
    case ErrorCode::kRenderUnsupported:
    case ErrorCode::kUnsupportedDimension:
      return MT_ERR_UNSUPPORTED;
    case ErrorCode::kIo:
      return MT_ERR_IO;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kPointOnShape:
      return MT_ERR_INVALID_ARGUMENT;
    default:
      return MT_ERR_NUMERIC;
  }
}

template <typename F>
mt_status Guard(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const mt::Error& e) {
    g_last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return MT_ERR_INTERNAL;
  }
}

mt_status Fail(mt_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

mt_options Resolve(const mt_options* in) {
  mt_options o;
  mt_options_default(&o);
  if (!in) return o;
  auto pick = [](auto value, auto fallback) { return value > 0 ? value : fallback; };
  o.backend = in->backend;
  o.directions = pick(in->directions, o.directions);
  o.search_grid = pick(in->search_grid, o.search_grid);
  o.dual_resolution = pick(in->dual_resolution, o.dual_resolution);
  o.oracle_grid = pick(in->oracle_grid, o.oracle_grid);
  o.circle_samples = pick(in->circle_samples, o.circle_samples);
  o.max_iter = pick(in->max_iter, o.max_iter);
  o.conjecture_samples = pick(in->conjecture_samples, o.conjecture_samples);
  o.clearance_floor = pick(in->clearance_floor, o.clearance_floor);
  o.dedup_angle = pick(in->dedup_angle, o.dedup_angle);
  o.family_angle = pick(in->family_angle, o.family_angle);
  o.contact_tolerance = pick(in->contact_tolerance, o.contact_tolerance);
  o.include_timings = in->include_timings;
  return o;
}

mt::ConditionOptions ConditionOf(const mt_options& o) {
  mt::ConditionOptions c;
  c.directions = o.directions;
  c.clearance_floor = o.clearance_floor;
  return c;
}

mt::SupportOptions SupportOf(const mt_options& o) {
  mt::SupportOptions s;
  s.tol.clearance_floor = o.clearance_floor;
  s.tol.dedup_angle = o.dedup_angle;
  s.tol.family_angle = o.family_angle;
  s.tol.contact = o.contact_tolerance;
  s.refine.contact = o.contact_tolerance;
  s.refine.max_iter = o.max_iter;
  s.condition = ConditionOf(o);
  s.search_grid = o.search_grid;
  s.dual.resolution = o.dual_resolution;
  s.oracle_grid = o.oracle_grid;
  s.circle_samples = o.circle_samples;
  return s;
}

mt::Backend BackendOf(mt_backend b) {
  switch (b) {
    case MT_BACKEND_DUAL: return mt::Backend::kDualExtremal;
    case MT_BACKEND_CALIPERS: return mt::Backend::kCalipers;
    case MT_BACKEND_ORACLE: return mt::Backend::kOracle;
    default: return mt::Backend::kAuto;
  }
}

class Report {
 public:
  Report(const char* command, const mt::Scene* scene, const mt_options& o)
      : options_(o), start_(std::chrono::steady_clock::now()) {
    doc_["tool"] = "multitangent";
    doc_["version"] = kVersion;
    doc_["command"] = command;
    if (scene) {
      doc_["scene"] = scene->label;
      doc_["n"] = scene->n;
    }
    mt::Json p;
    p["backend"] = mt::BackendName(BackendOf(o.backend));
    p["directions"] = o.directions;
    p["search_grid"] = o.search_grid;
    p["dual_resolution"] = o.dual_resolution;
    p["oracle_grid"] = o.oracle_grid;
    p["circle_samples"] = o.circle_samples;
    p["max_iter"] = o.max_iter;
    p["conjecture_samples"] = o.conjecture_samples;
    p["clearance_floor"] = o.clearance_floor;
    p["dedup_angle"] = o.dedup_angle;
    p["family_angle"] = o.family_angle;
    p["contact_tolerance"] = o.contact_tolerance;
    doc_["parameters"] = std::move(p);
  }

  mt::Json& operator[](const char* key) { return doc_[key]; }

  mt_result* Finish(std::vector<mt::SupportCertificate> certs = {}) {
    if (options_.include_timings) {
      const double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
      doc_["timings"] = {{"total_ms", ms}};
    }
    auto* r = new mt_result;
    r->json = doc_.dump(2) + "\n";
    r->certificates = std::move(certs);
    return r;
  }

 private:
  mt::Json doc_;
  mt_options options_;
  std::chrono::steady_clock::time_point start_;
};

mt::Json CertificatesJson(const std::vector<mt::SupportCertificate>& certs) {
  mt::Json out = mt::Json::array();
  for (const auto& c : certs) out.push_back(mt::CertificateToJson(c));
  return out;
}

mt::Json PointJson(const mt::ProjPoint& p) {
  mt::Json j;
  j["homogeneous"] = mt::VecToJson(p.coords);
  if (std::abs(p.coords[0]) > 1e-12) {
    j["affine"] = mt::VecToJson(p.coords.tail(p.coords.size() - 1) / p.coords[0]);
  } else {
    j["affine"] = nullptr;
  }
  return j;
}

mt::ProjPoint PointOf(const mt::Scene& scene, const double* p, size_t len) {
  const size_t n = static_cast<size_t>(scene.n);
  if (len != n && len != n + 1) {
    throw mt::Error(mt::ErrorCode::kInvalidArgument,
                    "point needs " + std::to_string(n) + " affine or " +
                        std::to_string(n + 1) + " homogeneous coordinates");
  }
  mt::Vec v(static_cast<Eigen::Index>(len));
  for (size_t k = 0; k < len; ++k) v[static_cast<Eigen::Index>(k)] = p[k];
  return len == n ? mt::ProjPoint::FromAffine(v) : mt::ProjPoint::FromHomogeneous(v);
}

mt::Json OutcomeJson(const mt::ConditionOutcome& outcome, const mt::ProjPoint& p) {
  mt::Json j;
  j["accepted"] = outcome.accepted;
  j["p"] = PointJson(p);
  if (outcome.accepted) {
    const auto& cert = outcome.certificate;
    std::map<int, int> misses;
    for (const auto& s : cert.samples) ++misses[s.missed_shape];
    mt::Json hist = mt::Json::array();
    for (const auto& [shape, count] : misses) hist.push_back({{"shape", shape}, {"samples", count}});
    j["samples"] = cert.samples.size();
    j["min_clearance"] = cert.min_clearance;
    j["exact_miss_tests"] = cert.exact_miss_tests;
    j["missed_shape_histogram"] = std::move(hist);
  } else {
    j["witness"] = mt::VecToJson(outcome.witness.covector);
    j["witness_meets_all"] = outcome.witness_meets_all;
  }
  return j;
}

mt::Json BoundednessJson(const mt::BoundednessReport& b) {
  return {{"bounded", b.bounded},
          {"boundary_members", b.boundary_members},
          {"max_norm", b.max_norm},
          {"min_p_incidence", b.min_p_incidence}};
}

template <typename T>
mt_status CheckOut(T** out) {
  if (!out) return Fail(MT_ERR_INVALID_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  return MT_OK;
}

std::vector<std::pair<int, int>> ParsePairs(const char* text) {
  std::vector<std::pair<int, int>> pairs;
  if (!text || std::string(text).empty() || std::string(text) == "all") return pairs;
  std::istringstream in(text);
  int a = 0, b = 0;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof()) {
    throw mt::Error(mt::ErrorCode::kInvalidArgument,
                    std::string("pairs must be 'all' or 'i,j', got '") + text + "'");
  }
  pairs.emplace_back(a, b);
  return pairs;
}

}  // namespace

extern "C" {

void mt_options_default(mt_options* options) {
  if (!options) return;
  options->backend = MT_BACKEND_AUTO;
  options->directions = 0;
  options->search_grid = 8;
  options->dual_resolution = 0;
  options->oracle_grid = 0;
  options->circle_samples = 256;
  options->max_iter = 500;
  options->conjecture_samples = 1000;
  options->clearance_floor = 1e-6;
  options->dedup_angle = 1e-4;
  options->family_angle = 1e-2;
  options->contact_tolerance = 1e-7;
  options->include_timings = 0;
}

const char* mt_version(void) { return kVersion; }

const char* mt_status_name(mt_status status) {
  switch (status) {
    case MT_OK: return "ok";
    case MT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MT_ERR_SCENE: return "scene error";
    case MT_ERR_CONDITION_NOT_ESTABLISHED: return "condition not established";
    case MT_ERR_UNSUPPORTED: return "unsupported";
    case MT_ERR_IO: return "i/o error";
    case MT_ERR_NUMERIC: return "numerical failure";
    case MT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mt_last_error(void) { return g_last_error.c_str(); }

mt_status mt_scene_load_file(const char* path, mt_scene** out) {
  if (mt_status s = CheckOut(out)) return s;
  if (!path) return Fail(MT_ERR_INVALID_ARGUMENT, "path is NULL");
  return Guard([&] {
    *out = new mt_scene{mt::LoadScene(path)};
    return MT_OK;
  });
}

mt_status mt_scene_load_json(const char* text, mt_scene** out) {
  if (mt_status s = CheckOut(out)) return s;
  if (!text) return Fail(MT_ERR_INVALID_ARGUMENT, "text is NULL");
  return Guard([&] {
    *out = new mt_scene{mt::ParseScene(text)};
    return MT_OK;
  });
}

void mt_scene_free(mt_scene* scene) { delete scene; }

int mt_scene_dimension(const mt_scene* scene) { return scene ? scene->scene.n : 0; }

size_t mt_scene_shape_count(const mt_scene* scene) {
  return scene ? scene->scene.shapes.size() : 0;
}

mt_status mt_scene_to_json(const mt_scene* scene, mt_result** out) {
  if (mt_status s = CheckOut(out)) return s;
  if (!scene) return Fail(MT_ERR_INVALID_ARGUMENT, "scene is NULL");
  return Guard([&] {
    auto* r = new mt_result;
    r->json = mt::SceneToJson(scene->scene).dump(2) + "\n";
    *out = r;
    return MT_OK;
  });
}

mt_status mt_check_condition(const mt_scene* scene, const double* p, size_t p_len,
                             const mt_options* options, mt_result** out) {
  if (mt_status s = CheckOut(out)) return s;
  if (!scene) return Fail(MT_ERR_INVALID_ARGUMENT, "scene is NULL");
  return Guard([&] {
    const mt_options o = Resolve(options);
    const mt::ConditionOptions copts = ConditionOf(o);
    Report report("condition", &scene->scene, o);
    report["parameters"]["directions"] =
        copts.directions > 0 ? copts.directions : mt::DefaultDirections(scene->scene.n);
    bool accepted = false;
    if (p) {
      const mt::ProjPoint point = PointOf(scene->scene, p, p_len);
      const mt::ConditionOutcome outcome = mt::CheckCondition(scene->scene, point, copts);
      accepted = outcome.accepted;
      report["mode"] = "check";
      report["condition"] = OutcomeJson(outcome, point);
    } else {
      const mt::SearchResult search =
          mt::SearchConditionPoint(scene->scene, o.search_grid, copts);
      report["mode"] = "search";
      report["candidates_tested"] = search.candidates_tested;
      if (search.accepted) {
        accepted = true;
        report["condition"] = OutcomeJson(*search.accepted, search.accepted->certificate.p);
      } else if (search.first_rejection) {
        report["condition"] = OutcomeJson(*search.first_rejection, search.rejected.front());
      } else {
        report["condition"] = {{"accepted", false}};
      }
    }
    *out = report.Finish();
    if (!accepted) {
      g_last_error = "ConditionNotEstablished: no accepted condition point";
      return MT_ERR_CONDITION_NOT_ESTABLISHED;
    }
    return MT_OK;
  });
}

mt_status mt_find_supports(const mt_scene* scene, const mt_options* options,
                           mt_result** out) {
  if (mt_status s = CheckOut(out)) return s;
  if (!scene) return Fail(MT_ERR_INVALID_ARGUMENT, "scene is NULL");
  return Guard([&] {
    const mt_options o = Resolve(options);
    Report report("supports", &scene->scene, o);
    mt::FindResult found = mt::FindSupports(scene->scene, BackendOf(o.backend), SupportOf(o));
    report["backend"] = mt::BackendName(found.backend);
    report["condition_point"] =
        found.condition_point ? PointJson(*found.condition_point) : mt::Json(nullptr);
    if (found.boundedness) report["boundedness"] = BoundednessJson(*found.boundedness);
    report["counts"] = {{"raw", found.raw_count},
                        {"deduped", found.certificates.size()},
                        {"failed_refinements", found.failed_refinements},
                        {"extreme_points", found.extreme_points}};
    report["flags"] = {{"nested", found.nested},
                       {"degenerate", found.degenerate},
                       {"low_dimensional", found.low_dimensional}};
    report["certificates"] = CertificatesJson(found.certificates);
    *out = report.Finish(std::move(found.certificates));
    return MT_OK;
  });
}

mt_status mt_count_supports(const mt_scene* scene, const mt_options* options,
                            mt_result** out) {
  if (mt_status s = CheckOut(out)) return s;
  if (!scene) return Fail(MT_ERR_INVALID_ARGUMENT, "scene is NULL");
  return Guard([&] {
    const mt_options o = Resolve(options);
    Report report("count", &scene->scene, o);
    mt::CountResult c = mt::CountSupports(scene->scene, SupportOf(o));
    report["count"] = c.count;
    report["raw_count"] = c.raw_count;
    report["backend"] = mt::BackendName(c.backend);
    report["fell_back_to_oracle"] = c.fell_back_to_oracle;
    report["condition_point"] =
        c.condition_point ? PointJson(*c.condition_point) : mt::Json(nullptr);
    report["continuum_family"] = c.continuum_family;
    mt::Json families = mt::Json::array();
    for (const auto& f : c.families) {
      families.push_back({{"size", f.covectors.size()}, {"angular_diameter", f.diameter}});
    }
    report["families"] = std::move(families);
    mt::Json hist = mt::Json::object();
    for (const auto& [key, count] : c.side_histogram) hist[key] = count;
    report["side_histogram"] = std::move(hist);
    report["certificates"] = CertificatesJson(c.certificates);
    *out = report.Finish(std::move(c.certificates));
    return MT_OK;
  });
}

mt_status mt_oracle_supports(const mt_scene* scene, const mt_options* options,
                             mt_result** out) {
  if (mt_status s = CheckOut(out)) return s;
  if (!scene) return Fail(MT_ERR_INVALID_ARGUMENT, "scene is NULL");
  return Guard([&] {
    const mt_options o = Resolve(options);
    const mt::SupportOptions sopts = SupportOf(o);
    Report report("oracle", &scene->scene, o);
    mt::SweepResult sweep =
        mt::BruteForceSupports(scene->scene, o.oracle_grid, sopts.refine, o.dedup_angle);
    double diameter = 0.0;
    for (const auto& a : sweep.clusters) {
      for (const auto& b : sweep.clusters) {
        diameter = std::max(diameter, mt::ProjectiveAngle(a.h.covector, b.h.covector));
      }
    }
    report["sweep"] = {{"angular_grid", sweep.angular_grid},
                       {"sweep_tolerance", sweep.sweep_tolerance},
                       {"bisection_depth", sweep.bisection_depth}};
    report["candidates"] = sweep.candidates.size();
    report["clusters"] = sweep.clusters.size();
    report["angular_diameter"] = diameter;
    report["certificates"] = CertificatesJson(sweep.clusters);
    *out = report.Finish(std::move(sweep.clusters));
    return MT_OK;
  });
}

mt_status mt_conjecture_check(const mt_scene* scene, const mt_options* options,
                              mt_result** out) {
  if (mt_status s = CheckOut(out)) return s;
  if (!scene) return Fail(MT_ERR_INVALID_ARGUMENT, "scene is NULL");
  return Guard([&] {
    const mt_options o = Resolve(options);
    Report report("conjecture", &scene->scene, o);
    const std::vector<bool> flags = mt::InteriorityCheck(scene->scene, o.conjecture_samples);
    report["experimental"] = true;
    mt::Json arr = mt::Json::array();
    for (bool f : flags) arr.push_back(f);
    report["flags"] = std::move(arr);
    *out = report.Finish();
    return MT_OK;
  });
}

mt_status mt_dual_dump(const mt_scene* scene, const double* p, size_t p_len,
                       const mt_options* options, const char* csv_path, mt_result** out) {
  if (mt_status s = CheckOut(out)) return s;
  if (!scene) return Fail(MT_ERR_INVALID_ARGUMENT, "scene is NULL");
  return Guard([&] {
    const mt_options o = Resolve(options);
    Report report("dual-dump", &scene->scene, o);
    mt::ProjPoint point;
    if (p) {
      point = PointOf(scene->scene, p, p_len);
    } else {
      const mt::SearchResult search =
          mt::SearchConditionPoint(scene->scene, o.search_grid, ConditionOf(o));
      if (!search.accepted) {
        throw mt::Error(mt::ErrorCode::kConditionNotEstablished,
                        "no condition point found; pass one explicitly");
      }
      point = search.accepted->certificate.p;
    }
    mt::AutoSampleOptions dual;
    dual.resolution = o.dual_resolution;
    const mt::AutoSampleResult sampled = mt::SampleHStarAuto(scene->scene, point, dual);
    if (csv_path) {
      std::ostringstream csv;
      mt::WriteDualCsv(sampled.sample, csv);
      mt::WriteTextFile(csv_path, csv.str());
      report["csv"] = csv_path;
    }
    report["p"] = PointJson(point);
    report["resolution"] = sampled.sample.resolution;
    report["bounds"] = sampled.bounds_used;
    report["compact"] = sampled.compact;
    report["members"] = sampled.sample.members.size();
    report["empty_region_warning"] = sampled.sample.empty_region_warning;
    report["boundedness"] = BoundednessJson(sampled.boundedness);
    *out = report.Finish();
    return MT_OK;
  });
}

mt_status mt_curve_bitangents(const char* curve_path, const char* pairs, int resolution,
                              const mt_options* options, mt_result** out) {
  if (mt_status s = CheckOut(out)) return s;
  if (!curve_path) return Fail(MT_ERR_INVALID_ARGUMENT, "curve path is NULL");
  return Guard([&] {
    const mt_options o = Resolve(options);
    Report report("bitangents", nullptr, o);
    mt::CurveSpec spec = mt::LoadCurveSpec(curve_path);
    if (resolution > 0) spec.resolution = resolution;
    mt::IngestOptions ingest;
    ingest.resolution = spec.resolution;
    std::vector<mt::Shape> ovals;
    try {
      ovals = mt::IngestImplicitCurve(spec.f, spec.box, ingest);
    } catch (const mt::Error& e) {
      throw mt::Error(mt::ErrorCode::kInvalidScene, std::string(curve_path) + ": " + e.what());
    }
    const mt::BitangentTally tally = mt::CurveBitangents(ovals, ParsePairs(pairs), SupportOf(o));
    report["scene"] = spec.label;
    report["resolution"] = spec.resolution;
    report["components"] = tally.components;
    mt::Json pj = mt::Json::array();
    for (const auto& p : tally.pairs) {
      pj.push_back({{"pair", {p.a, p.b}},
                    {"count", p.count},
                    {"nested", p.nested},
                    {"degenerate", p.degenerate}});
    }
    report["pairs"] = std::move(pj);
    report["tally"] = {{"cross_pairs", tally.cross_pairs},
                       {"self", tally.self},
                       {"total", tally.total}};
    mt::Json lines = mt::Json::array();
    std::vector<mt::SupportCertificate> certs;
    for (const auto& l : tally.lines) {
      mt::Json contacts = mt::Json::array();
      for (const auto& c : l.contacts) contacts.push_back(mt::VecToJson(c));
      lines.push_back({{"hyperplane", mt::VecToJson(l.h.covector)},
                       {"kind", l.self ? "self" : "cross"},
                       {"ovals", {l.a, l.b}},
                       {"contacts", std::move(contacts)}});
      mt::SupportCertificate cert;
      cert.h = l.h;
      cert.contacts = l.contacts;
      certs.push_back(std::move(cert));
    }
    report["lines"] = std::move(lines);
    *out = report.Finish(std::move(certs));
    return MT_OK;
  });
}

mt_status mt_render_svg(const mt_scene* scene, const mt_result* supports, const char* path) {
  if (!scene || !path) return Fail(MT_ERR_INVALID_ARGUMENT, "scene or path is NULL");
  return Guard([&] {
    static const std::vector<mt::SupportCertificate> kNone;
    const auto& certs = supports ? supports->certificates : kNone;
    mt::WriteTextFile(path, mt::RenderSvg(scene->scene, certs));
    return MT_OK;
  });
}

const char* mt_result_json(const mt_result* result) {
  return result ? result->json.c_str() : "";
}

size_t mt_result_certificate_count(const mt_result* result) {
  return result ? result->certificates.size() : 0;
}

mt_status mt_result_certificate(const mt_result* result, size_t i, double* covector,
                                size_t len) {
  if (!result || !covector) return Fail(MT_ERR_INVALID_ARGUMENT, "NULL argument");
  if (i >= result->certificates.size()) {
    return Fail(MT_ERR_INVALID_ARGUMENT, "certificate index out of range");
  }
  const mt::Vec& v = result->certificates[i].h.covector;
  if (len < static_cast<size_t>(v.size())) {
    return Fail(MT_ERR_INVALID_ARGUMENT, "buffer needs " + std::to_string(v.size()) + " entries");
  }
  for (Eigen::Index k = 0; k < v.size(); ++k) covector[k] = v[k];
  g_last_error.clear();
  return MT_OK;
}

mt_status mt_result_write(const mt_result* result, const char* path) {
  if (!result || !path) return Fail(MT_ERR_INVALID_ARGUMENT, "NULL argument");
  return Guard([&] {
    mt::WriteTextFile(path, result->json);
    return MT_OK;
  });
}

void mt_result_free(mt_result* result) { delete result; }

}  // extern "C"
