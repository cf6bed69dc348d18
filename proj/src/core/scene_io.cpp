// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include "scene_io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace multitangent {
namespace {

[[noreturn]] void Fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kInvalidScene, field + ": " + what);
}

const Json& Require(const Json& obj, const char* key, const std::string& field) {
  if (!obj.is_object()) Fail(field, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(field + "." + key, "missing");
  return *it;
}

double Number(const Json& v, const std::string& field) {
  if (!v.is_number()) Fail(field, "expected a number");
  return v.get<double>();
}

int Integer(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) Fail(field, "expected an integer");
  return v.get<int>();
}

Vec Vector(const Json& v, const std::string& field) {
  if (!v.is_array() || v.empty() || v.size() > static_cast<size_t>(kMaxDim)) {
    Fail(field, "expected an array of 1 to 3 numbers");
  }
  Vec out(static_cast<Eigen::Index>(v.size()));
  for (size_t k = 0; k < v.size(); ++k) {
    out[static_cast<Eigen::Index>(k)] = Number(v[k], field + "[" + std::to_string(k) + "]");
  }
  return out;
}

std::vector<Vec> Points(const Json& v, const std::string& field) {
  if (!v.is_array() || v.empty()) Fail(field, "expected a non-empty array of points");
  std::vector<Vec> out;
  for (size_t k = 0; k < v.size(); ++k) {
    out.push_back(Vector(v[k], field + "[" + std::to_string(k) + "]"));
    if (out.back().size() != out.front().size()) {
      Fail(field + "[" + std::to_string(k) + "]", "dimension differs from the first point");
    }
  }
  return out;
}

BBox2 Box(const Json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 4) Fail(field, "expected [xmin, ymin, xmax, ymax]");
  BBox2 box{Number(v[0], field + "[0]"), Number(v[1], field + "[1]"),
            Number(v[2], field + "[2]"), Number(v[3], field + "[3]")};
  if (!(box.xmin < box.xmax && box.ymin < box.ymax)) Fail(field, "empty box");
  return box;
}

Json PointsToJson(const std::vector<Vec>& pts) {
  Json out = Json::array();
  for (const Vec& p : pts) out.push_back(VecToJson(p));
  return out;
}

// Wraps shape construction errors with the field path.
template <typename F>
Shape Build(const std::string& field, F&& make) {
  try {
    return make();
  } catch (const Error& e) {
    Fail(field, e.what());
  }
}

void AppendShapes(const Json& s, const std::string& field, std::vector<Shape>* out) {
  const Json& kind_json = Require(s, "kind", field);
  if (!kind_json.is_string()) Fail(field + ".kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "circle" || kind == "ball") {
    const Vec c = Vector(Require(s, "center", field), field + ".center");
    const double r = Number(Require(s, "radius", field), field + ".radius");
    out->push_back(Build(field, [&] {
      return kind == "circle" ? Shape::Circle(c, r) : Shape::Ball(c, r);
    }));
  } else if (kind == "polytope") {
    auto v = Points(Require(s, "vertices", field), field + ".vertices");
    out->push_back(Build(field, [&] { return Shape::Polytope(std::move(v)); }));
  } else if (kind == "loop") {
    auto v = Points(Require(s, "points", field), field + ".points");
    out->push_back(Build(field, [&] { return Shape::Loop(std::move(v)); }));
  } else if (kind == "region") {
    auto v = Points(Require(s, "points", field), field + ".points");
    bool filled = true;
    if (auto it = s.find("filled"); it != s.end()) {
      if (!it->is_boolean()) Fail(field + ".filled", "expected a boolean");
      filled = it->get<bool>();
    }
    out->push_back(Build(field, [&] { return Shape::Region(std::move(v), filled); }));
  } else if (kind == "implicit") {
    const Polynomial2 f = PolynomialFromJson(Require(s, "coeffs", field), field + ".coeffs");
    const BBox2 box = Box(Require(s, "bbox", field), field + ".bbox");
    IngestOptions opts;
    if (auto it = s.find("resolution"); it != s.end()) {
      opts.resolution = Integer(*it, field + ".resolution");
    }
    std::vector<Shape> loops;
    try {
      loops = IngestImplicitCurve(f, box, opts);
    } catch (const Error& e) {
      Fail(field, e.what());
    }
    auto it = s.find("component");
    if (it == s.end()) {
      out->insert(out->end(), loops.begin(), loops.end());
      return;
    }
    std::vector<int> picks;
    if (it->is_array()) {
      for (size_t k = 0; k < it->size(); ++k) {
        picks.push_back(Integer((*it)[k], field + ".component[" + std::to_string(k) + "]"));
      }
    } else {
      picks.push_back(Integer(*it, field + ".component"));
    }
    for (int k : picks) {
      if (k < 0 || k >= static_cast<int>(loops.size())) {
        Fail(field + ".component", "index " + std::to_string(k) + " out of range (" +
                                       std::to_string(loops.size()) + " components)");
      }
      out->push_back(loops[static_cast<size_t>(k)]);
    }
  } else {
    Fail(field + ".kind", "unknown kind '" + kind + "'");
  }
}

}  // namespace

Polynomial2 PolynomialFromJson(const Json& coeffs, const std::string& field) {
  if (!coeffs.is_object() || coeffs.empty()) Fail(field, "expected an object of \"i,j\": c");
  std::vector<Polynomial2::Term> terms;
  for (const auto& [key, value] : coeffs.items()) {
    Polynomial2::Term t;
    char comma = 0;
    std::istringstream in(key);
    if (!(in >> t.i >> comma >> t.j) || comma != ',' || !in.eof() || t.i < 0 || t.j < 0) {
      Fail(field + "." + key, "keys must read \"i,j\" with non-negative exponents");
    }
    t.c = Number(value, field + "." + key);
    if (t.c != 0.0) terms.push_back(t);
  }
  if (terms.empty()) Fail(field, "polynomial is zero");
  return Polynomial2(std::move(terms));
}

Json PolynomialToJson(const Polynomial2& f) {
  Json out = Json::object();
  for (const auto& t : f.terms()) out[std::to_string(t.i) + "," + std::to_string(t.j)] = t.c;
  return out;
}

Scene SceneFromJson(const Json& doc) {
  if (!doc.is_object()) Fail("scene", "expected an object");
  Scene scene;
  scene.n = Integer(Require(doc, "n", "scene"), "n");
  if (auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) Fail("label", "expected a string");
    scene.label = it->get<std::string>();
  }
  const Json& shapes = Require(doc, "shapes", "scene");
  if (!shapes.is_array()) Fail("shapes", "expected an array");
  for (size_t k = 0; k < shapes.size(); ++k) {
    AppendShapes(shapes[k], "shapes[" + std::to_string(k) + "]", &scene.shapes);
  }
  try {
    scene.Validate();
  } catch (const Error& e) {
    Fail("shapes", e.detail());
  }
  return scene;
}

Scene ParseScene(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidScene, std::string("malformed JSON: ") + e.what());
  }
  return SceneFromJson(doc);
}

Scene LoadScene(const std::string& path) {
  try {
    return ParseScene(ReadTextFile(path));
  } catch (const Error& e) {
    // An unreadable input file is a scene problem to callers.
    const ErrorCode code = e.code() == ErrorCode::kIo ? ErrorCode::kInvalidScene : e.code();
    throw Error(code, e.code() == ErrorCode::kIo ? e.detail() : path + ": " + e.detail());
  }
}

Json SceneToJson(const Scene& scene) {
  Json doc;
  doc["n"] = scene.n;
  doc["label"] = scene.label;
  Json shapes = Json::array();
  for (const Shape& s : scene.shapes) {
    Json j;
    switch (s.kind()) {
      case ShapeKind::kCircle:
      case ShapeKind::kBall:
        j["kind"] = s.kind() == ShapeKind::kCircle ? "circle" : "ball";
        j["center"] = VecToJson(s.center());
        j["radius"] = s.radius();
        break;
      case ShapeKind::kPolytope:
        j["kind"] = "polytope";
        j["vertices"] = PointsToJson(s.vertices());
        break;
      case ShapeKind::kLoop:
        j["kind"] = "loop";
        j["points"] = PointsToJson(s.vertices());
        break;
      case ShapeKind::kRegion:
        j["kind"] = "region";
        j["points"] = PointsToJson(s.vertices());
        j["filled"] = s.filled();
        break;
    }
    shapes.push_back(std::move(j));
  }
  doc["shapes"] = std::move(shapes);
  return doc;
}

CurveSpec CurveSpecFromJson(const Json& doc) {
  if (!doc.is_object()) Fail("curve", "expected an object");
  CurveSpec spec;
  if (auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) Fail("label", "expected a string");
    spec.label = it->get<std::string>();
  }
  spec.f = PolynomialFromJson(Require(doc, "coeffs", "curve"), "coeffs");
  spec.box = Box(Require(doc, "bbox", "curve"), "bbox");
  if (auto it = doc.find("resolution"); it != doc.end()) {
    spec.resolution = Integer(*it, "resolution");
  }
  if (spec.resolution < 16) Fail("resolution", "must be at least 16");
  return spec;
}

CurveSpec LoadCurveSpec(const std::string& path) {
  try {
    return CurveSpecFromJson(Json::parse(ReadTextFile(path)));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidScene, path + ": malformed JSON: " + e.what());
  } catch (const Error& e) {
    // An unreadable input file is a scene problem to callers.
    const ErrorCode code = e.code() == ErrorCode::kIo ? ErrorCode::kInvalidScene : e.code();
    throw Error(code, e.code() == ErrorCode::kIo ? e.detail() : path + ": " + e.detail());
  }
}

Json VecToJson(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v[k]);
  return out;
}

Json CertificateToJson(const SupportCertificate& cert) {
  Json j;
  j["hyperplane"] = VecToJson(cert.h.covector);
  j["contacts"] = PointsToJson(cert.contacts);
  Json sides = Json::array();
  for (const auto& s : cert.sides) {
    sides.push_back(s.kind == SideKind::kTouchPlus ? "+" : "-");
  }
  j["sides"] = std::move(sides);
  j["residual"] = cert.residual;
  j["backend"] = BackendName(cert.backend);
  return j;
}

void WriteDualCsv(const DualRegionSample& sample, std::ostream& out) {
  const int n = sample.n();
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (int k = 0; k < n; ++k) out << "x" << k << ",";
  for (int k = 0; k <= n; ++k) out << "lambda" << k << (k == n ? "\n" : ",");
  for (const Vec& x : sample.members) {
    const Vec lambda = Normalize(sample.Covector(x));
    for (int k = 0; k < n; ++k) out << x[k] << ",";
    for (int k = 0; k <= n; ++k) out << lambda[k] << (k == n ? "\n" : ",");
  }
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

}  // namespace multitangent
