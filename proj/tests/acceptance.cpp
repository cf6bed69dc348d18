// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance run. Drives the installed CLI on the bundled scenes
// and prints one PASS/FAIL line per criterion. Exit status is nonzero when
// any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "property_suites.hpp"

namespace {

using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Run {
  int exit_code = -1;
  Json doc;
  double seconds = 0.0;
};

Run Cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(MULTITANGENT_CLI) + " " + args + " 2>/dev/null";
  const auto t0 = Clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  if (pipe) {
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.doc = Json::parse(out, nullptr, false);
  return r;
}

std::string Scene(const std::string& name) {
  return std::string(MULTITANGENT_SCENES_DIR) + "/" + name;
}

oracle::V Covector(const Json& j) {
  oracle::V v(static_cast<Eigen::Index>(j.size()));
  for (size_t k = 0; k < j.size(); ++k) v[static_cast<Eigen::Index>(k)] = j[k].get<double>();
  return v;
}

std::vector<oracle::V> Hyperplanes(const Json& certs) {
  std::vector<oracle::V> out;
  for (const auto& c : certs) out.push_back(Covector(c["hyperplane"]));
  return out;
}

// Every expected class has exactly one partner, and there are no extras.
double MatchError(const std::vector<oracle::V>& got, const std::vector<oracle::V>& expected) {
  if (got.size() != expected.size()) return INFINITY;
  double worst = 0.0;
  for (const auto& e : expected) {
    double best = INFINITY;
    for (const auto& g : got) {
      const oracle::V a = oracle::Canonical(g), b = oracle::Canonical(e);
      best = std::min(best, (a - b).cwiseAbs().maxCoeff());
    }
    worst = std::max(worst, best);
  }
  return worst;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failed = 0;

void Criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++g_failed;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " ("
            << o.detail << ")" << std::endl;
}

std::string Fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

bool AllPatterns(const Json& histogram, int n) {
  if (static_cast<int>(histogram.size()) != (1 << n)) return false;
  for (const auto& [key, count] : histogram.items()) {
    if (static_cast<int>(key.size()) != n || count.get<int>() < 1) return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<oracle::V> two_circles = oracle::CircleTangents({0, 0}, 1, {4, 0}, 1);

  Criterion(1, "two disjoint circles give the four closed-form tangents", [&] {
    const Run r = Cli("supports --scene " + Scene("two_circles.json") + " --no-timings");
    const double err = MatchError(Hyperplanes(r.doc["certificates"]), two_circles);
    return Outcome{r.exit_code == 0 && err < 1e-6 && r.seconds < 1.0,
                   Fmt("max covector error %.2e", err) + Fmt(", %.3f s", r.seconds)};
  });

  Criterion(2, "dual pipeline at resolution 256 recovers the same tangents", [&] {
    const Run r = Cli("supports --scene " + Scene("two_circles.json") +
                      " --backend dual --resolution 256 --no-timings");
    const double err = MatchError(Hyperplanes(r.doc["certificates"]), two_circles);
    const bool bounded = r.doc["boundedness"]["bounded"].get<bool>();
    return Outcome{r.exit_code == 0 && err < 1e-6 && bounded && r.seconds < 30.0,
                   Fmt("max covector error %.2e", err) + Fmt(", %.3f s", r.seconds)};
  });

  Criterion(3, "intersecting circles: no condition point, two outer tangents", [&] {
    const std::string scene = Scene("intersecting.json");
    const Run dual = Cli("supports --scene " + scene + " --backend dual --no-timings");
    const Run cond = Cli("condition --scene " + scene + " --no-timings");
    const Run cal = Cli("supports --scene " + scene + " --no-timings");
    const double err = MatchError(Hyperplanes(cal.doc["certificates"]),
                                  oracle::CircleTangents({0, 0}, 1, {1, 0}, 1));
    std::ostringstream d;
    d << "dual exit " << dual.exit_code << ", condition exit " << cond.exit_code
      << ", calipers lines " << cal.doc["certificates"].size() << Fmt(", error %.2e", err);
    return Outcome{dual.exit_code == 2 && cond.exit_code == 2 && cal.exit_code == 0 &&
                       err < 1e-6,
                   d.str()};
  });

  Criterion(4, "counts: 4 for two circles, 8 for three balls, every side pattern", [&] {
    const auto t0 = Clock::now();
    const Run c2 = Cli("count --scene " + Scene("two_circles.json") + " --no-timings");
    const Run c3 = Cli("count --scene " + Scene("three_balls.json") + " --no-timings");
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const int n2 = c2.doc["count"].get<int>(), n3 = c3.doc["count"].get<int>();
    const bool ok = n2 == 4 && n3 == 8 && AllPatterns(c2.doc["side_histogram"], 2) &&
                    AllPatterns(c3.doc["side_histogram"], 3) && secs < 300.0;
    std::ostringstream d;
    d << "counts " << n2 << " and " << n3 << Fmt(", %.2f s", secs);
    return Outcome{ok, d.str()};
  });

  Criterion(5, "full-dimensional scenes have at least n+1 supports", [&] {
    std::ostringstream d;
    bool ok = true;
    for (const char* name : {"squares.json", "three_balls.json", "two_circles.json"}) {
      const Run r = Cli("count --scene " + Scene(name) + " --no-timings");
      const int n = r.doc["n"].get<int>();
      const int count = r.doc["count"].get<int>();
      ok = ok && r.exit_code == 0 && count >= n + 1;
      d << name << "=" << count << " ";
    }
    return Outcome{ok, d.str()};
  });

  Criterion(6, "Trott quartic: 24 cross + 4 self = 28 bitangents, stable under refinement",
            [&] {
              const std::string curve = Scene("trott.json");
              const Run a = Cli("bitangents --quartic " + curve + " --resolution 512 --no-timings");
              const Run b =
                  Cli("bitangents --quartic " + curve + " --resolution 1024 --no-timings");
              const Json& ta = a.doc["tally"];
              const Json& tb = b.doc["tally"];
              const bool tallies = ta["cross_pairs"] == 24 && ta["self"] == 4 &&
                                   ta["total"] == 28 && tb == ta;
              std::vector<oracle::V> la, lb;
              for (const auto& l : a.doc["lines"]) la.push_back(Covector(l["hyperplane"]));
              for (const auto& l : b.doc["lines"]) lb.push_back(Covector(l["hyperplane"]));
              const double drift = MatchError(la, lb);
              const double secs = a.seconds + b.seconds;
              return Outcome{tallies && drift < 1e-3 && secs < 120.0,
                             "total " + ta["total"].dump() + Fmt(", drift %.2e", drift) +
                                 Fmt(", %.2f s", secs)};
            });

  Criterion(7, "collinear spheres: a continuum family is reported", [&] {
    const std::string scene = Scene("collinear_spheres.json");
    const Run c = Cli("count --scene " + scene + " --no-timings");
    const Run o = Cli("oracle --scene " + scene + " --no-timings");
    const bool family = c.doc["continuum_family"].get<bool>();
    const size_t clusters = o.doc["clusters"].get<size_t>();
    const double diameter = o.doc["angular_diameter"].get<double>();
    std::ostringstream d;
    d << "continuum_family " << family << ", oracle clusters " << clusters
      << Fmt(", angular diameter %.3f", diameter);
    return Outcome{c.exit_code == 0 && family && clusters >= 32 && diameter > 1.0, d.str()};
  });

  Criterion(8, "randomized property suites", [&] {
    const auto t0 = Clock::now();
    const auto reports = props::RunAll(20261015);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool ok = secs < 300.0;
    std::ostringstream d;
    for (const auto& r : reports) {
      ok = ok && r.ok();
      d << r.name << " " << r.cases - r.failures << "/" << r.cases;
      if (!r.ok()) d << " [" << r.first_failure << "]";
      d << "; ";
    }
    d << Fmt("%.2f s", secs);
    return Outcome{ok, d.str()};
  });

  return g_failed == 0 ? 0 : 1;
}
