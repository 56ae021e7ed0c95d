// Copyright 2026 The nevlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string scenario_path(const std::string& name) { return std::string(NEVLAB_SCENARIO_DIR) + "/" + name; }

struct Run {
  int code = -1;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = nevlab::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / ("nevlab_cli_" + name);
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST_CASE("every command on the shipped scenarios") {
  const std::vector<std::string> scenarios = {"line_three_points.json", "conic_four_lines.json",
                                              "disc_model_growth.json", "moving_exponential.json",
                                              "quadric_weights.json"};
  for (const auto& name : scenarios) {
    for (const char* cmd : {"constants", "distributive", "nevanlinna", "fmt-check", "verify"}) {
      Run r = run({cmd, "--scenario", scenario_path(name)});
      INFO(cmd << " " << name << ": " << r.err);
      CHECK(r.code == nevlab::cli::kExitOk);
      json doc = json::parse(r.out);  // round trip
      CHECK(doc["command"] == cmd);
      CHECK(doc.contains("rows"));
      CHECK(doc["rows"].is_array());
      CHECK(doc.contains("flags"));
    }
  }
  Run d = run({"defects", "--scenario", scenario_path("line_three_points.json")});
  CHECK(d.code == 0);
  json dj = json::parse(d.out);
  CHECK(dj["holds"] == true);
  CHECK(dj["bound"].get<double>() == doctest::Approx(2.5));

  Run w = run({"weights", "--scenario", scenario_path("quadric_weights.json"), "--max-u", "20"});
  CHECK(w.code == 0);
  json wj = json::parse(w.out);
  CHECK(wj["rows"].size() == 4);  // ladder 2, 5, 10, 20
  CHECK(wj["hilbert"] == 25);
}

TEST_CASE("constants report") {
  Run r = run({"constants", "--scenario", scenario_path("line_three_points.json")});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["inputs"]["delta"] == "1");
  CHECK(j["constants"]["fixed"]["u"] == "30");
  CHECK(j["defect_relation_u"] == "60");
  CHECK(j["constants"]["fixed"]["L"] == "95");
  CHECK(j["constants"].contains("moving"));
  CHECK(j["constants"]["moving"]["variant"] == "moving");
  Run csv = run({"constants", "--scenario", scenario_path("line_three_points.json"), "--format", "csv"});
  CHECK(csv.out.rfind("variant,u,L,log10_L\n", 0) == 0);
}

TEST_CASE("verify output formats") {
  Run r = run({"verify", "--scenario", scenario_path("conic_four_lines.json"), "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "r,LHS,RHS,margin");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 40);

  Run j = run({"verify", "--scenario", scenario_path("conic_four_lines.json")});
  json doc = json::parse(j.out);
  CHECK(doc["truncation_saturated"] == true);
  CHECK(doc["falsifications"] == 0);
  CHECK(doc["constants"]["L"] == "228");
}

TEST_CASE("determinism and --output") {
  const std::string a = (fs::temp_directory_path() / "nevlab_cli_a.json").string();
  const std::string b = (fs::temp_directory_path() / "nevlab_cli_b.json").string();
  for (const auto& path : {a, b}) {
    Run r = run({"verify", "--scenario", scenario_path("moving_exponential.json"), "--seed", "11", "--output", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
  }
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(!sa.str().empty());
  CHECK(sa.str() == sb.str());
}

TEST_CASE("exit codes") {
  // Finite-r falsification: counting sums are 0 before the zeros at |z| = 10.
  const std::string early = temp_file("early.json", R"({
    "ambient_N": 1,
    "curve": {"components": ["1", "z"]},
    "hypersurfaces": [
      {"degree": 1, "coefficients": {"x0": "1"}},
      {"degree": 1, "coefficients": {"x1": "1", "x0": "-10"}},
      {"degree": 1, "coefficients": {"x1": "1", "x0": "10"}}
    ],
    "epsilon": "1/10",
    "grid": {"kind": "geometric", "lo": 2, "hi": 9, "points": 6}
  })");
  Run f = run({"verify", "--scenario", early});
  CHECK(f.code == nevlab::cli::kExitFalsified);
  CHECK(json::parse(f.out)["falsifications"] == 6);

  const std::string missing = temp_file("missing.json", R"({
    "ambient_N": 1,
    "curve": {"components": ["1", "z"]},
    "hypersurfaces": [{"degree": 1, "coefficients": {"x0": "1"}}]
  })");
  Run m = run({"verify", "--scenario", missing});
  CHECK(m.code == nevlab::cli::kExitError);
  CHECK(m.err.find("epsilon") != std::string::npos);

  CHECK(run({"bogus"}).code == nevlab::cli::kExitError);
  CHECK(run({"verify"}).code == nevlab::cli::kExitError);
  CHECK(run({"verify", "--scenario", scenario_path("conic_four_lines.json"), "--format", "xml"}).code ==
        nevlab::cli::kExitError);
  CHECK(run({"weights", "--scenario", scenario_path("line_three_points.json")}).code == nevlab::cli::kExitError);
  CHECK(run({"defects", "--scenario", scenario_path("moving_exponential.json")}).code == nevlab::cli::kExitError);
  CHECK(run({"--help"}).code == nevlab::cli::kExitOk);
}

TEST_CASE("strict Jensen flag") {
  const std::string origin = temp_file("origin.json", R"({
    "ambient_N": 1,
    "curve": {"components": ["1", "z"]},
    "hypersurfaces": [{"degree": 1, "coefficients": {"x1": "1"}}],
    "epsilon": "1/2",
    "grid": {"kind": "geometric", "lo": 2, "hi": 100, "points": 4}
  })");
  json plain = json::parse(run({"nevanlinna", "--scenario", origin}).out);
  json strict = json::parse(run({"nevanlinna", "--scenario", origin, "--strict-jensen"}).out);
  CHECK(plain["rows"][3]["hypersurfaces"][0]["N_full"] == 0.0);
  CHECK(strict["rows"][3]["hypersurfaces"][0]["N_full"].get<double>() == doctest::Approx(std::log(200.0)));
}
