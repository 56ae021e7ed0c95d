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

#include <cmath>

#include "nevlab/smt_verifier.hpp"

using namespace nevlab;

namespace {

std::string scenario_path(const std::string& name) { return std::string(NEVLAB_SCENARIO_DIR) + "/" + name; }

const char* kMinimal = R"({
  "ambient_N": 1,
  "curve": {"components": ["1", "z"]},
  "hypersurfaces": [{"degree": 1, "coefficients": {"x1": "1", "x0": "2"}}],
  "epsilon": "1/2"
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

void check_parse_error(const std::string& text, const std::string& needle) {
  try {
    parse_scenario(text);
    FAIL("no error for " << needle);
  } catch (const ParseError& e) {
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
  }
}

}  // namespace

TEST_CASE("scenario loading") {
  Scenario s = parse_scenario(kMinimal);
  CHECK(s.ambient_N == 1);
  CHECK(s.hypersurfaces.size() == 1);
  CHECK(s.epsilon == make_rational(1, 2));
  CHECK(s.epsilon_prime_or_default() == make_rational(1, 20));
  CHECK(std::isinf(s.curve.R));
  CHECK(s.grid.values.size() == 40);
  CHECK(s.variety.dim() == 1);

  check_parse_error(replace(kMinimal, R"("epsilon": "1/2")", R"("eps": "1/2")"), "'epsilon'");
  check_parse_error(replace(kMinimal, R"("degree": 1)", R"("degree": 2)"), "hypersurfaces[0]");
  check_parse_error(replace(kMinimal, R"(["1", "z"])", R"(["1"])"), "curve.components");
  check_parse_error(replace(kMinimal, R"("x0": "2")", R"("x0": "z")"), "hypersurfaces[0].moving");
  check_parse_error(replace(kMinimal, R"("1/2")", R"("1/0")"), "epsilon");
  check_parse_error(replace(kMinimal, "\"epsilon\": \"1/2\"\n}", "\"epsilon\": \"1/2\", \"r0\": 5\n}"), "grid");
  check_parse_error("{\n  \"ambient_N\": 1,\n  oops\n}", "line 3");
  CHECK_THROWS_AS(load_scenario(scenario_path("missing.json")), ParseError);

  for (const char* name : {"line_three_points.json", "conic_four_lines.json", "disc_model_growth.json",
                           "moving_exponential.json", "quadric_weights.json"}) {
    CHECK_NOTHROW(load_scenario(scenario_path(name)));
  }
}

TEST_CASE("nondegeneracy spot check") {
  Variety plane = Variety::projective_space(2);
  Variety conic(3, {parse_homog_poly("x0*x2 - x1^2", 3)});
  Curve veronese({parse_function("1"), parse_function("z"), parse_function("z^2")});
  CHECK_THROWS_AS(spot_check_nondegeneracy(veronese, plane), DegenerateInput);
  auto rows = spot_check_nondegeneracy(veronese, conic);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].rank == 5);
  Curve other({parse_function("1"), parse_function("z"), parse_function("z^3")});
  CHECK_THROWS_AS(spot_check_nondegeneracy(other, conic), PreconditionError);
  CHECK(spot_check_nondegeneracy(other, plane).back().rank == 6);
}

TEST_CASE("main inequality on the conic") {
  Scenario s = load_scenario(scenario_path("conic_four_lines.json"));
  SMTReport rep = verify_main_inequality(s);
  CHECK(rep.geometry.n == 1);
  CHECK(rep.geometry.deg_v == 2);
  CHECK(rep.geometry.delta == 1);
  CHECK(rep.falsifications == 0);
  CHECK(rep.truncation_saturated);
  REQUIRE(rep.constants.L);
  CHECK(*rep.constants.L == 228);  // floor(84 e)
  bool flagged = false;
  for (const auto& f : rep.flags) flagged |= f.rfind("truncation-saturated", 0) == 0;
  CHECK(flagged);
  for (const auto& row : rep.rows) {
    CHECK(row.margin == doctest::Approx(row.rhs - row.lhs));
    CHECK(row.correction == 0.0);
    if (row.r >= 100.0) CHECK(row.margin >= -1e-6);
    // Each line meets the curve twice: sum N ~ 8 log r, T ~ 2 log r.
  }
  CHECK(rep.rows.back().counting_sum / rep.rows.back().T == doctest::Approx(4.0).epsilon(0.02));
  CHECK(rep.log10_improvement > 0.0);
}

TEST_CASE("Ru-Sibony on the conic scenario") {
  Scenario s = load_scenario(scenario_path("conic_four_lines.json"));
  auto rows = check_ru_sibony(s.curve, s.hypersurfaces, s.grid);
  CHECK(rows.back().r == doctest::Approx(1000.0));
  CHECK(rows.back().ratio >= -0.05);
}

TEST_CASE("defect relation for three points") {
  Scenario s = load_scenario(scenario_path("line_three_points.json"));
  DefectRelationReport rep = defect_relation_report(s);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[0].value == doctest::Approx(1.0).epsilon(0.02));
  CHECK(std::abs(rep.rows[1].value) <= 0.02);
  CHECK(std::abs(rep.rows[2].value) <= 0.02);
  CHECK(rep.bound == doctest::Approx(2.5));
  CHECK(rep.holds);
  CHECK(rep.sum <= 2.5);
  CHECK(rep.u == 60);  // eps = 1/2
  REQUIRE(rep.constants.L);
  CHECK(*rep.constants.L == 95);  // floor(35 e)

  Scenario moving = load_scenario(scenario_path("moving_exponential.json"));
  CHECK_THROWS_AS(defect_relation_report(moving), PreconditionError);
}

TEST_CASE("disc scenario carries a correction term") {
  Scenario s = load_scenario(scenario_path("disc_model_growth.json"));
  SMTReport rep = verify_main_inequality(s);
  CHECK(!rep.plane);
  CHECK(rep.growth_index == doctest::Approx(0.5));
  CHECK(rep.growth_mode == "closed-form");
  // (Delta(n+1) + eps)(c + eps')(L' - 1) / (2 d u'), c = 1/lambda = 1/2.
  REQUIRE(rep.constants.L);
  const double expected = rep.geometry.inputs.delta.get_d() * 2 + 0.5;
  const double coef = expected * (0.5 + 0.05) * (rep.constants.L->get_d() - 1.0) /
                      (2.0 * static_cast<double>(rep.geometry.d) * rep.constants.u.get_d());
  CHECK(std::pow(10.0, rep.log10_correction) == doctest::Approx(coef));
  for (const auto& row : rep.rows) {
    CHECK(row.correction > 0.0);
    CHECK(row.correction == doctest::Approx(coef * row.T));
  }
  CHECK(rep.falsifications == 0);
}

TEST_CASE("moving hypersurfaces") {
  Scenario s = load_scenario(scenario_path("moving_exponential.json"));
  SMTReport rep = verify_main_inequality(s);
  CHECK(rep.constants.variant == ConstantsVariant::MovingA);
  CHECK(rep.truncation_saturated);
  CHECK(rep.falsifications == 0);
  CHECK(rep.rows.back().T > 10.0);
}

TEST_CASE("vacuous regime and falsification") {
  std::string text = R"({
    "ambient_N": 1,
    "curve": {"components": ["1", "z"]},
    "hypersurfaces": [{"degree": 1, "coefficients": {"x1": "1", "x0": "2"}}],
    "epsilon": "1/2",
    "grid": {"kind": "geometric", "lo": 2, "hi": 100, "points": 5}
  })";
  SMTReport rep = verify_main_inequality(parse_scenario(text));
  bool vacuous = false;
  for (const auto& f : rep.flags) vacuous |= f.rfind("vacuous", 0) == 0;
  CHECK(vacuous);
  CHECK(rep.falsifications == 0);

  // The inequality holds up to bounded terms as r grows; on radii below the
  // zeros of Q_j(f) the counting sum is 0 and the finite-r report flags it.
  std::string early = R"({
    "ambient_N": 1,
    "curve": {"components": ["1", "z"]},
    "hypersurfaces": [
      {"degree": 1, "coefficients": {"x0": "1"}},
      {"degree": 1, "coefficients": {"x1": "1", "x0": "-10"}},
      {"degree": 1, "coefficients": {"x1": "1", "x0": "10"}}
    ],
    "epsilon": "1/10",
    "grid": {"kind": "geometric", "lo": 2, "hi": 9, "points": 6}
  })";
  SMTReport f = verify_main_inequality(parse_scenario(early));
  CHECK(f.falsifications == 6);
  CHECK(f.rows.front().counting_sum == 0.0);
}
