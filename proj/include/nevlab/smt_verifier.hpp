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

#pragma once

#include <string>
#include <vector>

#include "nevlab/constants.hpp"
#include "nevlab/nevanlinna.hpp"
#include "nevlab/position_geometry.hpp"
#include "nevlab/scenario.hpp"

namespace nevlab {

struct VerifyOptions {
  NevanlinnaOptions nevanlinna;
  PositionOptions position;
  CertifyOptions certify;
  double tolerance = 1e-6;  // falsification threshold, scaled by max(1, T)
};

/// n, deg V, d = lcm of degrees, Delta_V of a scenario.
struct ScenarioGeometry {
  int n = 0;
  long deg_v = 0;
  long d = 1;
  Rational delta;
  DistributiveReport distributive;
  ConstantsInputs inputs;
};

ScenarioGeometry scenario_geometry(const Scenario& s, const VerifyOptions& opts = {});

/// Numerical rank of degree-t monomials evaluated along the curve, compared
/// with H_V(t). Lower rank means an extra hypersurface of degree t contains
/// the curve; higher rank means the curve leaves V.
struct NondegeneracyRow {
  int degree = 0;
  std::int64_t hilbert = 0;
  int rank = 0;
};

/// Throws DegenerateInput or PreconditionError on a failed spot check.
std::vector<NondegeneracyRow> spot_check_nondegeneracy(const Curve& curve, const Variety& v, int max_degree = 2);

/// Constants of the inequality that applies to the scenario: the moving
/// variant when any coefficient depends on z, the fixed one otherwise.
SMTConstants scenario_constants(const Scenario& s, const ScenarioGeometry& g, const VerifyOptions& opts = {});

struct SMTRow {
  double r = 0.0;
  double T = 0.0;
  double lhs = 0.0;
  double counting_sum = 0.0;
  double correction = 0.0;  // correction coefficient * T
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
};

struct DefectRow {
  std::size_t index = 0;
  int degree = 0;
  double value = 0.0;
  std::vector<double> last_ratios;
};

struct SMTReport {
  std::string scenario;
  ScenarioGeometry geometry;
  SMTConstants constants;
  SMTConstants previous;           // earlier truncation level, same inputs
  double log10_improvement = 0.0;  // log10(L_previous / L)
  Rational epsilon, epsilon_prime;
  bool plane = true;  // maps from C: no correction term
  double growth_index = 0.0;
  std::string growth_mode;
  double log10_correction = 0.0;  // log10 of the correction coefficient (-inf when absent)
  long truncation = 0;            // level used for N (clamped to int range)
  bool truncation_saturated = false;
  int max_multiplicity = 0;
  std::vector<NondegeneracyRow> nondegeneracy;
  std::vector<SMTRow> rows;
  std::vector<DefectRow> defects;
  std::vector<std::string> flags;
  std::size_t falsifications = 0;
};

SMTReport verify_main_inequality(const Scenario& s, const VerifyOptions& opts = {});

struct DefectRelationReport {
  std::string scenario;
  ScenarioGeometry geometry;
  SMTConstants constants;  // truncation level L of the defect relation
  mpz_class u;             // u of the defect relation's correction term
  double growth_index = 0.0;
  std::vector<DefectRow> rows;
  double sum = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - sum
  bool holds = true;
  std::vector<std::string> flags;
};

/// Truncated defects delta^{[L-1]} for fixed hypersurfaces against
/// Delta_V (n+1) + eps + (Delta_V (n+1) + eps) c_f (L-1) / (2 d u).
DefectRelationReport defect_relation_report(const Scenario& s, const VerifyOptions& opts = {});

/// Growth index of the scenario's curve: 0 from C, the closed-form model when
/// given, otherwise the sampled fit over T on the grid.
GrowthEstimate scenario_growth(const Scenario& s, const std::vector<double>& radii, const std::vector<double>& T);

}  // namespace nevlab
