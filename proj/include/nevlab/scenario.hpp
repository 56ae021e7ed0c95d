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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nevlab/curve.hpp"
#include "nevlab/groebner.hpp"
#include "nevlab/hypersurface.hpp"
#include "nevlab/nevanlinna.hpp"

namespace nevlab {

/// A validated verifier input. Exact data (epsilon, weights, coefficients)
/// arrive as strings so no float touches them.
struct Scenario {
  std::string name;
  std::size_t ambient_N = 1;
  std::vector<std::string> variety_generators;
  Variety variety;
  Curve curve;
  std::vector<std::string> curve_text;
  std::vector<Hypersurface> hypersurfaces;
  Rational epsilon;
  std::optional<Rational> epsilon_prime;
  RadialGrid grid;
  std::optional<long> truncation;
  std::uint64_t seed = 1;
  std::optional<double> growth_lambda;  // closed-form growth model T = lambda log(1/(R - r))
  std::vector<Rational> weights;        // optional weight vector for the weights command
  int weights_u = 0;

  /// epsilon' with the default epsilon / 10.
  Rational epsilon_prime_or_default() const;
  bool moving() const;
};

/// Parses and validates scenario JSON. ParseError names the offending field.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

}  // namespace nevlab
