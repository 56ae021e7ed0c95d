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
#include <map>
#include <vector>

#include "nevlab/groebner.hpp"
#include "nevlab/position_geometry.hpp"

namespace nevlab {

using WeightVector = std::vector<Rational>;

struct HilbertWeightResult {
  Rational value;
  std::vector<Monomial> basis;
  int u = 0;
  WeightVector weights;
};

/// S_X(u, c) by matroid greedy: monomials sorted by a.c descending (grevlex
/// tiebreak), kept when their normal forms are independent of those chosen.
HilbertWeightResult hilbert_weight(const Variety& x, int u, const WeightVector& c);
HilbertWeightResult hilbert_weight(const NormalFormTable& table, std::int64_t hilbert_value,
                                   const WeightVector& c);

/// Caches normal-form tables per degree for repeated weight queries.
class HilbertWeightEngine {
 public:
  explicit HilbertWeightEngine(const Variety& x) : x_(x) {}
  HilbertWeightResult operator()(int u, const WeightVector& c);
  const Variety& variety() const { return x_; }

 private:
  const Variety& x_;
  std::map<int, NormalFormTable> tables_;
};

struct ChowEstimate {
  double value = 0.0;
  Rational exact_extrapolant;
  std::vector<std::pair<int, Rational>> sequence;  // (u, s_u), u ascending
  std::vector<Rational> extrapolants;              // increasing order, finest points first
  double error_bound = 0.0;
};

/// Ladder u_max, u_max/2, ... (at most four rungs, u >= 2).
std::vector<int> chow_ladder(int u_max);

/// s_u = (k+1) delta S_X(u,c) / (u H_X(u)) on the ladder, extrapolated to
/// 1/u -> 0 by polynomial interpolation in 1/u.
ChowEstimate chow_weight_estimate(const Variety& x, const WeightVector& c, int u_max);
ChowEstimate chow_weight_estimate(HilbertWeightEngine& engine, const WeightVector& c, int u_max);

struct EvertseFerrettiCheck {
  Rational hilbert_weight;
  std::int64_t hilbert_value = 0;
  double lhs = 0.0;  // S / (u H)
  double rhs = 0.0;  // e / ((k+1) delta) - (2k+1) delta max(c) / u
  double margin = 0.0;
  double tolerance = 0.0;
  bool falsified = false;
};

EvertseFerrettiCheck check_evertse_ferretti(const Variety& x, int u, const WeightVector& c,
                                            const ChowEstimate& e_est);

struct ChowLowerBoundCheck {
  Rational distributive;  // Delta of the hyperplane subfamily
  long degree = 0;
  Rational weight_sum;
  double e_value = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool falsified = false;
};

/// e_Y(c) - (delta_Y / Delta_{H,Y}) (c_{i_1} + ... + c_{i_l}) for coordinate
/// hyperplanes H_i = {y_i = 0}. Throws PreconditionError naming the failed
/// hypothesis (1), (2) or (3).
ChowLowerBoundCheck check_chow_lower_bound(const Variety& y, const std::vector<std::size_t>& subset,
                                           const WeightVector& c, int u_max = 40);

}  // namespace nevlab
