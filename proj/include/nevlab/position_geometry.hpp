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
#include <limits>
#include <vector>

#include "nevlab/curve.hpp"
#include "nevlab/groebner.hpp"
#include "nevlab/hypersurface.hpp"
#include "nevlab/kernels.hpp"

namespace nevlab {

struct HypersurfaceFamily {
  std::vector<Hypersurface> members;

  std::size_t size() const { return members.size(); }
  bool moving() const;
};

struct PositionOptions {
  int samples = 3;
  std::uint64_t seed = 1;
  int resample_budget = 100;
  /// Sample points are drawn inside |z| < 0.9 R.
  double domain_R = std::numeric_limits<double>::infinity();
  kernels::Exec exec = kernels::Exec::Parallel;
  GroebnerOptions groebner;
};

struct SubsetRow {
  std::uint32_t mask = 0;
  int size = 0;
  int dim = -1;  // -1: empty intersection
  Rational ratio;
  bool pruned = false;  // emptiness inherited from an empty subset
};

struct DistributiveReport {
  Rational value;
  std::uint32_t witness = 0;
  std::vector<SubsetRow> table;  // from the sample that attains the value
  std::vector<GaussianRational> sample_points;
  std::vector<Rational> per_sample;
  bool samples_agree = true;
  bool approximate_coefficients = false;  // exponential coefficients were rationalized
  bool degenerate = false;                // every subset empty: value 0
  bool monotone = true;                   // dim never grows when a form is added
};

/// Delta_V = max over nonempty subsets G of |G| / (n - dim(V cut by Q_j, j in G)),
/// empty intersections contributing 0. Moving families are evaluated at random
/// Gaussian-rational points and the maximum over samples is reported.
DistributiveReport distributive_constant(const Variety& v, const HypersurfaceFamily& family,
                                         const PositionOptions& opts = {});

/// Serial scan that intersects every subset from scratch (no memo, no pruning).
DistributiveReport distributive_constant_reference(const Variety& v, const HypersurfaceFamily& family,
                                                   const PositionOptions& opts = {});

/// Forms Q_j(z) at sample points avoiding zeros and poles of the coefficients.
/// Fixed families give a single sample at z = 0.
std::vector<std::pair<GaussianRational, std::vector<HomogPoly>>> sample_family(
    const HypersurfaceFamily& family, const PositionOptions& opts, bool* approximate = nullptr);

/// Every (ell+1)-subset meets V in the empty set at each sample point.
bool subgeneral_position(const Variety& v, const HypersurfaceFamily& family, int ell,
                         const PositionOptions& opts = {});

struct RemarkCheck {
  Rational delta;
  Rational bound;   // ell - n + 1
  Rational margin;  // bound - delta
  bool falsified = false;
};

/// (ell - n + 1) - Delta_V for a family in weakly ell-subgeneral position.
RemarkCheck check_remark_bound(const Variety& v, const HypersurfaceFamily& family, int ell,
                               const PositionOptions& opts = {});

struct DominationRow {
  double r = 0.0;
  double max_ratio = 0.0;
};

/// sup over |z| = r of min_s ||f||^{d_s} / |Q~_s(f)| for the chosen members,
/// after checking that they cut V in the empty set.
std::vector<DominationRow> check_norm_domination(const Variety& v, const HypersurfaceFamily& family,
                                                 const std::vector<std::size_t>& indices, const Curve& curve,
                                                 const std::vector<double>& radii,
                                                 const PositionOptions& opts = {}, std::size_t nodes = 512);

}  // namespace nevlab
