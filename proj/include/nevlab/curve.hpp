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

#include <complex>
#include <limits>
#include <vector>

#include "nevlab/analytic_function.hpp"

namespace nevlab {

/// Holomorphic map from the disc |z| < R into P^N, given by a representation
/// (f_0, ..., f_N). R may be +infinity.
struct Curve {
  std::vector<AnalyticFunction> components;
  double R = std::numeric_limits<double>::infinity();

  Curve() = default;
  Curve(std::vector<AnalyticFunction> comps, double radius = std::numeric_limits<double>::infinity())
      : components(std::move(comps)), R(radius) {}

  std::size_t ambient_dim() const { return components.size() - 1; }
  bool from_plane() const { return R == std::numeric_limits<double>::infinity(); }

  /// log ||f(z)|| with the Euclidean norm; -inf at a common zero.
  double log_norm(std::complex<double> z) const;
  std::vector<ScaledComplex> eval_scaled(std::complex<double> z) const;
};

/// log sqrt(sum |v_i|^2) for scaled values.
double log_norm(const std::vector<ScaledComplex>& values);

/// det(f_i^{(k)}), 0 <= i, k <= N, expanded exactly.
AnalyticFunction wronskian(const Curve& curve);

}  // namespace nevlab
