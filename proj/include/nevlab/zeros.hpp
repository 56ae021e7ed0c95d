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
#include <cstddef>
#include <vector>

#include "nevlab/analytic_function.hpp"
#include "nevlab/kernels.hpp"

namespace nevlab {

struct DivisorPoint {
  std::complex<double> location;
  int multiplicity = 0;
};

/// Zeros of a function in the closed disc |z| <= radius.
struct Divisor {
  std::vector<DivisorPoint> points;
  double radius = 0.0;            // after any nudge
  double requested_radius = 0.0;  // as asked by the caller
  bool nudged = false;
  int residual_count_check = 0;  // independent outer winding count

  int total() const;
  int max_multiplicity() const;
  /// Points with multiplicities scaled by `factor` (divisor of g^factor).
  Divisor scaled(int factor) const;
};

enum class ZeroMethod {
  Auto,               // exact roots for polynomial numerators, winding otherwise
  ArgumentPrinciple,  // winding path for every variant
};

struct ZeroOptions {
  ZeroMethod method = ZeroMethod::Auto;
  double contour_clearance = 1e-9;  // zeros this close to |z| = t trigger a nudge
  double nudge = 1e-8;
  double cell_floor = 1e-7;
  std::size_t max_nodes = std::size_t{1} << 18;
  kernels::Exec exec = kernels::Exec::Parallel;
};

struct WindingResult {
  int count = 0;
  double residual = 0.0;  // distance of the quadrature value from `count`
  std::size_t nodes = 0;
};

/// (1/2 pi i) * contour integral of g'/g over |z - center| = radius by the
/// trapezoid rule, doubling nodes from 64 until two successive counts agree
/// with residual < 0.25. Throws EstimationError past max_nodes.
WindingResult winding_number(const AnalyticFunction& g, std::complex<double> center,
                             double radius, const ZeroOptions& opts = {});

/// Divisor of zeros of g in |z| <= t.
Divisor zeros_in_disc(const AnalyticFunction& g, double t, const ZeroOptions& opts = {});

/// Roots of a polynomial with multiplicities (companion eigenvalues of the
/// square-free factors, Newton-polished).
std::vector<DivisorPoint> polynomial_roots(const UPoly& p);

}  // namespace nevlab
