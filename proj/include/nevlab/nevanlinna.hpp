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

#include <optional>
#include <string>
#include <vector>

#include "nevlab/curve.hpp"
#include "nevlab/hypersurface.hpp"
#include "nevlab/kernels.hpp"
#include "nevlab/zeros.hpp"

namespace nevlab {

/// Radii r0 < r_1 < ... < r_m < R.
struct RadialGrid {
  double r0 = 0.5;
  std::vector<double> values;
  double R = std::numeric_limits<double>::infinity();

  /// Throws PreconditionError unless strictly increasing inside (r0, R).
  void validate() const;
  double max() const { return values.back(); }

  static RadialGrid geometric(double lo, double hi, int points, double r0, double R);
  /// r = R (1 - 2^-j), j = 1..count.
  static RadialGrid blowup(double R, int count, double r0);
  /// Defaults: geometric on [2, 1e3] with 40 points for R = inf, blow-up
  /// ladder with 20 points otherwise; r0 = min(1/2, first / 2).
  static RadialGrid default_for(double R);
};

/// Truncation level meaning "no truncation".
inline constexpr int kNoTruncation = -1;

struct NevanlinnaOptions {
  double quad_tol = 1e-8;
  bool strict_jensen = false;
  std::size_t max_nodes = std::size_t{1} << 18;
  kernels::Exec exec = kernels::Exec::Parallel;
  // Radii closer than radius_clearance * r to a zero modulus are moved
  // outward so circle quadrature of log|g| stays resolvable.
  double radius_clearance = 1e-3;
  ZeroOptions zeros;
};

struct CircleMean {
  double value = 0.0;
  std::size_t nodes = 0;
};

/// T_f(r) = mean over |z| = r of log ||f|| minus log ||f(0)||.
CircleMean characteristic(const Curve& curve, double r, const NevanlinnaOptions& opts = {});

/// N^{[k]}(r) on the grid: sum over zeros 0 < |z_j| <= r of
/// min(k, m_j) log(r / max(|z_j|, r0)). Zeros at the origin are dropped
/// unless strict_jensen, which adds n^{[k]}(0) log(r / r0).
std::vector<double> counting(const Divisor& divisor, const RadialGrid& grid, int k, bool strict_jensen = false);
double counting_at(const Divisor& divisor, double r, double r0, int k, bool strict_jensen = false);

/// m_f(r, Q): mean of log(||f||^d ||Q(z)|| / |Q(f)|) over |z| = r.
CircleMean proximity(const Curve& curve, const Hypersurface& q, double r, const NevanlinnaOptions& opts = {});

/// Smallest radius >= r keeping every divisor point at least clearance * r
/// away from the circle (moving past each offending zero).
double clear_radius(const Divisor& d, double r, double clearance);

struct FmtResult {
  std::vector<double> radii;  // after any nudge
  std::vector<double> T, m, N, residuals;
  double spread = 0.0;
  Divisor divisor;
};

/// d T_f(r) - m_f(r, Q) - N_{Q(f)}(r) on the grid.
FmtResult fmt_residual(const Curve& curve, const Hypersurface& q, const RadialGrid& grid,
                       const NevanlinnaOptions& opts = {});

struct GrowthEstimate {
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double lambda = 0.0;
  double fit_rms = 0.0;
  std::size_t points_used = 0;
  std::string mode;  // "closed-form", "sampled", "plane"
};

/// Closed-form profile T(r) = lambda log(1/(R - r)): c_f = 1/lambda.
GrowthEstimate growth_index_model(double lambda, double R);
/// Least-squares fit of T against log(1/(R - r)) on the top decile of the grid.
GrowthEstimate growth_index_sampled(const std::vector<double>& r, const std::vector<double>& T, double R);

/// Indices of the top decile of an n-point grid (at least three points).
std::vector<std::size_t> top_decile(std::size_t n);

struct DefectEstimate {
  double value = 0.0;
  std::vector<double> last_ratios;  // N / (d T) at the last three radii
  std::vector<double> ratios;       // N / (d T) on the whole grid
};

DefectEstimate defect_from_profile(const std::vector<double>& N, const std::vector<double>& T, int degree);
DefectEstimate defect(const Curve& curve, const Hypersurface& q, int k, const RadialGrid& grid,
                      const NevanlinnaOptions& opts = {});

struct RuSibonyRow {
  double r = 0.0;
  double T = 0.0;
  double proximity = 0.0;  // mean of max_K sum log(||f|| / |H_j(f)|)
  double N_W = 0.0;
  double margin = 0.0;
  double ratio = 0.0;  // margin / T
};

/// (n+1) T_f(r) - [mean max_K sum_{j in K} log(||f|| / |H_j(f)|) + N_W(r)],
/// K over linearly independent subsets of size min(q, n+1).
std::vector<RuSibonyRow> check_ru_sibony(const Curve& curve, const std::vector<Hypersurface>& hyperplanes,
                                         const RadialGrid& grid, const NevanlinnaOptions& opts = {});

}  // namespace nevlab

namespace nevlab {

struct HypersurfaceProfile {
  int degree = 0;
  int truncation = kNoTruncation;
  Divisor divisor;
  std::vector<double> m, N_full, N_trunc, residual;
};

struct NevanlinnaProfile {
  RadialGrid grid;
  std::vector<double> radii;  // grid values after nudging away from zeros
  std::vector<double> T;
  std::vector<HypersurfaceProfile> members;
};

/// T, and per hypersurface m, N^{[inf]}, N^{[k]} and the first main theorem
/// residual d T - m - N, on a common (nudged) set of radii.
NevanlinnaProfile nevanlinna_profile(const Curve& curve, const std::vector<Hypersurface>& hypersurfaces,
                                     const RadialGrid& grid, int truncation, const NevanlinnaOptions& opts = {});

}  // namespace nevlab
