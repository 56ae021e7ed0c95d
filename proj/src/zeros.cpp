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

#include "nevlab/zeros.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nevlab/error.hpp"

namespace nevlab {

int Divisor::total() const {
  int n = 0;
  for (const auto& p : points) n += p.multiplicity;
  return n;
}

int Divisor::max_multiplicity() const {
  int m = 0;
  for (const auto& p : points) m = std::max(m, p.multiplicity);
  return m;
}

Divisor Divisor::scaled(int factor) const {
  Divisor out = *this;
  for (auto& p : out.points) p.multiplicity *= factor;
  out.residual_count_check *= factor;
  return out;
}

namespace {

// (z - c) g'(z) / g(z) from scaled evaluations.
std::complex<double> log_derivative_term(const AnalyticFunction& g, const AnalyticFunction& dg,
                                         std::complex<double> c, std::complex<double> z) {
  ScaledComplex gv = g.eval_scaled(z);
  ScaledComplex dv = dg.eval_scaled(z);
  if (dv.mantissa == 0.0) return 0.0;
  return (z - c) * (dv.mantissa / gv.mantissa) * std::exp(dv.log_scale - gv.log_scale);
}

}  // namespace

WindingResult winding_number(const AnalyticFunction& g, std::complex<double> center,
                             double radius, const ZeroOptions& opts) {
  if (g.is_zero()) throw DegenerateInput("winding number of the zero function");
  if (!(radius > 0.0)) throw PreconditionError("winding number needs a positive radius");
  const AnalyticFunction dg = g.derivative();
  auto integrand = [&](std::complex<double> z) { return log_derivative_term(g, dg, center, z); };

  std::vector<std::complex<double>> values;
  std::size_t n = 64;
  kernels::map_indexed<std::complex<double>>(
      n, [&](std::size_t k) { return integrand(kernels::circle_node(center, radius, k, n)); },
      values, opts.exec);
  std::complex<double> sum = 0.0;
  for (const auto& v : values) sum += v;
  std::complex<double> prev = sum / static_cast<double>(n);
  while (2 * n <= opts.max_nodes) {
    std::size_t m = 2 * n;
    kernels::map_indexed<std::complex<double>>(
        n,
        [&](std::size_t k) { return integrand(kernels::circle_node(center, radius, 2 * k + 1, m)); },
        values, opts.exec);
    for (const auto& v : values) sum += v;
    std::complex<double> cur = sum / static_cast<double>(m);
    n = m;
    if (std::isfinite(cur.real()) && std::isfinite(cur.imag())) {
      double r_prev = std::round(prev.real());
      double r_cur = std::round(cur.real());
      double res_prev = std::abs(prev - r_prev);
      double res_cur = std::abs(cur - r_cur);
      if (r_prev == r_cur && res_prev < 0.25 && res_cur < 0.25) {
        return {static_cast<int>(r_cur), res_cur, n};
      }
    }
    prev = cur;
  }
  throw EstimationError("winding number failed to certify on |z - c| = " + std::to_string(radius) +
                        " (zeros too close to the contour?)");
}

std::vector<DivisorPoint> polynomial_roots(const UPoly& p) {
  if (p.is_zero()) throw DegenerateInput("roots of the zero polynomial");
  std::vector<DivisorPoint> out;
  std::vector<UPoly> factors = square_free_decomposition(p);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const UPoly& f = factors[k];
    const int d = f.degree();
    if (d <= 0) continue;
    const int mult = static_cast<int>(k) + 1;
    if (d == 1) {
      out.push_back({(-f[0] / f[1]).to_complex(), mult});
      continue;
    }
    // f is monic: companion matrix with the negated low coefficients in the last column.
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -f[static_cast<std::size_t>(i)].to_complex();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw EstimationError("companion eigenvalue solve failed");
    UPoly df = f.derivative();
    for (int i = 0; i < d; ++i) {
      std::complex<double> z = solver.eigenvalues()(i);
      for (int it = 0; it < 8; ++it) {
        std::complex<double> fz = f.eval(z);
        std::complex<double> dz = df.eval(z);
        if (dz == 0.0) break;
        std::complex<double> step = fz / dz;
        z -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
      }
      out.push_back({z, mult});
    }
  }
  return out;
}

namespace {

// Recursive quadrisection with cell windings from adaptive argument tracking.
class Localizer {
 public:
  Localizer(const AnalyticFunction& g, double scale, const ZeroOptions& opts)
      : g_(g), dg_(g.derivative()), scale_(scale), opts_(opts) {}

  void run(std::complex<double> center, double half) {
    int count = cell_count(center, half, 32);
    process(center, half, count, 0);
  }

  std::vector<DivisorPoint> take() { return std::move(found_); }

 private:
  double segment_arg(std::complex<double> a, std::complex<double> ga, std::complex<double> b,
                     std::complex<double> gb, int depth) const {
    double delta = std::arg(gb / ga);
    if (std::abs(delta) < std::numbers::pi / 4) return delta;
    if (depth > 48) throw EstimationError("argument tracking did not resolve (zero on a cell edge?)");
    std::complex<double> mid = 0.5 * (a + b);
    std::complex<double> gm = g_.eval_scaled(mid).mantissa;
    if (gm == 0.0) throw EstimationError("zero on a cell edge");
    return segment_arg(a, ga, mid, gm, depth + 1) + segment_arg(mid, gm, b, gb, depth + 1);
  }

  int cell_count(std::complex<double> center, double half, int pieces) const {
    const std::complex<double> corners[4] = {
        center + std::complex<double>(-half, -half), center + std::complex<double>(half, -half),
        center + std::complex<double>(half, half), center + std::complex<double>(-half, half)};
    double total = 0.0;
    for (int side = 0; side < 4; ++side) {
      std::complex<double> a = corners[side];
      std::complex<double> b = corners[(side + 1) % 4];
      std::complex<double> prev_z = a;
      std::complex<double> prev_g = g_.eval_scaled(a).mantissa;
      for (int k = 1; k <= pieces; ++k) {
        std::complex<double> z = a + (b - a) * (static_cast<double>(k) / pieces);
        std::complex<double> gz = g_.eval_scaled(z).mantissa;
        if (gz == 0.0 || prev_g == 0.0) throw EstimationError("zero on a cell edge");
        total += segment_arg(prev_z, prev_g, z, gz, 0);
        prev_z = z;
        prev_g = gz;
      }
    }
    double turns = total / (2.0 * std::numbers::pi);
    return static_cast<int>(std::lround(turns));
  }

  bool newton(std::complex<double>& z, int multiplicity) const {
    for (int it = 0; it < 60; ++it) {
      ScaledComplex gv = g_.eval_scaled(z);
      if (gv.mantissa == 0.0) return true;
      ScaledComplex dv = dg_.eval_scaled(z);
      if (dv.mantissa == 0.0) return false;
      std::complex<double> step = static_cast<double>(multiplicity) * (gv.mantissa / dv.mantissa) *
                                  std::exp(gv.log_scale - dv.log_scale);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return false;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) return true;
    }
    return false;
  }

  bool inside(std::complex<double> z, std::complex<double> center, double half) const {
    return std::abs(z.real() - center.real()) <= half * 1.0000001 &&
           std::abs(z.imag() - center.imag()) <= half * 1.0000001;
  }

  bool try_accept(std::complex<double> center, double half, int count) {
    std::complex<double> z = center;
    if (!newton(z, count) || !inside(z, center, half)) return false;
    // Multiplicity from a small circle around the polished location.
    WindingResult w;
    try {
      w = winding_number(g_, z, half, opts_);
    } catch (const EstimationError&) {
      return false;
    }
    if (w.count != count) return false;
    found_.push_back({z, count});
    return true;
  }

  void process(std::complex<double> center, double half, int count, int depth) {
    if (count <= 0) return;
    if (count == 1 && half < 0.05 * scale_ && try_accept(center, half, 1)) return;
    if (count >= 2 && half < 1e-3 * scale_ && try_accept(center, half, count)) return;
    if (half < opts_.cell_floor || depth > 60) {
      found_.push_back({center, count});
      return;
    }
    const double q = 0.5 * half;
    const std::complex<double> centers[4] = {
        center + std::complex<double>(-q, -q), center + std::complex<double>(q, -q),
        center + std::complex<double>(q, q), center + std::complex<double>(-q, q)};
    int counts[4];
    int pieces = 32;
    for (int attempt = 0; attempt < 3; ++attempt) {
      int sum = 0;
      for (int c = 0; c < 4; ++c) {
        counts[c] = cell_count(centers[c], q, pieces);
        sum += counts[c];
      }
      if (sum == count) break;
      if (attempt == 2) throw EstimationError("inconsistent cell windings during zero localization");
      pieces *= 4;
    }
    for (int c = 0; c < 4; ++c) process(centers[c], q, counts[c], depth + 1);
  }

  const AnalyticFunction& g_;
  AnalyticFunction dg_;
  double scale_;
  const ZeroOptions& opts_;
  std::vector<DivisorPoint> found_;
};

double nudged_radius(const std::vector<DivisorPoint>& pts, double t, const ZeroOptions& opts,
                     bool& nudged) {
  double radius = t;
  for (int guard = 0; guard < 1000; ++guard) {
    bool near = std::any_of(pts.begin(), pts.end(), [&](const DivisorPoint& p) {
      return std::abs(std::abs(p.location) - radius) < opts.contour_clearance;
    });
    if (!near) return radius;
    radius += opts.nudge;
    nudged = true;
  }
  throw EstimationError("could not nudge the radius away from zeros");
}

}  // namespace

Divisor zeros_in_disc(const AnalyticFunction& g, double t, const ZeroOptions& opts) {
  if (g.is_zero()) throw DegenerateInput("zeros_in_disc: function vanishes identically");
  if (!(t > 0.0)) throw PreconditionError("zeros_in_disc: radius must be positive");
  Divisor div;
  div.requested_radius = t;
  const AnalyticFunction num = g.numerator();

  std::vector<DivisorPoint> candidates;
  double known_reach = std::numeric_limits<double>::infinity();  // every zero inside is known
  if (opts.method == ZeroMethod::Auto && !num.has_exponentials()) {
    candidates = polynomial_roots(num.numerator_poly());
  } else {
    const double reach = t * (1.0 + 1e-3) + 1e-6;
    // Offset keeps the axes (where symmetric zeros often sit) off the cell edges.
    const std::complex<double> center(0.0123456789 * reach, 0.00987654321 * reach);
    Localizer loc(num, std::max(t, 1e-3), opts);
    loc.run(center, reach * 1.03);
    candidates = loc.take();
    known_reach = reach * 1.01;
  }

  div.radius = nudged_radius(candidates, t, opts, div.nudged);
  for (const auto& p : candidates) {
    if (std::abs(p.location) <= div.radius) div.points.push_back(p);
  }
  std::sort(div.points.begin(), div.points.end(), [](const DivisorPoint& a, const DivisorPoint& b) {
    if (std::abs(a.location) != std::abs(b.location)) return std::abs(a.location) < std::abs(b.location);
    return std::arg(a.location) < std::arg(b.location);
  });

  // The count check runs on a circle inside the zero-free annulus around the
  // radius: a zero 1e-8 from the contour is beyond 2^18 trapezoid nodes.
  double lo = 0.0;
  double hi = std::isfinite(known_reach) ? known_reach : 2.0 * div.radius + 1.0;
  for (const auto& p : candidates) {
    double m = std::abs(p.location);
    if (m <= div.radius) lo = std::max(lo, m);
    else hi = std::min(hi, m);
  }
  double check_radius = div.radius;
  if (std::min(div.radius - lo, hi - div.radius) < 1e-4 * std::max(1.0, div.radius)) {
    check_radius = 0.5 * (lo + hi);
  }
  div.residual_count_check = winding_number(num, 0.0, check_radius, opts).count;
  if (div.residual_count_check != div.total()) {
    throw EstimationError("zero extraction found " + std::to_string(div.total()) +
                          " zeros but the outer winding counts " +
                          std::to_string(div.residual_count_check));
  }

  // A polynomial denominator can cancel zeros of an exponential numerator.
  if (num.has_exponentials() && g.denominator().degree() > 0) {
    for (const auto& pole : polynomial_roots(g.denominator())) {
      for (auto& p : div.points) {
        if (std::abs(p.location - pole.location) <= 1e-7 * std::max(1.0, std::abs(p.location))) {
          int cancel = std::min(p.multiplicity, pole.multiplicity);
          p.multiplicity -= cancel;
          div.residual_count_check -= cancel;
        }
      }
    }
    std::erase_if(div.points, [](const DivisorPoint& p) { return p.multiplicity <= 0; });
  }
  return div;
}

}  // namespace nevlab
