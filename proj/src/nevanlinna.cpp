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

#include "nevlab/nevanlinna.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "nevlab/error.hpp"

namespace nevlab {

void RadialGrid::validate() const {
  if (!(r0 > 0.0)) throw PreconditionError("grid: r0 must be positive");
  if (values.empty()) throw PreconditionError("grid: no radii");
  if (!(values.front() > r0)) throw PreconditionError("grid: r0 must be below the first radius");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) throw PreconditionError("grid: radii must be strictly increasing");
  }
  if (!(values.back() < R)) throw PreconditionError("grid: radii must stay inside the disc");
}

RadialGrid RadialGrid::geometric(double lo, double hi, int points, double r0, double R) {
  if (points < 2 || !(lo > 0.0) || !(hi > lo)) throw PreconditionError("grid: bad geometric range");
  RadialGrid g;
  g.r0 = r0;
  g.R = R;
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) g.values.push_back(i + 1 == points ? hi : lo * std::exp(step * i));
  g.validate();
  return g;
}

RadialGrid RadialGrid::blowup(double R, int count, double r0) {
  if (!std::isfinite(R) || count < 1) throw PreconditionError("grid: blow-up ladder needs finite R");
  RadialGrid g;
  g.r0 = r0;
  g.R = R;
  for (int j = 1; j <= count; ++j) g.values.push_back(R * (1.0 - std::ldexp(1.0, -j)));
  g.validate();
  return g;
}

RadialGrid RadialGrid::default_for(double R) {
  if (std::isfinite(R)) return blowup(R, 20, std::min(0.5, R / 4.0));
  return geometric(2.0, 1e3, 40, 0.5, R);
}

CircleMean characteristic(const Curve& curve, double r, const NevanlinnaOptions& opts) {
  if (!(r > 0.0) || !(r < curve.R)) throw PreconditionError("characteristic: radius outside the disc");
  const double at_origin = curve.log_norm(0.0);
  if (!std::isfinite(at_origin)) throw DegenerateInput("all components vanish at the origin");
  auto mean = kernels::circle_mean_adaptive<double>(
      [&](std::complex<double> z) {
        double v = curve.log_norm(z);
        if (!std::isfinite(v)) throw DegenerateInput("components have a common zero on the circle");
        return v;
      },
      0.0, r, opts.quad_tol, opts.exec, 64, opts.max_nodes);
  return {mean.value - at_origin, mean.nodes};
}

double counting_at(const Divisor& divisor, double r, double r0, int k, bool strict_jensen) {
  if (r > divisor.radius * (1.0 + 1e-12)) throw PreconditionError("counting: divisor radius below r");
  double out = 0.0;
  long at_origin = 0;
  for (const auto& p : divisor.points) {
    const long m = k == kNoTruncation ? p.multiplicity : std::min(k, p.multiplicity);
    const double a = std::abs(p.location);
    if (a <= 1e-12) {
      at_origin += m;
    } else if (a <= r) {
      out += m * std::log(r / std::max(a, r0));
    }
  }
  if (strict_jensen) out += at_origin * std::log(r / r0);
  return out;
}

std::vector<double> counting(const Divisor& divisor, const RadialGrid& grid, int k, bool strict_jensen) {
  std::vector<double> out;
  for (double r : grid.values) out.push_back(counting_at(divisor, r, grid.r0, k, strict_jensen));
  return out;
}

namespace {

CircleMean proximity_composed(const Curve& curve, const Hypersurface& q, const AnalyticFunction& qf, double r,
                              const NevanlinnaOptions& opts) {
  if (!(r > 0.0) || !(r < curve.R)) throw PreconditionError("proximity: radius outside the disc");
  const int d = q.degree();
  auto mean = kernels::circle_mean_adaptive<double>(
      [&](std::complex<double> z) {
        double v = d * curve.log_norm(z) + q.log_coeff_norm(z) - qf.eval_scaled(z).log_abs();
        if (!std::isfinite(v)) throw EstimationError("Q(f) vanishes on the circle |z| = " + std::to_string(r));
        return v;
      },
      0.0, r, opts.quad_tol, opts.exec, 64, opts.max_nodes);
  return {mean.value, mean.nodes};
}

AnalyticFunction composed_nonzero(const Curve& curve, const Hypersurface& q) {
  AnalyticFunction qf = compose_hypersurface(q, curve.components);
  if (qf.is_zero()) throw DegenerateInput("the curve lies in the hypersurface " + q.to_string());
  return qf;
}

// Zeros within the disc of radius r_max, nudged together with the grid.
Divisor divisor_for_grid(const AnalyticFunction& g, double r_max, const NevanlinnaOptions& opts) {
  return zeros_in_disc(g, r_max, opts.zeros);
}

}  // namespace

CircleMean proximity(const Curve& curve, const Hypersurface& q, double r, const NevanlinnaOptions& opts) {
  return proximity_composed(curve, q, composed_nonzero(curve, q), r, opts);
}

double clear_radius(const Divisor& d, double r, double clearance) {
  double radius = r;
  for (int guard = 0; guard < 1000; ++guard) {
    const double gap = clearance * radius;
    auto it = std::find_if(d.points.begin(), d.points.end(), [&](const DivisorPoint& p) {
      return std::abs(std::abs(p.location) - radius) < gap;
    });
    if (it == d.points.end()) return radius;
    radius = std::abs(it->location) * (1.0 + 2.0 * clearance);
  }
  throw EstimationError("could not move the radius away from zeros");
}

namespace {

double clear_radius_all(const std::vector<const Divisor*>& ds, double r, double clearance) {
  double radius = r;
  for (int pass = 0; pass < 100; ++pass) {
    double before = radius;
    for (const Divisor* d : ds) radius = clear_radius(*d, radius, clearance);
    if (radius == before) return radius;
  }
  throw EstimationError("could not move the radius away from zeros");
}

}  // namespace

NevanlinnaProfile nevanlinna_profile(const Curve& curve, const std::vector<Hypersurface>& hypersurfaces,
                                     const RadialGrid& grid, int truncation, const NevanlinnaOptions& opts) {
  grid.validate();
  if (grid.R > curve.R) throw PreconditionError("grid extends beyond the curve's disc");
  NevanlinnaProfile prof;
  prof.grid = grid;
  std::vector<AnalyticFunction> composed;
  std::vector<const Divisor*> divisors;
  prof.members.resize(hypersurfaces.size());
  for (std::size_t j = 0; j < hypersurfaces.size(); ++j) {
    composed.push_back(composed_nonzero(curve, hypersurfaces[j]));
    prof.members[j].degree = hypersurfaces[j].degree();
    prof.members[j].truncation = truncation;
    prof.members[j].divisor = divisor_for_grid(composed.back(), grid.max() * (1.0 + 4.0 * opts.radius_clearance), opts);
  }
  for (const auto& m : prof.members) divisors.push_back(&m.divisor);
  for (double r : grid.values) prof.radii.push_back(clear_radius_all(divisors, r, opts.radius_clearance));
  for (auto& m : prof.members) {
    if (prof.radii.back() > m.divisor.radius) {
      m.divisor = zeros_in_disc(composed[static_cast<std::size_t>(&m - prof.members.data())], prof.radii.back(),
                                opts.zeros);
    }
  }

  struct Row {
    double T = 0.0;
    std::vector<double> m;
  };
  NevanlinnaOptions inner = opts;
  inner.exec = kernels::Exec::Serial;
  std::vector<Row> rows;
  kernels::map_dynamic<Row>(
      prof.radii.size(),
      [&](std::size_t i) {
        Row row;
        row.T = characteristic(curve, prof.radii[i], inner).value;
        for (std::size_t j = 0; j < hypersurfaces.size(); ++j) {
          row.m.push_back(proximity_composed(curve, hypersurfaces[j], composed[j], prof.radii[i], inner).value);
        }
        return row;
      },
      rows, opts.exec);
  for (std::size_t i = 0; i < rows.size(); ++i) prof.T.push_back(rows[i].T);
  for (std::size_t j = 0; j < hypersurfaces.size(); ++j) {
    auto& m = prof.members[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double r = prof.radii[i];
      m.m.push_back(rows[i].m[j]);
      m.N_full.push_back(counting_at(m.divisor, r, grid.r0, kNoTruncation, opts.strict_jensen));
      m.N_trunc.push_back(counting_at(m.divisor, r, grid.r0, truncation, opts.strict_jensen));
      m.residual.push_back(m.degree * prof.T[i] - m.m.back() - m.N_full.back());
    }
  }
  return prof;
}

FmtResult fmt_residual(const Curve& curve, const Hypersurface& q, const RadialGrid& grid,
                       const NevanlinnaOptions& opts) {
  grid.validate();
  const AnalyticFunction qf = composed_nonzero(curve, q);
  if (qf.eval_scaled(0.0).mantissa == 0.0) throw PreconditionError("Q(f)(0) = 0; the first main theorem check needs Q(f)(0) != 0");
  Divisor inner = zeros_in_disc(qf, grid.r0, opts.zeros);
  if (inner.total() > 0) throw PreconditionError("Q(f) has zeros in |z| <= r0");
  NevanlinnaProfile prof = nevanlinna_profile(curve, {q}, grid, kNoTruncation, opts);
  FmtResult out;
  out.radii = prof.radii;
  out.T = prof.T;
  out.m = prof.members[0].m;
  out.N = prof.members[0].N_full;
  out.residuals = prof.members[0].residual;
  out.divisor = prof.members[0].divisor;
  auto [lo, hi] = std::minmax_element(out.residuals.begin(), out.residuals.end());
  out.spread = *hi - *lo;
  return out;
}

GrowthEstimate growth_index_model(double lambda, double R) {
  GrowthEstimate g;
  if (!std::isfinite(R)) {
    g.mode = "plane";
    return g;
  }
  if (!(lambda > 0.0)) throw PreconditionError("growth model needs lambda > 0");
  g.mode = "closed-form";
  g.lambda = lambda;
  g.value = g.lo = g.hi = 1.0 / lambda;
  return g;
}

std::vector<std::size_t> top_decile(std::size_t n) {
  if (n == 0) return {};
  std::size_t start = static_cast<std::size_t>(std::floor(0.9 * static_cast<double>(n)));
  start = std::min(start, n >= 3 ? n - 3 : 0);
  std::vector<std::size_t> out;
  for (std::size_t i = start; i < n; ++i) out.push_back(i);
  return out;
}

GrowthEstimate growth_index_sampled(const std::vector<double>& r, const std::vector<double>& T, double R) {
  GrowthEstimate g;
  if (!std::isfinite(R)) {
    g.mode = "plane";
    return g;
  }
  if (r.size() != T.size() || r.size() < 3) throw PreconditionError("growth fit needs at least three samples");
  for (std::size_t i = 1; i < T.size(); ++i) {
    if (T[i] < T[i - 1] - 1e-9) throw EstimationError("characteristic samples are not non-decreasing");
  }
  g.mode = "sampled";
  auto idx = top_decile(r.size());
  const double m = static_cast<double>(idx.size());
  double sx = 0, sy = 0;
  for (auto i : idx) {
    sx += std::log(1.0 / (R - r[i]));
    sy += T[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, ymax = 0;
  for (auto i : idx) {
    const double x = std::log(1.0 / (R - r[i])) - mx;
    sxx += x * x;
    sxy += x * (T[i] - my);
    ymax = std::max(ymax, std::abs(T[i]));
  }
  if (!(sxx > 0.0)) throw EstimationError("growth fit: degenerate abscissae");
  const double lambda = sxy / sxx;
  const double b = my - lambda * mx;
  double ssr = 0;
  for (auto i : idx) {
    const double e = T[i] - (lambda * std::log(1.0 / (R - r[i])) + b);
    ssr += e * e;
  }
  g.lambda = lambda;
  g.points_used = idx.size();
  g.fit_rms = std::sqrt(ssr / m);
  if (!(lambda > 0.0)) throw EstimationError("growth fit: profile does not blow up logarithmically");
  if (g.fit_rms > 1e-2 * std::max(1.0, ymax)) {
    throw EstimationError("growth fit: residual too large for a logarithmic blow-up profile");
  }
  const double se = idx.size() > 2 ? std::sqrt(ssr / (m - 2) / sxx) : 0.0;
  g.value = 1.0 / lambda;
  g.lo = 1.0 / (lambda + 1.96 * se);
  g.hi = lambda - 1.96 * se > 0 ? 1.0 / (lambda - 1.96 * se) : std::numeric_limits<double>::infinity();
  return g;
}

DefectEstimate defect_from_profile(const std::vector<double>& N, const std::vector<double>& T, int degree) {
  if (N.size() != T.size() || T.empty()) throw PreconditionError("defect: profile length mismatch");
  if (!(T.back() > 0.0)) throw PreconditionError("defect: T_f(r_max) must be positive");
  DefectEstimate out;
  for (std::size_t i = 0; i < T.size(); ++i) {
    out.ratios.push_back(T[i] > 0.0 ? N[i] / (degree * T[i]) : 0.0);
  }
  double top = -std::numeric_limits<double>::infinity();
  for (auto i : top_decile(T.size())) top = std::max(top, out.ratios[i]);
  out.value = 1.0 - top;
  for (std::size_t i = T.size() >= 3 ? T.size() - 3 : 0; i < T.size(); ++i) out.last_ratios.push_back(out.ratios[i]);
  return out;
}

DefectEstimate defect(const Curve& curve, const Hypersurface& q, int k, const RadialGrid& grid,
                      const NevanlinnaOptions& opts) {
  NevanlinnaProfile prof = nevanlinna_profile(curve, {q}, grid, k, opts);
  return defect_from_profile(prof.members[0].N_trunc, prof.T, q.degree());
}

namespace {

// Rank of coefficient vectors over Q(i).
std::size_t rank_of(std::vector<std::vector<GaussianRational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      GaussianRational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<RuSibonyRow> check_ru_sibony(const Curve& curve, const std::vector<Hypersurface>& hyperplanes,
                                         const RadialGrid& grid, const NevanlinnaOptions& opts) {
  grid.validate();
  if (std::isfinite(curve.R)) throw PreconditionError("the Ru-Sibony check is run for curves from C (c_f = 0)");
  const AnalyticFunction w = wronskian(curve);
  if (w.is_zero()) throw DegenerateInput("the curve is linearly degenerate (Wronskian vanishes)");
  const std::size_t n1 = curve.components.size();
  const std::size_t q = hyperplanes.size();
  if (q > 20) throw PreconditionError("too many hyperplanes");

  std::vector<AnalyticFunction> hf;
  std::vector<std::vector<GaussianRational>> coeffs;
  for (const auto& h : hyperplanes) {
    if (h.degree() != 1 || h.num_vars() != n1 || h.is_moving()) {
      throw PreconditionError("Ru-Sibony check needs fixed hyperplanes in the curve's ambient space");
    }
    hf.push_back(composed_nonzero(curve, h));
    std::vector<GaussianRational> row;
    HomogPoly form = h.form();
    for (std::size_t i = 0; i < n1; ++i) row.push_back(form.coeff(Monomial::var(n1, i)));
    coeffs.push_back(std::move(row));
  }
  const std::size_t size = std::min(q, n1);
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << q); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) != size) continue;
    std::vector<std::vector<GaussianRational>> rows;
    for (std::size_t j = 0; j < q; ++j) {
      if (m & (std::uint32_t{1} << j)) rows.push_back(coeffs[j]);
    }
    if (rank_of(rows) == size) subsets.push_back(m);
  }
  if (q > 0 && subsets.empty()) throw DegenerateInput("no linearly independent subset of hyperplanes");

  std::vector<Divisor> divisors;
  divisors.push_back(zeros_in_disc(w, grid.max() * (1.0 + 4.0 * opts.radius_clearance), opts.zeros));
  for (const auto& g : hf) divisors.push_back(zeros_in_disc(g, grid.max() * (1.0 + 4.0 * opts.radius_clearance), opts.zeros));
  std::vector<const Divisor*> dptr;
  for (const auto& d : divisors) dptr.push_back(&d);

  std::vector<double> radii;
  for (double r : grid.values) radii.push_back(clear_radius_all(dptr, r, opts.radius_clearance));
  if (radii.back() > divisors[0].radius) divisors[0] = zeros_in_disc(w, radii.back(), opts.zeros);

  NevanlinnaOptions inner = opts;
  inner.exec = kernels::Exec::Serial;
  std::vector<RuSibonyRow> rows;
  kernels::map_dynamic<RuSibonyRow>(
      radii.size(),
      [&](std::size_t i) {
        RuSibonyRow row;
        row.r = radii[i];
        row.T = characteristic(curve, row.r, inner).value;
        if (q > 0) {
          row.proximity = kernels::circle_mean_adaptive<double>(
                              [&](std::complex<double> z) {
                                const double lf = curve.log_norm(z);
                                std::vector<double> terms(q);
                                for (std::size_t j = 0; j < q; ++j) terms[j] = lf - hf[j].eval_scaled(z).log_abs();
                                double best = -std::numeric_limits<double>::infinity();
                                for (std::uint32_t m : subsets) {
                                  double s = 0.0;
                                  for (std::size_t j = 0; j < q; ++j) {
                                    if (m & (std::uint32_t{1} << j)) s += terms[j];
                                  }
                                  best = std::max(best, s);
                                }
                                if (!std::isfinite(best)) throw EstimationError("hyperplane section on the circle");
                                return best;
                              },
                              0.0, row.r, inner.quad_tol, inner.exec, 64, inner.max_nodes)
                              .value;
        }
        row.N_W = counting_at(divisors[0], row.r, grid.r0, kNoTruncation, opts.strict_jensen);
        row.margin = static_cast<double>(n1) * row.T - (row.proximity + row.N_W);
        row.ratio = row.T > 0.0 ? row.margin / row.T : 0.0;
        return row;
      },
      rows, opts.exec);
  return rows;
}

}  // namespace nevlab
