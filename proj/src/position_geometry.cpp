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

#include "nevlab/position_geometry.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <optional>
#include <random>

#include "nevlab/error.hpp"

namespace nevlab {

bool HypersurfaceFamily::moving() const {
  for (const auto& q : members) {
    if (q.is_moving()) return true;
  }
  return false;
}

namespace {

void check_inputs(const Variety& v, const HypersurfaceFamily& family) {
  if (family.size() == 0) throw PreconditionError("empty hypersurface family");
  if (family.size() > 16) throw PreconditionError("distributive constant supports at most 16 hypersurfaces");
  if (v.empty()) throw PreconditionError("variety is empty");
  if (v.dim() < 1) throw PreconditionError("variety must have dimension at least 1");
  for (const auto& q : family.members) {
    if (q.num_vars() != v.num_vars()) throw PreconditionError("hypersurface lives in a different ambient space");
  }
}

Rational subset_ratio(int size, int dim, int n) {
  if (dim < 0) return Rational(0);
  if (dim >= n) throw DegenerateInput("the variety lies inside a member of the family");
  return make_rational(size, n - dim);
}

struct ScanResult {
  std::vector<SubsetRow> table;
  Rational value;
  std::uint32_t witness = 0;
  bool monotone = true;
};

void finish_scan(ScanResult& s) {
  s.value = 0;
  s.witness = 0;
  // table is ordered by (size, mask): first attainer wins.
  for (const auto& row : s.table) {
    if (row.ratio > s.value) {
      s.value = row.ratio;
      s.witness = row.mask;
    }
  }
}

// Level-by-level scan. A subset's variety is the variety of the subset
// without its top element cut by one more form; supersets of an empty
// intersection are empty without computation.
ScanResult scan_memo(const Variety& v, const std::vector<HomogPoly>& forms, const PositionOptions& opts) {
  const std::size_t q = forms.size();
  const int n = v.dim();
  const std::uint32_t full = (std::uint32_t{1} << q) - 1;
  std::vector<int> dims(full + 1, -2);
  dims[0] = n;
  std::map<std::uint32_t, Variety> prev_level;
  prev_level.emplace(0u, v);
  ScanResult out;
  for (std::size_t k = 1; k <= q; ++k) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m <= full; ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) == k) masks.push_back(m);
    }
    struct Cell {
      int dim = -1;
      bool pruned = false;
      std::optional<Variety> variety;
    };
    std::vector<Cell> cells;
    kernels::map_dynamic<Cell>(
        masks.size(),
        [&](std::size_t idx) {
          const std::uint32_t m = masks[idx];
          Cell c;
          for (std::uint32_t rest = m; rest; rest &= rest - 1) {
            std::uint32_t sub = m & ~(rest & -rest);
            if (dims[sub] == -1) {
              c.pruned = true;
              return c;
            }
          }
          const int top = 31 - std::countl_zero(m);
          const std::uint32_t parent = m & ~(std::uint32_t{1} << top);
          c.variety = prev_level.at(parent).intersect({forms[static_cast<std::size_t>(top)]}, opts.groebner);
          c.dim = c.variety->dim();
          return c;
        },
        cells, opts.exec);
    std::map<std::uint32_t, Variety> level;
    for (std::size_t idx = 0; idx < masks.size(); ++idx) {
      const std::uint32_t m = masks[idx];
      Cell& c = cells[idx];
      dims[m] = c.dim;
      for (std::uint32_t rest = m; rest; rest &= rest - 1) {
        std::uint32_t sub = m & ~(rest & -rest);
        if (dims[sub] >= -1 && c.dim > dims[sub]) out.monotone = false;
      }
      SubsetRow row{m, static_cast<int>(k), c.dim, subset_ratio(static_cast<int>(k), c.dim, n), c.pruned};
      out.table.push_back(row);
      if (c.variety && c.dim >= 0) level.emplace(m, std::move(*c.variety));
    }
    prev_level = std::move(level);
  }
  finish_scan(out);
  return out;
}

ScanResult scan_reference(const Variety& v, const std::vector<HomogPoly>& forms, const PositionOptions& opts) {
  const std::size_t q = forms.size();
  const int n = v.dim();
  const std::uint32_t full = (std::uint32_t{1} << q) - 1;
  ScanResult out;
  for (std::size_t k = 1; k <= q; ++k) {
    for (std::uint32_t m = 1; m <= full; ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) != k) continue;
      std::vector<HomogPoly> cut;
      for (std::size_t j = 0; j < q; ++j) {
        if (m & (std::uint32_t{1} << j)) cut.push_back(forms[j]);
      }
      int dim = v.intersect(cut, opts.groebner).dim();
      out.table.push_back({m, static_cast<int>(k), dim, subset_ratio(static_cast<int>(k), dim, n), false});
    }
  }
  finish_scan(out);
  return out;
}

template <typename Scan>
DistributiveReport run_scan(const Variety& v, const HypersurfaceFamily& family, const PositionOptions& opts,
                            Scan&& scan) {
  check_inputs(v, family);
  DistributiveReport rep;
  auto samples = sample_family(family, opts, &rep.approximate_coefficients);
  bool first = true;
  for (const auto& [z, forms] : samples) {
    ScanResult s = scan(v, forms, opts);
    rep.sample_points.push_back(z);
    rep.per_sample.push_back(s.value);
    rep.monotone = rep.monotone && s.monotone;
    if (first || s.value > rep.value) {
      rep.value = s.value;
      rep.witness = s.witness;
      rep.table = std::move(s.table);
    }
    first = false;
  }
  for (const auto& x : rep.per_sample) rep.samples_agree = rep.samples_agree && x == rep.value;
  rep.degenerate = sgn(rep.value) == 0;
  return rep;
}

}  // namespace

std::vector<std::pair<GaussianRational, std::vector<HomogPoly>>> sample_family(const HypersurfaceFamily& family,
                                                                               const PositionOptions& opts,
                                                                               bool* approximate) {
  std::vector<std::pair<GaussianRational, std::vector<HomogPoly>>> out;
  if (!family.moving()) {
    std::vector<HomogPoly> forms;
    for (const auto& q : family.members) forms.push_back(q.form());
    out.emplace_back(GaussianRational(0), std::move(forms));
    return out;
  }
  if (opts.samples < 1) throw PreconditionError("need at least one sample point");
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 9);
  const double limit = std::isfinite(opts.domain_R) ? 0.9 * opts.domain_R : 4.0;
  int rejected = 0;
  while (static_cast<int>(out.size()) < opts.samples) {
    const double re = limit * num(rng) / (40.0 * den(rng));
    const double im = limit * num(rng) / (40.0 * den(rng));
    const GaussianRational z = rationalize({re, im}, 1 << 12);
    bool bad = std::abs(z.to_complex()) >= limit;
    for (const auto& q : family.members) bad = bad || q.singular_at(z.to_complex());
    if (bad) {
      if (++rejected > opts.resample_budget) {
        throw EstimationError("every sample point hit a zero or pole of the coefficients");
      }
      continue;
    }
    std::vector<HomogPoly> forms;
    for (const auto& q : family.members) forms.push_back(q.at(z, approximate));
    out.emplace_back(z, std::move(forms));
  }
  return out;
}

DistributiveReport distributive_constant(const Variety& v, const HypersurfaceFamily& family,
                                         const PositionOptions& opts) {
  return run_scan(v, family, opts, scan_memo);
}

DistributiveReport distributive_constant_reference(const Variety& v, const HypersurfaceFamily& family,
                                                   const PositionOptions& opts) {
  return run_scan(v, family, opts, scan_reference);
}

bool subgeneral_position(const Variety& v, const HypersurfaceFamily& family, int ell,
                         const PositionOptions& opts) {
  check_inputs(v, family);
  const std::size_t q = family.size();
  if (ell < 0 || static_cast<std::size_t>(ell) + 1 > q) throw PreconditionError("subgeneral position needs ell + 1 <= q");
  const std::uint32_t full = (std::uint32_t{1} << q) - 1;
  for (const auto& [z, forms] : sample_family(family, opts)) {
    for (std::uint32_t m = 1; m <= full; ++m) {
      if (std::popcount(m) != ell + 1) continue;
      std::vector<HomogPoly> cut;
      for (std::size_t j = 0; j < q; ++j) {
        if (m & (std::uint32_t{1} << j)) cut.push_back(forms[j]);
      }
      if (!v.intersect(cut, opts.groebner).empty()) return false;
    }
  }
  return true;
}

RemarkCheck check_remark_bound(const Variety& v, const HypersurfaceFamily& family, int ell,
                               const PositionOptions& opts) {
  if (!subgeneral_position(v, family, ell, opts)) {
    throw PreconditionError("family is not in weakly " + std::to_string(ell) + "-subgeneral position");
  }
  RemarkCheck out;
  out.delta = distributive_constant(v, family, opts).value;
  out.bound = Rational(ell - v.dim() + 1);
  out.margin = out.bound - out.delta;
  out.falsified = sgn(out.margin) < 0;
  return out;
}

std::vector<DominationRow> check_norm_domination(const Variety& v, const HypersurfaceFamily& family,
                                                 const std::vector<std::size_t>& indices, const Curve& curve,
                                                 const std::vector<double>& radii, const PositionOptions& opts,
                                                 std::size_t nodes) {
  if (indices.empty()) throw PreconditionError("norm domination needs at least one member");
  std::vector<HomogPoly> cut;
  auto samples = sample_family(family, opts);
  for (std::size_t j : indices) {
    if (j >= family.size()) throw PreconditionError("member index out of range");
    cut.push_back(samples.front().second[j]);
  }
  if (!v.intersect(cut, opts.groebner).empty()) {
    throw PreconditionError("the chosen members have a common point on the variety");
  }
  for (const auto& g : v.generators()) {
    if (!compose_hypersurface(Hypersurface(g), curve.components).is_zero()) {
      throw PreconditionError("curve does not lie on the variety");
    }
  }
  std::vector<AnalyticFunction> composed;
  std::vector<int> degrees;
  for (std::size_t j : indices) {
    const Hypersurface& q = family.members[j];
    // Members without an x0^d term are used as given.
    const bool has_lead = q.coeffs().count(Monomial::var(q.num_vars(), 0, q.degree())) > 0;
    composed.push_back(compose_hypersurface(has_lead ? normalize_moving(q) : q, curve.components));
    degrees.push_back(family.members[j].degree());
  }
  std::vector<DominationRow> out;
  for (double r : radii) {
    if (!(r > 0.0) || r >= curve.R) throw PreconditionError("radius outside the curve's disc");
    std::vector<double> logs;
    kernels::map_indexed<double>(
        nodes,
        [&](std::size_t k) {
          std::complex<double> z = kernels::circle_node(0.0, r, k, nodes);
          double lf = curve.log_norm(z);
          double best = std::numeric_limits<double>::infinity();
          for (std::size_t s = 0; s < composed.size(); ++s) {
            best = std::min(best, degrees[s] * lf - composed[s].eval_scaled(z).log_abs());
          }
          return best;
        },
        logs, opts.exec);
    double top = -std::numeric_limits<double>::infinity();
    for (double x : logs) top = std::max(top, x);
    out.push_back({r, std::exp(top)});
  }
  return out;
}

}  // namespace nevlab
