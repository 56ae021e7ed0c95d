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

#include "nevlab/weights.hpp"

#include <algorithm>
#include <numeric>

#include "nevlab/error.hpp"

namespace nevlab {

namespace {

using SparseRow = std::vector<std::pair<int, GaussianRational>>;

Rational dot(const Monomial& m, const WeightVector& c) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * m[i];
  return s;
}

void check_weights(std::size_t num_vars, const WeightVector& c) {
  if (c.size() != num_vars) throw PreconditionError("weight vector length must equal the number of variables");
  for (const auto& x : c) {
    if (sgn(x) < 0) throw PreconditionError("weights must be non-negative");
  }
}

// Echelon rows keyed by pivot column (the smallest column of the row).
class IncrementalEchelon {
 public:
  /// Adds v when independent of the rows so far; returns whether it was added.
  bool insert(SparseRow v) {
    while (!v.empty()) {
      const int col = v.front().first;
      auto it = rows_.find(col);
      if (it == rows_.end()) {
        rows_.emplace(col, std::move(v));
        return true;
      }
      v = subtract(v, v.front().second / it->second.front().second, it->second);
    }
    return false;
  }

 private:
  static SparseRow subtract(const SparseRow& a, const GaussianRational& f, const SparseRow& b) {
    SparseRow out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -(f * b[j].second));
        ++j;
      } else {
        GaussianRational v = a[i].second - f * b[j].second;
        if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<int, SparseRow> rows_;
};

}  // namespace

HilbertWeightResult hilbert_weight(const NormalFormTable& table, std::int64_t hilbert_value, const WeightVector& c) {
  const std::size_t count = table.monomials.size();
  std::vector<Rational> w(count);
  for (std::size_t i = 0; i < count; ++i) w[i] = dot(table.monomials[i], c);
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  // monomials are grevlex-descending, so a stable sort keeps the tiebreak.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });

  HilbertWeightResult out;
  out.u = table.u;
  out.weights = c;
  out.value = 0;
  IncrementalEchelon echelon;
  for (std::size_t idx : order) {
    if (static_cast<std::int64_t>(out.basis.size()) == hilbert_value) break;
    if (echelon.insert(table.nf[idx])) {
      out.basis.push_back(table.monomials[idx]);
      out.value += w[idx];
    }
  }
  if (static_cast<std::int64_t>(out.basis.size()) != hilbert_value) {
    throw EstimationError("greedy basis has " + std::to_string(out.basis.size()) + " elements, expected " +
                          std::to_string(hilbert_value));
  }
  return out;
}

HilbertWeightResult hilbert_weight(const Variety& x, int u, const WeightVector& c) {
  if (u < 1) throw PreconditionError("Hilbert weight needs u >= 1");
  check_weights(x.num_vars(), c);
  return hilbert_weight(x.normal_form_table(u), x.hilbert(u), c);
}

HilbertWeightResult HilbertWeightEngine::operator()(int u, const WeightVector& c) {
  if (u < 1) throw PreconditionError("Hilbert weight needs u >= 1");
  check_weights(x_.num_vars(), c);
  auto it = tables_.find(u);
  if (it == tables_.end()) it = tables_.emplace(u, x_.normal_form_table(u)).first;
  return hilbert_weight(it->second, x_.hilbert(u), c);
}

std::vector<int> chow_ladder(int u_max) {
  std::vector<int> out;
  for (int u = u_max; u >= 2 && out.size() < 4; u /= 2) out.push_back(u);
  std::reverse(out.begin(), out.end());
  return out;
}

ChowEstimate chow_weight_estimate(HilbertWeightEngine& engine, const WeightVector& c, int u_max) {
  const Variety& x = engine.variety();
  if (x.empty()) throw PreconditionError("Chow weight of the empty variety");
  const int k = x.dim();
  if (u_max < k + 3) throw PreconditionError("u_max must be at least dim + 3");
  const Rational scale = Rational((k + 1) * x.degree());

  ChowEstimate est;
  std::vector<Rational> h, s;
  for (int u : chow_ladder(u_max)) {
    Rational su = scale * engine(u, c).value / (Rational(u) * Rational(static_cast<long>(x.hilbert(u))));
    est.sequence.emplace_back(u, su);
    h.emplace_back(1, u);
    s.push_back(su);
  }
  // Neville tableau evaluated at h = 0, using the finest rungs first.
  std::reverse(h.begin(), h.end());
  std::reverse(s.begin(), s.end());
  const std::size_t m = h.size();
  std::vector<Rational> p = s;
  est.extrapolants.push_back(p[0]);
  for (std::size_t order = 1; order < m; ++order) {
    for (std::size_t i = 0; i + order < m; ++i) {
      // p[i] interpolates points i..i+order at h = 0.
      p[i] = (h[i + order] * p[i] - h[i] * p[i + 1]) / (h[i + order] - h[i]);
    }
    est.extrapolants.push_back(p[0]);
  }
  est.exact_extrapolant = est.extrapolants.back();
  est.value = est.exact_extrapolant.get_d();
  const std::size_t tail = std::min<std::size_t>(3, est.extrapolants.size());
  double spread = 0.0;
  for (std::size_t a = est.extrapolants.size() - tail; a < est.extrapolants.size(); ++a) {
    for (std::size_t b = a + 1; b < est.extrapolants.size(); ++b) {
      spread = std::max(spread, std::abs(Rational(est.extrapolants[a] - est.extrapolants[b]).get_d()));
    }
  }
  est.error_bound = spread;

  int sign_changes = 0;
  int last_sign = 0;
  for (std::size_t i = 1; i < est.sequence.size(); ++i) {
    int sg = sgn(est.sequence[i].second - est.sequence[i - 1].second);
    if (sg != 0 && last_sign != 0 && sg != last_sign) ++sign_changes;
    if (sg != 0) last_sign = sg;
  }
  if (sign_changes > 0 && est.error_bound > 1e-2 * std::max(1.0, std::abs(est.value))) {
    throw EstimationError("normalized Hilbert weights oscillate; no Chow weight estimate");
  }
  return est;
}

ChowEstimate chow_weight_estimate(const Variety& x, const WeightVector& c, int u_max) {
  HilbertWeightEngine engine(x);
  return chow_weight_estimate(engine, c, u_max);
}

EvertseFerrettiCheck check_evertse_ferretti(const Variety& x, int u, const WeightVector& c, const ChowEstimate& e_est) {
  if (x.empty()) throw PreconditionError("variety is empty");
  if (u <= x.degree()) throw PreconditionError("Evertse-Ferretti bound needs u > degree");
  const int k = x.dim();
  const double kd = static_cast<double>((k + 1) * x.degree());
  HilbertWeightResult hw = hilbert_weight(x, u, c);
  EvertseFerrettiCheck out;
  out.hilbert_weight = hw.value;
  out.hilbert_value = x.hilbert(u);
  out.lhs = Rational(hw.value / (Rational(u) * Rational(static_cast<long>(out.hilbert_value)))).get_d();
  const double cmax = c.empty() ? 0.0 : std::max_element(c.begin(), c.end())->get_d();
  out.rhs = e_est.value / kd - (2.0 * k + 1.0) * static_cast<double>(x.degree()) / u * cmax;
  out.margin = out.lhs - out.rhs;
  out.tolerance = e_est.error_bound / kd + 1e-12;
  out.falsified = out.margin < -out.tolerance;
  return out;
}

ChowLowerBoundCheck check_chow_lower_bound(const Variety& y, const std::vector<std::size_t>& subset,
                                           const WeightVector& c, int u_max) {
  check_weights(y.num_vars(), c);
  if (subset.empty()) throw PreconditionError("empty hyperplane subset");
  if (y.empty() || y.dim() < 1) throw PreconditionError("Y must have dimension at least 1");
  for (std::size_t i : subset) {
    if (i >= y.num_vars()) throw PreconditionError("hyperplane index out of range");
  }
  const std::size_t ell = subset.size();
  const Rational& last = c[subset.back()];
  for (std::size_t i : subset) {
    if (c[i] < last) throw PreconditionError("hypothesis (1) fails: the last weight is not the minimum");
  }
  std::vector<HomogPoly> hyperplanes;
  for (std::size_t i : subset) hyperplanes.emplace_back(Monomial::var(y.num_vars(), i), GaussianRational(1));
  std::vector<HomogPoly> head(hyperplanes.begin(), hyperplanes.begin() + static_cast<std::ptrdiff_t>(ell - 1));
  if (y.intersect(head).empty()) throw PreconditionError("hypothesis (2) fails: Y misses the first l-1 hyperplanes");
  for (std::size_t j = 0; j < ell; ++j) {
    if (y.contains(hyperplanes[j])) throw PreconditionError("hypothesis (3) fails: Y lies in a hyperplane");
  }
  HypersurfaceFamily family;
  for (const auto& h : hyperplanes) family.members.emplace_back(h);

  ChowLowerBoundCheck out;
  out.distributive = distributive_constant(y, family).value;
  out.degree = y.degree();
  out.weight_sum = 0;
  for (std::size_t i : subset) out.weight_sum += c[i];
  ChowEstimate e = chow_weight_estimate(y, c, u_max);
  out.e_value = e.value;
  out.bound = Rational(Rational(out.degree) / out.distributive * out.weight_sum).get_d();
  out.margin = out.e_value - out.bound;
  out.tolerance = e.error_bound + 1e-12;
  out.falsified = out.margin < -out.tolerance;
  return out;
}

}  // namespace nevlab
