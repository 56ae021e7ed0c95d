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

#include "nevlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "nevlab/error.hpp"

namespace nevlab {

namespace {

class ReductionCounter {
 public:
  explicit ReductionCounter(std::size_t budget) : budget_(budget) {}
  void tick() {
    if (++count_ > budget_) {
      throw BudgetExceeded("Groebner basis exceeded " + std::to_string(budget_) + " reductions");
    }
  }

 private:
  std::size_t budget_;
  std::size_t count_ = 0;
};

const HomogPoly* find_reducer(const Monomial& m, const std::vector<HomogPoly>& basis) {
  for (const auto& g : basis) {
    if (g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

HomogPoly reduce(const HomogPoly& p, const std::vector<HomogPoly>& basis, ReductionCounter* counter) {
  HomogPoly rest(p.num_vars(), p.degree());
  HomogPoly work = p;
  while (!work.is_zero()) {
    const Monomial lt = work.leading_monomial();
    const GaussianRational lc = work.leading_coeff();
    if (const HomogPoly* g = find_reducer(lt, basis)) {
      work.sub_scaled_shift(lc / g->leading_coeff(), g->leading_monomial().quotient_of(lt), *g);
      if (counter) counter->tick();
    } else {
      rest.add_term(lt, lc);
      work.add_term(lt, -lc);
    }
  }
  return rest;
}

HomogPoly s_polynomial(const HomogPoly& a, const HomogPoly& b) {
  const Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  HomogPoly s(a.num_vars(), l.degree());
  s.sub_scaled_shift(GaussianRational(-1) / a.leading_coeff(), a.leading_monomial().quotient_of(l), a);
  s.sub_scaled_shift(GaussianRational(1) / b.leading_coeff(), b.leading_monomial().quotient_of(l), b);
  return s;
}

struct PendingPair {
  std::size_t i, j;
  Monomial lcm;
};

// Pairs sorted by lcm degree, then grevlex ascending, then indices.
struct PairOrder {
  bool operator()(const PendingPair& a, const PendingPair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (a.lcm != b.lcm) return grevlex_greater(b.lcm, a.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Buchberger completion. The first `known` entries of `g` are assumed to be a
// Groebner basis already, so pairs among them are skipped.
std::vector<HomogPoly> complete(std::vector<HomogPoly> g, std::size_t known, const GroebnerOptions& opts) {
  ReductionCounter counter(opts.max_reductions);
  std::set<PendingPair, PairOrder> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.insert({i, j, g[i].leading_monomial().lcm(g[j].leading_monomial())});
      pending.insert({i, j});
    }
  };
  for (auto& p : g) p = p.monic();
  for (std::size_t j = known; j < g.size(); ++j) add_pairs_for(j);

  while (!queue.empty()) {
    PendingPair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});
    const Monomial& li = g[pr.i].leading_monomial();
    const Monomial& lj = g[pr.j].leading_monomial();
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!g[k].leading_monomial().divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k));
    }
    if (chain) continue;
    HomogPoly r = reduce(s_polynomial(g[pr.i], g[pr.j]), g, &counter);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    add_pairs_for(g.size() - 1);
  }

  // Minimalize, then interreduce tails.
  std::vector<HomogPoly> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& la = g[a].leading_monomial();
      const Monomial& lb = g[b].leading_monomial();
      if (lb.divides(la) && (la != lb || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<HomogPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<HomogPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    reduced.push_back(reduce(minimal[a], others, &counter).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const HomogPoly& x, const HomogPoly& y) {
    return grevlex_greater(x.leading_monomial(), y.leading_monomial());
  });
  return reduced;
}

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex_greater(a, b);
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool covered = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); });
    if (!covered) out.push_back(m);
  }
  return out;
}

std::vector<std::int64_t> series_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a) {
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b) coprime = gens[a].coprime(gens[b]);
  }
  if (coprime) {
    std::vector<std::int64_t> out{1};
    for (const auto& m : gens) {
      std::vector<std::int64_t> f(static_cast<std::size_t>(m.degree()) + 1, 0);
      f[0] = 1;
      f.back() -= 1;
      out = poly_mul(out, f);
    }
    return out;
  }
  // N(J + <m>) = N(J) - t^deg(m) N(J : m).
  Monomial pivot = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<int> e(g.num_vars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(0, g[i] - pivot[i]);
    colon.emplace_back(std::move(e));
  }
  std::vector<std::int64_t> base = series_numerator(gens);
  std::vector<std::int64_t> inner = series_numerator(std::move(colon));
  std::size_t shift = static_cast<std::size_t>(pivot.degree());
  base.resize(std::max(base.size(), inner.size() + shift), 0);
  for (std::size_t k = 0; k < inner.size(); ++k) base[k + shift] -= inner[k];
  while (base.size() > 1 && base.back() == 0) base.pop_back();
  return base;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::pair<int, long> fit_dim_degree(const std::vector<std::int64_t>& h, int kmax) {
  const std::size_t tail = static_cast<std::size_t>(kmax) + 2;
  std::vector<std::int64_t> diff = h;
  for (int k = 0; k <= kmax + 1; ++k) {
    // diff holds the k-th differences; check the (k+1)-st on the tail.
    std::vector<std::int64_t> next(diff.size() - 1);
    for (std::size_t u = 0; u + 1 < diff.size(); ++u) next[u] = diff[u + 1] - diff[u];
    if (next.size() < tail) break;
    bool flat = std::all_of(next.end() - static_cast<std::ptrdiff_t>(tail), next.end(),
                            [](std::int64_t v) { return v == 0; });
    if (flat) {
      long delta = static_cast<long>(diff.back());
      if (k == 0 && delta == 0) return {-1, 0};
      return {k, delta};
    }
    diff = std::move(next);
  }
  throw EstimationError("Hilbert function did not reach its polynomial regime by u = " +
                        std::to_string(kHilbertWindow));
}

}  // namespace

std::vector<HomogPoly> groebner_basis(const std::vector<HomogPoly>& generators, const GroebnerOptions& opts) {
  std::vector<HomogPoly> g;
  for (const auto& p : generators) {
    if (!p.is_zero()) g.push_back(p);
  }
  if (g.empty()) return {};
  return complete(std::move(g), 0, opts);
}

HomogPoly normal_form(const HomogPoly& p, const std::vector<HomogPoly>& basis) {
  for (const auto& g : basis) {
    if (g.num_vars() != p.num_vars()) throw PreconditionError("normal_form: variable count mismatch");
  }
  return reduce(p, basis, nullptr);
}

std::vector<std::int64_t> hilbert_series_numerator(const std::vector<Monomial>& monomials, std::size_t num_vars) {
  for (const auto& m : monomials) {
    if (m.num_vars() != num_vars) throw PreconditionError("hilbert_series_numerator: variable count mismatch");
  }
  return series_numerator(monomials);
}

Variety::Variety(std::size_t num_vars, std::vector<HomogPoly> generators, const GroebnerOptions& opts)
    : num_vars_(num_vars), generators_(std::move(generators)) {
  if (num_vars_ == 0) throw PreconditionError("variety needs at least one variable");
  for (const auto& p : generators_) {
    if (p.num_vars() != num_vars_) throw PreconditionError("generator in the wrong number of variables");
  }
  basis_ = groebner_basis(generators_, opts);
  finish(opts);
}

Variety Variety::projective_space(std::size_t ambient_dim) { return Variety(ambient_dim + 1, {}); }

void Variety::finish(const GroebnerOptions&) {
  leads_.clear();
  for (const auto& g : basis_) leads_.push_back(g.leading_monomial());
  numerator_ = series_numerator(leads_);
  std::vector<std::int64_t> h(kHilbertWindow + 1);
  for (int u = 0; u <= kHilbertWindow; ++u) h[static_cast<std::size_t>(u)] = hilbert(u);
  std::tie(dim_, degree_) = fit_dim_degree(h, static_cast<int>(num_vars_) - 1);
}

std::int64_t Variety::hilbert(int u) const {
  if (u < 0) throw PreconditionError("Hilbert function needs u >= 0");
  const auto n = static_cast<std::int64_t>(num_vars_);
  std::int64_t out = 0;
  for (std::size_t k = 0; k < numerator_.size(); ++k) {
    std::int64_t j = u - static_cast<std::int64_t>(k);
    if (j < 0) break;
    out += numerator_[k] * binomial(j + n - 1, n - 1);
  }
  return out;
}

Variety Variety::intersect(const std::vector<HomogPoly>& forms, const GroebnerOptions& opts) const {
  Variety out;
  out.num_vars_ = num_vars_;
  out.generators_ = basis_;
  std::vector<HomogPoly> g = basis_;
  for (const auto& f : forms) {
    if (f.num_vars() != num_vars_) throw PreconditionError("form in the wrong number of variables");
    out.generators_.push_back(f);
    if (!f.is_zero()) g.push_back(f);
  }
  out.basis_ = g.empty() ? g : complete(std::move(g), basis_.size(), opts);
  out.finish(opts);
  return out;
}

bool Variety::contains(const HomogPoly& p) const { return reduce(p, basis_, nullptr).is_zero(); }

NormalFormTable Variety::normal_form_table(int u) const {
  NormalFormTable t;
  t.u = u;
  t.monomials = monomials_of_degree(num_vars_, u);
  std::unordered_map<Monomial, int, MonomialHash> index;
  std::unordered_map<Monomial, int, MonomialHash> std_index;
  for (std::size_t i = 0; i < t.monomials.size(); ++i) {
    const Monomial& m = t.monomials[i];
    index.emplace(m, static_cast<int>(i));
    if (!find_reducer(m, basis_)) {
      std_index.emplace(m, static_cast<int>(t.standard.size()));
      t.standard.push_back(m);
    }
  }
  t.nf.resize(t.monomials.size());
  // Increasing grevlex order: every tail term of a reducer is smaller.
  for (std::size_t r = t.monomials.size(); r-- > 0;) {
    const Monomial& m = t.monomials[r];
    if (auto it = std_index.find(m); it != std_index.end()) {
      t.nf[r] = {{it->second, GaussianRational(1)}};
      continue;
    }
    const HomogPoly* g = find_reducer(m, basis_);
    const Monomial shift = g->leading_monomial().quotient_of(m);
    const GaussianRational lc = g->leading_coeff();
    std::map<int, GaussianRational> acc;
    bool first = true;
    for (const auto& [gm, gc] : g->terms()) {
      if (first) {  // the leading term
        first = false;
        continue;
      }
      const GaussianRational scale = -gc / lc;
      for (const auto& [s, v] : t.nf[static_cast<std::size_t>(index.at(gm * shift))]) acc[s] += scale * v;
    }
    for (auto& [s, v] : acc) {
      if (!v.is_zero()) t.nf[r].emplace_back(s, std::move(v));
    }
  }
  return t;
}

std::pair<int, long> variety_dim_degree(const Variety& v) { return {v.dim(), v.degree()}; }

int intersection_dim(const Variety& v, const std::vector<HomogPoly>& forms) {
  return v.intersect(forms).dim();
}

}  // namespace nevlab
