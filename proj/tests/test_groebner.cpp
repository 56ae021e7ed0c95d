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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nevlab/groebner.hpp"
#include "test_support.hpp"

using namespace nevlab;

namespace {

HomogPoly P(const std::string& s, std::size_t n) { return parse_homog_poly(s, n); }

// S-polynomial of two basis elements, written out independently of the engine.
HomogPoly spoly(const HomogPoly& a, const HomogPoly& b) {
  Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  HomogPoly ta = a.shifted(a.leading_monomial().quotient_of(l)) * a.leading_coeff().inverse();
  HomogPoly tb = b.shifted(b.leading_monomial().quotient_of(l)) * b.leading_coeff().inverse();
  return ta - tb;
}

// Rank of the degree-u slice of the ideal spanned by the generators, by
// Gaussian elimination on all multiples m * g.
std::int64_t quotient_dim_by_rank(const std::vector<HomogPoly>& gens, std::size_t nv, int u) {
  auto monos = monomials_of_degree(nv, u);
  std::map<Monomial, std::size_t, GrevlexDescending> col;
  for (std::size_t i = 0; i < monos.size(); ++i) col.emplace(monos[i], i);
  std::vector<std::vector<GaussianRational>> rows;
  for (const auto& g : gens) {
    if (g.degree() > u) continue;
    for (const auto& m : monomials_of_degree(nv, u - g.degree())) {
      std::vector<GaussianRational> row(monos.size());
      for (const auto& [gm, gc] : g.terms()) row[col.at(gm * m)] = gc;
      rows.push_back(std::move(row));
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < monos.size() && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      GaussianRational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < monos.size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return static_cast<std::int64_t>(monos.size() - rank);
}

}  // namespace

TEST_CASE("groebner basis examples") {
  auto g1 = groebner_basis({P("x0", 2)});
  REQUIRE(g1.size() == 1);
  CHECK(g1[0] == P("x0", 2));

  auto g2 = groebner_basis({P("x0*x2 - x1^2", 3)});
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == P("x1^2 - x0*x2", 3));

  auto g3 = groebner_basis({P("x0 + x1", 2), P("x0 - x1", 2)});
  REQUIRE(g3.size() == 2);
  CHECK(g3[0] == P("x0", 2));
  CHECK(g3[1] == P("x1", 2));
}

TEST_CASE("normal forms") {
  auto g = groebner_basis({P("x0*x2 - x1^2", 3)});
  HomogPoly r = normal_form(P("x1^2", 3), g);
  CHECK(r == P("x0*x2", 3));
  // Difference lies in the ideal: it is a multiple of the generator.
  CHECK(P("x1^2", 3) - r == -P("x0*x2 - x1^2", 3));
  CHECK(normal_form(P("x0^3", 2), groebner_basis({P("x0", 2)})).is_zero());
  HomogPoly p = P("x0^2 + 3*x1^2", 2);
  CHECK(normal_form(p, {}) == p);
}

TEST_CASE("Buchberger criterion on random ideals") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    std::size_t nv = 3 + trial % 2;
    std::vector<HomogPoly> gens{test::random_form(rng, nv, 2), test::random_form(rng, nv, 2)};
    if (trial % 3 == 0) gens.push_back(test::random_form(rng, nv, 1));
    auto g = groebner_basis(gens);
    for (const auto& p : gens) CHECK(normal_form(p, g).is_zero());
    for (std::size_t a = 0; a < g.size(); ++a) {
      CHECK(g[a].leading_coeff().is_one());
      for (std::size_t b = a + 1; b < g.size(); ++b) CHECK(normal_form(spoly(g[a], g[b]), g).is_zero());
    }
    // Hilbert function against the rank of the ideal's graded pieces.
    Variety v(nv, gens);
    for (int u = 0; u <= 4; ++u) CHECK(v.hilbert(u) == quotient_dim_by_rank(gens, nv, u));
  }
}

TEST_CASE("hilbert function") {
  Variety p2 = Variety::projective_space(2);
  CHECK(p2.hilbert(3) == 10);
  Variety conic(3, {P("x0*x2 - x1^2", 3)});
  CHECK(conic.hilbert(2) == 5);
  CHECK(conic.hilbert(3) == 7);
  CHECK(quotient_dim_by_rank({P("x0*x2 - x1^2", 3)}, 3, 2) == 5);
  for (int u = 0; u <= 20; ++u) CHECK(conic.hilbert(u) == 2 * u + 1);
  Variety cubic(4, {P("x0*x2 - x1^2", 4), P("x1*x3 - x2^2", 4), P("x0*x3 - x1*x2", 4)});
  for (int u = 0; u <= 20; ++u) CHECK(cubic.hilbert(u) == 3 * u + 1);
}

TEST_CASE("dimension and degree") {
  Variety conic(3, {P("x0*x2 - x1^2", 3)});
  CHECK(variety_dim_degree(conic) == std::pair<int, long>{1, 2});
  CHECK(variety_dim_degree(Variety::projective_space(2)) == std::pair<int, long>{2, 1});
  Variety empty(3, {P("x0", 3), P("x1", 3), P("x2", 3)});
  CHECK(variety_dim_degree(empty) == std::pair<int, long>{-1, 0});
  CHECK(empty.empty());
  Variety cubic(4, {P("x0*x2 - x1^2", 4), P("x1*x3 - x2^2", 4), P("x0*x3 - x1*x2", 4)});
  CHECK(variety_dim_degree(cubic) == std::pair<int, long>{1, 3});

  // Hypersurfaces of degree d in P^n.
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int d = 1; d <= 4; ++d) {
      if (n == 4 && d == 4) continue;  // keep the run short; covered by smaller cases
      Variety h(n + 1, {test::random_form(rng, n + 1, d)});
      CHECK(h.dim() == static_cast<int>(n) - 1);
      CHECK(h.degree() == d);
    }
  }
}

TEST_CASE("intersection dimension") {
  Variety p2 = Variety::projective_space(2);
  CHECK(intersection_dim(p2, {P("x0", 3), P("x1", 3)}) == 0);
  CHECK(intersection_dim(p2, {P("x0", 3), P("x1", 3), P("x2", 3)}) == -1);
  Variety conic(3, {P("x0*x2 - x1^2", 3)});
  Variety cut = conic.intersect({P("x1", 3)});
  CHECK(cut.dim() == 0);
  CHECK(cut.degree() == 2);  // (1:0:0) and (0:0:1), each with multiplicity 2 in the scheme
}

TEST_CASE("emptiness of monomial ideals") {
  // V(I) is empty iff every variable has a pure power among the generators.
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> ex(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<HomogPoly> gens;
    std::vector<bool> pure(3, false);
    int count = 2 + trial % 4;
    for (int k = 0; k < count; ++k) {
      std::vector<int> e{ex(rng), ex(rng), ex(rng)};
      if (e[0] + e[1] + e[2] == 0) e[k % 3] = 1;
      int nz = (e[0] > 0) + (e[1] > 0) + (e[2] > 0);
      if (nz == 1) pure[e[0] > 0 ? 0 : (e[1] > 0 ? 1 : 2)] = true;
      Monomial m(e);
      gens.emplace_back(m, GaussianRational(1));
    }
    Variety v(3, gens);
    CHECK(v.empty() == (pure[0] && pure[1] && pure[2]));
  }
}

TEST_CASE("normal form table") {
  Variety conic(3, {P("x0*x2 - x1^2", 3)});
  NormalFormTable t = conic.normal_form_table(3);
  CHECK(t.monomials.size() == 10);
  CHECK(t.standard.size() == 7);
  for (std::size_t i = 0; i < t.monomials.size(); ++i) {
    HomogPoly nf(3, 3);
    for (const auto& [s, c] : t.nf[i]) nf.add_term(t.standard[static_cast<std::size_t>(s)], c);
    CHECK(nf == normal_form(HomogPoly(t.monomials[i], GaussianRational(1)), conic.basis()));
  }
}

TEST_CASE("budget") {
  GroebnerOptions tiny;
  tiny.max_reductions = 1;
  std::mt19937_64 rng(2);
  std::vector<HomogPoly> gens{test::random_form(rng, 4, 2), test::random_form(rng, 4, 2),
                              test::random_form(rng, 4, 2)};
  CHECK_THROWS_AS(groebner_basis(gens, tiny), BudgetExceeded);
}
