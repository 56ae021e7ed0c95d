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

#include <functional>
#include <random>

#include "nevlab/analytic_function.hpp"
#include "nevlab/homog_poly.hpp"
#include "nevlab/hypersurface.hpp"
#include "nevlab/monomial.hpp"
#include "test_support.hpp"

using namespace nevlab;

TEST_CASE("monomial enumeration") {
  auto m = monomials_of_degree(2, 2);
  REQUIRE(m.size() == 3);
  CHECK(m[0].to_string() == "x0^2");
  CHECK(m[1].to_string() == "x0*x1");
  CHECK(m[2].to_string() == "x1^2");
  CHECK(monomials_of_degree(3, 1).size() == 3);
  CHECK(monomials_of_degree(4, 5).size() == 56);

  // Count against brute-force enumeration of exponent vectors.
  for (std::size_t v = 1; v <= 6; ++v) {
    for (int u = 0; u <= 8; ++u) {
      std::size_t brute = 0;
      std::vector<int> e(v, 0);
      std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == v) {
          ++brute;
          return;
        }
        for (int k = 0; k <= left; ++k) rec(i + 1, left - k);
      };
      rec(0, u);
      CHECK(monomials_of_degree(v, u).size() == brute);
    }
  }
}

TEST_CASE("grevlex order") {
  auto x = [](std::vector<int> e) { return Monomial(std::move(e)); };
  CHECK(grevlex_greater(x({0, 2, 0}), x({1, 0, 1})));
  CHECK(grevlex_greater(x({2, 0, 0}), x({0, 2, 0})));
  CHECK(grevlex_greater(x({1, 1, 0}), x({0, 2, 0})));
  CHECK_FALSE(grevlex_greater(x({0, 0, 2}), x({0, 1, 1})));
}

TEST_CASE("poly_eval") {
  HomogPoly conic = parse_homog_poly("x0*x2 - x1^2", 3);
  std::vector<std::complex<double>> p{1, 2, 4};
  CHECK(conic.eval(p) == std::complex<double>(0, 0));
  HomogPoly sq = parse_homog_poly("x0^2", 2);
  std::vector<std::complex<double>> q{3, 1};
  CHECK(sq.eval(q) == std::complex<double>(9, 0));
  HomogPoly circ = parse_homog_poly("x0^2 + x1^2", 2);
  std::vector<GaussianRational> pt{GaussianRational(1), GaussianRational::i()};
  CHECK(circ.eval_exact(pt).is_zero());
  std::vector<std::complex<double>> bad{1, 2};
  CHECK_THROWS_AS(conic.eval(bad), PreconditionError);
}

TEST_CASE("ring axioms on random forms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    HomogPoly a = test::random_form(rng, 3, 2);
    HomogPoly b = test::random_form(rng, 3, 2);
    HomogPoly c = test::random_form(rng, 3, 1);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_homog_poly("x0^2 + x1", 2), ParseError);
  CHECK_THROWS_AS(parse_homog_poly("x0 + ", 2), ParseError);
  CHECK_THROWS(parse_homog_poly("x5", 2));
  HomogPoly p = parse_homog_poly("3/2*x0^2*x1 - i*x2^3", 3);
  CHECK(p.coeff(Monomial({2, 1, 0})) == GaussianRational(Rational(3, 2)));
  CHECK(p.coeff(Monomial({0, 0, 3})) == -GaussianRational::i());
}

TEST_CASE("compose_hypersurface") {
  auto one = AnalyticFunction(GaussianRational(1));
  auto z = AnalyticFunction::z();
  Hypersurface x1(parse_homog_poly("x1", 2));
  CHECK(compose_hypersurface(x1, {one, z}) == z);

  Hypersurface conic(parse_homog_poly("x0*x2 - x1^2", 3));
  CHECK(compose_hypersurface(conic, {one, z, z * z}).is_zero());

  Hypersurface line(parse_homog_poly("x0 + x1", 2));
  auto ez = AnalyticFunction::exp(GaussianRational(1));
  CHECK(compose_hypersurface(line, {one, ez}) == one + ez);

  // Pointwise agreement and linearity at random points.
  std::mt19937_64 rng(5);
  Hypersurface q1 = parse_hypersurface(3, 2, {{"x0^2", "2"}, {"x1*x2", "z"}, {"x2^2", "exp(z)"}});
  Hypersurface q2 = parse_hypersurface(3, 2, {{"x0*x1", "1 - z"}, {"x2^2", "3/2"}});
  std::vector<AnalyticFunction> curve{one + z, parse_function("exp(2*z)"), z * z - 1};
  AnalyticFunction c1 = compose_hypersurface(q1, curve);
  AnalyticFunction c2 = compose_hypersurface(q2, curve);
  Hypersurface::CoeffMap sum = q1.coeffs();
  for (const auto& [m, a] : q2.coeffs()) {
    auto [it, inserted] = sum.try_emplace(m, a);
    if (!inserted) it->second = it->second + a;
  }
  AnalyticFunction c12 = compose_hypersurface(Hypersurface(3, 2, sum), curve);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int k = 0; k < 20; ++k) {
    std::complex<double> w(u(rng), u(rng));
    std::complex<double> f[3] = {curve[0].eval(w), curve[1].eval(w), curve[2].eval(w)};
    std::complex<double> direct = 2.0 * f[0] * f[0] + w * f[1] * f[2] + std::exp(w) * f[2] * f[2];
    CHECK(std::abs(c1.eval(w) - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
    std::complex<double> s = c1.eval(w) + c2.eval(w);
    CHECK(std::abs(c12.eval(w) - s) <= 1e-10 * std::max(1.0, std::abs(s)));
  }
}

TEST_CASE("normalize_moving") {
  Hypersurface q(parse_homog_poly("2*x0^2 + 4*x1^2", 2));
  Hypersurface n = normalize_moving(q);
  CHECK(n.form() == parse_homog_poly("x0^2 + 2*x1^2", 2));

  Hypersurface mv = parse_hypersurface(2, 1, {{"x0", "z"}, {"x1", "1"}});
  Hypersurface nm = normalize_moving(mv);
  CHECK(nm.coeffs().at(Monomial({1, 0})) == AnalyticFunction(GaussianRational(1)));
  CHECK(nm.coeffs().at(Monomial({0, 1})) == AnalyticFunction(GaussianRational(1)) / AnalyticFunction::z());

  Hypersurface bad(parse_homog_poly("x1^2", 2));
  CHECK_THROWS_AS(normalize_moving(bad), DegenerateInput);
}
