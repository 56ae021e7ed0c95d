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

#include <chrono>
#include <cmath>

#include "nevlab/constants.hpp"
#include "nevlab/error.hpp"

using namespace nevlab;

namespace {

// e in [s, s + 2/(m+1)!] with s = sum_{k<=m} 1/k!.
std::pair<mpq_class, mpq_class> e_bracket(int m = 30) {
  mpq_class s = 0, term = 1;
  for (int k = 0; k <= m; ++k) {
    if (k > 0) term /= k;
    s += term;
  }
  return {s, s + 2 * term / (m + 1)};
}

// log(5/4) = 2 atanh(1/9): partial sum and a geometric tail bound.
std::pair<mpq_class, mpq_class> log_five_quarters(int terms = 40) {
  mpq_class s = 0, p = mpq_class(1, 9);
  for (int k = 0; k < terms; ++k) {
    s += p / (2 * k + 1);
    p /= 81;
  }
  mpq_class tail = p / (2 * terms + 1) * mpq_class(81, 80);
  return {2 * s, 2 * (s + tail)};
}

mpz_class floor_q(const mpq_class& x) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

ConstantsInputs unit(long q = 2, long eps_num = 1, long eps_den = 1) {
  ConstantsInputs in;
  in.q = q;
  in.epsilon = make_rational(eps_num, eps_den);
  return in;
}

}  // namespace

TEST_CASE("fixed hypersurface constants") {
  auto [elo, ehi] = e_bracket();
  CHECK(floor_q(21 * elo) == 57);
  CHECK(floor_q(21 * ehi) == 57);

  SMTConstants c = constants_fixed(unit());
  CHECK(c.u == 18);
  REQUIRE(c.L);
  CHECK(*c.L == 57);
  CHECK(c.log10_L == doctest::Approx(std::log10(57.0)).epsilon(1e-9));
  CHECK(constants_fixed(unit(2, 2, 1)).u == 12);
  CHECK_THROWS_AS(constants_fixed(unit(2, 0, 1)), PreconditionError);
  CHECK_THROWS_AS(constants_fixed(unit(2, -1, 1)), PreconditionError);

  // n = 2, degV = 2, d = 2, Delta = 3/2, eps = 1/3: rational part times e^2.
  ConstantsInputs in;
  in.n = 2;
  in.deg_v = 2;
  in.d = 2;
  in.delta = make_rational(3, 2);
  in.epsilon = make_rational(1, 3);
  mpq_class inner = in.delta * in.delta * 3 / in.epsilon + in.delta;
  mpq_class factor = mpq_class(64) * 8 * 81 * inner * inner;
  SMTConstants c2 = constants_fixed(in);
  REQUIRE(c2.L);
  CHECK(*c2.L == floor_q(factor * elo * elo));
  CHECK(*c2.L == floor_q(factor * ehi * ehi));
}

TEST_CASE("previous truncation level") {
  auto [elo, ehi] = e_bracket();
  SMTConstants b2 = constants_theoremB(unit(2));
  REQUIRE(b2.L);
  CHECK(*b2.L == 65);
  CHECK(floor_q(24 * elo) == 65);
  SMTConstants b5 = constants_theoremB(unit(5));
  REQUIRE(b5.L);
  CHECK(*b5.L == 3914);
  CHECK(floor_q(1440 * ehi) == 3914);
  CHECK(b5.u == 3 * 2 * 120);
  SMTConstants f5 = constants_fixed(unit(5));
  CHECK(b5.L->get_d() / f5.L->get_d() == doctest::Approx(68.67).epsilon(1e-3));
}

TEST_CASE("moving hypersurface constants") {
  auto t0 = std::chrono::steady_clock::now();
  SMTConstants c = constants_moving(unit(2));
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(seconds < 1.0);
  CHECK(c.u == 36);
  CHECK(c.base == make_rational(5, 4));

  // Oracle for the inner floor: 37^3 / log^2(5/4) with a rational bracket.
  auto [llo, lhi] = log_five_quarters();
  mpz_class e_lo = floor_q(mpq_class(50653) / (lhi * lhi));
  mpz_class e_hi = floor_q(mpq_class(50653) / (llo * llo));
  REQUIRE(e_lo == e_hi);
  REQUIRE(c.exponent);
  CHECK(*c.exponent == e_lo);
  CHECK(*c.exponent > 1017000);
  CHECK(*c.exponent < 1018000);

  CHECK(c.log10_L >= 9.8e4);
  CHECK(c.log10_L <= 9.9e4);
  const double ref = std::log10(37.0) + (c.exponent->get_d() + 1.0) * std::log10(1.25);
  CHECK(std::abs(c.log10_L - ref) < 1e-6);
  CHECK(c.log10_L_width <= 1e-6);
  CHECK(std::abs(std::stod(c.log10_L_text) - ref) < 1e-6);
  REQUIRE(c.L);
  CHECK(mpz_divisible_ui_p(c.L->get_mpz_t(), 37) != 0);

  CHECK_THROWS_AS(constants_moving(unit(2, 2, 1)), PreconditionError);
  CHECK_THROWS_AS(constants_moving(unit(2, 3, 1)), PreconditionError);

  // Larger inputs: L is not materialized, log10 L still certified.
  ConstantsInputs big = unit(6);
  SMTConstants cb = constants_moving(big);
  CHECK(!cb.L);
  CHECK(cb.log10_L_width <= 1e-6);
  CHECK(cb.log10_L > c.log10_L);
}

TEST_CASE("monotone in epsilon") {
  mpz_class prev_u = -1, prev_ul = -1, prev_lf = -1, prev_lb = -1;
  double prev_log = 0.0;
  for (long k = 1; k <= 15; ++k) {
    ConstantsInputs in = unit(3, k, 8);  // eps = k/8 < 2
    SMTConstants m = constants_moving(in);
    SMTConstants f = constants_fixed(in);
    SMTConstants b = constants_theoremB(in);
    if (k > 1) {
      CHECK(m.u <= prev_u);
      CHECK(f.u <= prev_ul);
      CHECK(*f.L <= prev_lf);
      CHECK(*b.L <= prev_lb);
      CHECK(m.log10_L <= prev_log + 1e-9);
    }
    prev_u = m.u;
    prev_ul = f.u;
    prev_lf = *f.L;
    prev_lb = *b.L;
    prev_log = m.log10_L;
  }
  // Doubling epsilon strictly decreases u.
  CHECK(constants_moving(unit(2, 1, 2)).u > constants_moving(unit(2, 1, 1)).u);
}

TEST_CASE("certified floor precision escalation") {
  // 2721/1001 e^0 = 2.718... has an exact rational value; 1001 * e^1 needs more bits near n.5.
  long bits = 0;
  CHECK(certified_floor_e_power(mpq_class(7, 2), 0, {}, &bits) == 3);
  CHECK(certified_floor_e_power(mpq_class(1), 30, {}, &bits) == mpz_class("10686474581524"));
  CertifyOptions tight;
  tight.max_bits = 53;
  CHECK_THROWS_AS(certified_floor_e_power(mpq_class(1), 60, tight), EstimationError);
}
