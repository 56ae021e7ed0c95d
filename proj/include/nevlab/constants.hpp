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

#include <gmpxx.h>

#include <optional>
#include <string>

#include "nevlab/gaussian_rational.hpp"

namespace nevlab {

enum class ConstantsVariant { MovingA, FixedB, TheoremB };

std::string to_string(ConstantsVariant v);

struct ConstantsInputs {
  long n = 1;       // dimension of V
  long deg_v = 1;   // degree of V
  long d = 1;       // lcm of the hypersurface degrees
  long q = 1;       // number of hypersurfaces
  Rational delta = 1;
  Rational epsilon = 1;
};

struct CertifyOptions {
  long start_bits = 53;
  long max_bits = 1L << 20;              // interval precision cap
  std::size_t max_exact_bits = 1000000;  // L kept as an integer up to this bit length
};

/// Truncation constants with certified floors and exact ceilings.
struct SMTConstants {
  ConstantsVariant variant = ConstantsVariant::FixedB;
  ConstantsInputs inputs;
  mpz_class u;
  std::optional<mpz_class> L;  // absent past max_exact_bits
  double log10_L = 0.0;      // nearest double
  double log10_L_lo = 0.0;   // outward-rounded doubles of the bracket
  double log10_L_hi = 0.0;
  std::string log10_L_text;  // decimal within 1e-6 of log10 L (certified)
  double log10_L_width = 0.0;  // certified bracket width before rounding
  long precision_bits = 0;  // largest precision the floors needed

  // Moving case: L = d^n degV (u+1)^n floor(base^(exponent + 1)).
  Rational base;
  std::optional<mpz_class> exponent;
  // Moving case, other reading of the brackets: floor(d^n degV (u+1)^n base^(exponent + 1)).
  // Present only when computed exactly and different from L.
  std::optional<mpz_class> L_grouping;

  /// log10(L - 1), the quantity entering correction terms.
  double log10_L_minus_1() const;
};

/// Moving hypersurfaces, requires 0 < epsilon < (n+1) delta.
SMTConstants constants_moving(const ConstantsInputs& in, const CertifyOptions& opts = {});
/// Fixed hypersurfaces: u' and L' (the e^n factor is certified).
SMTConstants constants_fixed(const ConstantsInputs& in, const CertifyOptions& opts = {});
/// The earlier truncation level with its (q!)^n factor; u is the integer in
/// the correction denominator 2 d u, u = d^n (2n+1)(n+1) q! degV.
SMTConstants constants_theoremB(const ConstantsInputs& in, const CertifyOptions& opts = {});

/// u of the defect relation's correction term (twice the fixed-case
/// argument, rounded up).
mpz_class defect_relation_u(const ConstantsInputs& in);

/// Independent recheck of the ceiling and floor identities; throws
/// EstimationError when a stored value contradicts its defining formula.
void verify_constants(const SMTConstants& c);

/// floor(factor * e^power) by interval evaluation with increasing precision.
mpz_class certified_floor_e_power(const Rational& factor, long power, const CertifyOptions& opts = {},
                                  long* bits_used = nullptr);

}  // namespace nevlab
