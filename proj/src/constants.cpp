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

#include "nevlab/constants.hpp"

#include <mpfr.h>

#include <cmath>
#include <limits>
#include <utility>

#include "nevlab/error.hpp"

namespace nevlab {

namespace {

class Mpfr {
 public:
  explicit Mpfr(long bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Bracket [lo, hi] of a positive real; every operation rounds outward.
struct Interval {
  Mpfr lo, hi;
  explicit Interval(long bits) : lo(bits), hi(bits) {}

  void set(const mpq_class& x) {
    mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), x.get_mpq_t(), MPFR_RNDU);
  }
  void set(const mpz_class& x) {
    mpfr_set_z(lo.get(), x.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi.get(), x.get_mpz_t(), MPFR_RNDU);
  }
  void set_e() {
    mpfr_set_ui(lo.get(), 1, MPFR_RNDN);
    mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
    mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  }
  void mul(const Interval& o) {
    mpfr_mul(lo.get(), lo.get(), o.lo.get(), MPFR_RNDD);
    mpfr_mul(hi.get(), hi.get(), o.hi.get(), MPFR_RNDU);
  }
  void mul(const mpq_class& x) {
    mpfr_mul_q(lo.get(), lo.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi.get(), hi.get(), x.get_mpq_t(), MPFR_RNDU);
  }
  void pow(unsigned long k) {
    mpfr_pow_ui(lo.get(), lo.get(), k, MPFR_RNDD);
    mpfr_pow_ui(hi.get(), hi.get(), k, MPFR_RNDU);
  }
  // Valid for arguments > 1 (positive logarithm).
  void log() {
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  }
  // a / this^2 for positive this.
  void numerator_over_square(const mpz_class& a) {
    Mpfr t(mpfr_get_prec(lo.get()));
    mpfr_sqr(t.get(), hi.get(), MPFR_RNDU);
    mpfr_sqr(hi.get(), lo.get(), MPFR_RNDD);
    mpfr_set(lo.get(), t.get(), MPFR_RNDN);
    Mpfr al(mpfr_get_prec(lo.get())), ah(mpfr_get_prec(lo.get()));
    mpfr_set_z(al.get(), a.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(ah.get(), a.get_mpz_t(), MPFR_RNDU);
    mpfr_div(lo.get(), al.get(), lo.get(), MPFR_RNDD);
    mpfr_div(hi.get(), ah.get(), hi.get(), MPFR_RNDU);
  }
  // Floor when unambiguous.
  std::optional<mpz_class> floor() const {
    mpz_class a, b;
    mpfr_get_z(a.get_mpz_t(), lo.get(), MPFR_RNDD);
    mpfr_get_z(b.get_mpz_t(), hi.get(), MPFR_RNDD);
    if (a != b) return std::nullopt;
    return a;
  }
  std::string describe() const {
    return std::to_string(mpfr_get_d(lo.get(), MPFR_RNDD)) + " .. " + std::to_string(mpfr_get_d(hi.get(), MPFR_RNDU));
  }
};

mpz_class ceil_of(const mpq_class& x) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

mpz_class zpow(long base, unsigned long k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), k);
  return out;
}

mpq_class qpow(const mpq_class& x, unsigned long k) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

mpz_class factorial(long q) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(q));
  return out;
}

void check_common(const ConstantsInputs& in) {
  if (in.n < 1 || in.deg_v < 1 || in.d < 1 || in.q < 1) {
    throw PreconditionError("constants: n, deg V, d and q must be at least 1");
  }
  if (sgn(in.delta) <= 0) throw PreconditionError("constants: the distributive constant must be positive");
  if (sgn(in.epsilon) <= 0) throw PreconditionError("constants: epsilon must be positive");
}

// Delta (2n+1)(n+1) d^n degV (Delta(n+1) + eps) / eps.
mpq_class u_argument(const ConstantsInputs& in) {
  const long n = in.n;
  mpq_class x = in.delta * (2 * n + 1) * (n + 1) * mpq_class(zpow(in.d, n)) * in.deg_v *
                (in.delta * (n + 1) + in.epsilon) / in.epsilon;
  x.canonicalize();
  return x;
}

// Stores a certified bracket [lo, hi] of log10 L.
void store_log10(mpfr_srcptr lo, mpfr_srcptr hi, SMTConstants& out) {
  const long bits = mpfr_get_prec(lo);
  Mpfr mid(bits), width(bits);
  mpfr_sub(width.get(), hi, lo, MPFR_RNDU);
  out.log10_L_width = mpfr_get_d(width.get(), MPFR_RNDU);
  if (!(out.log10_L_width <= 1e-6)) throw EstimationError("log10 L bracket wider than 1e-6");
  mpfr_add(mid.get(), lo, hi, MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  out.log10_L_lo = mpfr_get_d(lo, MPFR_RNDD);
  out.log10_L_hi = mpfr_get_d(hi, MPFR_RNDU);
  out.log10_L = mpfr_get_d(mid.get(), MPFR_RNDN);
  char* text = nullptr;
  mpfr_asprintf(&text, "%.9Rf", mid.get());
  out.log10_L_text = text;
  mpfr_free_str(text);
}

// Certified log10 bracket of a positive integer.
void log10_of(const mpz_class& x, SMTConstants& out) {
  const long bits = static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)) / 8 + 128;
  Mpfr lo(bits), hi(bits);
  mpfr_set_z(lo.get(), x.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), x.get_mpz_t(), MPFR_RNDU);
  mpfr_log10(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log10(hi.get(), hi.get(), MPFR_RNDU);
  store_log10(lo.get(), hi.get(), out);
}

// floor(factor * e^power) with the variant's integers folded into factor.
SMTConstants finish_e_power(SMTConstants c, const mpq_class& factor, long power, const CertifyOptions& opts) {
  long bits = 0;
  mpz_class L = certified_floor_e_power(factor, power, opts, &bits);
  c.precision_bits = bits;
  if (L < 1) throw DegenerateInput("truncation level evaluates below 1");
  log10_of(L, c);
  if (mpz_sizeinbase(L.get_mpz_t(), 2) <= opts.max_exact_bits) c.L = L;
  verify_constants(c);
  return c;
}

}  // namespace

std::string to_string(ConstantsVariant v) {
  switch (v) {
    case ConstantsVariant::MovingA: return "moving";
    case ConstantsVariant::FixedB: return "fixed";
    case ConstantsVariant::TheoremB: return "previous";
  }
  return "?";
}

double SMTConstants::log10_L_minus_1() const {
  if (L) {
    mpz_class m = *L - 1;
    if (m == 0) return -std::numeric_limits<double>::infinity();
    Mpfr t(128);
    mpfr_set_z(t.get(), m.get_mpz_t(), MPFR_RNDN);
    mpfr_log10(t.get(), t.get(), MPFR_RNDN);
    return mpfr_get_d(t.get(), MPFR_RNDN);
  }
  return log10_L;  // L > 2^1e6: subtracting one is below double resolution
}

mpz_class certified_floor_e_power(const Rational& factor, long power, const CertifyOptions& opts, long* bits_used) {
  if (sgn(factor) <= 0 || power < 0) throw PreconditionError("certified floor needs a positive factor");
  for (long bits = opts.start_bits; bits <= opts.max_bits; bits *= 4) {
    Interval x(bits);
    x.set_e();
    x.pow(static_cast<unsigned long>(power));
    x.mul(factor);
    if (auto f = x.floor()) {
      if (bits_used) *bits_used = bits;
      return *f;
    }
    if (bits * 4 > opts.max_bits) {
      throw EstimationError("interval precision cap reached; value brackets an integer boundary: " + x.describe());
    }
  }
  throw EstimationError("interval precision cap reached");
}

SMTConstants constants_fixed(const ConstantsInputs& in, const CertifyOptions& opts) {
  check_common(in);
  SMTConstants c;
  c.variant = ConstantsVariant::FixedB;
  c.inputs = in;
  c.u = ceil_of(u_argument(in));
  const long n = in.n;
  const auto un = static_cast<unsigned long>(n);
  mpq_class inner = in.delta * in.delta * (n + 1) / in.epsilon + in.delta;
  mpq_class factor = mpq_class(zpow(in.d, un * un + un)) * mpq_class(zpow(in.deg_v, un + 1)) *
                     mpq_class(zpow(2 * n + 5, un)) * qpow(inner, un);
  factor.canonicalize();
  return finish_e_power(std::move(c), factor, n, opts);
}

SMTConstants constants_theoremB(const ConstantsInputs& in, const CertifyOptions& opts) {
  check_common(in);
  SMTConstants c;
  c.variant = ConstantsVariant::TheoremB;
  c.inputs = in;
  const long n = in.n;
  const auto un = static_cast<unsigned long>(n);
  const mpz_class qf = factorial(in.q);
  c.u = zpow(in.d, un) * (2 * n + 1) * (n + 1) * qf * in.deg_v;
  mpz_class qfn;
  mpz_pow_ui(qfn.get_mpz_t(), qf.get_mpz_t(), un);
  mpq_class factor = mpq_class(zpow(in.d, un * un + un)) * mpq_class(zpow(in.deg_v, un + 1)) * qpow(in.delta, un) *
                     mpq_class(zpow(2 * n + 4, un)) * mpq_class(zpow(n + 1, un)) * mpq_class(qfn) /
                     qpow(in.epsilon, un);
  factor.canonicalize();
  return finish_e_power(std::move(c), factor, n, opts);
}

SMTConstants constants_moving(const ConstantsInputs& in, const CertifyOptions& opts) {
  check_common(in);
  const long n = in.n;
  const auto un = static_cast<unsigned long>(n);
  if (!(in.epsilon < in.delta * (n + 1))) throw PreconditionError("constants: moving case needs epsilon < (n+1) Delta");
  SMTConstants c;
  c.variant = ConstantsVariant::MovingA;
  c.inputs = in;
  c.u = ceil_of(2 * u_argument(in));
  c.base = 1 + in.epsilon / (2 * (n + 1) * in.delta);
  c.base.canonicalize();

  const mpz_class prefix = zpow(in.d, un) * in.deg_v;  // d^n degV
  mpz_class up1 = c.u + 1, up1n, up1nq;
  mpz_pow_ui(up1n.get_mpz_t(), up1.get_mpz_t(), un);
  mpz_pow_ui(up1nq.get_mpz_t(), up1.get_mpz_t(), static_cast<unsigned long>(n + in.q));
  const mpz_class K = prefix * up1n;          // d^n degV (u+1)^n
  const mpz_class A = prefix * up1nq;         // d^n degV (u+1)^(n+q)

  // E = floor(A / log^2(base)).
  for (long bits = opts.start_bits;; bits *= 4) {
    if (bits > opts.max_bits) throw EstimationError("interval precision cap reached for the inner floor");
    Interval x(bits);
    x.set(c.base);
    x.log();
    x.numerator_over_square(A);
    if (auto f = x.floor()) {
      c.exponent = *f;
      c.precision_bits = bits;
      break;
    }
  }
  const mpz_class power = *c.exponent + 1;

  // log10 L = log10 K + log10 floor(base^power). floor(x) >= x (1 - 1/x) and
  // x >= 2^(1e6) whenever the exact route is skipped.
  const double log2_base = std::log2(c.base.get_d());
  const double est_bits = power.get_d() * log2_base + static_cast<double>(mpz_sizeinbase(K.get_mpz_t(), 2));
  const double num_bits = power.get_d() * std::log2(std::max(1.0, mpz_class(c.base.get_num()).get_d()));
  if (est_bits <= static_cast<double>(opts.max_exact_bits) && num_bits <= 64e6 && power.fits_ulong_p()) {
    const unsigned long k = power.get_ui();
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), c.base.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), c.base.get_den_mpz_t(), k);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    c.L = K * fl;
    mpz_class grouped;
    mpz_class kn = K * num;
    mpz_fdiv_q(grouped.get_mpz_t(), kn.get_mpz_t(), den.get_mpz_t());
    if (grouped != *c.L) c.L_grouping = grouped;
    log10_of(*c.L, c);
  } else {
    const long bits = static_cast<long>(mpz_sizeinbase(power.get_mpz_t(), 2)) + 96;
    Interval lb(bits);
    lb.set(c.base);
    Mpfr lo(bits), hi(bits), t(bits);
    mpfr_log10(lo.get(), lb.lo.get(), MPFR_RNDD);
    mpfr_log10(hi.get(), lb.hi.get(), MPFR_RNDU);
    mpfr_mul_z(lo.get(), lo.get(), power.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(hi.get(), hi.get(), power.get_mpz_t(), MPFR_RNDU);
    mpfr_set_z(t.get(), K.get_mpz_t(), MPFR_RNDD);
    mpfr_log10(t.get(), t.get(), MPFR_RNDD);
    mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
    mpfr_sub_d(lo.get(), lo.get(), 1e-100, MPFR_RNDD);
    mpfr_set_z(t.get(), K.get_mpz_t(), MPFR_RNDU);
    mpfr_log10(t.get(), t.get(), MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    store_log10(lo.get(), hi.get(), c);
  }
  verify_constants(c);
  return c;
}

mpz_class defect_relation_u(const ConstantsInputs& in) {
  check_common(in);
  return ceil_of(2 * u_argument(in));
}

void verify_constants(const SMTConstants& c) {
  const ConstantsInputs& in = c.inputs;
  if (c.u < 1) throw EstimationError("constants: u < 1");
  // u is the least integer >= its defining rational.
  if (c.variant != ConstantsVariant::TheoremB) {
    mpq_class x = u_argument(in);
    if (c.variant == ConstantsVariant::MovingA) x *= 2;
    if (!(mpq_class(c.u) >= x && mpq_class(c.u - 1) < x)) throw EstimationError("constants: ceiling identity fails for u");
  }
  if (c.log10_L_hi < c.log10_L_lo || !(c.log10_L_width <= 1e-6) || c.log10_L_text.empty()) {
    throw EstimationError("constants: log10 L bracket is not certified to 1e-6");
  }
  if (c.L) {
    // Digit count cross-check of the stored integer against the bracket.
    const double digits = static_cast<double>(mpz_sizeinbase(c.L->get_mpz_t(), 10));
    if (c.log10_L_hi < digits - 2.0 || c.log10_L_lo > digits) {
      throw EstimationError("constants: log10 L inconsistent with L");
    }
  }
  if (c.variant == ConstantsVariant::MovingA && c.exponent) {
    // exponent <= A / log^2(base) < exponent + 1, rechecked at double precision
    // with a relative margin.
    const double lb = std::log(c.base.get_d());
    const double a = std::pow(c.u.get_d() + 1.0, static_cast<double>(in.n + in.q)) *
                     std::pow(static_cast<double>(in.d), static_cast<double>(in.n)) * static_cast<double>(in.deg_v);
    const double x = a / (lb * lb);
    const double e = c.exponent->get_d();
    if (std::abs(x - e) > 1.0 + 1e-9 * x) throw EstimationError("constants: inner floor inconsistent");
  }
}

}  // namespace nevlab
