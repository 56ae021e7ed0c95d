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

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nevlab/gaussian_rational.hpp"
#include "nevlab/upoly.hpp"

namespace nevlab {

/// value = mantissa * exp(log_scale). Keeps exponential factors representable
/// on large circles.
struct ScaledComplex {
  double log_scale = 0.0;
  std::complex<double> mantissa = 0.0;

  std::complex<double> value() const;
  double log_abs() const;
};

inline constexpr std::size_t kDefaultTermBudget = 10000;

/// One-variable function of the form (sum_j p_j(z) exp(rate_j z)) / den(z)
/// with Gaussian-rational data. The three user-facing variants are special
/// cases: Polynomial (rate 0 only, den 1), Rational (rate 0 only) and ExpPoly
/// (den 1). Quotients of exponential polynomials by polynomials are reported
/// as RationalExpPoly.
///
/// Canonical form: rates distinct and sorted, no zero coefficient polynomials,
/// den monic and coprime to the numerator coefficients.
class AnalyticFunction {
 public:
  enum class Kind { Polynomial, Rational, ExpPoly, RationalExpPoly };

  struct ExpTerm {
    UPoly coeff;
    GaussianRational rate;
  };

  AnalyticFunction();
  AnalyticFunction(UPoly p);            // NOLINT(google-explicit-constructor)
  AnalyticFunction(GaussianRational c);  // NOLINT(google-explicit-constructor)
  AnalyticFunction(long c) : AnalyticFunction(GaussianRational(c)) {}  // NOLINT

  static AnalyticFunction rational(UPoly num, UPoly den);
  static AnalyticFunction exp_poly(std::vector<ExpTerm> terms);
  /// exp(rate * z).
  static AnalyticFunction exp(const GaussianRational& rate);
  static AnalyticFunction z() { return AnalyticFunction(UPoly::z()); }

  Kind kind() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool has_exponentials() const;
  /// Value when the function is a constant.
  std::optional<GaussianRational> constant_value() const;
  const std::vector<ExpTerm>& terms() const { return terms_; }
  const UPoly& denominator() const { return den_; }
  /// Numerator polynomial; requires no exponential terms.
  UPoly numerator_poly() const;
  /// The exponential-polynomial numerator with denominator 1.
  AnalyticFunction numerator() const;
  /// Sum of nonzero coefficient counts across exponential terms.
  std::size_t term_count() const;

  friend AnalyticFunction operator+(const AnalyticFunction& a, const AnalyticFunction& b);
  friend AnalyticFunction operator-(const AnalyticFunction& a, const AnalyticFunction& b);
  friend AnalyticFunction operator-(const AnalyticFunction& a);
  friend AnalyticFunction operator*(const AnalyticFunction& a, const AnalyticFunction& b);
  /// Division is closed when the divisor has no exponential terms or is a
  /// single term p(z) exp(rate z); otherwise UnsupportedVariant.
  friend AnalyticFunction operator/(const AnalyticFunction& a, const AnalyticFunction& b);
  friend bool operator==(const AnalyticFunction& a, const AnalyticFunction& b);
  friend bool operator!=(const AnalyticFunction& a, const AnalyticFunction& b) {
    return !(a == b);
  }

  /// Product with an explicit term budget; BudgetExceeded past it.
  static AnalyticFunction multiply(const AnalyticFunction& a, const AnalyticFunction& b,
                                   std::size_t budget);
  AnalyticFunction pow(int e, std::size_t budget = kDefaultTermBudget) const;
  AnalyticFunction derivative(int order = 1) const;

  std::complex<double> eval(std::complex<double> z) const;
  ScaledComplex eval_scaled(std::complex<double> z) const;
  /// Exact value at a Gaussian-rational point; empty when exponential terms
  /// make the value transcendental (z != 0).
  std::optional<GaussianRational> eval_exact(const GaussianRational& z) const;

  std::string to_string() const;

 private:
  struct NumericTerm {
    std::vector<std::complex<double>> coeff;
    std::complex<double> rate;
  };

  void canonicalize();
  void refresh_numeric();
  static std::complex<double> horner(const std::vector<std::complex<double>>& c,
                                     std::complex<double> z);

  std::vector<ExpTerm> terms_;
  UPoly den_;
  std::vector<NumericTerm> num_terms_;
  std::vector<std::complex<double>> num_den_;
};

const char* kind_name(AnalyticFunction::Kind kind);

/// Parses "poly: 1 - 2*z^3", "rational: (1)/(1-z)",
/// "exppoly: (1)*exp(0) + (z)*exp(2*z)" or an unprefixed expression in z.
/// The prefix, when present, restricts the accepted variant.
AnalyticFunction parse_function(const std::string& spec);

}  // namespace nevlab
