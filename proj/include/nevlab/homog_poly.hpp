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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nevlab/gaussian_rational.hpp"
#include "nevlab/monomial.hpp"

namespace nevlab {

/// Homogeneous polynomial over Q(i). Terms are kept grevlex-descending, so the
/// first term is the leading term. Zero coefficients are never stored.
class HomogPoly {
 public:
  using TermMap = std::map<Monomial, GaussianRational, GrevlexDescending>;

  HomogPoly() = default;
  HomogPoly(std::size_t num_vars, int degree) : num_vars_(num_vars), degree_(degree) {}
  /// Single term c * m.
  HomogPoly(const Monomial& m, GaussianRational c);

  std::size_t num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of m (zero if absent).
  GaussianRational coeff(const Monomial& m) const;
  /// Adds c*m; m must have this polynomial's degree and variable count.
  void add_term(const Monomial& m, const GaussianRational& c);

  const Monomial& leading_monomial() const;
  const GaussianRational& leading_coeff() const;

  /// Scales so the leading coefficient is 1 (zero stays zero).
  HomogPoly monic() const;

  HomogPoly& operator+=(const HomogPoly& o);
  HomogPoly& operator-=(const HomogPoly& o);
  HomogPoly& operator*=(const GaussianRational& c);
  /// this -= c * m * o, the reduction step used by normal forms.
  void sub_scaled_shift(const GaussianRational& c, const Monomial& m, const HomogPoly& o);

  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  friend HomogPoly operator*(HomogPoly a, const GaussianRational& c) { return a *= c; }
  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
  friend HomogPoly operator-(const HomogPoly& a) { return a * GaussianRational(-1); }
  friend bool operator==(const HomogPoly& a, const HomogPoly& b);
  friend bool operator!=(const HomogPoly& a, const HomogPoly& b) { return !(a == b); }

  HomogPoly pow(int e) const;
  HomogPoly shifted(const Monomial& m) const;

  /// Floating evaluation; throws PreconditionError on dimension mismatch.
  std::complex<double> eval(std::span<const std::complex<double>> point) const;
  /// Exact evaluation at a Gaussian-rational point.
  GaussianRational eval_exact(std::span<const GaussianRational> point) const;

  /// p(A x): substitutes x_i -> sum_j A[i][j] x_j.
  HomogPoly substitute_linear(const std::vector<std::vector<GaussianRational>>& a) const;

  std::string to_string() const;

 private:
  void check_compatible(const HomogPoly& o) const;

  std::size_t num_vars_ = 0;
  int degree_ = 0;
  TermMap terms_;
};

/// Parses the literal syntax "3/2*x0^2*x1 - i*x2^3" with variables x0..x{num_vars-1}.
/// Throws ParseError on malformed or non-homogeneous input.
HomogPoly parse_homog_poly(const std::string& text, std::size_t num_vars);

}  // namespace nevlab
