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
#include <string>
#include <utility>
#include <vector>

#include "nevlab/gaussian_rational.hpp"

namespace nevlab {

/// Dense polynomial in one variable z over Q(i); coefficients low to high,
/// trailing zeros trimmed. The zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<GaussianRational> coeffs);
  UPoly(GaussianRational c) : UPoly(std::vector<GaussianRational>{std::move(c)}) {}  // NOLINT
  static UPoly z() { return UPoly({GaussianRational(0), GaussianRational(1)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational operator[](std::size_t k) const {
    return k < c_.size() ? c_[k] : GaussianRational();
  }
  const GaussianRational& leading() const { return c_.back(); }
  std::size_t nonzero_terms() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const GaussianRational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) { return a * GaussianRational(-1); }
  friend UPoly operator*(UPoly a, const GaussianRational& s) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly pow(int e) const;
  UPoly derivative() const;
  UPoly monic() const;

  /// Euclidean division: returns (quotient, remainder).
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

  std::complex<double> eval(std::complex<double> z) const;
  GaussianRational eval_exact(const GaussianRational& z) const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// Monic greatest common divisor (zero if both are zero).
UPoly gcd(UPoly a, UPoly b);

/// Square-free decomposition p = lc * prod_k f_k^k (Yun). Entry k-1 is f_k;
/// every f_k is monic and square-free, trailing constant factors are dropped.
std::vector<UPoly> square_free_decomposition(const UPoly& p);

}  // namespace nevlab
