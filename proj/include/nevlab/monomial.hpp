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

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace nevlab {

/// Exponent vector x0^e0 * ... * xN^eN.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  /// The monomial 1 in `num_vars` variables.
  static Monomial one(std::size_t num_vars) {
    return Monomial(std::vector<int>(num_vars, 0));
  }
  /// x_i^power in `num_vars` variables.
  static Monomial var(std::size_t num_vars, std::size_t i, int power = 1);

  std::size_t num_vars() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

  /// "x0^2*x1", or "1" for the constant monomial.
  std::string to_string() const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Graded reverse lexicographic comparison: true iff a > b.
bool grevlex_greater(const Monomial& a, const Monomial& b);

/// Orders monomials so the grevlex-largest comes first.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_greater(a, b);
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// All monomials of total degree `u` in `num_vars` variables, grevlex-descending.
/// The count is C(num_vars - 1 + u, u).
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int u);

/// Parses a single monomial key "x0^2*x1" (or "1") in `num_vars` variables.
Monomial parse_monomial(const std::string& text, std::size_t num_vars);

}  // namespace nevlab
