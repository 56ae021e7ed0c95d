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
#include <string>
#include <vector>

#include "nevlab/analytic_function.hpp"
#include "nevlab/homog_poly.hpp"
#include "nevlab/monomial.hpp"

namespace nevlab {

/// Homogeneous form sum_I a_I(z) x^I whose coefficients are analytic
/// functions of the disc variable. Fixed hypersurfaces have constant a_I.
class Hypersurface {
 public:
  using CoeffMap = std::map<Monomial, AnalyticFunction, GrevlexDescending>;

  Hypersurface() = default;
  Hypersurface(std::size_t num_vars, int degree, CoeffMap coeffs);
  /// Constant-coefficient hypersurface.
  explicit Hypersurface(const HomogPoly& form);

  std::size_t num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_moving() const;

  /// The constant form; requires !is_moving().
  HomogPoly form() const;
  /// Q(z) with exact coefficients. Exponential coefficients at z != 0 are
  /// rationalized from their double value and `approximate` is set.
  HomogPoly at(const GaussianRational& z, bool* approximate = nullptr) const;
  /// True when some coefficient vanishes or has a pole at z (numerically).
  bool singular_at(std::complex<double> z) const;
  /// log of the Euclidean norm of the coefficient vector at z.
  double log_coeff_norm(std::complex<double> z) const;

  Hypersurface pow(int e, std::size_t budget = kDefaultTermBudget) const;
  friend Hypersurface operator*(const Hypersurface& a, const Hypersurface& b);

  std::string to_string() const;

 private:
  std::size_t num_vars_ = 0;
  int degree_ = 0;
  CoeffMap coeffs_;
};

/// Q(f) = sum_I a_I f_0^{i_0} ... f_N^{i_N}.
AnalyticFunction compose_hypersurface(const Hypersurface& q,
                                      const std::vector<AnalyticFunction>& curve,
                                      std::size_t budget = kDefaultTermBudget);

/// Divides every coefficient by a_{I0}, I0 = (d, 0, ..., 0).
Hypersurface normalize_moving(const Hypersurface& q);

/// Builds a hypersurface from monomial keys ("x0^2*x1", "1" only for degree 0)
/// and coefficient strings (rationals like "3/2" or function specs in z).
Hypersurface parse_hypersurface(std::size_t num_vars, int degree,
                                const std::vector<std::pair<std::string, std::string>>& coeffs);

}  // namespace nevlab
