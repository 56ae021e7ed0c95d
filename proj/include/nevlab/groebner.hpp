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
#include <cstdint>
#include <utility>
#include <vector>

#include "nevlab/homog_poly.hpp"
#include "nevlab/monomial.hpp"

namespace nevlab {

struct GroebnerOptions {
  std::size_t max_reductions = 1000000;
};

/// Reduced (monic, interreduced) grevlex Groebner basis of the ideal spanned
/// by `generators`. Zero generators are ignored. BudgetExceeded past the
/// reduction budget.
std::vector<HomogPoly> groebner_basis(const std::vector<HomogPoly>& generators,
                                      const GroebnerOptions& opts = {});

/// Full reduction of p by `basis`; no term of the result is divisible by a
/// leading monomial of the basis.
HomogPoly normal_form(const HomogPoly& p, const std::vector<HomogPoly>& basis);

/// Numerator N(t) of the Hilbert series N(t) / (1 - t)^num_vars of
/// k[x] / (monomials). Coefficients low to high.
std::vector<std::int64_t> hilbert_series_numerator(const std::vector<Monomial>& monomials,
                                                   std::size_t num_vars);

/// Degree-u part of the quotient by a Groebner basis, with the normal form of
/// every degree-u monomial written in the standard monomials.
struct NormalFormTable {
  int u = 0;
  std::vector<Monomial> monomials;  // grevlex-descending, all of degree u
  std::vector<Monomial> standard;   // standard monomials, grevlex-descending
  /// nf[i] = sparse coordinates of NF(monomials[i]) over `standard`.
  std::vector<std::vector<std::pair<int, GaussianRational>>> nf;
};

/// Projective variety V(I) in P^{num_vars - 1}, with its Groebner basis,
/// Hilbert function, dimension and degree computed on construction.
class Variety {
 public:
  Variety() = default;
  Variety(std::size_t num_vars, std::vector<HomogPoly> generators, const GroebnerOptions& opts = {});
  static Variety projective_space(std::size_t ambient_dim);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t ambient_dim() const { return num_vars_ - 1; }
  const std::vector<HomogPoly>& generators() const { return generators_; }
  const std::vector<HomogPoly>& basis() const { return basis_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }

  /// -1 for the empty variety.
  int dim() const { return dim_; }
  /// 0 for the empty variety.
  long degree() const { return degree_; }
  bool empty() const { return dim_ < 0; }

  std::int64_t hilbert(int u) const;
  /// V cut by the given forms.
  Variety intersect(const std::vector<HomogPoly>& forms, const GroebnerOptions& opts = {}) const;
  /// True when p vanishes on V in the ideal-membership sense (NF(p) = 0).
  bool contains(const HomogPoly& p) const;

  NormalFormTable normal_form_table(int u) const;

 private:
  void finish(const GroebnerOptions& opts);

  std::size_t num_vars_ = 0;
  std::vector<HomogPoly> generators_;
  std::vector<HomogPoly> basis_;
  std::vector<Monomial> leads_;
  std::vector<std::int64_t> numerator_;
  int dim_ = -1;
  long degree_ = 0;
};

/// Largest u examined by the dimension/degree fit.
inline constexpr int kHilbertWindow = 60;

/// (k, delta) from the Hilbert function; (-1, 0) for the empty variety.
/// EstimationError when the finite differences do not settle by u = 60.
std::pair<int, long> variety_dim_degree(const Variety& v);

/// dim(V cut by forms), -1 when empty.
int intersection_dim(const Variety& v, const std::vector<HomogPoly>& forms);

}  // namespace nevlab
