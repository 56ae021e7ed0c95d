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

// Independent oracle for Hilbert weights: exhaustive search over monomial
// subsets of size H(u), independence decided by elimination on normal forms.

#include <algorithm>

#include "nevlab/groebner.hpp"
#include "nevlab/weights.hpp"

namespace nevlab::test {

inline Rational weight_of(const Monomial& m, const WeightVector& c) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * m[i];
  return s;
}

// Rank of monomial residues, by elimination on normal forms computed with the
// plain reduction routine.
inline std::size_t residue_rank(const std::vector<Monomial>& ms, const Variety& x) {
  std::vector<HomogPoly> rows;
  for (const auto& m : ms) rows.push_back(normal_form(HomogPoly(m, GaussianRational(1)), x.basis()));
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    HomogPoly r = rows[i];
    for (std::size_t j = 0; j < rank; ++j) {
      const Monomial lead = rows[j].leading_monomial();
      GaussianRational c = r.coeff(lead);
      if (!c.is_zero()) r -= rows[j] * (c / rows[j].leading_coeff());
    }
    if (!r.is_zero()) {
      // Keep an echelon form: eliminate this pivot from later comparisons.
      for (std::size_t j = 0; j < rank; ++j) {
        GaussianRational c = rows[j].coeff(r.leading_monomial());
        if (!c.is_zero()) rows[j] -= r * (c / r.leading_coeff());
      }
      rows[rank++] = r;
    }
  }
  return rank;
}

// Exhaustive maximum over all independent monomial sets of size H(u).
inline Rational brute_force_weight(const Variety& x, int u, const WeightVector& c) {
  auto monos = monomials_of_degree(x.num_vars(), u);
  const std::size_t h = static_cast<std::size_t>(x.hilbert(u));
  Rational best = -1;
  std::vector<bool> pick(monos.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(h), true);
  do {
    std::vector<Monomial> chosen;
    Rational w = 0;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (pick[i]) {
        chosen.push_back(monos[i]);
        w += weight_of(monos[i], c);
      }
    }
    if (w > best && residue_rank(chosen, x) == h) best = w;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace nevlab::test
