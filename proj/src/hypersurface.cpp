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

#include "nevlab/hypersurface.hpp"

#include <cmath>
#include <sstream>

#include "nevlab/curve.hpp"
#include "nevlab/error.hpp"

namespace nevlab {

Hypersurface::Hypersurface(std::size_t num_vars, int degree, CoeffMap coeffs)
    : num_vars_(num_vars), degree_(degree) {
  for (auto& [m, a] : coeffs) {
    if (m.num_vars() != num_vars || m.degree() != degree) {
      throw PreconditionError("monomial " + m.to_string() + " does not have degree " +
                              std::to_string(degree) + " in " + std::to_string(num_vars) +
                              " variables");
    }
    if (!a.is_zero()) coeffs_.emplace(m, std::move(a));
  }
}

Hypersurface::Hypersurface(const HomogPoly& form)
    : num_vars_(form.num_vars()), degree_(form.degree()) {
  for (const auto& [m, c] : form.terms()) coeffs_.emplace(m, AnalyticFunction(c));
}

bool Hypersurface::is_moving() const {
  for (const auto& [m, a] : coeffs_) {
    if (!a.is_constant()) return true;
  }
  return false;
}

HomogPoly Hypersurface::form() const {
  HomogPoly out(num_vars_, degree_);
  for (const auto& [m, a] : coeffs_) {
    auto c = a.constant_value();
    if (!c) throw PreconditionError("hypersurface has non-constant coefficients");
    out.add_term(m, *c);
  }
  return out;
}

HomogPoly Hypersurface::at(const GaussianRational& z, bool* approximate) const {
  HomogPoly out(num_vars_, degree_);
  for (const auto& [m, a] : coeffs_) {
    if (auto exact = a.eval_exact(z)) {
      out.add_term(m, *exact);
    } else {
      if (approximate) *approximate = true;
      out.add_term(m, rationalize(a.eval(z.to_complex())));
    }
  }
  return out;
}

bool Hypersurface::singular_at(std::complex<double> z) const {
  for (const auto& [m, a] : coeffs_) {
    if (a.is_constant()) continue;
    if (std::abs(a.denominator().eval(z)) < 1e-9) return true;
    ScaledComplex v = a.eval_scaled(z);
    if (!(std::abs(v.mantissa) > 0.0) || v.log_abs() < std::log(1e-9)) return true;
  }
  return false;
}

double Hypersurface::log_coeff_norm(std::complex<double> z) const {
  std::vector<ScaledComplex> vals;
  vals.reserve(coeffs_.size());
  for (const auto& [m, a] : coeffs_) vals.push_back(a.eval_scaled(z));
  return log_norm(vals);
}

Hypersurface operator*(const Hypersurface& a, const Hypersurface& b) {
  if (a.num_vars_ != b.num_vars_) throw PreconditionError("product of hypersurfaces in different spaces");
  Hypersurface out;
  out.num_vars_ = a.num_vars_;
  out.degree_ = a.degree_ + b.degree_;
  for (const auto& [ma, ca] : a.coeffs_) {
    for (const auto& [mb, cb] : b.coeffs_) {
      AnalyticFunction prod = AnalyticFunction::multiply(ca, cb, kDefaultTermBudget);
      auto [it, inserted] = out.coeffs_.try_emplace(ma * mb, prod);
      if (!inserted) it->second = it->second + prod;
    }
  }
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Hypersurface Hypersurface::pow(int e, std::size_t budget) const {
  if (e < 1) throw PreconditionError("hypersurface power must be positive");
  Hypersurface out = *this;
  for (int k = 1; k < e; ++k) {
    out = out * *this;
    std::size_t terms = 0;
    for (const auto& [m, a] : out.coeffs_) terms += a.term_count();
    if (terms > budget) throw BudgetExceeded("hypersurface power exceeds the term budget");
  }
  return out;
}

std::string Hypersurface::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, a] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << a.to_string() << ")*" << m.to_string();
  }
  return os.str();
}

AnalyticFunction compose_hypersurface(const Hypersurface& q, const std::vector<AnalyticFunction>& curve,
                                      std::size_t budget) {
  if (curve.size() != q.num_vars()) {
    throw PreconditionError("curve has " + std::to_string(curve.size()) +
                            " components but the hypersurface lives in " +
                            std::to_string(q.num_vars()) + " variables");
  }
  // powers[i][k] = f_i^k, filled on demand.
  std::vector<std::vector<AnalyticFunction>> powers(curve.size());
  auto power = [&](std::size_t i, int k) -> const AnalyticFunction& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(AnalyticFunction(GaussianRational(1)));
    while (static_cast<int>(row.size()) <= k) {
      row.push_back(AnalyticFunction::multiply(row.back(), curve[i], budget));
    }
    return row[static_cast<std::size_t>(k)];
  };
  AnalyticFunction acc;
  for (const auto& [m, a] : q.coeffs()) {
    AnalyticFunction term = a;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      if (m[i] > 0) term = AnalyticFunction::multiply(term, power(i, m[i]), budget);
    }
    acc = acc + term;
    if (acc.term_count() > budget) throw BudgetExceeded("composition exceeds the term budget");
  }
  return acc;
}

Hypersurface normalize_moving(const Hypersurface& q) {
  const Monomial lead = Monomial::var(q.num_vars(), 0, q.degree());
  auto it = q.coeffs().find(lead);
  if (it == q.coeffs().end() || it->second.is_zero()) {
    throw DegenerateInput("coefficient of x0^" + std::to_string(q.degree()) +
                          " vanishes identically; normalization needs it nonzero");
  }
  const AnalyticFunction a0 = it->second;
  Hypersurface::CoeffMap out;
  for (const auto& [m, a] : q.coeffs()) {
    out.emplace(m, m == lead ? AnalyticFunction(GaussianRational(1)) : a / a0);
  }
  return Hypersurface(q.num_vars(), q.degree(), std::move(out));
}

Hypersurface parse_hypersurface(std::size_t num_vars, int degree,
                                const std::vector<std::pair<std::string, std::string>>& coeffs) {
  Hypersurface::CoeffMap map;
  for (const auto& [key, value] : coeffs) {
    Monomial m = parse_monomial(key, num_vars);
    if (m.degree() != degree) {
      throw ParseError("monomial '" + key + "' has degree " + std::to_string(m.degree()) +
                       ", declared degree is " + std::to_string(degree));
    }
    AnalyticFunction a = parse_function(value);
    auto [it, inserted] = map.try_emplace(m, a);
    if (!inserted) it->second = it->second + a;
  }
  return Hypersurface(num_vars, degree, std::move(map));
}

}  // namespace nevlab
