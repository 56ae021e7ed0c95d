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

#include "nevlab/curve.hpp"

#include <bit>
#include <cmath>
#include <map>

#include "nevlab/error.hpp"

namespace nevlab {

double log_norm(const std::vector<ScaledComplex>& values) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& v : values) {
    if (v.mantissa != 0.0) top = std::max(top, v.log_abs());
  }
  if (!std::isfinite(top)) return top;
  double sum = 0.0;
  for (const auto& v : values) {
    if (v.mantissa == 0.0) continue;
    double rel = std::exp(v.log_abs() - top);
    sum += rel * rel;
  }
  return top + 0.5 * std::log(sum);
}

std::vector<ScaledComplex> Curve::eval_scaled(std::complex<double> z) const {
  std::vector<ScaledComplex> out;
  out.reserve(components.size());
  for (const auto& f : components) out.push_back(f.eval_scaled(z));
  return out;
}

double Curve::log_norm(std::complex<double> z) const { return nevlab::log_norm(eval_scaled(z)); }

namespace {

// Laplace expansion along successive columns, memoized on the set of used rows.
class DeterminantExpander {
 public:
  explicit DeterminantExpander(const std::vector<std::vector<AnalyticFunction>>& m) : m_(m) {}

  AnalyticFunction det(unsigned used_rows) {
    std::size_t col = static_cast<std::size_t>(std::popcount(used_rows));
    if (col == m_.size()) return AnalyticFunction(GaussianRational(1));
    if (auto it = memo_.find(used_rows); it != memo_.end()) return it->second;
    AnalyticFunction acc;
    int sign = 1;
    for (std::size_t r = 0; r < m_.size(); ++r) {
      if (used_rows & (1u << r)) continue;
      // sign alternates over the rows still available.
      if (!m_[r][col].is_zero()) {
        AnalyticFunction term = m_[r][col] * det(used_rows | (1u << r));
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo_.emplace(used_rows, acc);
    return acc;
  }

 private:
  const std::vector<std::vector<AnalyticFunction>>& m_;
  std::map<unsigned, AnalyticFunction> memo_;
};

}  // namespace

AnalyticFunction wronskian(const Curve& curve) {
  const std::size_t n = curve.components.size();
  if (n == 0) throw PreconditionError("wronskian of an empty curve");
  if (n > 16) throw PreconditionError("wronskian: too many components");
  // rows: derivative order k, columns: component i.
  std::vector<std::vector<AnalyticFunction>> m(n, std::vector<AnalyticFunction>(n));
  for (std::size_t i = 0; i < n; ++i) {
    AnalyticFunction d = curve.components[i];
    for (std::size_t k = 0; k < n; ++k) {
      m[k][i] = d;
      if (k + 1 < n) d = d.derivative();
    }
  }
  return DeterminantExpander(m).det(0u);
}

}  // namespace nevlab
