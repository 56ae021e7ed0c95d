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

#include "nevlab/upoly.hpp"

#include "nevlab/error.hpp"

namespace nevlab {

UPoly::UPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t UPoly::nonzero_terms() const {
  std::size_t n = 0;
  for (const auto& c : c_) n += c.is_zero() ? 0 : 1;
  return n;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return UPoly(std::move(out));
}

UPoly UPoly::pow(int e) const {
  if (e < 0) throw PreconditionError("negative power of a polynomial");
  UPoly result(GaussianRational(1));
  UPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) {
    out[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
  }
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * leading().inverse();
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw DegenerateInput("polynomial division by zero");
  if (degree() < d.degree()) return {UPoly(), *this};
  std::vector<GaussianRational> rem = c_;
  std::vector<GaussianRational> quo(c_.size() - d.c_.size() + 1);
  GaussianRational inv = d.leading().inverse();
  for (std::size_t k = quo.size(); k-- > 0;) {
    GaussianRational q = rem[k + d.c_.size() - 1] * inv;
    if (q.is_zero()) continue;
    quo[k] = q;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= q * d.c_[j];
  }
  rem.resize(d.c_.size() - 1);
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

std::complex<double> UPoly::eval(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k].to_complex();
  return acc;
}

GaussianRational UPoly::eval_exact(const GaussianRational& z) const {
  GaussianRational acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = c_[k].to_string();
    if (k == 0) {
      out += coeff;
      continue;
    }
    if (!c_[k].is_one()) out += coeff + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UPoly> square_free_decomposition(const UPoly& p) {
  if (p.is_zero()) throw DegenerateInput("square-free decomposition of zero");
  std::vector<UPoly> out;
  if (p.degree() == 0) return out;
  UPoly f = p.monic();
  UPoly df = f.derivative();
  UPoly a = gcd(f, df);
  UPoly b = f.divmod(a).first;
  UPoly c = df.divmod(a).first;
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    out.push_back(g);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

}  // namespace nevlab
