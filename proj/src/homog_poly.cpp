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

#include "nevlab/homog_poly.hpp"

#include "nevlab/error.hpp"
#include "nevlab/expr_parser.hpp"

namespace nevlab {

HomogPoly::HomogPoly(const Monomial& m, GaussianRational c)
    : num_vars_(m.num_vars()), degree_(m.degree()) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

GaussianRational HomogPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void HomogPoly::add_term(const Monomial& m, const GaussianRational& c) {
  if (m.num_vars() != num_vars_ || m.degree() != degree_) {
    throw PreconditionError("term " + m.to_string() + " does not fit a degree-" +
                            std::to_string(degree_) + " form in " + std::to_string(num_vars_) +
                            " variables");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Monomial& HomogPoly::leading_monomial() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.begin()->first;
}

const GaussianRational& HomogPoly::leading_coeff() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.begin()->second;
}

HomogPoly HomogPoly::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return *this * leading_coeff().inverse();
}

void HomogPoly::check_compatible(const HomogPoly& o) const {
  if (num_vars_ != o.num_vars_) throw PreconditionError("variable count mismatch");
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
  check_compatible(o);
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (degree_ != o.degree_) throw PreconditionError("sum of forms of different degrees");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) {
  check_compatible(o);
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (degree_ != o.degree_) throw PreconditionError("difference of forms of different degrees");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

HomogPoly& HomogPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

void HomogPoly::sub_scaled_shift(const GaussianRational& c, const Monomial& m,
                                 const HomogPoly& o) {
  if (is_zero()) degree_ = o.degree_ + m.degree();
  for (const auto& [om, oc] : o.terms_) {
    Monomial prod = om * m;
    auto [it, inserted] = terms_.try_emplace(prod);
    GaussianRational delta = c * oc;
    if (inserted) {
      it->second = -delta;
    } else {
      it->second -= delta;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  a.check_compatible(b);
  HomogPoly out(a.num_vars_, a.degree_ + b.degree_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

bool operator==(const HomogPoly& a, const HomogPoly& b) {
  if (a.num_vars_ != b.num_vars_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HomogPoly HomogPoly::pow(int e) const {
  if (e < 0) throw PreconditionError("negative power of a form");
  HomogPoly result(Monomial::one(num_vars_), GaussianRational(1));
  for (int k = 0; k < e; ++k) result = result * *this;
  return result;
}

HomogPoly HomogPoly::shifted(const Monomial& m) const {
  HomogPoly out(num_vars_, degree_ + m.degree());
  for (const auto& [tm, c] : terms_) out.terms_.emplace(tm * m, c);
  return out;
}

std::complex<double> HomogPoly::eval(std::span<const std::complex<double>> point) const {
  if (point.size() != num_vars_) throw PreconditionError("poly_eval: point has wrong dimension");
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (std::size_t i = 0; i < num_vars_; ++i) {
      for (int k = 0; k < m[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

GaussianRational HomogPoly::eval_exact(std::span<const GaussianRational> point) const {
  if (point.size() != num_vars_) throw PreconditionError("poly_eval: point has wrong dimension");
  GaussianRational sum;
  for (const auto& [m, c] : terms_) {
    GaussianRational term = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (m[i] > 0) term *= point[i].pow(m[i]);
    }
    sum += term;
  }
  return sum;
}

HomogPoly HomogPoly::substitute_linear(const std::vector<std::vector<GaussianRational>>& a) const {
  if (a.size() != num_vars_) throw PreconditionError("substitution matrix has wrong size");
  std::vector<HomogPoly> images;
  images.reserve(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    if (a[i].size() != num_vars_) throw PreconditionError("substitution matrix has wrong size");
    HomogPoly row(num_vars_, 1);
    for (std::size_t j = 0; j < num_vars_; ++j) row.add_term(Monomial::var(num_vars_, j), a[i][j]);
    images.push_back(std::move(row));
  }
  HomogPoly out(num_vars_, degree_);
  for (const auto& [m, c] : terms_) {
    HomogPoly term(Monomial::one(num_vars_), c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      for (int k = 0; k < m[i]; ++k) term = term * images[i];
    }
    out += term;
  }
  return out;
}

std::string HomogPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) coeff = (-c).to_string();
    if (!first) out += negative ? " - " : " + ";
    if (first && negative) out += "-";
    first = false;
    if (m.degree() == 0) {
      out += coeff;
    } else if (coeff == "1") {
      out += m.to_string();
    } else {
      out += coeff + "*" + m.to_string();
    }
  }
  return out;
}

namespace {

// Mixed-degree sparse polynomial used only while parsing.
struct SparsePoly {
  std::size_t num_vars = 0;
  std::map<Monomial, GaussianRational, GrevlexDescending> terms;
};

class SparsePolyAlgebra {
 public:
  using Value = SparsePoly;
  explicit SparsePolyAlgebra(std::size_t n) : n_(n) {}

  Value constant(const GaussianRational& c) const {
    Value v{n_, {}};
    if (!c.is_zero()) v.terms.emplace(Monomial::one(n_), c);
    return v;
  }
  Value identifier(const std::string& name) const {
    if (name.size() < 2 || name[0] != 'x') throw ParseError("unknown identifier '" + name + "'");
    std::size_t idx = 0;
    try {
      idx = std::stoul(name.substr(1));
    } catch (const std::exception&) {
      throw ParseError("unknown identifier '" + name + "'");
    }
    if (idx >= n_) throw ParseError("variable " + name + " out of range");
    Value v{n_, {}};
    v.terms.emplace(Monomial::var(n_, idx), GaussianRational(1));
    return v;
  }
  Value add(Value a, const Value& b) const {
    for (const auto& [m, c] : b.terms) accumulate(a, m, c);
    return a;
  }
  Value sub(Value a, const Value& b) const {
    for (const auto& [m, c] : b.terms) accumulate(a, m, -c);
    return a;
  }
  Value neg(const Value& a) const { return sub(constant(GaussianRational()), a); }
  Value mul(const Value& a, const Value& b) const {
    Value out{n_, {}};
    for (const auto& [ma, ca] : a.terms) {
      for (const auto& [mb, cb] : b.terms) accumulate(out, ma * mb, ca * cb);
    }
    return out;
  }
  Value div(const Value& a, const Value& b) const {
    if (b.terms.size() != 1 || b.terms.begin()->first.degree() != 0) {
      throw ParseError("division is only allowed by constants in polynomial literals");
    }
    GaussianRational inv = b.terms.begin()->second.inverse();
    Value out = a;
    for (auto& [m, c] : out.terms) c *= inv;
    return out;
  }
  Value pow(const Value& a, int e) const {
    Value out = constant(GaussianRational(1));
    for (int k = 0; k < e; ++k) out = mul(out, a);
    return out;
  }
  Value call(const std::string& name, const Value&) const {
    throw ParseError("function '" + name + "' not allowed in polynomial literals");
  }

 private:
  static void accumulate(Value& v, const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.terms.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) v.terms.erase(it);
    }
  }
  std::size_t n_;
};

}  // namespace

HomogPoly parse_homog_poly(const std::string& text, std::size_t num_vars) {
  if (num_vars == 0) throw PreconditionError("parse_homog_poly: need at least one variable");
  SparsePolyAlgebra alg(num_vars);
  SparsePoly p = ExprParser<SparsePolyAlgebra>(alg, text).parse();
  if (p.terms.empty()) return HomogPoly(num_vars, 0);
  int degree = p.terms.begin()->first.degree();
  HomogPoly out(num_vars, degree);
  for (const auto& [m, c] : p.terms) {
    if (m.degree() != degree) throw ParseError("polynomial '" + text + "' is not homogeneous");
    out.add_term(m, c);
  }
  return out;
}

}  // namespace nevlab
