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

#include "nevlab/analytic_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nevlab/error.hpp"
#include "nevlab/expr_parser.hpp"

namespace nevlab {

std::complex<double> ScaledComplex::value() const {
  if (mantissa == 0.0) return 0.0;
  return mantissa * std::exp(log_scale);
}

double ScaledComplex::log_abs() const {
  return log_scale + std::log(std::abs(mantissa));
}

AnalyticFunction::AnalyticFunction() : den_(GaussianRational(1)) { refresh_numeric(); }

AnalyticFunction::AnalyticFunction(UPoly p) : den_(GaussianRational(1)) {
  if (!p.is_zero()) terms_.push_back({std::move(p), GaussianRational()});
  refresh_numeric();
}

AnalyticFunction::AnalyticFunction(GaussianRational c) : AnalyticFunction(UPoly(std::move(c))) {}

AnalyticFunction AnalyticFunction::rational(UPoly num, UPoly den) {
  if (den.is_zero()) throw DegenerateInput("rational function with zero denominator");
  AnalyticFunction f;
  if (!num.is_zero()) f.terms_.push_back({std::move(num), GaussianRational()});
  f.den_ = std::move(den);
  f.canonicalize();
  return f;
}

AnalyticFunction AnalyticFunction::exp_poly(std::vector<ExpTerm> terms) {
  AnalyticFunction f;
  f.terms_ = std::move(terms);
  f.canonicalize();
  return f;
}

AnalyticFunction AnalyticFunction::exp(const GaussianRational& rate) {
  return exp_poly({{UPoly(GaussianRational(1)), rate}});
}

void AnalyticFunction::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const ExpTerm& a, const ExpTerm& b) { return lex_less(a.rate, b.rate); });
  std::vector<ExpTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().rate == t.rate) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const ExpTerm& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
  if (terms_.empty()) {
    den_ = UPoly(GaussianRational(1));
  } else if (den_.degree() > 0) {
    UPoly g = den_;
    for (const auto& t : terms_) {
      if (g.degree() == 0) break;
      g = gcd(g, t.coeff);
    }
    if (g.degree() > 0) {
      den_ = den_.divmod(g).first;
      for (auto& t : terms_) t.coeff = t.coeff.divmod(g).first;
    }
  }
  if (!den_.leading().is_one()) {
    GaussianRational inv = den_.leading().inverse();
    den_ *= inv;
    for (auto& t : terms_) t.coeff *= inv;
  }
  refresh_numeric();
}

void AnalyticFunction::refresh_numeric() {
  num_terms_.clear();
  for (const auto& t : terms_) {
    NumericTerm nt;
    for (const auto& c : t.coeff.coeffs()) nt.coeff.push_back(c.to_complex());
    nt.rate = t.rate.to_complex();
    num_terms_.push_back(std::move(nt));
  }
  num_den_.clear();
  for (const auto& c : den_.coeffs()) num_den_.push_back(c.to_complex());
}

AnalyticFunction::Kind AnalyticFunction::kind() const {
  bool exp = has_exponentials();
  bool rat = den_.degree() > 0;
  if (exp) return rat ? Kind::RationalExpPoly : Kind::ExpPoly;
  return rat ? Kind::Rational : Kind::Polynomial;
}

const char* kind_name(AnalyticFunction::Kind kind) {
  switch (kind) {
    case AnalyticFunction::Kind::Polynomial:
      return "poly";
    case AnalyticFunction::Kind::Rational:
      return "rational";
    case AnalyticFunction::Kind::ExpPoly:
      return "exppoly";
    case AnalyticFunction::Kind::RationalExpPoly:
      return "rational-exppoly";
  }
  return "unknown";
}

bool AnalyticFunction::has_exponentials() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const ExpTerm& t) { return !t.rate.is_zero(); });
}

bool AnalyticFunction::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_[0].rate.is_zero() && terms_[0].coeff.degree() == 0 &&
         den_.degree() == 0;
}

std::optional<GaussianRational> AnalyticFunction::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (terms_.empty()) return GaussianRational();
  return terms_[0].coeff[0];
}

UPoly AnalyticFunction::numerator_poly() const {
  if (has_exponentials()) {
    throw UnsupportedVariant("numerator of an exponential polynomial is not a polynomial");
  }
  return terms_.empty() ? UPoly() : terms_[0].coeff;
}

AnalyticFunction AnalyticFunction::numerator() const {
  AnalyticFunction out;
  out.terms_ = terms_;
  out.refresh_numeric();
  return out;
}

std::size_t AnalyticFunction::term_count() const {
  std::size_t n = 0;
  for (const auto& t : terms_) n += t.coeff.nonzero_terms();
  return n;
}

AnalyticFunction operator+(const AnalyticFunction& a, const AnalyticFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  AnalyticFunction out;
  if (a.den_ == b.den_) {
    out.terms_ = a.terms_;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    out.den_ = a.den_;
  } else {
    for (const auto& t : a.terms_) out.terms_.push_back({t.coeff * b.den_, t.rate});
    for (const auto& t : b.terms_) out.terms_.push_back({t.coeff * a.den_, t.rate});
    out.den_ = a.den_ * b.den_;
  }
  out.canonicalize();
  return out;
}

AnalyticFunction operator-(const AnalyticFunction& a) {
  AnalyticFunction out = a;
  for (auto& t : out.terms_) t.coeff *= GaussianRational(-1);
  out.refresh_numeric();
  return out;
}

AnalyticFunction operator-(const AnalyticFunction& a, const AnalyticFunction& b) {
  return a + (-b);
}

AnalyticFunction AnalyticFunction::multiply(const AnalyticFunction& a, const AnalyticFunction& b,
                                            std::size_t budget) {
  AnalyticFunction out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.term_count() * b.term_count() > budget) {
    throw BudgetExceeded("exponential-polynomial product exceeds the term budget of " +
                         std::to_string(budget));
  }
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) out.terms_.push_back({ta.coeff * tb.coeff, ta.rate + tb.rate});
  }
  out.den_ = a.den_ * b.den_;
  out.canonicalize();
  if (out.term_count() > budget) {
    throw BudgetExceeded("exponential-polynomial product exceeds the term budget of " +
                         std::to_string(budget));
  }
  return out;
}

AnalyticFunction operator*(const AnalyticFunction& a, const AnalyticFunction& b) {
  return AnalyticFunction::multiply(a, b, kDefaultTermBudget);
}

AnalyticFunction operator/(const AnalyticFunction& a, const AnalyticFunction& b) {
  if (b.is_zero()) throw DegenerateInput("division by the zero function");
  AnalyticFunction out;
  if (!b.has_exponentials()) {
    const UPoly& p = b.terms_[0].coeff;
    for (const auto& t : a.terms_) out.terms_.push_back({t.coeff * b.den_, t.rate});
    out.den_ = a.den_ * p;
  } else if (b.terms_.size() == 1) {
    const auto& bt = b.terms_[0];
    for (const auto& t : a.terms_) out.terms_.push_back({t.coeff * b.den_, t.rate - bt.rate});
    out.den_ = a.den_ * bt.coeff;
  } else {
    throw UnsupportedVariant("division by a multi-term exponential polynomial");
  }
  out.canonicalize();
  return out;
}

bool operator==(const AnalyticFunction& a, const AnalyticFunction& b) {
  if (a.den_ != b.den_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].rate != b.terms_[k].rate || a.terms_[k].coeff != b.terms_[k].coeff) {
      return false;
    }
  }
  return true;
}

AnalyticFunction AnalyticFunction::pow(int e, std::size_t budget) const {
  if (e < 0) throw PreconditionError("negative power of an analytic function");
  AnalyticFunction result(GaussianRational(1));
  for (int k = 0; k < e; ++k) result = multiply(result, *this, budget);
  return result;
}

AnalyticFunction AnalyticFunction::derivative(int order) const {
  if (order < 0) throw PreconditionError("negative derivative order");
  AnalyticFunction cur = *this;
  for (int k = 0; k < order; ++k) {
    // (N/D)' = (N' D - N D') / D^2 with N' = sum (p' + rate p) exp(rate z).
    AnalyticFunction next;
    UPoly dden = cur.den_.derivative();
    for (const auto& t : cur.terms_) {
      UPoly dn = t.coeff.derivative() + t.coeff * t.rate;
      next.terms_.push_back({dn * cur.den_ - t.coeff * dden, t.rate});
    }
    next.den_ = cur.den_ * cur.den_;
    next.canonicalize();
    cur = std::move(next);
  }
  return cur;
}

std::complex<double> AnalyticFunction::horner(const std::vector<std::complex<double>>& c,
                                               std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

ScaledComplex AnalyticFunction::eval_scaled(std::complex<double> z) const {
  if (num_terms_.empty()) return {0.0, 0.0};
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& t : num_terms_) top = std::max(top, (t.rate * z).real());
  std::complex<double> sum = 0.0;
  for (const auto& t : num_terms_) {
    std::complex<double> e = t.rate * z;
    sum += horner(t.coeff, z) * std::exp(std::complex<double>(e.real() - top, e.imag()));
  }
  return {top, sum / horner(num_den_, z)};
}

std::complex<double> AnalyticFunction::eval(std::complex<double> z) const {
  return eval_scaled(z).value();
}

std::optional<GaussianRational> AnalyticFunction::eval_exact(const GaussianRational& z) const {
  if (has_exponentials() && !z.is_zero()) return std::nullopt;
  GaussianRational num;
  for (const auto& t : terms_) num += t.coeff.eval_exact(z);
  GaussianRational den = den_.eval_exact(z);
  if (den.is_zero()) throw DegenerateInput("evaluation at a pole");
  return num / den;
}

std::string AnalyticFunction::to_string() const {
  if (terms_.empty()) return "0";
  std::string num;
  for (const auto& t : terms_) {
    if (!num.empty()) num += " + ";
    if (t.rate.is_zero()) {
      num += "(" + t.coeff.to_string() + ")";
    } else {
      num += "(" + t.coeff.to_string() + ")*exp(" + t.rate.to_string() + "*z)";
    }
  }
  if (den_.degree() == 0) return num;
  return "(" + num + ")/(" + den_.to_string() + ")";
}

namespace {

class FunctionAlgebra {
 public:
  using Value = AnalyticFunction;
  Value constant(const GaussianRational& c) const { return Value(c); }
  Value identifier(const std::string& name) const {
    if (name != "z") throw ParseError("unknown identifier '" + name + "' (expected z)");
    return Value::z();
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value pow(const Value& a, int e) const { return a.pow(e); }
  Value call(const std::string& name, const Value& arg) const {
    if (name != "exp") throw ParseError("unknown function '" + name + "'");
    if (arg.is_zero()) return Value(GaussianRational(1));
    if (arg.kind() != AnalyticFunction::Kind::Polynomial) {
      throw ParseError("exp() argument must be rate*z");
    }
    UPoly p = arg.numerator_poly();
    if (p.degree() != 1 || !p[0].is_zero()) throw ParseError("exp() argument must be rate*z");
    return Value::exp(p[1]);
  }
};

}  // namespace

AnalyticFunction parse_function(const std::string& spec) {
  std::string body = spec;
  std::string prefix;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    prefix = spec.substr(0, colon);
    prefix.erase(std::remove(prefix.begin(), prefix.end(), ' '), prefix.end());
    body = spec.substr(colon + 1);
  }
  FunctionAlgebra alg;
  AnalyticFunction f = ExprParser<FunctionAlgebra>(alg, body).parse();
  using K = AnalyticFunction::Kind;
  K k = f.kind();
  if (prefix.empty()) return f;
  if (prefix == "poly") {
    if (k != K::Polynomial) throw ParseError("'" + spec + "' is not a polynomial");
  } else if (prefix == "rational") {
    if (k != K::Polynomial && k != K::Rational) {
      throw ParseError("'" + spec + "' is not a rational function");
    }
  } else if (prefix == "exppoly") {
    if (k != K::Polynomial && k != K::ExpPoly) {
      throw ParseError("'" + spec + "' is not an exponential polynomial");
    }
  } else {
    throw ParseError("unknown function kind '" + prefix + "'");
  }
  return f;
}

}  // namespace nevlab
