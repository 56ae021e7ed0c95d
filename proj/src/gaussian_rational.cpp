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

#include "nevlab/gaussian_rational.hpp"

#include <cmath>
#include <ostream>

#include "nevlab/error.hpp"

namespace nevlab {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational literal");
  Rational out;
  try {
    // Decimal literals are accepted and converted exactly.
    if (auto dot = s.find('.'); dot != std::string::npos) {
      if (s.find('/') != std::string::npos || s.find_first_of("eE") != std::string::npos) {
        throw ParseError("malformed rational literal '" + text + "'");
      }
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      BigInt num(digits, 10);
      BigInt den = 1;
      for (std::size_t k = dot + 1; k < s.size(); ++k) den *= 10;
      out = Rational(num, den);
    } else {
      out = Rational(s, 10);
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal '" + text + "'");
  }
  if (sgn(out.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
  out.canonicalize();
  return out;
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm2();
  if (sgn(n) == 0) throw DegenerateInput("division by zero Gaussian rational");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational GaussianRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GaussianRational result(1);
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "*i";
  }
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) {
    out += "+";
  } else {
    out += "-";
  }
  Rational a = abs(im_);
  if (a != 1) out += a.get_str() + "*";
  out += "i)";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.to_string();
}

namespace {

// Best rational approximation by continued fractions.
Rational approximate(double x, long max_den) {
  if (!std::isfinite(x)) throw DegenerateInput("cannot rationalize a non-finite value");
  mpq_class value;
  value = x;  // exact binary value
  if (sgn(value.get_den() - max_den) <= 0) return value;
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  mpq_class rest = value;
  for (int iter = 0; iter < 64; ++iter) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    BigInt h2 = a * h1 + h0;
    BigInt k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    mpq_class frac = rest - mpq_class(a);
    if (sgn(frac) == 0) break;
    rest = 1 / frac;
  }
  return Rational(h1, k1);
}

}  // namespace

GaussianRational rationalize(std::complex<double> z, long max_den) {
  return {approximate(z.real(), max_den), approximate(z.imag(), max_den)};
}

}  // namespace nevlab
