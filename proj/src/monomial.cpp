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

#include "nevlab/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nevlab/error.hpp"

namespace nevlab {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw PreconditionError("negative exponent in monomial");
  }
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::var(std::size_t num_vars, std::size_t i, int power) {
  std::vector<int> e(num_vars, 0);
  e.at(i) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = other.exps_[i] - exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  // Rightmost nonzero entry of a - b is negative.
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ULL;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void enumerate(std::size_t pos, int remaining, std::vector<int>& cur,
               std::vector<Monomial>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    enumerate(pos + 1, remaining - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int u) {
  if (num_vars == 0) throw PreconditionError("monomials_of_degree: num_vars must be >= 1");
  if (u < 0) throw PreconditionError("monomials_of_degree: degree must be >= 0");
  std::vector<Monomial> out;
  std::vector<int> cur(num_vars, 0);
  enumerate(0, u, cur, out);
  std::sort(out.begin(), out.end(), GrevlexDescending{});
  return out;
}

Monomial parse_monomial(const std::string& text, std::size_t num_vars) {
  std::vector<int> e(num_vars, 0);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected integer in monomial '" + text + "'");
    return std::stoi(text.substr(start, pos - start));
  };
  skip();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip();
    if (pos != text.size()) throw ParseError("malformed monomial '" + text + "'");
    return Monomial(std::move(e));
  }
  while (true) {
    skip();
    if (pos >= text.size() || text[pos] != 'x') {
      throw ParseError("expected variable in monomial '" + text + "'");
    }
    ++pos;
    int idx = read_int();
    if (idx < 0 || static_cast<std::size_t>(idx) >= num_vars) {
      throw ParseError("variable x" + std::to_string(idx) + " out of range in '" + text + "'");
    }
    int power = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = read_int();
    }
    e[idx] += power;
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ParseError("unexpected character in monomial '" + text + "'");
    ++pos;
  }
  return Monomial(std::move(e));
}

}  // namespace nevlab
