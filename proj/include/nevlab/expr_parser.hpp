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

// Small recursive-descent parser for the literal syntax shared by polynomial
// forms ("3/2*x0^2*x1 - i*x2^3") and one-variable function specs
// ("(1)*exp(0) + (z)*exp(2*z)"). The value algebra is a template parameter.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power (('*'|'/') power)*
//   power   := unary ['^' integer]
//   unary   := '-' unary | primary
//   primary := number | ident | ident '(' expr ')' | '(' expr ')'

#include <cctype>
#include <string>
#include <utility>

#include "nevlab/error.hpp"
#include "nevlab/gaussian_rational.hpp"

namespace nevlab {

template <typename Algebra>
class ExprParser {
 public:
  using Value = typename Algebra::Value;

  ExprParser(const Algebra& algebra, std::string text)
      : alg_(algebra), text_(std::move(text)) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    skip();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Value acc = term();
    if (negate) acc = alg_.neg(acc);
    while (true) {
      if (accept('+')) {
        acc = alg_.add(acc, term());
      } else if (accept('-')) {
        acc = alg_.sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = power();
    while (true) {
      if (accept('*')) {
        acc = alg_.mul(acc, power());
      } else if (accept('/')) {
        acc = alg_.div(acc, power());
      } else {
        return acc;
      }
    }
  }

  Value power() {
    Value base = unary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      return alg_.pow(base, std::stoi(text_.substr(start, pos_ - start)));
    }
    return base;
  }

  Value unary() {
    if (accept('-')) return alg_.neg(unary());
    return primary();
  }

  Value primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      return alg_.constant(GaussianRational(parse_rational(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      if (accept('(')) {
        Value arg = expr();
        if (!accept(')')) fail("expected ')' after function argument");
        return alg_.call(name, arg);
      }
      if (name == "i") return alg_.constant(GaussianRational::i());
      return alg_.identifier(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Algebra& alg_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace nevlab
