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

#include "nevlab/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nevlab/error.hpp"

namespace nevlab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError("scenario: field '" + field + "': " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) fail(path + key, "missing");
  return *it;
}

// Exact rationals are strings ("3/2") or JSON integers.
Rational rational_field(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) fail(field, "expected a rational string such as \"3/2\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

double real_field(const json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    try {
      std::size_t used = 0;
      double x = std::stod(s, &used);
      if (used == s.size()) return x;
    } catch (const std::exception&) {
    }
  }
  fail(field, "expected a number or \"inf\"");
}

RadialGrid grid_field(const json* g, double r0, bool has_r0, double R) {
  RadialGrid grid = RadialGrid::default_for(R);
  if (has_r0) grid.r0 = r0;
  if (g && !g->is_object()) fail("grid", "expected an object");
  const std::string kind = g ? g->value("kind", std::string("default")) : "default";
  try {
    if (kind == "default") {
    } else if (kind == "geometric") {
      grid = RadialGrid::geometric(real_field(require(*g, "lo", "grid."), "grid.lo"),
                                   real_field(require(*g, "hi", "grid."), "grid.hi"),
                                   require(*g, "points", "grid.").get<int>(), grid.r0, R);
    } else if (kind == "blowup") {
      grid = RadialGrid::blowup(R, require(*g, "count", "grid.").get<int>(), grid.r0);
    } else if (kind == "list") {
      grid.values.clear();
      for (const auto& v : require(*g, "values", "grid.")) grid.values.push_back(real_field(v, "grid.values"));
    } else {
      fail("grid.kind", "unknown kind '" + kind + "' (default, geometric, blowup, list)");
    }
    grid.validate();
  } catch (const PreconditionError& e) {
    fail("grid", e.what());
  } catch (const json::exception& e) {
    fail("grid", e.what());
  }
  return grid;
}

}  // namespace

Rational Scenario::epsilon_prime_or_default() const { return epsilon_prime ? *epsilon_prime : Rational(epsilon / 10); }

bool Scenario::moving() const {
  for (const auto& h : hypersurfaces) {
    if (h.is_moving()) return true;
  }
  return false;
}

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Byte offset to line number for the message.
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i) line += text[i] == '\n';
    throw ParseError("scenario: malformed JSON at line " + std::to_string(line) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("scenario: top level must be an object");

  Scenario s;
  try {
    s.name = doc.value("name", std::string("scenario"));
    const json& n = require(doc, "ambient_N", "");
    if (!n.is_number_integer() || n.get<long>() < 1) fail("ambient_N", "expected an integer >= 1");
    s.ambient_N = n.get<std::size_t>();
    const std::size_t vars = s.ambient_N + 1;

    std::vector<HomogPoly> gens;
    if (auto it = doc.find("variety"); it != doc.end() && !it->is_null()) {
      if (!it->is_array()) fail("variety", "expected a list of polynomial strings");
      for (std::size_t i = 0; i < it->size(); ++i) {
        const std::string field = "variety[" + std::to_string(i) + "]";
        if (!(*it)[i].is_string()) fail(field, "expected a polynomial string");
        s.variety_generators.push_back((*it)[i].get<std::string>());
        try {
          gens.push_back(parse_homog_poly(s.variety_generators.back(), vars));
        } catch (const ParseError& e) {
          fail(field, e.what());
        }
      }
    }
    s.variety = gens.empty() ? Variety::projective_space(s.ambient_N) : Variety(vars, gens);
    if (s.variety.empty()) fail("variety", "the generators define the empty set");

    const json& curve = require(doc, "curve", "");
    const json& comps = require(curve, "components", "curve.");
    if (!comps.is_array() || comps.size() != vars) {
      fail("curve.components", "expected " + std::to_string(vars) + " function strings");
    }
    double R = std::numeric_limits<double>::infinity();
    if (auto it = curve.find("R"); it != curve.end()) R = real_field(*it, "curve.R");
    if (!(R > 0.0)) fail("curve.R", "must be positive");
    std::vector<AnalyticFunction> fs;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::string field = "curve.components[" + std::to_string(i) + "]";
      if (!comps[i].is_string()) fail(field, "expected a function string");
      s.curve_text.push_back(comps[i].get<std::string>());
      try {
        fs.push_back(parse_function(s.curve_text.back()));
      } catch (const Error& e) {
        fail(field, e.what());
      }
    }
    s.curve = Curve(std::move(fs), R);

    const json& hs = require(doc, "hypersurfaces", "");
    if (!hs.is_array() || hs.empty()) fail("hypersurfaces", "expected a nonempty list");
    for (std::size_t j = 0; j < hs.size(); ++j) {
      const std::string path = "hypersurfaces[" + std::to_string(j) + "]";
      const json& h = hs[j];
      if (!h.is_object()) fail(path, "expected an object");
      const json& deg = require(h, "degree", path + ".");
      if (!deg.is_number_integer() || deg.get<int>() < 1) fail(path + ".degree", "expected an integer >= 1");
      const json& coeffs = require(h, "coefficients", path + ".");
      if (!coeffs.is_object() || coeffs.empty()) fail(path + ".coefficients", "expected a nonempty object");
      std::vector<std::pair<std::string, std::string>> pairs;
      for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
        std::string value;
        if (it->is_string()) {
          value = it->get<std::string>();
        } else if (it->is_number_integer()) {
          value = std::to_string(it->get<long>());
        } else {
          fail(path + ".coefficients." + it.key(), "expected a rational or function string");
        }
        pairs.emplace_back(it.key(), value);
      }
      try {
        s.hypersurfaces.push_back(parse_hypersurface(vars, deg.get<int>(), pairs));
      } catch (const Error& e) {
        fail(path, e.what());
      }
      const bool declared_moving = h.value("moving", false);
      if (!declared_moving && s.hypersurfaces.back().is_moving()) {
        fail(path + ".moving", "coefficients depend on z; set \"moving\": true");
      }
    }

    s.epsilon = rational_field(require(doc, "epsilon", ""), "epsilon");
    if (sgn(s.epsilon) <= 0) fail("epsilon", "must be positive");
    if (auto it = doc.find("epsilon_prime"); it != doc.end() && !it->is_null()) {
      s.epsilon_prime = rational_field(*it, "epsilon_prime");
      if (sgn(*s.epsilon_prime) <= 0) fail("epsilon_prime", "must be positive");
    }

    double r0 = 0.0;
    bool has_r0 = false;
    if (auto it = doc.find("r0"); it != doc.end() && !it->is_null()) {
      r0 = real_field(*it, "r0");
      has_r0 = true;
    }
    auto g = doc.find("grid");
    s.grid = grid_field(g == doc.end() || g->is_null() ? nullptr : &*g, r0, has_r0, R);

    if (auto it = doc.find("truncation"); it != doc.end() && !it->is_null()) {
      if (!it->is_number_integer() || it->get<long>() < 1) fail("truncation", "expected an integer >= 1");
      s.truncation = it->get<long>();
    }
    if (auto it = doc.find("seed"); it != doc.end() && !it->is_null()) {
      if (!it->is_number_unsigned()) fail("seed", "expected a non-negative integer");
      s.seed = it->get<std::uint64_t>();
    }
    if (auto it = doc.find("growth"); it != doc.end() && !it->is_null()) {
      if (auto l = it->find("lambda"); l != it->end() && !l->is_null()) {
        s.growth_lambda = real_field(*l, "growth.lambda");
        if (!(*s.growth_lambda > 0.0)) fail("growth.lambda", "must be positive");
      }
    }
    if (auto it = doc.find("weights"); it != doc.end() && !it->is_null()) {
      const json& c = require(*it, "c", "weights.");
      if (!c.is_array() || c.size() != vars) fail("weights.c", "expected " + std::to_string(vars) + " rationals");
      for (std::size_t i = 0; i < c.size(); ++i) {
        s.weights.push_back(rational_field(c[i], "weights.c[" + std::to_string(i) + "]"));
        if (sgn(s.weights.back()) < 0) fail("weights.c", "weights must be non-negative");
      }
      s.weights_u = it->value("u", 0);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("scenario: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace nevlab
