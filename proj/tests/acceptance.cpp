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

// Acceptance run: one line per criterion, exit status 1 when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "nevlab/constants.hpp"
#include "nevlab/nevanlinna.hpp"
#include "nevlab/position_geometry.hpp"
#include "nevlab/smt_verifier.hpp"
#include "nevlab/weights.hpp"
#include "nevlab/zeros.hpp"
#include "weight_oracle.hpp"

using namespace nevlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records a condition; the first failing one is kept in the detail.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok || !pass_) return;
    pass_ = false;
    failure_ = what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome done() const { return {pass_, pass_ ? notes_ : "FAILED " + failure_ + (notes_.empty() ? "" : " | " + notes_)}; }

 private:
  bool pass_ = true;
  std::string failure_, notes_;
};

std::string g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

HomogPoly P(const std::string& s, std::size_t n) { return parse_homog_poly(s, n); }
AnalyticFunction F(const std::string& s) { return parse_function(s); }
Hypersurface H(const std::string& s, std::size_t n) { return Hypersurface(P(s, n)); }
std::string scenario(const std::string& name) { return std::string(NEVLAB_SCENARIO_DIR) + "/" + name; }

Variety conic() { return Variety(3, {P("x0*x2 - x1^2", 3)}); }
Variety twisted_cubic() { return Variety(4, {P("x0*x2 - x1^2", 4), P("x1*x3 - x2^2", 4), P("x0*x3 - x1*x2", 4)}); }

WeightVector random_weights(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(0, 9), den(1, 4);
  WeightVector c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(make_rational(num(rng), den(rng)));
  return c;
}

// 1. Constants.
Outcome constants() {
  Checker ck;
  auto t0 = std::chrono::steady_clock::now();
  ConstantsInputs in;
  in.q = 2;
  SMTConstants f = constants_fixed(in);
  ck.expect(f.u == 18, "u' = " + f.u.get_str());
  ck.expect(f.L && *f.L == 57, "L' != 57");
  SMTConstants m = constants_moving(in);
  ck.expect(m.u == 36, "u = " + m.u.get_str());
  ck.expect(m.log10_L >= 9.8e4 && m.log10_L <= 9.9e4, "log10 L = " + m.log10_L_text);
  ck.expect(m.log10_L_width <= 1e-6, "log10 L not certified to 1e-6");
  in.q = 5;
  SMTConstants b = constants_theoremB(in);
  ck.expect(b.L && *b.L == 3914, "L_B != 3914");
  const double t = seconds_since(t0);
  ck.expect(t < 1.0, "runtime " + g(t) + " s");
  ck.note("u'=18 L'=57 u=36 log10 L=" + m.log10_L_text + " L_B(q=5)=3914, " + g(t) + " s");
  return ck.done();
}

// 2. First main theorem residuals.
Outcome first_main_theorem() {
  Checker ck;
  auto t0 = std::chrono::steady_clock::now();
  const double inf = std::numeric_limits<double>::infinity();
  RadialGrid grid = RadialGrid::geometric(2.0, 50.0, 20, 0.5, inf);
  FmtResult a = fmt_residual(Curve({F("1"), F("z")}), H("x0 + x1", 2), grid);
  ck.expect(a.spread <= 1e-6, "line spread " + g(a.spread));
  Hypersurface quadric = H("3*x0^2 + x0*x1 - 2*x1^2 + x0*x2 + 4*x1*x2 - x2^2", 3);
  FmtResult b = fmt_residual(Curve({F("1"), F("z"), F("z^2")}), quadric, grid);
  ck.expect(b.spread <= 1e-5, "conic spread " + g(b.spread));
  const double t = seconds_since(t0);
  ck.expect(t < 5.0, "runtime " + g(t) + " s");
  ck.note("spread " + g(a.spread) + " and " + g(b.spread) + ", " + g(t) + " s");
  return ck.done();
}

// 3. Characteristic quadrature against the closed form.
Outcome characteristic_quadrature() {
  Checker ck;
  NevanlinnaOptions o;
  o.quad_tol = 1e-11;
  double worst = 0.0;
  std::size_t nodes = 0;
  for (double r : {1.0, 3.0, 10.0}) {
    CircleMean t = characteristic(Curve({F("1"), F("z")}), r, o);
    worst = std::max(worst, std::abs(t.value - 0.5 * std::log1p(r * r)));
    nodes = std::max(nodes, t.nodes);
  }
  ck.expect(worst <= 1e-9, "error " + g(worst));
  ck.expect(nodes <= 4096, "nodes " + std::to_string(nodes));
  ck.note("max error " + g(worst) + " with " + std::to_string(nodes) + " nodes");
  return ck.done();
}

// 4. Greedy Hilbert weight against exhaustive search.
Outcome hilbert_weight_exactness() {
  Checker ck;
  auto t0 = std::chrono::steady_clock::now();
  Variety x = conic();
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 25; ++trial) {
    WeightVector c = random_weights(rng, 3);
    for (int u : {2, 3}) {
      Rational greedy = hilbert_weight(x, u, c).value;
      Rational brute = test::brute_force_weight(x, u, c);
      ck.expect(greedy == brute, "u=" + std::to_string(u) + ": " + greedy.get_str() + " vs " + brute.get_str());
      ++compared;
    }
  }
  const double t = seconds_since(t0);
  ck.expect(t < 10.0, "runtime " + g(t) + " s");
  ck.note(std::to_string(compared) + " exact comparisons, " + g(t) + " s");
  return ck.done();
}

// 5. Chow weights of projective space and the Hilbert weight bound.
Outcome chow_oracle() {
  Checker ck;
  std::mt19937_64 rng(77);
  int sequences = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    Variety pn = Variety::projective_space(n);
    for (int trial = 0; trial < 10; ++trial) {
      WeightVector c = random_weights(rng, n + 1);
      Rational sum = 0;
      for (const auto& w : c) sum += w;
      ChowEstimate e = chow_weight_estimate(pn, c, n == 3 ? 24 : 40);
      for (const auto& [u, s] : e.sequence) ck.expect(s == sum, "P^" + std::to_string(n) + " u=" + std::to_string(u));
      ck.expect(e.exact_extrapolant == sum, "extrapolant differs from sum c");
      ++sequences;
    }
  }
  double worst = std::numeric_limits<double>::infinity();
  int checks = 0;
  for (const Variety& x : {conic(), twisted_cubic()}) {
    HilbertWeightEngine engine(x);
    for (int trial = 0; trial < 5; ++trial) {
      WeightVector c = random_weights(rng, x.num_vars());
      ChowEstimate e = chow_weight_estimate(engine, c, 40);
      for (int u : {4, 10, 20, 40}) {
        EvertseFerrettiCheck chk = check_evertse_ferretti(x, u, c, e);
        ck.expect(!chk.falsified, "Hilbert weight bound margin " + g(chk.margin));
        worst = std::min(worst, chk.margin + chk.tolerance);
        ++checks;
      }
    }
  }
  ck.note(std::to_string(sequences) + " P^n sequences equal sum c; " + std::to_string(checks) +
          " bound checks, min margin+tol " + g(worst));
  return ck.done();
}

// 6. Chow weight lower bound for coordinate hyperplanes.
Outcome chow_lower_bound() {
  Checker ck;
  std::mt19937_64 rng(5);
  int done = 0, skipped = 0;
  double worst = std::numeric_limits<double>::infinity();
  const Variety spaces[] = {Variety::projective_space(2), conic()};
  for (int attempt = 0; done < 10 && attempt < 200; ++attempt) {
    const Variety& y = spaces[attempt % 2];
    std::vector<std::size_t> idx = {0, 1, 2};
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(1 + rng() % 3);
    WeightVector c = random_weights(rng, 3);
    // Hypothesis (1): the last chosen weight is the smallest of the subset.
    auto smallest = std::min_element(idx.begin(), idx.end(), [&](auto a, auto b) { return c[a] < c[b]; });
    std::iter_swap(smallest, idx.end() - 1);
    try {
      ChowLowerBoundCheck chk = check_chow_lower_bound(y, idx, c, 40);
      ck.expect(chk.margin >= -chk.tolerance, "margin " + g(chk.margin) + " < -" + g(chk.tolerance));
      worst = std::min(worst, chk.margin + chk.tolerance);
      ++done;
    } catch (const PreconditionError&) {
      ++skipped;
    }
  }
  ck.expect(done == 10, "only " + std::to_string(done) + " valid instances");
  ck.note(std::to_string(done) + " instances (" + std::to_string(skipped) + " draws violated a hypothesis), min margin+tol " + g(worst));
  return ck.done();
}

// 7. Distributive constant.
Outcome distributive() {
  Checker ck;
  auto t0 = std::chrono::steady_clock::now();
  Variety p2 = Variety::projective_space(2);
  auto fam = [](std::vector<std::string> forms, std::size_t vars) {
    HypersurfaceFamily f;
    for (const auto& s : forms) f.members.emplace_back(P(s, vars));
    return f;
  };
  ck.expect(distributive_constant(p2, fam({"x0", "x1", "x2", "x0 + x1 + x2"}, 3)).value == 1, "general lines");
  ck.expect(distributive_constant(p2, fam({"x0", "x1", "x0 + x1"}, 3)).value == make_rational(3, 2), "concurrent lines");

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-3, 3);
  int families = 0;
  Rational min_margin = 100;
  for (int attempt = 0; families < 20 && attempt < 500; ++attempt) {
    const std::size_t N = 1 + attempt % 3;
    const std::size_t q = N + 1 + rng() % (6 - N);
    HypersurfaceFamily f;
    for (std::size_t j = 0; j < q; ++j) {
      const auto roll = rng() % 10;
      if (j > 0 && roll < 3) {
        f.members.push_back(f.members[rng() % j]);  // repeated member
        continue;
      }
      HomogPoly p(N + 1, 1);
      for (std::size_t i = 0; i <= N; ++i) p.add_term(Monomial::var(N + 1, i), GaussianRational(coef(rng)));
      if (p.is_zero()) p.add_term(Monomial::var(N + 1, 0), GaussianRational(1));
      f.members.emplace_back(p);
    }
    Variety v = Variety::projective_space(N);
    int ell = -1;
    for (int l = static_cast<int>(N); l < static_cast<int>(q); ++l) {
      if (subgeneral_position(v, f, l)) {
        ell = l;
        break;
      }
    }
    if (ell < 0) continue;
    RemarkCheck rc = check_remark_bound(v, f, ell);
    ck.expect(!rc.falsified && rc.margin >= 0, "remark margin " + rc.margin.get_str());
    min_margin = std::min(min_margin, rc.margin);
    ++families;
  }
  ck.expect(families == 20, "only " + std::to_string(families) + " families");
  const double t = seconds_since(t0);
  ck.expect(t < 60.0, "runtime " + g(t) + " s");
  ck.note("1 and 3/2 exact; " + std::to_string(families) + " subgeneral families, min margin " + min_margin.get_str() +
          ", " + g(t) + " s");
  return ck.done();
}

// 8. Zero counting.
Outcome zero_counting() {
  Checker ck;
  Divisor d = zeros_in_disc(F("exp(z) - 1"), 7.0);
  ck.expect(d.points.size() == 3 && d.total() == 3, "found " + std::to_string(d.total()) + " zeros");
  const std::complex<double> expected[] = {{0, 0}, {0, 2 * std::numbers::pi}, {0, -2 * std::numbers::pi}};
  double worst = 0.0;
  for (auto e : expected) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : d.points) {
      ck.expect(p.multiplicity == 1, "multiplicity");
      best = std::min(best, std::abs(p.location - e));
    }
    worst = std::max(worst, best);
  }
  ck.expect(worst <= 1e-6, "location error " + g(worst));

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(-9, 9), deg(1, 8);
  ZeroOptions wind;
  wind.method = ZeroMethod::ArgumentPrinciple;
  int agree = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<GaussianRational> cs;
    const int n = deg(rng);
    for (int k = 0; k <= n; ++k) cs.emplace_back(make_rational(num(rng), 4), make_rational(num(rng), 4));
    if (cs.back().is_zero()) cs.back() = GaussianRational(1);
    AnalyticFunction p{UPoly(cs)};
    Divisor a = zeros_in_disc(p, 2.0);
    Divisor b = zeros_in_disc(p, 2.0, wind);
    bool same = a.total() == b.total();
    for (const auto& pa : a.points) {
      same &= std::any_of(b.points.begin(), b.points.end(), [&](const DivisorPoint& pb) {
        return pb.multiplicity == pa.multiplicity && std::abs(pa.location - pb.location) <= 1e-6;
      });
    }
    ck.expect(same, "paths disagree on trial " + std::to_string(trial));
    agree += same;
  }
  ck.note("3 simple zeros, max location error " + g(worst) + "; " + std::to_string(agree) + "/20 polynomial comparisons agree");
  return ck.done();
}

// 9. Cartan-type inequality on the conic scenario.
Outcome ru_sibony() {
  Checker ck;
  Scenario s = load_scenario(scenario("conic_four_lines.json"));
  auto rows = check_ru_sibony(s.curve, s.hypersurfaces, s.grid);
  const RuSibonyRow& last = rows.back();
  ck.expect(std::abs(last.r - 1000.0) < 1e-3, "last radius " + g(last.r));
  ck.expect(last.ratio >= -0.05, "margin/T " + g(last.ratio));
  ck.note("margin/T = " + g(last.ratio) + " at r = " + g(last.r));
  return ck.done();
}

// 10. Main inequality.
Outcome main_inequality() {
  Checker ck;
  Scenario s = load_scenario(scenario("conic_four_lines.json"));
  ck.expect(s.epsilon == 1, "scenario epsilon");
  SMTReport rep = verify_main_inequality(s);
  ck.expect(rep.falsifications == 0, std::to_string(rep.falsifications) + " falsification events");
  const bool flagged = std::any_of(rep.flags.begin(), rep.flags.end(),
                                   [](const std::string& f) { return f.rfind("truncation-saturated", 0) == 0; });
  ck.expect(flagged && rep.truncation_saturated, "truncation-saturation flag missing");
  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& row : rep.rows) {
    if (row.r >= 100.0) min_margin = std::min(min_margin, row.margin);
  }
  ck.expect(min_margin >= -1e-6, "margin " + g(min_margin) + " at r >= 100");
  ck.note("Delta=" + rep.geometry.delta.get_str() + " L=" + (rep.constants.L ? rep.constants.L->get_str() : "?") +
          ", min margin (r >= 100) " + g(min_margin) + ", saturated at max multiplicity " +
          std::to_string(rep.max_multiplicity));
  return ck.done();
}

// 11. Growth index.
Outcome growth_index() {
  Checker ck;
  GrowthEstimate m = growth_index_model(2.0, 1.0);
  ck.expect(m.value == 0.5, "closed form " + g(m.value));
  RadialGrid grid = RadialGrid::default_for(1.0);
  std::vector<double> T;
  for (double r : grid.values) T.push_back(2.0 * std::log(1.0 / (1.0 - r)));
  GrowthEstimate s = growth_index_sampled(grid.values, T, 1.0);
  ck.expect(std::abs(s.value - 0.5) <= 0.025, "sampled " + g(s.value));
  Scenario plane = parse_scenario(R"({"ambient_N": 1, "curve": {"components": ["1", "z"]},
    "hypersurfaces": [{"degree": 1, "coefficients": {"x0": "1"}}], "epsilon": "1"})");
  GrowthEstimate p = scenario_growth(plane, {}, {});
  ck.expect(p.value == 0.0 && p.mode == "plane", "plane growth " + g(p.value));
  ck.note("closed form 0.5, sampled " + g(s.value) + " [" + g(s.lo) + ", " + g(s.hi) + "], plane 0");
  return ck.done();
}

// 12. Defect relation.
Outcome defect_relation() {
  Checker ck;
  Scenario s = load_scenario(scenario("line_three_points.json"));
  DefectRelationReport rep = defect_relation_report(s);
  ck.expect(rep.sum <= 2.5, "sum " + g(rep.sum));
  ck.expect(std::abs(rep.bound - 2.5) < 1e-12, "bound " + g(rep.bound));
  const double limits[] = {1.0, 0.0, 0.0};
  std::string values;
  for (std::size_t j = 0; j < rep.rows.size() && j < 3; ++j) {
    ck.expect(std::abs(rep.rows[j].value - limits[j]) <= 0.02, "defect " + std::to_string(j) + " = " + g(rep.rows[j].value));
    values += (values.empty() ? "" : ", ") + g(rep.rows[j].value);
  }
  ck.expect(rep.rows.size() == 3, "row count");
  ck.note("defects {" + values + "}, sum " + g(rep.sum) + " <= " + g(rep.bound));
  return ck.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"constants reproduction", constants},
      {"first main theorem residual", first_main_theorem},
      {"characteristic quadrature", characteristic_quadrature},
      {"Hilbert weight exactness", hilbert_weight_exactness},
      {"Chow weight oracle", chow_oracle},
      {"Chow weight lower bound", chow_lower_bound},
      {"distributive constant", distributive},
      {"zero counting", zero_counting},
      {"Cartan-type check", ru_sibony},
      {"main inequality", main_inequality},
      {"growth index", growth_index},
      {"defect relation", defect_relation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("FAILED with exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
