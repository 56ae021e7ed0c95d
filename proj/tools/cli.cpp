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

#include "cli.hpp"

#include <fmt/format.h>

#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nevlab/error.hpp"
#include "nevlab/smt_verifier.hpp"
#include "nevlab/weights.hpp"

namespace nevlab::cli {

namespace {

using nlohmann::json;

struct Settings {
  std::string command;
  std::string scenario;
  std::string output;
  std::string format = "json";
  double quad_tol = 1e-8;
  int max_u = 40;
  int samples = 3;
  long long seed = -1;
  bool strict_jensen = false;
};

struct Result {
  json doc;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  bool falsified = false;
};

std::string num(double x) { return fmt::format("{:.12g}", x); }
std::string rat(const Rational& x) { return x.get_str(); }

json opt_z(const std::optional<mpz_class>& z) { return z ? json(z->get_str()) : json(nullptr); }

json constants_json(const SMTConstants& c) {
  json j;
  j["variant"] = to_string(c.variant);
  j["u"] = c.u.get_str();
  j["L"] = opt_z(c.L);
  j["log10_L"] = c.log10_L;
  j["log10_L_certified"] = c.log10_L_text;
  j["log10_L_bracket"] = {c.log10_L_lo, c.log10_L_hi};
  j["precision_bits"] = c.precision_bits;
  if (c.variant == ConstantsVariant::MovingA) {
    j["base"] = rat(c.base);
    j["exponent"] = opt_z(c.exponent);
    j["L_grouping"] = opt_z(c.L_grouping);
  }
  return j;
}

json inputs_json(const ConstantsInputs& in) {
  return {{"n", in.n}, {"deg_V", in.deg_v}, {"d", in.d}, {"q", in.q}, {"delta", rat(in.delta)},
          {"epsilon", rat(in.epsilon)}};
}

std::vector<std::size_t> members_of(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < 32; ++j) {
    if (mask & (std::uint32_t{1} << j)) out.push_back(j);
  }
  return out;
}

std::string members_text(std::uint32_t mask) {
  std::string s;
  for (auto j : members_of(mask)) s += (s.empty() ? "" : " ") + std::to_string(j);
  return s;
}

VerifyOptions verify_options(const Settings& st, const Scenario& s) {
  VerifyOptions o;
  o.nevanlinna.quad_tol = st.quad_tol;
  o.nevanlinna.strict_jensen = st.strict_jensen;
  o.position.samples = st.samples;
  o.position.seed = s.seed;
  return o;
}

Result cmd_constants(const Scenario& s, const VerifyOptions& o) {
  Result r;
  ScenarioGeometry g = scenario_geometry(s, o);
  json consts;
  consts["fixed"] = constants_json(constants_fixed(g.inputs, o.certify));
  consts["previous"] = constants_json(constants_theoremB(g.inputs, o.certify));
  r.doc["flags"] = json::array();
  if (g.inputs.epsilon < g.inputs.delta * (g.inputs.n + 1)) {
    consts["moving"] = constants_json(constants_moving(g.inputs, o.certify));
  } else {
    consts["moving"] = nullptr;
    r.doc["flags"].push_back("moving constants need epsilon < (n+1) Delta_V");
  }
  r.doc["inputs"] = inputs_json(g.inputs);
  r.doc["constants"] = consts;
  r.doc["defect_relation_u"] = defect_relation_u(g.inputs).get_str();
  r.doc["rows"] = json::array();
  r.csv_header = {"variant", "u", "L", "log10_L"};
  for (const char* key : {"fixed", "moving", "previous"}) {
    const json& c = consts[key];
    if (c.is_null()) continue;
    r.csv_rows.push_back({c["variant"], c["u"], c["L"].is_null() ? "" : c["L"].get<std::string>(),
                          c["log10_L_certified"]});
  }
  return r;
}

Result cmd_distributive(const Scenario& s, const VerifyOptions& o) {
  Result r;
  PositionOptions p = o.position;
  p.domain_R = s.curve.R;
  DistributiveReport d = distributive_constant(s.variety, HypersurfaceFamily{s.hypersurfaces}, p);
  r.doc["value"] = rat(d.value);
  r.doc["witness"] = members_of(d.witness);
  r.doc["samples_agree"] = d.samples_agree;
  r.doc["degenerate"] = d.degenerate;
  r.doc["monotone"] = d.monotone;
  json per = json::array();
  for (const auto& v : d.per_sample) per.push_back(rat(v));
  r.doc["per_sample"] = per;
  r.doc["rows"] = json::array();
  r.csv_header = {"subset", "size", "dim", "ratio", "pruned"};
  for (const auto& row : d.table) {
    r.doc["rows"].push_back({{"subset", members_of(row.mask)}, {"size", row.size}, {"dim", row.dim},
                             {"ratio", rat(row.ratio)}, {"pruned", row.pruned}});
    r.csv_rows.push_back({members_text(row.mask), std::to_string(row.size), std::to_string(row.dim), rat(row.ratio),
                          row.pruned ? "1" : "0"});
  }
  json flags = json::array();
  if (!d.samples_agree) flags.push_back("samples disagree; maximum over samples reported");
  if (d.approximate_coefficients) flags.push_back("exponential coefficients were rationalized");
  if (!d.monotone) flags.push_back("dimension grew when a form was added");
  r.doc["flags"] = flags;
  return r;
}

Result cmd_weights(const Scenario& s, const Settings& st) {
  if (s.weights.empty()) throw PreconditionError("scenario has no \"weights\" section");
  Result r;
  const int u = s.weights_u > 0 ? s.weights_u : st.max_u;
  HilbertWeightEngine engine(s.variety);
  HilbertWeightResult hw = engine(u, s.weights);
  ChowEstimate e = chow_weight_estimate(engine, s.weights, st.max_u);
  json c = json::array();
  for (const auto& w : s.weights) c.push_back(rat(w));
  r.doc["c"] = c;
  r.doc["u"] = u;
  r.doc["hilbert"] = s.variety.hilbert(u);
  r.doc["hilbert_weight"] = rat(hw.value);
  r.doc["chow_weight"] = {{"value", e.value}, {"exact_extrapolant", rat(e.exact_extrapolant)},
                          {"error_bound", e.error_bound}};
  r.doc["flags"] = json::array();
  if (u > s.variety.degree()) {
    EvertseFerrettiCheck ef = check_evertse_ferretti(s.variety, u, s.weights, e);
    r.doc["hilbert_weight_bound"] = {{"lhs", ef.lhs}, {"rhs", ef.rhs}, {"margin", ef.margin},
                                     {"tolerance", ef.tolerance}, {"falsified", ef.falsified}};
    if (ef.falsified) {
      r.falsified = true;
      r.doc["flags"].push_back("falsification: Hilbert weight lower bound violated");
    }
  }
  r.doc["rows"] = json::array();
  r.csv_header = {"u", "s_u"};
  for (const auto& [uu, su] : e.sequence) {
    r.doc["rows"].push_back({{"u", uu}, {"s_u", rat(su)}});
    r.csv_rows.push_back({std::to_string(uu), rat(su)});
  }
  return r;
}

Result cmd_nevanlinna(const Scenario& s, const VerifyOptions& o) {
  Result r;
  const int k = s.truncation ? static_cast<int>(std::min<long>(*s.truncation, INT32_MAX)) : kNoTruncation;
  NevanlinnaProfile p = nevanlinna_profile(s.curve, s.hypersurfaces, s.grid, k, o.nevanlinna);
  r.csv_header = {"r", "T"};
  for (std::size_t j = 0; j < p.members.size(); ++j) {
    for (const char* col : {"m", "N_full", "N_trunc", "residual"}) r.csv_header.push_back(fmt::format("{}_{}", col, j));
  }
  r.doc["truncation"] = k == kNoTruncation ? json(nullptr) : json(k);
  r.doc["rows"] = json::array();
  for (std::size_t i = 0; i < p.radii.size(); ++i) {
    json row = {{"r", p.radii[i]}, {"T", p.T[i]}};
    std::vector<std::string> csv = {num(p.radii[i]), num(p.T[i])};
    json per = json::array();
    for (const auto& m : p.members) {
      per.push_back({{"m", m.m[i]}, {"N_full", m.N_full[i]}, {"N_trunc", m.N_trunc[i]}, {"residual", m.residual[i]}});
      for (double v : {m.m[i], m.N_full[i], m.N_trunc[i], m.residual[i]}) csv.push_back(num(v));
    }
    row["hypersurfaces"] = per;
    r.doc["rows"].push_back(row);
    r.csv_rows.push_back(csv);
  }
  json flags = json::array();
  for (std::size_t i = 0; i < p.radii.size(); ++i) {
    if (p.radii[i] != s.grid.values[i]) flags.push_back(fmt::format("radius {} moved to {} away from zeros", num(s.grid.values[i]), num(p.radii[i])));
  }
  if (o.nevanlinna.strict_jensen) flags.push_back("strict Jensen counting: origin zeros add n(0) log(r/r0)");
  r.doc["flags"] = flags;
  return r;
}

Result cmd_fmt_check(const Scenario& s, const VerifyOptions& o) {
  Result r;
  constexpr double kSpreadLimit = 1e-5;
  r.doc["flags"] = json::array();
  r.doc["rows"] = json::array();
  r.csv_header = {"index", "status", "spread"};
  for (std::size_t j = 0; j < s.hypersurfaces.size(); ++j) {
    json row = {{"index", j}};
    std::string status;
    double spread = std::nan("");
    if (s.hypersurfaces[j].is_moving()) {
      status = "skipped: moving hypersurface";
    } else {
      try {
        FmtResult f = fmt_residual(s.curve, s.hypersurfaces[j], s.grid, o.nevanlinna);
        spread = f.spread;
        status = spread <= kSpreadLimit ? "ok" : "falsified";
        row["residuals"] = f.residuals;
        row["radii"] = f.radii;
        if (spread > kSpreadLimit) {
          r.falsified = true;
          r.doc["flags"].push_back(fmt::format("falsification: residual spread {} for hypersurface {}", num(spread), j));
        }
      } catch (const PreconditionError& e) {
        status = std::string("skipped: ") + e.what();
      }
    }
    row["status"] = status;
    row["spread"] = std::isnan(spread) ? json(nullptr) : json(spread);
    r.doc["rows"].push_back(row);
    r.csv_rows.push_back({std::to_string(j), status, std::isnan(spread) ? "" : num(spread)});
  }
  return r;
}

Result cmd_verify(const Scenario& s, const VerifyOptions& o) {
  Result r;
  SMTReport rep = verify_main_inequality(s, o);
  r.doc["inputs"] = inputs_json(rep.geometry.inputs);
  r.doc["constants"] = constants_json(rep.constants);
  r.doc["previous_constants"] = constants_json(rep.previous);
  r.doc["log10_improvement"] = rep.log10_improvement;
  r.doc["epsilon_prime"] = rat(rep.epsilon_prime);
  r.doc["plane"] = rep.plane;
  r.doc["growth_index"] = {{"value", rep.growth_index}, {"mode", rep.growth_mode}};
  r.doc["log10_correction"] = std::isfinite(rep.log10_correction) ? json(rep.log10_correction) : json(nullptr);
  r.doc["truncation"] = rep.truncation;
  r.doc["truncation_saturated"] = rep.truncation_saturated;
  r.doc["max_multiplicity"] = rep.max_multiplicity;
  json nd = json::array();
  for (const auto& row : rep.nondegeneracy) nd.push_back({{"degree", row.degree}, {"hilbert", row.hilbert}, {"rank", row.rank}});
  r.doc["nondegeneracy"] = nd;
  r.doc["rows"] = json::array();
  r.csv_header = {"r", "LHS", "RHS", "margin"};
  for (const auto& row : rep.rows) {
    r.doc["rows"].push_back({{"r", row.r}, {"T", row.T}, {"LHS", row.lhs}, {"counting", row.counting_sum},
                             {"correction", row.correction}, {"RHS", row.rhs}, {"margin", row.margin}});
    r.csv_rows.push_back({num(row.r), num(row.lhs), num(row.rhs), num(row.margin)});
  }
  json defects = json::array();
  for (const auto& d : rep.defects) defects.push_back({{"index", d.index}, {"degree", d.degree}, {"defect", d.value}, {"last_ratios", d.last_ratios}});
  r.doc["defects"] = defects;
  r.doc["falsifications"] = rep.falsifications;
  r.doc["flags"] = rep.flags;
  r.falsified = rep.falsifications > 0;
  return r;
}

Result cmd_defects(const Scenario& s, const VerifyOptions& o) {
  Result r;
  DefectRelationReport rep = defect_relation_report(s, o);
  r.doc["inputs"] = inputs_json(rep.geometry.inputs);
  r.doc["constants"] = constants_json(rep.constants);
  r.doc["u"] = rep.u.get_str();
  r.doc["growth_index"] = rep.growth_index;
  r.doc["sum"] = rep.sum;
  r.doc["bound"] = rep.bound;
  r.doc["margin"] = rep.margin;
  r.doc["holds"] = rep.holds;
  r.doc["rows"] = json::array();
  r.csv_header = {"index", "degree", "defect", "ratio_last_3"};
  for (const auto& d : rep.rows) {
    r.doc["rows"].push_back({{"index", d.index}, {"degree", d.degree}, {"defect", d.value}, {"last_ratios", d.last_ratios}});
    std::string last;
    for (double v : d.last_ratios) last += (last.empty() ? "" : " ") + num(v);
    r.csv_rows.push_back({std::to_string(d.index), std::to_string(d.degree), num(d.value), last});
  }
  r.doc["flags"] = rep.flags;
  r.falsified = !rep.holds;
  return r;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void emit(const Result& r, const Settings& st, std::ostream& out) {
  std::ostringstream text;
  if (st.format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) text << (i ? "," : "") << csv_cell(cells[i]);
      text << "\n";
    };
    line(r.csv_header);
    for (const auto& row : r.csv_rows) line(row);
  } else {
    text << r.doc.dump(2) << "\n";
  }
  if (st.output.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(st.output);
  if (!file) throw PreconditionError("cannot write " + st.output);
  file << text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings st;
  CLI::App app{"Value distribution verifier for holomorphic curves and hypersurfaces", "nevlab"};
  app.require_subcommand(1);
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"constants", "truncation constants u, L for the scenario's inputs"},
      {"distributive", "distributive constant with the subset table"},
      {"weights", "Hilbert and Chow weights for the scenario's weight vector"},
      {"nevanlinna", "T, m, N and first main theorem residuals on the grid"},
      {"fmt-check", "first main theorem residual spread per hypersurface"},
      {"verify", "both sides of the second main theorem on the grid"},
      {"defects", "truncated defects against the defect relation bound"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--scenario", st.scenario, "scenario JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--output", st.output, "write the report here instead of stdout");
    sub->add_option("--format", st.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--quad-tol", st.quad_tol, "circle quadrature tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-u", st.max_u, "largest degree for Chow weight extrapolation")->check(CLI::Range(2, 200));
    sub->add_option("--samples", st.samples, "sample points for moving coefficients")->check(CLI::Range(1, 1000));
    sub->add_option("--seed", st.seed, "overrides the scenario seed")->check(CLI::NonNegativeNumber);
    sub->add_flag("--strict-jensen", st.strict_jensen, "count origin zeros as n(0) log(r/r0)");
    sub->callback([&st, sub] { st.command = sub->get_name(); });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    Scenario s = load_scenario(st.scenario);
    if (st.seed >= 0) s.seed = static_cast<std::uint64_t>(st.seed);
    VerifyOptions o = verify_options(st, s);
    Result r;
    if (st.command == "constants") r = cmd_constants(s, o);
    else if (st.command == "distributive") r = cmd_distributive(s, o);
    else if (st.command == "weights") r = cmd_weights(s, st);
    else if (st.command == "nevanlinna") r = cmd_nevanlinna(s, o);
    else if (st.command == "fmt-check") r = cmd_fmt_check(s, o);
    else if (st.command == "verify") r = cmd_verify(s, o);
    else if (st.command == "defects") r = cmd_defects(s, o);
    r.doc["command"] = st.command;
    r.doc["scenario"] = s.name;
    emit(r, st, out);
    return r.falsified ? kExitFalsified : kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace nevlab::cli
