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

#include "nevlab/smt_verifier.hpp"

#include <Eigen/Dense>
#include <climits>
#include <cmath>
#include <numbers>
#include <numeric>

#include "nevlab/error.hpp"

namespace nevlab {

namespace {

double to_double(const Rational& x) { return x.get_d(); }

int clamp_level(const mpz_class& level) { return level.fits_sint_p() ? static_cast<int>(level.get_si()) : INT_MAX; }

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Common part of both reports: profile at truncation `k`, saturation check.
struct ProfileRun {
  NevanlinnaProfile profile;
  int max_multiplicity = 0;
  bool saturated = false;
};

ProfileRun run_profile(const Scenario& s, const std::vector<Hypersurface>& used, int k, const VerifyOptions& opts) {
  ProfileRun run;
  run.profile = nevanlinna_profile(s.curve, used, s.grid, k, opts.nevanlinna);
  for (const auto& m : run.profile.members) run.max_multiplicity = std::max(run.max_multiplicity, m.divisor.max_multiplicity());
  run.saturated = run.max_multiplicity < k;
  if (run.saturated) {
    for (const auto& m : run.profile.members) {
      if (m.N_trunc != m.N_full) throw EstimationError("truncated and full counting functions differ below saturation");
    }
  }
  return run;
}

std::string saturation_flag(const ProfileRun& run, const std::string& level) {
  if (run.saturated) {
    return "truncation-saturated: max multiplicity " + std::to_string(run.max_multiplicity) + " < " + level +
           "; N^[" + level + "] = N^[inf] on every row (the truncated statement is checked through its untruncated "
           "shadow)";
  }
  return "truncation-active: max multiplicity " + std::to_string(run.max_multiplicity) + " reaches " + level;
}

}  // namespace

ScenarioGeometry scenario_geometry(const Scenario& s, const VerifyOptions& opts) {
  ScenarioGeometry g;
  g.n = s.variety.dim();
  if (g.n < 1) throw PreconditionError("V must have dimension at least 1");
  g.deg_v = s.variety.degree();
  g.d = 1;
  for (const auto& h : s.hypersurfaces) g.d = std::lcm(g.d, static_cast<long>(h.degree()));
  HypersurfaceFamily family{s.hypersurfaces};
  PositionOptions p = opts.position;
  p.domain_R = s.curve.R;
  g.distributive = distributive_constant(s.variety, family, p);
  g.delta = g.distributive.value;
  if (sgn(g.delta) <= 0) throw DegenerateInput("distributive constant is 0 (no hypersurface meets V)");
  g.inputs.n = g.n;
  g.inputs.deg_v = g.deg_v;
  g.inputs.d = g.d;
  g.inputs.q = static_cast<long>(s.hypersurfaces.size());
  g.inputs.delta = g.delta;
  g.inputs.epsilon = s.epsilon;
  return g;
}

std::vector<NondegeneracyRow> spot_check_nondegeneracy(const Curve& curve, const Variety& v, int max_degree) {
  const std::size_t vars = curve.components.size();
  if (vars != v.num_vars()) throw PreconditionError("curve and variety live in different spaces");
  const double rho = std::isfinite(curve.R) ? 0.5 * curve.R : 1.0;
  std::vector<NondegeneracyRow> out;
  for (int t = 1; t <= max_degree; ++t) {
    auto monos = monomials_of_degree(vars, t);
    const std::size_t cols = monos.size();
    const std::size_t rows = 2 * cols + 4;
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t k = 0; k < rows; ++k) {
      const double frac = static_cast<double>(k) / static_cast<double>(rows);
      const double theta = 2.0 * std::numbers::pi * std::fmod(k * 0.6180339887498949, 1.0);
      const std::complex<double> z = std::polar(rho * (0.3 + 0.7 * frac), theta);
      std::vector<std::complex<double>> f;
      double norm = 0.0;
      for (const auto& c : curve.components) {
        f.push_back(c.eval(z));
        norm += std::norm(f.back());
      }
      norm = std::sqrt(norm);
      if (!(norm > 0.0) || !std::isfinite(norm)) throw DegenerateInput("curve vanishes or overflows at a sample point");
      for (std::size_t j = 0; j < cols; ++j) {
        std::complex<double> val = 1.0;
        for (std::size_t i = 0; i < vars; ++i) {
          for (int e = 0; e < monos[j][i]; ++e) val *= f[i] / norm;
        }
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = val;
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > 1e-8 * sv(0);
    NondegeneracyRow row{t, v.hilbert(t), rank};
    out.push_back(row);
    if (rank > row.hilbert) throw PreconditionError("the curve does not lie in V (degree " + std::to_string(t) + " test)");
    if (rank < row.hilbert) {
      throw DegenerateInput("the curve lies in a degree " + std::to_string(t) + " hypersurface not containing V");
    }
  }
  return out;
}

SMTConstants scenario_constants(const Scenario& s, const ScenarioGeometry& g, const VerifyOptions& opts) {
  return s.moving() ? constants_moving(g.inputs, opts.certify) : constants_fixed(g.inputs, opts.certify);
}

GrowthEstimate scenario_growth(const Scenario& s, const std::vector<double>& radii, const std::vector<double>& T) {
  if (!std::isfinite(s.curve.R)) return growth_index_model(1.0, s.curve.R);
  if (s.growth_lambda) return growth_index_model(*s.growth_lambda, s.curve.R);
  return growth_index_sampled(radii, T, s.curve.R);
}

SMTReport verify_main_inequality(const Scenario& s, const VerifyOptions& opts) {
  SMTReport rep;
  rep.scenario = s.name;
  rep.geometry = scenario_geometry(s, opts);
  const ScenarioGeometry& g = rep.geometry;
  rep.nondegeneracy = spot_check_nondegeneracy(s.curve, s.variety);
  rep.constants = scenario_constants(s, g, opts);
  rep.previous = constants_theoremB(g.inputs, opts.certify);
  rep.log10_improvement = rep.previous.log10_L - rep.constants.log10_L;
  rep.epsilon = s.epsilon;
  rep.epsilon_prime = s.epsilon_prime_or_default();
  rep.plane = !std::isfinite(s.curve.R);

  // From C the counting functions are truncated at L and weighted by
  // 1/deg Q_j; in the disc every Q_j is raised to degree d and truncated at L - 1.
  std::vector<Hypersurface> used;
  std::vector<int> degrees;
  for (const auto& h : s.hypersurfaces) {
    if (rep.plane) {
      used.push_back(h);
      degrees.push_back(h.degree());
    } else {
      used.push_back(h.pow(static_cast<int>(g.d / h.degree())));
      degrees.push_back(static_cast<int>(g.d));
    }
  }
  mpz_class level;
  std::string level_name = rep.plane ? "L" : "L-1";
  if (rep.constants.L) {
    level = rep.plane ? *rep.constants.L : *rep.constants.L - 1;
  } else {
    level = mpz_class(INT_MAX);  // L > 2^(1e6): any int level is below it
  }
  if (s.truncation) {
    level = *s.truncation;
    level_name = std::to_string(*s.truncation);
    rep.flags.push_back("truncation override: counting functions truncated at " + level_name);
  }
  rep.truncation = clamp_level(level);
  ProfileRun run = run_profile(s, used, rep.truncation, opts);
  rep.max_multiplicity = run.max_multiplicity;
  rep.truncation_saturated = run.saturated;
  rep.flags.push_back(saturation_flag(run, level_name));
  const NevanlinnaProfile& prof = run.profile;

  GrowthEstimate growth = scenario_growth(s, prof.radii, prof.T);
  rep.growth_index = growth.value;
  rep.growth_mode = growth.mode;
  const double dn1e = to_double(g.delta * (g.n + 1) + s.epsilon);
  double coef = 0.0;
  rep.log10_correction = -std::numeric_limits<double>::infinity();
  if (!rep.plane) {
    const double log10_l1 = rep.constants.log10_L_minus_1();
    rep.log10_correction = std::log10(dn1e) + std::log10(growth.value + to_double(rep.epsilon_prime)) + log10_l1 -
                           std::log10(2.0 * static_cast<double>(g.d) * rep.constants.u.get_d());
    coef = rep.log10_correction > 300.0 ? std::numeric_limits<double>::infinity() : std::pow(10.0, rep.log10_correction);
  }
  const double lhs_coef = static_cast<double>(s.hypersurfaces.size()) - dn1e;
  if (lhs_coef <= 0.0) rep.flags.push_back("vacuous: q <= Delta_V (n+1) + eps, the left side is not positive");

  for (std::size_t i = 0; i < prof.radii.size(); ++i) {
    SMTRow row;
    row.r = prof.radii[i];
    row.T = prof.T[i];
    row.lhs = lhs_coef * row.T;
    for (std::size_t j = 0; j < used.size(); ++j) row.counting_sum += prof.members[j].N_trunc[i] / degrees[j];
    row.correction = coef == 0.0 ? 0.0 : coef * row.T;
    row.rhs = row.counting_sum + row.correction;
    row.margin = row.rhs - row.lhs;
    if (row.margin < -opts.tolerance * std::max(1.0, std::abs(row.T))) {
      ++rep.falsifications;
      rep.flags.push_back("falsification: margin " + fmt_double(row.margin) + " at r = " + fmt_double(row.r));
    }
    rep.rows.push_back(row);
  }
  for (std::size_t j = 0; j < used.size(); ++j) {
    try {
      DefectEstimate d = defect_from_profile(prof.members[j].N_trunc, prof.T, degrees[j]);
      rep.defects.push_back({j, degrees[j], d.value, d.last_ratios});
    } catch (const PreconditionError&) {
    }
  }
  rep.flags.push_back(
      "assumption: algebraic nondegeneracy is not certified; no Q_j(f) vanishes identically and the degree <= 2 "
      "monomial rank test matches H_V");
  if (s.moving()) rep.flags.push_back("distributive constant taken over sampled coefficient values");
  if (g.distributive.approximate_coefficients) rep.flags.push_back("exponential coefficients were rationalized");
  return rep;
}

DefectRelationReport defect_relation_report(const Scenario& s, const VerifyOptions& opts) {
  if (s.moving()) throw PreconditionError("the defect relation is stated for fixed hypersurfaces");
  DefectRelationReport rep;
  rep.scenario = s.name;
  rep.geometry = scenario_geometry(s, opts);
  const ScenarioGeometry& g = rep.geometry;
  rep.constants = constants_fixed(g.inputs, opts.certify);
  rep.u = defect_relation_u(g.inputs);
  mpz_class level = rep.constants.L ? *rep.constants.L - 1 : mpz_class(INT_MAX);
  std::string level_name = "L-1";
  if (s.truncation) {
    level = *s.truncation;
    level_name = std::to_string(*s.truncation);
    rep.flags.push_back("truncation override: counting functions truncated at " + level_name);
  }
  ProfileRun run = run_profile(s, s.hypersurfaces, clamp_level(level), opts);
  rep.flags.push_back(saturation_flag(run, level_name));
  const NevanlinnaProfile& prof = run.profile;
  GrowthEstimate growth = scenario_growth(s, prof.radii, prof.T);
  rep.growth_index = growth.value;

  for (std::size_t j = 0; j < s.hypersurfaces.size(); ++j) {
    DefectEstimate d = defect_from_profile(prof.members[j].N_trunc, prof.T, s.hypersurfaces[j].degree());
    rep.rows.push_back({j, s.hypersurfaces[j].degree(), d.value, d.last_ratios});
    rep.sum += d.value;
  }
  const double dn1e = to_double(g.delta * (g.n + 1) + s.epsilon);
  rep.bound = dn1e;
  if (growth.value > 0.0) {
    const double log10_term = std::log10(dn1e) + std::log10(growth.value) + rep.constants.log10_L_minus_1() -
                              std::log10(2.0 * static_cast<double>(g.d) * rep.u.get_d());
    rep.bound += log10_term > 300.0 ? std::numeric_limits<double>::infinity() : std::pow(10.0, log10_term);
  }
  rep.margin = rep.bound - rep.sum;
  rep.holds = rep.margin >= -opts.tolerance;
  if (!rep.holds) rep.flags.push_back("falsification: sum of defects exceeds the bound");
  return rep;
}

}  // namespace nevlab
