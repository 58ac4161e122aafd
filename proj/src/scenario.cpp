// Copyright 2026 The fscontract Authors
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

#include "fscontract/scenario.hpp"

#include "fscontract/failure_model.hpp"
#include "fscontract/learning_model.hpp"
#include "text_util.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace fsc {

namespace {

std::string join_violations(const std::vector<Violation>& vs) {
  std::string out = "invalid scenario";
  for (const auto& v : vs) out += "; " + v.key + ": " + v.rule;
  return out;
}

bool all_nonnegative(const Vector& v) { return (v.array() >= 0.0).all(); }

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : ModelError(join_violations(violations)), violations_(std::move(violations)) {}

bool operator==(const FailureParams& a, const FailureParams& b) {
  if (a.internal_override.has_value() != b.internal_override.has_value()) return false;
  if (a.internal_override && !same_values(*a.internal_override, *b.internal_override))
    return false;
  return a.initial_rate == b.initial_rate && a.stages == b.stages &&
         a.run_in_shape == b.run_in_shape && a.wear_out_shape == b.wear_out_shape &&
         a.scale == b.scale && a.aging_scale == b.aging_scale &&
         a.pm_restoration == b.pm_restoration && a.external_mean == b.external_mean &&
         a.external_sd == b.external_sd;
}

PeriodGrid PeriodGrid::uniform(int periods, double hours, double maintenance_hours) {
  return {Vector::Constant(periods, hours), Vector::Constant(periods, maintenance_hours)};
}

Scenario default_scenario() {
  Scenario s;
  s.grid = PeriodGrid::uniform(20, 1440.0, 4320.0);

  auto& f = s.failure;
  f.initial_rate = 7.5e-3;
  f.stages = {3, 17, 20};
  f.run_in_shape = 0.5;
  f.wear_out_shape = 0.9;
  f.scale = 1.0;
  f.aging_scale = 3.4e-6;  // puts the mean internal rate near 0.0034
  f.pm_restoration = 0.5;
  f.external_mean = f.initial_rate / 10.0;
  f.external_sd = f.external_mean / 3.0;

  auto& c = s.cost;
  c.unit_repair_cost = Vector::Constant(20, 1000.0);
  c.repair_cost_sd = 14800.0;
  c.maintenance_cost = 300.0;
  c.delay_cost = 10000.0;
  c.delay_probability = 0.004;
  c.os_maintenance_count = 10;

  auto& l = s.learning;
  l.autonomous_exponent = 0.1;
  l.induced_exponent = 0.1;
  l.revision_exponent = 0.05;
  l.training_frequency = 0.005;
  l.training_cost_rate = 50.0;
  l.forgetting = ForgettingModel::revised;

  auto& mk = s.market;
  mk.markup = 0.5;
  mk.max_risk_aversion = 1e-3;
  mk.customers = 50;
  mk.price_ceiling = 900000.0;
  mk.money_unit = 1000.0;

  s.rng_seed = 20140101;
  return s;
}

std::vector<Violation> validate_scenario(const Scenario& s) {
  std::vector<Violation> out;
  auto check = [&out](bool ok, const char* key, const char* rule) {
    if (!ok) out.push_back({key, rule});
  };

  const auto& g = s.grid;
  const int z = g.periods();
  check(z >= 1, "grid.z_periods", "must be at least 1");
  check(g.maintenance_hours.size() == z, "grid.t_jM", "needs one value per period");
  check((g.hours.array() > 0.0).all(), "grid.t_j", "every period length must be positive");
  if (g.maintenance_hours.size() == z)
    check((g.maintenance_hours.array() >= g.hours.array()).all(), "grid.t_jM",
          "must be at least t_j in every period");

  const auto& f = s.failure;
  const auto& sb = f.stages;
  check(1 <= sb.run_in && sb.run_in < sb.useful_life && sb.useful_life <= sb.wear_out &&
            sb.wear_out == z,
        "failure.stage_bounds", "need 1 <= z1 < z2 <= z3 = z_periods");
  check(f.run_in_shape > 0.0 && f.run_in_shape < 1.0, "failure.k1", "must lie in (0, 1)");
  check(f.wear_out_shape > 0.0 && f.wear_out_shape < 1.0, "failure.k2", "must lie in (0, 1)");
  check(f.scale > 0.0, "failure.m", "must be positive");
  check(f.aging_scale >= 0.0, "failure.aging_scale", "must be nonnegative");
  check(f.pm_restoration >= 0.0 && f.pm_restoration <= 1.0, "failure.rho",
        "must lie in [0, 1]");
  check(f.initial_rate > 0.0, "failure.phi0_int", "must be positive");
  check(f.external_mean >= 0.0, "failure.ext_mean", "must be nonnegative");
  check(f.external_mean < f.initial_rate, "failure.ext_mean", "must be below phi0_int");
  check(f.external_sd >= 0.0, "failure.ext_sd", "must be nonnegative");
  if (f.internal_override) {
    check(f.internal_override->size() == z, "failure.internal_series",
          "needs one value per period");
    check(all_nonnegative(*f.internal_override), "failure.internal_series",
          "rates must be nonnegative");
  }

  const auto& c = s.cost;
  check(c.unit_repair_cost.size() == z, "cost.unit_repair_cost", "needs one value per period");
  check(all_nonnegative(c.unit_repair_cost), "cost.unit_repair_cost", "must be nonnegative");
  check(c.repair_cost_sd >= 0.0, "cost.repair_cost_sd", "must be nonnegative");
  check(c.maintenance_cost >= 0.0, "cost.avg_maintenance_cost", "must be nonnegative");
  check(c.delay_cost >= 0.0, "cost.unit_delay_cost", "must be nonnegative");
  check(c.delay_probability >= 0.0 && c.delay_probability <= 1.0, "cost.delay_probability",
        "must lie in [0, 1]");
  check(c.os_maintenance_count >= 1, "cost.m0_os", "must be at least 1");

  const auto& l = s.learning;
  check(l.autonomous_exponent >= 0.0 && l.autonomous_exponent < 1.0, "learning.alpha_auto",
        "must lie in [0, 1)");
  check(l.induced_exponent >= 0.0 && l.induced_exponent < 1.0, "learning.alpha_indu",
        "must lie in [0, 1)");
  check(l.revision_exponent > 0.0 && l.revision_exponent < 0.5, "learning.epsilon",
        "must lie in (0, 0.5)");
  check(l.training_frequency > 0.0 && l.training_frequency < 1.0, "learning.lf",
        "must lie in (0, 1)");
  check(l.training_cost_rate >= 0.0, "learning.unit_training_cost", "must be nonnegative");
  check(l.repair_duration > 0.0, "learning.repair_duration", "must be positive");
  check(l.maintenance_duration >= 0.0, "learning.maintenance_duration", "must be nonnegative");
  check(l.dominance_ratio >= 0.0, "learning.dominance_ratio", "must be nonnegative");

  const auto& mk = s.market;
  check(mk.markup >= 0.0, "market.beta", "must be nonnegative");
  check(mk.max_risk_aversion > 0.0, "market.alpha_max", "must be positive");
  check(mk.customers >= 1, "market.d_customers", "must be at least 1");
  check(mk.ceiling() > 0.0, mk.ownership ? "market.tco" : "market.price_ceiling",
        "price ceiling must be positive");
  check(mk.money_unit > 0.0, "market.money_unit", "must be positive");

  if (!out.empty()) return out;

  // Standing assumptions of the training-frequency analysis, at M*.
  const RateSeries internal = internal_rate_series(f, g);
  const RateSeries external = simulate_external_rates(s);
  const int m = optimal_pm_count(s, internal).count;
  const ReducedTerms t = reduced_terms(m, s, internal, external);
  const Vector alloc = maintenance_allocation(m, s);
  const Vector period_surplus =
      g.hours.array() -
      l.repair_duration * (internal.values + external.values).array() * g.hours.array() -
      alloc.array();
  check((period_surplus.array() > 0.0).all(), "grid.t_j",
        "failures and maintenance leave no surplus time in some period");
  check(t.surplus() > 0.0, "grid.t_j", "R - S - Q - U must be positive");
  check(t.surplus() >= l.dominance_ratio * t.external, "failure.ext_mean",
        "R - S - Q - U must dominate the external repair time S");
  return out;
}

void require_valid(const Scenario& s) {
  auto v = validate_scenario(s);
  if (!v.empty()) throw ValidationError(std::move(v));
}

Vector draw_truncated_normal(double mean, double sd, Eigen::Index count, std::uint64_t seed) {
  if (sd <= 0.0) return Vector::Constant(count, std::max(mean, 0.0));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(mean, sd);
  Vector out(count);
  for (Eigen::Index i = 0; i < count; ++i) {
    double x;
    do {
      x = normal(rng);
    } while (x < 0.0);
    out[i] = x;
  }
  return out;
}

RateSeries simulate_external_rates(const Scenario& s) {
  return {RateKind::external, draw_truncated_normal(s.failure.external_mean, s.failure.external_sd,
                                                    s.grid.periods(), s.rng_seed)};
}

Eigen::MatrixXd load_rate_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read rate table " + path.string());

  std::vector<std::vector<double>> rows;
  std::string line;
  bool header = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto v = detail::parse_number<double>(cell);
      if (!v)
        throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": bad number '" +
                          cell + "'");
      row.push_back(*v);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": ragged row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError(path.string() + ": no data rows");

  Eigen::MatrixXd table(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) table(i, j) = rows[i][j];
  return table;
}

Vector shift_to_mean(const Vector& series, double target) {
  return series.array() + (target - series.mean());
}

Scenario with_internal_series(const Scenario& s, Vector series) {
  Scenario out = s;
  out.failure.internal_override = std::move(series);
  return out;
}

}  // namespace fsc
