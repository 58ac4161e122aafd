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

#ifndef FSCONTRACT_SCENARIO_HPP
#define FSCONTRACT_SCENARIO_HPP

#include "fscontract/types.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fsc {

/// Contract horizon split into Z periods. Operating hours drive failures and
/// training; calendar hours describe the maintenance interval.
struct PeriodGrid {
  Vector hours;              // operating hours per period
  Vector maintenance_hours;  // calendar hours per period

  static PeriodGrid uniform(int periods, double hours, double maintenance_hours);

  int periods() const { return static_cast<int>(hours.size()); }
  double contract_length() const { return hours.sum(); }

  friend bool operator==(const PeriodGrid& a, const PeriodGrid& b) {
    return same_values(a.hours, b.hours) &&
           same_values(a.maintenance_hours, b.maintenance_hours);
  }
};

/// Last period index (1-based) of each bathtub stage.
struct StageBounds {
  int run_in = 1;
  int useful_life = 2;
  int wear_out = 2;

  friend bool operator==(const StageBounds&, const StageBounds&) = default;
};

struct FailureParams {
  double initial_rate = 0.0;  // internal failures/hour entering period 1
  StageBounds stages;
  double run_in_shape = 0.5;   // Weibull shape, stage 1
  double wear_out_shape = 0.5; // Weibull shape, stage 3
  double scale = 1.0;          // Weibull scale, in periods
  /// Converts the dimensionless hazard shape into a slope in failures/hour^2.
  double aging_scale = 1.0;
  double pm_restoration = 0.5;  // 0 = bad as old, 1 = good as new
  double external_mean = 0.0;
  double external_sd = 0.0;
  std::optional<Vector> internal_override;

  friend bool operator==(const FailureParams& a, const FailureParams& b);
};

struct CostParams {
  Vector unit_repair_cost;  // expected cost per repair, per period
  double repair_cost_sd = 0.0;
  double maintenance_cost = 0.0;  // per preventive maintenance action
  double delay_cost = 0.0;        // per delayed repair
  double delay_probability = 0.0;
  int os_maintenance_count = 1;   // M_0

  friend bool operator==(const CostParams& a, const CostParams& b) {
    return same_values(a.unit_repair_cost, b.unit_repair_cost) &&
           a.repair_cost_sd == b.repair_cost_sd &&
           a.maintenance_cost == b.maintenance_cost &&
           a.delay_cost == b.delay_cost &&
           a.delay_probability == b.delay_probability &&
           a.os_maintenance_count == b.os_maintenance_count;
  }
};

struct LearningParams {
  double autonomous_exponent = 0.0;
  double induced_exponent = 0.0;
  double revision_exponent = 0.05;  // imperfect on-site revision
  double training_frequency = 0.005;
  double training_cost_rate = 0.0;  // money per training hour
  ForgettingModel forgetting = ForgettingModel::revised;
  double repair_duration = 1.0;       // hours per expected failure
  double maintenance_duration = 8.0;  // hours per maintenance action
  /// Required ratio (R-S-Q-U)/S for the training-frequency analysis.
  double dominance_ratio = 10.0;

  friend bool operator==(const LearningParams&, const LearningParams&) = default;
};

struct OwnershipCosts {
  double tco = 0.0;
  double lease = 0.0;
  double operations = 0.0;

  friend bool operator==(const OwnershipCosts&, const OwnershipCosts&) = default;
};

struct MarketParams {
  double markup = 0.5;
  /// Upper end of the uniform risk-aversion distribution, per money_unit.
  double max_risk_aversion = 1e-3;
  int customers = 1;
  double price_ceiling = 0.0;
  std::optional<OwnershipCosts> ownership;  // overrides price_ceiling when set
  /// Money per reporting unit; risk aversion and reports are quoted in it.
  double money_unit = 1.0;

  double ceiling() const {
    return ownership ? ownership->tco - ownership->lease - ownership->operations
                     : price_ceiling;
  }
  /// Risk-aversion bound expressed per unit of raw money.
  double risk_aversion_bound() const { return max_risk_aversion / money_unit; }

  friend bool operator==(const MarketParams&, const MarketParams&) = default;
};

struct Scenario {
  PeriodGrid grid;
  FailureParams failure;
  CostParams cost;
  LearningParams learning;
  MarketParams market;
  std::uint64_t rng_seed = 0;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Baseline medical-device contract: 20 half-year periods, calibrated repair
/// cost and dispersion.
Scenario default_scenario();

/// Empty iff every parameter invariant holds and the surplus-time terms
/// dominate external interruptions.
std::vector<Violation> validate_scenario(const Scenario& s);

/// Throws ValidationError when validate_scenario reports anything.
void require_valid(const Scenario& s);

/// Z draws from Normal(mean, sd) truncated below at zero.
RateSeries simulate_external_rates(const Scenario& s);

/// Underlying sampler, exposed for pooled statistics.
Vector draw_truncated_normal(double mean, double sd, Eigen::Index count,
                             std::uint64_t seed);

// Config text: one `dotted.key = value` per line, `#` comments.
Scenario parse_scenario(std::string_view text,
                        const std::filesystem::path& base_dir = {});
Scenario load_scenario(const std::filesystem::path& path);
std::string format_scenario(const Scenario& s);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

/// Internal-rate table: CSV with a header row, one column per series.
Eigen::MatrixXd load_rate_table(const std::filesystem::path& path);

/// Additive shift of a rate series so its mean equals target.
Vector shift_to_mean(const Vector& series, double target);

/// Copy of s driven by an explicit internal-rate series.
Scenario with_internal_series(const Scenario& s, Vector series);

}  // namespace fsc

#endif  // FSCONTRACT_SCENARIO_HPP
