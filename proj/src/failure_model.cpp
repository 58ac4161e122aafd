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

#include "fscontract/failure_model.hpp"

#include <algorithm>
#include <cmath>

namespace fsc {

namespace {

// Upper end for M* when maintenance is free and aging is positive.
constexpr int kMaxPmCount = 1000;

void require_pm_count(int pm_count) {
  if (pm_count < 1) throw ModelError("maintenance count must be at least 1");
}

}  // namespace

double aging_factor(int period, const FailureParams& f, const PeriodGrid& grid) {
  if (period < 1 || period > grid.periods())
    throw ModelError("period " + std::to_string(period) + " outside 1.." +
                     std::to_string(grid.periods()));
  const double m = f.scale;
  if (period <= f.stages.run_in) {
    const double k = f.run_in_shape;
    return -f.aging_scale * (k / m) * std::pow(period / m, k - 1.0);
  }
  if (period <= f.stages.useful_life) return 0.0;
  const double k = f.wear_out_shape;
  return f.aging_scale * (k / m) * std::pow((period - f.stages.useful_life) / m, k - 1.0);
}

RateSeries aging_series(const FailureParams& f, const PeriodGrid& grid) {
  RateSeries out{RateKind::aging, Vector(grid.periods())};
  for (int j = 1; j <= grid.periods(); ++j) out.values[j - 1] = aging_factor(j, f, grid);
  return out;
}

RateSeries internal_rate_series(const FailureParams& f, const PeriodGrid& grid,
                                std::vector<std::string>* warnings) {
  if (f.internal_override) return {RateKind::internal, *f.internal_override};

  RateSeries out{RateKind::internal, Vector(grid.periods())};
  double phi = f.initial_rate;
  for (int j = 1; j <= grid.periods(); ++j) {
    phi += aging_factor(j, f, grid) * grid.hours[j - 1];
    if (phi < 0.0) {
      if (warnings && phi < -1e-12)
        warnings->push_back("internal rate floored at 0 in period " + std::to_string(j));
      phi = 0.0;
    }
    out.values[j - 1] = phi;
  }
  return out;
}

Vector implied_slopes(const RateSeries& internal, double initial_rate, const PeriodGrid& grid) {
  const Eigen::Index z = internal.size();
  Vector previous(z);
  previous << initial_rate, internal.values.head(z - 1);
  return (internal.values - previous).array() / grid.hours.array();
}

double expected_failures(double carried_rate, double slope, double hours, double restoration,
                         int pm_count) {
  require_pm_count(pm_count);
  const double n = carried_rate * hours +
                   hours * hours * slope / 2.0 * ((1.0 - restoration) + restoration / pm_count);
  return std::max(n, 0.0);
}

Vector carried_rates(const Scenario& s, const RateSeries& internal) {
  const auto& f = s.failure;
  const Vector g = implied_slopes(internal, f.initial_rate, s.grid);
  const Eigen::Index z = g.size();
  Vector out(z);
  double aged = 0.0;  // sum over earlier periods of g_k t_k
  for (Eigen::Index j = 0; j < z; ++j) {
    out[j] = f.initial_rate + (1.0 - f.pm_restoration) * aged;
    aged += g[j] * s.grid.hours[j];
  }
  return out;
}

Vector expected_failures(int pm_count, const Scenario& s, const RateSeries& internal) {
  require_pm_count(pm_count);
  const Vector g = implied_slopes(internal, s.failure.initial_rate, s.grid);
  const Vector carried = carried_rates(s, internal);
  Vector out(g.size());
  for (Eigen::Index j = 0; j < g.size(); ++j)
    out[j] = expected_failures(carried[j], g[j], s.grid.hours[j], s.failure.pm_restoration,
                               pm_count);
  return out;
}

double expected_failures_in_period(int period, int pm_count, const Scenario& s,
                                   const RateSeries& internal) {
  if (period < 1 || period > internal.size())
    throw ModelError("period " + std::to_string(period) + " outside the contract");
  return expected_failures(pm_count, s, internal)[period - 1];
}

double maintenance_objective(int pm_count, const Scenario& s, const RateSeries& internal) {
  return s.cost.unit_repair_cost.dot(expected_failures(pm_count, s, internal)) +
         s.cost.maintenance_cost * (pm_count - 1);
}

MaintenancePlan optimal_pm_count(const Scenario& s, const RateSeries& internal) {
  // d/dM of sum_j C_j t_j^2 g_j rho / (2M) + c_M (M - 1) vanishes at
  // M^2 = rho sum_j C_j t_j^2 g_j / (2 c_M).
  const Vector g = implied_slopes(internal, s.failure.initial_rate, s.grid);
  const double weighted =
      (s.cost.unit_repair_cost.array() * s.grid.hours.array().square() * g.array()).sum();
  const double numerator = std::max(0.0, s.failure.pm_restoration * weighted);

  int count = 1;
  if (numerator > 0.0) {
    if (s.cost.maintenance_cost > 0.0) {
      const double root = std::sqrt(numerator / (2.0 * s.cost.maintenance_cost));
      count = static_cast<int>(std::clamp(std::round(root), 1.0, double(kMaxPmCount)));
    } else {
      count = kMaxPmCount;
    }
  }
  return {count, true, maintenance_objective(count, s, internal)};
}

MaintenancePlan brute_force_pm_count(const Scenario& s, const RateSeries& internal,
                                     int max_count) {
  MaintenancePlan best{1, false, maintenance_objective(1, s, internal)};
  for (int m = 2; m <= max_count; ++m) {
    const double v = maintenance_objective(m, s, internal);
    if (v < best.objective) best = {m, false, v};
  }
  return best;
}

}  // namespace fsc
