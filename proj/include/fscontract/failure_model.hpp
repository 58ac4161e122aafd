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

#ifndef FSCONTRACT_FAILURE_MODEL_HPP
#define FSCONTRACT_FAILURE_MODEL_HPP

#include "fscontract/scenario.hpp"
#include "fscontract/types.hpp"

#include <string>
#include <vector>

namespace fsc {

/**
 * Slope of the internal failure rate in period `period` (1-based).
 *
 * Piecewise Weibull hazard: negative and flattening during run-in, zero
 * during useful life, positive during wear-out. The dimensionless hazard is
 * multiplied by FailureParams::aging_scale.
 */
double aging_factor(int period, const FailureParams& f, const PeriodGrid& grid);

RateSeries aging_series(const FailureParams& f, const PeriodGrid& grid);

/// phi_j = phi_{j-1} + g_j t_j from the initial rate, floored at zero. A
/// configured override is returned verbatim. Floor hits are appended to
/// `warnings` when given.
RateSeries internal_rate_series(const FailureParams& f, const PeriodGrid& grid,
                                std::vector<std::string>* warnings = nullptr);

/// Per-period slopes implied by a rate series: (phi_j - phi_{j-1}) / t_j.
Vector implied_slopes(const RateSeries& internal, double initial_rate,
                      const PeriodGrid& grid);

/// Expected failures in one period given the rate carried into it.
double expected_failures(double carried_rate, double slope, double hours,
                         double restoration, int pm_count);

/**
 * Rate carried into each period under preventive maintenance: the initial
 * rate plus the unrestored (1 - rho) share of all earlier aging.
 */
Vector carried_rates(const Scenario& s, const RateSeries& internal);

/// E[N_j(M)] for every period.
Vector expected_failures(int pm_count, const Scenario& s, const RateSeries& internal);

double expected_failures_in_period(int period, int pm_count, const Scenario& s,
                                   const RateSeries& internal);

struct MaintenancePlan {
  int count = 1;
  bool optimal = false;
  double objective = 0.0;  // expected repair + maintenance cost at count
};

/// Expected repair cost (no learning) plus maintenance cost for M actions.
double maintenance_objective(int pm_count, const Scenario& s, const RateSeries& internal);

/// M* = round(sqrt(rho * sum_j c_j t_j^2 g_j / (2 c_M))), at least 1.
MaintenancePlan optimal_pm_count(const Scenario& s, const RateSeries& internal);

/// Exhaustive argmin of maintenance_objective over 1..max_count.
MaintenancePlan brute_force_pm_count(const Scenario& s, const RateSeries& internal,
                                     int max_count);

}  // namespace fsc

#endif  // FSCONTRACT_FAILURE_MODEL_HPP
