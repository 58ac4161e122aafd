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

#ifndef FSCONTRACT_COST_MODEL_HPP
#define FSCONTRACT_COST_MODEL_HPP

#include "fscontract/scenario.hpp"
#include "fscontract/types.hpp"

namespace fsc {

/// Full-service cost components over the whole contract.
struct CostBreakdown {
  double repair = 0.0;
  double maintenance = 0.0;
  double delay = 0.0;
  double training = 0.0;

  double total() const { return repair + maintenance + delay + training; }
};

/// Moments of the on-call customer's repair bill.
struct OsCostMoments {
  double repair_mean = 0.0;
  double maintenance = 0.0;
  double variance = 0.0;

  double mean() const { return repair_mean + maintenance; }
};

/// sum_j E[C_rj] E[N_j(M)], before any learning effect.
double expected_repair_cost(int pm_count, const Scenario& s, const RateSeries& internal);

double maintenance_cost(int pm_count, double unit_cost);

/// p_d * sum_j E[N_j(M)] * E[C_d].
double expected_delay_cost(int pm_count, const Scenario& s, const RateSeries& internal);

/// On-call bill at M_0 maintenance actions. Failure counts are treated as
/// Poisson, so Var = sum_j E[N_j] (E[C_rj]^2 + sd^2).
OsCostMoments os_cost_moments(const Scenario& s, const RateSeries& internal);

}  // namespace fsc

#endif  // FSCONTRACT_COST_MODEL_HPP
