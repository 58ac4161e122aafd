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

#include "fscontract/cost_model.hpp"

#include "fscontract/failure_model.hpp"

namespace fsc {

double expected_repair_cost(int pm_count, const Scenario& s, const RateSeries& internal) {
  return s.cost.unit_repair_cost.dot(expected_failures(pm_count, s, internal));
}

double maintenance_cost(int pm_count, double unit_cost) {
  if (pm_count < 1) throw ModelError("maintenance count must be at least 1");
  return unit_cost * (pm_count - 1);
}

double expected_delay_cost(int pm_count, const Scenario& s, const RateSeries& internal) {
  return s.cost.delay_probability * expected_failures(pm_count, s, internal).sum() *
         s.cost.delay_cost;
}

OsCostMoments os_cost_moments(const Scenario& s, const RateSeries& internal) {
  const int m0 = s.cost.os_maintenance_count;
  const Vector n = expected_failures(m0, s, internal);
  const auto& c = s.cost.unit_repair_cost;
  const double sd = s.cost.repair_cost_sd;

  OsCostMoments out;
  out.repair_mean = c.dot(n);
  out.maintenance = maintenance_cost(m0, s.cost.maintenance_cost);
  // Compound Poisson: Var = sum_j lambda_j E[C^2].
  out.variance = (n.array() * (c.array().square() + sd * sd)).sum();
  return out;
}

}  // namespace fsc
