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

#include "fscontract/learning_model.hpp"

#include "fscontract/cost_model.hpp"

#include <cmath>

namespace fsc {

namespace {

void require_fraction(double lf) {
  if (!(lf > 0.0 && lf < 1.0)) throw ModelError("training frequency must lie in (0, 1)");
}

// x^(-a), with x^0 = 1 even for x <= 0.
double power_decay(double x, double a, const char* what) {
  if (a == 0.0) return 1.0;
  if (!(x > 0.0)) throw InfeasibleError(std::string(what) + " time is not positive");
  return std::pow(x, -a);
}

// Hours left per period after repairs and maintenance.
Vector period_surplus(int pm_count, const Scenario& s, const RateSeries& internal,
                      const RateSeries& external) {
  const double r = s.learning.repair_duration;
  const auto& t = s.grid.hours.array();
  return t - r * external.values.array() * t - r * internal.values.array() * t -
         maintenance_allocation(pm_count, s).array();
}

}  // namespace

Vector maintenance_allocation(int pm_count, const Scenario& s) {
  const int z = s.grid.periods();
  return Vector::Constant(z, double(pm_count) / z * s.learning.maintenance_duration);
}

ReducedTerms reduced_terms(int pm_count, const Scenario& s, const RateSeries& internal,
                           const RateSeries& external) {
  const double r = s.learning.repair_duration;
  const double eps = s.learning.revision_exponent;
  const auto& t = s.grid.hours.array();
  const auto& phi = internal.values.array();
  const auto& ext = external.values.array();

  ReducedTerms out;
  out.repair = r * (phi * t).sum();
  out.contract = t.sum();
  out.external = r * (ext * t).sum();
  out.maintenance = maintenance_allocation(pm_count, s).sum();
  out.revision = 2.0 * ((phi / 2.0).pow(1.0 - eps) * (t - r * ext * t).pow(1.0 - 2.0 * eps)).sum();
  return out;
}

double total_repair_time(const RateSeries& internal, const PeriodGrid& grid,
                         double repair_duration) {
  return repair_duration * internal.values.dot(grid.hours);
}

double training_time(double lf, int pm_count, const Scenario& s, const RateSeries& internal,
                     const RateSeries& external) {
  require_fraction(lf);
  const Vector surplus = period_surplus(pm_count, s, internal, external);
  if ((surplus.array() <= 0.0).any())
    throw InfeasibleError("no surplus time left for training in some period");
  return surplus.sum() * lf;
}

double forgetting_time(double lf, int pm_count, const Scenario& s, const RateSeries& internal,
                       const RateSeries& external) {
  require_fraction(lf);
  const double r = s.learning.repair_duration;
  const auto& t = s.grid.hours.array();
  const auto& phi = internal.values.array();
  const auto& ext = external.values.array();

  if (s.learning.forgetting == ForgettingModel::simple)
    return (r * ext * t + r * phi * t + maintenance_allocation(pm_count, s).array()).sum();

  // Imperfect on-site revision; maintenance interruptions are not counted.
  const double eps = s.learning.revision_exponent;
  return (r * ext * t +
          2.0 * (phi / 2.0).pow(1.0 - eps) * ((t - r * ext * t) * lf).pow(1.0 - 2.0 * eps))
      .sum();
}

double learning_effect(double repair_time, double effective_training, const LearningParams& lp) {
  if (!(effective_training > 0.0))
    throw InfeasibleError("forgetting exhausts the training time");
  return power_decay(repair_time, lp.autonomous_exponent, "repair") *
         power_decay(effective_training, lp.induced_exponent, "effective training");
}

double training_cost(double lf, int pm_count, const Scenario& s, const RateSeries& internal,
                     const RateSeries& external) {
  return s.learning.training_cost_rate * training_time(lf, pm_count, s, internal, external);
}

LearningState learning_state(double lf, int pm_count, const Scenario& s,
                             const RateSeries& internal, const RateSeries& external) {
  LearningState st;
  st.repair_time = total_repair_time(internal, s.grid, s.learning.repair_duration);
  st.training_time = training_time(lf, pm_count, s, internal, external);
  st.forgetting_time = forgetting_time(lf, pm_count, s, internal, external);
  st.effective_training = st.training_time - st.forgetting_time;
  st.factor = learning_effect(st.repair_time, st.effective_training, s.learning);
  st.training_cost = s.learning.training_cost_rate * st.training_time;
  return st;
}

CostBreakdown total_fs_cost(double lf, int pm_count, const Scenario& s,
                            const RateSeries& internal, const RateSeries& external) {
  const LearningState st = learning_state(lf, pm_count, s, internal, external);
  CostBreakdown out;
  out.repair = expected_repair_cost(pm_count, s, internal) * st.factor;
  out.maintenance = maintenance_cost(pm_count, s.cost.maintenance_cost);
  out.delay = expected_delay_cost(pm_count, s, internal);
  out.training = st.training_cost;
  return out;
}

TrainingCostCurve::TrainingCostCurve(Inputs in) : in_(in) {
  if (in_.terms.surplus() <= 0.0)
    throw InfeasibleError("R - S - Q - U is not positive; no time to train");
}

TrainingCostCurve::TrainingCostCurve(int pm_count, const Scenario& s, const RateSeries& internal,
                                     const RateSeries& external)
    : TrainingCostCurve(Inputs{expected_repair_cost(pm_count, s, internal),
                               maintenance_cost(pm_count, s.cost.maintenance_cost),
                               expected_delay_cost(pm_count, s, internal),
                               reduced_terms(pm_count, s, internal, external),
                               s.learning.autonomous_exponent,
                               s.learning.induced_exponent,
                               s.learning.revision_exponent,
                               s.learning.training_cost_rate,
                               s.learning.forgetting}) {}

double TrainingCostCurve::effective_training(double lf) const {
  const auto& t = in_.terms;
  if (in_.forgetting == ForgettingModel::simple)
    return t.surplus() * lf - (t.external + t.repair + t.maintenance);
  return t.surplus() * lf - t.external -
         t.revision * std::pow(lf, 1.0 - 2.0 * in_.revision_exponent);
}

double TrainingCostCurve::effective_training_slope(double lf) const {
  const auto& t = in_.terms;
  if (in_.forgetting == ForgettingModel::simple) return t.surplus();
  const double e = in_.revision_exponent;
  return t.surplus() - (1.0 - 2.0 * e) * t.revision * std::pow(lf, -2.0 * e);
}

double TrainingCostCurve::feasible_lower_bound() const {
  const auto& t = in_.terms;
  if (in_.forgetting == ForgettingModel::simple) {
    const double root = (t.external + t.repair + t.maintenance) / t.surplus();
    if (root >= 1.0) throw InfeasibleError("forgetting exceeds training for every lf");
    return root;
  }
  if (t.external == 0.0 && t.revision == 0.0) return 0.0;
  // E is convex with E(0) <= 0, so it crosses zero at most once on (0, 1).
  double lo = 0.0, hi = 1.0;
  if (effective_training(hi) <= 0.0)
    throw InfeasibleError("forgetting exceeds training for every lf");
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (effective_training(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

double TrainingCostCurve::learning_factor(double lf) const {
  const double e = effective_training(lf);
  if (!(e > 0.0)) throw InfeasibleError("forgetting exhausts the training time");
  return power_decay(in_.terms.repair, in_.autonomous_exponent, "repair") *
         power_decay(e, in_.induced_exponent, "effective training");
}

CostBreakdown TrainingCostCurve::breakdown(double lf) const {
  require_fraction(lf);
  CostBreakdown out;
  out.repair = in_.repair_cost * learning_factor(lf);
  out.maintenance = in_.maintenance_cost;
  out.delay = in_.delay_cost;
  out.training = in_.training_cost_rate * in_.terms.surplus() * lf;
  return out;
}

double TrainingCostCurve::derivative(double lf) const {
  const double a = in_.induced_exponent;
  const double e = effective_training(lf);
  if (!(e > 0.0)) throw InfeasibleError("forgetting exhausts the training time");
  const double k =
      in_.repair_cost * power_decay(in_.terms.repair, in_.autonomous_exponent, "repair");
  return -a * k * std::pow(e, -a - 1.0) * effective_training_slope(lf) +
         in_.training_cost_rate * in_.terms.surplus();
}

}  // namespace fsc
