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

#ifndef FSCONTRACT_LEARNING_MODEL_HPP
#define FSCONTRACT_LEARNING_MODEL_HPP

#include "fscontract/cost_model.hpp"
#include "fscontract/scenario.hpp"
#include "fscontract/types.hpp"

namespace fsc {

/**
 * Aggregate hour terms of the training/forgetting model.
 *
 *   repair       Q = r * sum phi_int_j t_j
 *   contract     R = sum t_j
 *   external     S = r * sum phi_ext_j t_j
 *   maintenance  U = sum of per-period maintenance allocations
 *   revision     V = 2 sum (phi_int_j / 2)^(1-eps) (t_j - r phi_ext_j t_j)^(1-2eps)
 *
 * with r the mean repair duration.
 */
struct ReducedTerms {
  double repair = 0.0;
  double contract = 0.0;
  double external = 0.0;
  double maintenance = 0.0;
  double revision = 0.0;

  /// R - S - Q - U: the surplus hours that training draws from.
  double surplus() const { return contract - external - repair - maintenance; }
};

ReducedTerms reduced_terms(int pm_count, const Scenario& s, const RateSeries& internal,
                           const RateSeries& external);

/// Per-period maintenance time: (M / Z) actions times the action duration.
Vector maintenance_allocation(int pm_count, const Scenario& s);

/// t^r = r * sum phi_int_j t_j.
double total_repair_time(const RateSeries& internal, const PeriodGrid& grid,
                         double repair_duration = 1.0);

/// t^l = sum_j [t_j - (phi_ext t_j + phi_int t_j + t_j^M)] * lf. Throws
/// InfeasibleError if any period has no surplus time.
double training_time(double lf, int pm_count, const Scenario& s, const RateSeries& internal,
                     const RateSeries& external);

/// t^f under the configured forgetting model.
double forgetting_time(double lf, int pm_count, const Scenario& s, const RateSeries& internal,
                       const RateSeries& external);

/// A = t_r^(-a_auto) * t_eff^(-a_indu). Throws InfeasibleError on
/// nonpositive times.
double learning_effect(double repair_time, double effective_training, const LearningParams& lp);

double training_cost(double lf, int pm_count, const Scenario& s, const RateSeries& internal,
                     const RateSeries& external);

struct LearningState {
  double repair_time = 0.0;
  double training_time = 0.0;
  double forgetting_time = 0.0;
  double effective_training = 0.0;
  double factor = 1.0;
  double training_cost = 0.0;
};

LearningState learning_state(double lf, int pm_count, const Scenario& s,
                             const RateSeries& internal, const RateSeries& external);

/**
 * Total full-service cost as a function of training frequency, in reduced
 * form:
 *
 *   C(lf) = C_R Q^(-a_auto) E(lf)^(-a_indu) + C_M + C_D + l (R-S-Q-U) lf
 *
 * where E(lf) is the effective training time. Built once per scenario and
 * maintenance count so that optimizers evaluate it cheaply.
 */
class TrainingCostCurve {
 public:
  struct Inputs {
    double repair_cost = 0.0;  // expected repair cost without learning
    double maintenance_cost = 0.0;
    double delay_cost = 0.0;
    ReducedTerms terms;
    double autonomous_exponent = 0.0;
    double induced_exponent = 0.0;
    double revision_exponent = 0.05;
    double training_cost_rate = 0.0;
    ForgettingModel forgetting = ForgettingModel::revised;
  };

  explicit TrainingCostCurve(Inputs in);
  TrainingCostCurve(int pm_count, const Scenario& s, const RateSeries& internal,
                    const RateSeries& external);

  const Inputs& inputs() const { return in_; }
  const ReducedTerms& terms() const { return in_.terms; }

  double effective_training(double lf) const;
  double effective_training_slope(double lf) const;
  bool feasible(double lf) const { return lf > 0.0 && lf < 1.0 && effective_training(lf) > 0.0; }

  /// Smallest feasible lf (root of the effective training time); throws
  /// InfeasibleError when no lf in (0, 1) is feasible.
  double feasible_lower_bound() const;

  double learning_factor(double lf) const;
  CostBreakdown breakdown(double lf) const;
  double total(double lf) const { return breakdown(lf).total(); }
  /// Analytic dC/dlf.
  double derivative(double lf) const;

 private:
  Inputs in_;
};

CostBreakdown total_fs_cost(double lf, int pm_count, const Scenario& s,
                            const RateSeries& internal, const RateSeries& external);

}  // namespace fsc

#endif  // FSCONTRACT_LEARNING_MODEL_HPP
