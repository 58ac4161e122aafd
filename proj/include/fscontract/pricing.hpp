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

#ifndef FSCONTRACT_PRICING_HPP
#define FSCONTRACT_PRICING_HPP

#include "fscontract/cost_model.hpp"
#include "fscontract/failure_model.hpp"
#include "fscontract/lf_optimizer.hpp"
#include "fscontract/scenario.hpp"

#include <map>
#include <optional>

namespace fsc {

enum class Choice { on_call, full_service };

/// Expected payment plus, for on-call service, a variance penalty.
double disutility(Choice choice, double risk_aversion, double price, const OsCostMoments& os,
                  double markup);

/// Risk aversion at which a customer is indifferent between the contracts:
/// 2 [P - (1+b) E_os] / ((1+b)^2 Var). Infinite for zero variance and a
/// price above the on-call cost.
double indifference_threshold(double price, const OsCostMoments& os, double markup);

/// Fraction of customers whose risk aversion is at least the threshold,
/// under Uniform[0, alpha_max].
double fs_market_share(double price, const OsCostMoments& os, const MarketParams& mk);

/// Market profit: full-service margin on the FS share plus the on-call
/// mark-up on the rest.
double expected_profit(double price, const CostBreakdown& fs, const OsCostMoments& os,
                       const MarketParams& mk);

/// Same objective with the share left unclipped; a concave quadratic in price.
double quadratic_profit(double price, const CostBreakdown& fs, const OsCostMoments& os,
                        const MarketParams& mk);

struct PriceBounds {
  double lower = 0.0;  // FS margin must cover the on-call mark-up
  double upper = 0.0;  // TCO minus leasing and operating costs
};

PriceBounds price_bounds(const CostBreakdown& fs, const OsCostMoments& os,
                         const MarketParams& mk);

/// Stationary point of quadratic_profit:
/// (C_FS + (1+2b) E_os + alpha_max (1+b)^2 Var / 2) / 2.
double interior_price(const CostBreakdown& fs, const OsCostMoments& os, const MarketParams& mk);

struct PricingSolution {
  Variant variant = Variant::full;
  double price = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double interior_price = 0.0;
  double fs_share = 0.0;
  double profit = 0.0;
  CostBreakdown breakdown;
  int pm_count = 1;
  std::optional<LfSolution> lf;
};

/// Clamps the interior price into the admissible band. Throws
/// InfeasibleError when the band is empty.
PricingSolution optimal_price(Variant variant, const CostBreakdown& fs, const OsCostMoments& os,
                              const MarketParams& mk);

/// Everything the variants share: rate series, M* and the on-call moments.
struct ModelInputs {
  RateSeries internal;
  RateSeries external;
  MaintenancePlan plan;
  OsCostMoments os;
};

ModelInputs prepare_inputs(const Scenario& s);

struct VariantOptions {
  /// Use this training frequency instead of optimizing it (full variant).
  std::optional<double> training_frequency;
};

struct VariantCost {
  CostBreakdown breakdown;
  int pm_count = 1;
  std::optional<LfSolution> lf;
};

/// bench: A = 1, M_0, no training. autonomous: A = Z^(-a_auto), M*, no
/// training. full: learning with forgetting at lf*, M*, training cost.
VariantCost variant_cost(Variant variant, const Scenario& s, const ModelInputs& in,
                         const VariantOptions& opts = {});

PricingSolution price_variant(Variant variant, const Scenario& s, const ModelInputs& in,
                              const VariantOptions& opts = {});
PricingSolution price_variant(Variant variant, const Scenario& s);

std::map<Variant, PricingSolution> price_variants(const Scenario& s);

/// Training cost rate l at which the full price reaches the autonomous-only
/// price, found by bisection. Throws InfeasibleError if no crossing lies
/// below max_rate.
double training_rate_break_even(const Scenario& s, double max_rate = 1e6,
                                double tolerance = 1e-6);

}  // namespace fsc

#endif  // FSCONTRACT_PRICING_HPP
