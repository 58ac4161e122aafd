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

#include "fscontract/pricing.hpp"

#include "fscontract/learning_model.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fsc {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::bench: return "bench";
    case Variant::autonomous: return "auto";
    case Variant::full: return "full";
  }
  return "unknown";
}

Variant parse_variant(const std::string& text) {
  if (text == "bench") return Variant::bench;
  if (text == "auto" || text == "autonomous") return Variant::autonomous;
  if (text == "full") return Variant::full;
  throw ConfigError("unknown variant '" + text + "' (expected full, auto or bench)");
}

double disutility(Choice choice, double risk_aversion, double price, const OsCostMoments& os,
                  double markup) {
  if (choice == Choice::full_service) return price;
  const double k = 1.0 + markup;
  return k * os.mean() + risk_aversion * k * k * os.variance / 2.0;
}

double indifference_threshold(double price, const OsCostMoments& os, double markup) {
  const double k = 1.0 + markup;
  const double gap = price - k * os.mean();
  const double spread = k * k * os.variance;
  if (spread > 0.0) return 2.0 * gap / spread;
  if (gap > 0.0) return std::numeric_limits<double>::infinity();
  return gap < 0.0 ? -std::numeric_limits<double>::infinity() : 0.0;
}

double fs_market_share(double price, const OsCostMoments& os, const MarketParams& mk) {
  const double tau = indifference_threshold(price, os, mk.markup);
  if (tau <= 0.0) return 1.0;
  return std::clamp(1.0 - tau / mk.risk_aversion_bound(), 0.0, 1.0);
}

namespace {

double market_profit(double price, double share, const CostBreakdown& fs, const OsCostMoments& os,
                     const MarketParams& mk) {
  return mk.customers *
         ((price - fs.total()) * share + mk.markup * os.mean() * (1.0 - share));
}

}  // namespace

double expected_profit(double price, const CostBreakdown& fs, const OsCostMoments& os,
                       const MarketParams& mk) {
  return market_profit(price, fs_market_share(price, os, mk), fs, os, mk);
}

double quadratic_profit(double price, const CostBreakdown& fs, const OsCostMoments& os,
                        const MarketParams& mk) {
  const double tau = indifference_threshold(price, os, mk.markup);
  const double share = std::isfinite(tau) ? 1.0 - tau / mk.risk_aversion_bound()
                                          : fs_market_share(price, os, mk);
  return market_profit(price, share, fs, os, mk);
}

PriceBounds price_bounds(const CostBreakdown& fs, const OsCostMoments& os,
                         const MarketParams& mk) {
  return {fs.total() + mk.markup * os.mean(), mk.ceiling()};
}

double interior_price(const CostBreakdown& fs, const OsCostMoments& os, const MarketParams& mk) {
  const double k = 1.0 + mk.markup;
  const double premium = mk.risk_aversion_bound() * k * k * os.variance / 2.0;
  return 0.5 * (fs.total() + (1.0 + 2.0 * mk.markup) * os.mean() + premium);
}

PricingSolution optimal_price(Variant variant, const CostBreakdown& fs, const OsCostMoments& os,
                              const MarketParams& mk) {
  const PriceBounds b = price_bounds(fs, os, mk);
  if (b.lower > b.upper)
    throw InfeasibleError("no admissible FS price: lower bound " + detail::format_double(b.lower) +
                          " exceeds ceiling " + detail::format_double(b.upper));
  PricingSolution out;
  out.variant = variant;
  out.lower_bound = b.lower;
  out.upper_bound = b.upper;
  out.interior_price = interior_price(fs, os, mk);
  out.price = std::clamp(out.interior_price, b.lower, b.upper);
  out.fs_share = fs_market_share(out.price, os, mk);
  out.profit = expected_profit(out.price, fs, os, mk);
  out.breakdown = fs;
  return out;
}

ModelInputs prepare_inputs(const Scenario& s) {
  ModelInputs in;
  in.internal = internal_rate_series(s.failure, s.grid);
  in.external = simulate_external_rates(s);
  in.plan = optimal_pm_count(s, in.internal);
  in.os = os_cost_moments(s, in.internal);
  return in;
}

VariantCost variant_cost(Variant variant, const Scenario& s, const ModelInputs& in,
                         const VariantOptions& opts) {
  VariantCost out;
  switch (variant) {
    case Variant::bench: {
      const int m = s.cost.os_maintenance_count;
      out.pm_count = m;
      out.breakdown.repair = expected_repair_cost(m, s, in.internal);
      out.breakdown.maintenance = maintenance_cost(m, s.cost.maintenance_cost);
      out.breakdown.delay = expected_delay_cost(m, s, in.internal);
      break;
    }
    case Variant::autonomous: {
      // Period-indexed learning evaluated at the contract end.
      const int m = in.plan.count;
      out.pm_count = m;
      out.breakdown.repair = expected_repair_cost(m, s, in.internal) *
                             std::pow(double(s.grid.periods()), -s.learning.autonomous_exponent);
      out.breakdown.maintenance = maintenance_cost(m, s.cost.maintenance_cost);
      out.breakdown.delay = expected_delay_cost(m, s, in.internal);
      break;
    }
    case Variant::full: {
      const int m = in.plan.count;
      out.pm_count = m;
      const TrainingCostCurve curve(m, s, in.internal, in.external);
      LfSolution lf;
      if (opts.training_frequency) {
        lf.lower = curve.feasible_lower_bound();
        lf.vertex_hint = curve.terms().revision / (2.0 * curve.terms().surplus());
        lf.lf = *opts.training_frequency;
        lf.cost = curve.total(lf.lf);
      } else {
        lf = optimize_lf(curve);
      }
      out.breakdown = curve.breakdown(lf.lf);
      out.lf = lf;
      break;
    }
  }
  return out;
}

PricingSolution price_variant(Variant variant, const Scenario& s, const ModelInputs& in,
                              const VariantOptions& opts) {
  const VariantCost vc = variant_cost(variant, s, in, opts);
  PricingSolution out = optimal_price(variant, vc.breakdown, in.os, s.market);
  out.pm_count = vc.pm_count;
  out.lf = vc.lf;
  return out;
}

PricingSolution price_variant(Variant variant, const Scenario& s) {
  return price_variant(variant, s, prepare_inputs(s));
}

std::map<Variant, PricingSolution> price_variants(const Scenario& s) {
  const ModelInputs in = prepare_inputs(s);
  std::map<Variant, PricingSolution> out;
  for (Variant v : {Variant::bench, Variant::autonomous, Variant::full})
    out.emplace(v, price_variant(v, s, in));
  return out;
}

double training_rate_break_even(const Scenario& s, double max_rate, double tolerance) {
  const ModelInputs in = prepare_inputs(s);
  const double target = price_variant(Variant::autonomous, s, in).price;
  auto gap = [&](double rate) {
    Scenario t = s;
    t.learning.training_cost_rate = rate;
    return price_variant(Variant::full, t, in).price - target;
  };

  // Past the break-even the full variant may lose its admissible price
  // altogether; that also counts as the ordering having flipped.
  auto above = [&](double rate) {
    try {
      return gap(rate) > 0.0;
    } catch (const InfeasibleError&) {
      return true;
    }
  };

  if (above(0.0)) throw InfeasibleError("full price is not below the autonomous price");
  double lo = 0.0, hi = std::min(max_rate, std::max(1.0, 2.0 * s.learning.training_cost_rate));
  while (!above(hi)) {
    if (hi >= max_rate)
      throw InfeasibleError("full price stays below the autonomous price up to l = " +
                            detail::format_double(max_rate));
    lo = hi;
    hi = std::min(max_rate, 2.0 * hi);
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    (above(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace fsc
