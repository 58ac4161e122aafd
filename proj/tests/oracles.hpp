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

// Independent reference computations and scenario generators for tests.
// Nothing here calls the routine it is meant to check.

#ifndef FSCONTRACT_TESTS_ORACLES_HPP
#define FSCONTRACT_TESTS_ORACLES_HPP

#include "fscontract/fscontract.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace fsc::oracle {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random bathtub scenario on a uniform grid whose internal rate never hits
/// the zero floor.
inline Scenario random_scenario(std::mt19937_64& rng) {
  Scenario s = default_scenario();
  const int z = uniform_int(rng, 4, 30);
  const double t = uniform(rng, 200.0, 2000.0);
  s.grid = PeriodGrid::uniform(z, t, 3.0 * t);

  auto& f = s.failure;
  f.stages.run_in = uniform_int(rng, 1, std::max(1, z / 3));
  f.stages.useful_life = uniform_int(rng, f.stages.run_in + 1, z - 1);
  f.stages.wear_out = z;
  f.run_in_shape = uniform(rng, 0.2, 0.95);
  f.wear_out_shape = uniform(rng, 0.2, 0.95);
  f.scale = uniform(rng, 0.5, 4.0);
  f.initial_rate = uniform(rng, 2e-3, 1e-2);
  f.pm_restoration = uniform(rng, 0.0, 1.0);
  f.external_mean = f.initial_rate * uniform(rng, 0.02, 0.1);
  f.external_sd = f.external_mean / 3.0;
  f.aging_scale = std::exp(uniform(rng, std::log(1e-7), std::log(1e-5)));
  // Shrink aging until run-in keeps the rate well above zero.
  while (internal_rate_series(f, s.grid).values.minCoeff() < 0.05 * f.initial_rate)
    f.aging_scale *= 0.5;

  auto& c = s.cost;
  if (uniform(rng, 0.0, 1.0) < 0.5) {
    c.unit_repair_cost = Vector::Constant(z, uniform(rng, 200.0, 3000.0));
  } else {
    c.unit_repair_cost.resize(z);
    for (int j = 0; j < z; ++j) c.unit_repair_cost[j] = uniform(rng, 200.0, 3000.0);
  }
  c.repair_cost_sd = uniform(rng, 0.0, 20000.0);
  c.maintenance_cost = uniform(rng, 50.0, 1000.0);
  c.os_maintenance_count = uniform_int(rng, 1, 20);

  s.market.markup = uniform(rng, 0.1, 1.0);
  s.market.max_risk_aversion = std::exp(uniform(rng, std::log(2e-4), std::log(5e-3)));
  s.market.customers = uniform_int(rng, 1, 100);
  s.rng_seed = rng();
  return s;
}

/// Expected failures in period j (1-based) from the closed expansion
///   Phi_0 t + rho t^2 g_j / (2M) + t^2 (1 - rho)/2 (g_j + 2 sum_{k<j} g_k),
/// valid on a uniform grid. Slopes come straight from the aging factor.
inline double expanded_expected_failures(int j, int pm_count, const Scenario& s) {
  const double t = s.grid.hours[0];
  const double rho = s.failure.pm_restoration;
  double earlier = 0.0;
  for (int k = 1; k < j; ++k) earlier += aging_factor(k, s.failure, s.grid);
  const double g = aging_factor(j, s.failure, s.grid);
  return s.failure.initial_rate * t + rho * t * t * g / (2.0 * pm_count) +
         t * t * (1.0 - rho) / 2.0 * (g + 2.0 * earlier);
}

struct GridMinimum {
  double x = 0.0;
  double value = std::numeric_limits<double>::infinity();
};

/// Exhaustive scan of the FS cost curve at fixed lf spacing.
inline GridMinimum lf_grid_search(const TrainingCostCurve& curve, double step) {
  GridMinimum best;
  const double lo = curve.feasible_lower_bound();
  for (double x = std::ceil(lo / step) * step; x < 1.0; x += step) {
    if (!curve.feasible(x)) continue;
    const double v = curve.total(x);
    if (v < best.value) best = {x, v};
  }
  return best;
}

/// Argmax of f on lo, lo + step, ..., hi; ties go to the smaller price.
template <typename F>
double grid_argmax(F&& f, double lo, double hi, double step) {
  double best_x = lo, best = -std::numeric_limits<double>::infinity();
  const long n = static_cast<long>(std::floor((hi - lo) / step));
  for (long i = 0; i <= n; ++i) {
    const double x = lo + step * i;
    const double v = f(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

/// Sample variance of the on-call repair bill: Poisson failure counts at M_0
/// maintenance actions, gamma per-repair costs with the configured mean and
/// spread (fixed costs when the spread is zero).
inline double mc_os_variance(const Scenario& s, const Vector& expected_counts, int draws,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& c = s.cost.unit_repair_cost;
  const double sd = s.cost.repair_cost_sd;
  const Eigen::Index z = expected_counts.size();

  double mean = 0.0, m2 = 0.0;
  for (int d = 1; d <= draws; ++d) {
    double total = 0.0;
    for (Eigen::Index j = 0; j < z; ++j) {
      const int n = std::poisson_distribution<int>(expected_counts[j])(rng);
      if (n == 0 || c[j] == 0.0) continue;
      if (sd == 0.0) {
        total += n * c[j];
      } else {
        // Sum of n iid Gamma(k, theta) is Gamma(n k, theta).
        const double k = (c[j] / sd) * (c[j] / sd);
        const double theta = sd * sd / c[j];
        total += std::gamma_distribution<double>(n * k, theta)(rng);
      }
    }
    const double delta = total - mean;
    mean += delta / d;
    m2 += delta * (total - mean);
  }
  return m2 / (draws - 1);
}

inline double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace fsc::oracle

#endif  // FSCONTRACT_TESTS_ORACLES_HPP
