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

#include "fscontract/lf_optimizer.hpp"

#include "fscontract/golden_section.hpp"

#include <algorithm>
#include <cmath>

namespace fsc {

LfSolution optimize_lf(const TrainingCostCurve& curve) {
  LfSolution sol;
  sol.lower = curve.feasible_lower_bound();
  sol.upper = 1.0;
  sol.vertex_hint = curve.terms().revision / (2.0 * curve.terms().surplus());

  // The cost blows up at the lower edge, so scan in log space.
  const double lo = std::max(sol.lower, 1e-12);
  const double log_lo = std::log(lo), log_hi = std::log(sol.upper);
  Vector grid(kLfScanPoints);
  Vector cost(kLfScanPoints);
  for (int i = 0; i < kLfScanPoints; ++i) {
    grid[i] = std::exp(log_lo + (log_hi - log_lo) * (i + 1) / (kLfScanPoints + 1));
    cost[i] = curve.total(grid[i]);
  }
  Eigen::Index best;
  cost.minCoeff(&best);
  const double a = best > 0 ? grid[best - 1] : lo;
  const double b = best + 1 < kLfScanPoints ? grid[best + 1] : sol.upper;

  auto f = [&curve, lo](double lf) {
    return lf <= lo || lf >= 1.0 ? HUGE_VAL : curve.total(lf);
  };
  const auto r = golden_section_minimize(f, a, b, kLfTolerance, kLfMaxIterations);
  if (!r.converged) throw ModelError("lf search did not converge");

  sol.iterations = r.iterations;
  if (r.value <= cost[best]) {
    sol.lf = r.x;
    sol.cost = r.value;
  } else {
    sol.lf = grid[best];
    sol.cost = cost[best];
  }
  return sol;
}

LfSolution optimize_lf(int pm_count, const Scenario& s, const RateSeries& internal,
                       const RateSeries& external) {
  return optimize_lf(TrainingCostCurve(pm_count, s, internal, external));
}

}  // namespace fsc
