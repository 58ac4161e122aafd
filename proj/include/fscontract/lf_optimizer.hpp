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

#ifndef FSCONTRACT_LF_OPTIMIZER_HPP
#define FSCONTRACT_LF_OPTIMIZER_HPP

#include "fscontract/learning_model.hpp"
#include "fscontract/scenario.hpp"

namespace fsc {

struct LfSolution {
  double lf = 0.0;
  double cost = 0.0;
  /// V / (2 (R-S-Q-U)): the closed-form neighbourhood of the turning point.
  double vertex_hint = 0.0;
  int iterations = 0;
  double lower = 0.0;  // feasible domain (lower, upper)
  double upper = 1.0;
};

inline constexpr double kLfTolerance = 1e-6;
inline constexpr int kLfMaxIterations = 200;
inline constexpr int kLfScanPoints = 200;

/// Minimizes curve.total over the feasible lf domain: a log-spaced scan
/// brackets the minimum, golden-section refines it to kLfTolerance.
LfSolution optimize_lf(const TrainingCostCurve& curve);

LfSolution optimize_lf(int pm_count, const Scenario& s, const RateSeries& internal,
                       const RateSeries& external);

}  // namespace fsc

#endif  // FSCONTRACT_LF_OPTIMIZER_HPP
