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

#ifndef FSCONTRACT_GOLDEN_SECTION_HPP
#define FSCONTRACT_GOLDEN_SECTION_HPP

#include <cmath>
#include <utility>

namespace fsc {

template <typename Scalar>
struct GoldenResult {
  Scalar x;
  Scalar value;
  int iterations;
  bool converged;
};

/// Golden-section minimization of a unimodal f on [lo, hi], stopping when
/// the bracket is narrower than tol.
template <typename Scalar, typename F>
GoldenResult<Scalar> golden_section_minimize(F&& f, Scalar lo, Scalar hi, Scalar tol,
                                             int max_iterations = 200) {
  using std::sqrt;
  static const Scalar inv_phi = (sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
  if (hi < lo) std::swap(lo, hi);

  Scalar x1 = hi - inv_phi * (hi - lo);
  Scalar x2 = lo + inv_phi * (hi - lo);
  Scalar f1 = f(x1);
  Scalar f2 = f(x2);
  int it = 0;
  while (hi - lo > tol && it < max_iterations) {
    ++it;
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  const bool converged = hi - lo <= tol;
  if (f1 <= f2) return {x1, f1, it, converged};
  return {x2, f2, it, converged};
}

}  // namespace fsc

#endif  // FSCONTRACT_GOLDEN_SECTION_HPP
