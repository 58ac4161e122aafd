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

#include "fscontract/fscontract.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fsc;

namespace {

// One flat period with expected failure count phi * t.
Scenario single_period(double phi, double hours) {
  Scenario s = default_scenario();
  s.grid = PeriodGrid::uniform(1, hours, 3 * hours);
  s.failure.stages = {1, 2, 2};
  s.failure.initial_rate = phi;
  s.failure.aging_scale = 0.0;
  s.cost.unit_repair_cost = Vector::Constant(1, 1.0);
  return s;
}

RateSeries internal(const Scenario& s) { return internal_rate_series(s.failure, s.grid); }

}  // namespace

TEST_CASE("expected repair cost") {
  SUBCASE("free repairs") {
    Scenario s = default_scenario();
    s.cost.unit_repair_cost.setZero();
    CHECK(expected_repair_cost(3, s, internal(s)) == 0.0);
  }
  SUBCASE("single period") {
    const Scenario s = single_period(0.003, 1440);
    CHECK(expected_repair_cost(1, s, internal(s)) == doctest::Approx(4.32));
  }
  SUBCASE("linear in unit cost") {
    Scenario s = default_scenario();
    s.cost.unit_repair_cost.setLinSpaced(20, 400, 2400);
    const double once = expected_repair_cost(3, s, internal(s));
    s.cost.unit_repair_cost *= 2.0;
    CHECK(expected_repair_cost(3, s, internal(s)) == 2.0 * once);
  }
  SUBCASE("optimal count beats the on-call count") {
    const Scenario s = default_scenario();
    const RateSeries r = internal(s);
    const int m = optimal_pm_count(s, r).count;
    const int m0 = s.cost.os_maintenance_count;
    CHECK(expected_repair_cost(m, s, r) + maintenance_cost(m, s.cost.maintenance_cost) <=
          expected_repair_cost(m0, s, r) + maintenance_cost(m0, s.cost.maintenance_cost));
  }
}

TEST_CASE("maintenance cost") {
  CHECK(maintenance_cost(1, 300) == 0.0);
  CHECK(maintenance_cost(3, 300) == 600.0);
  CHECK(maintenance_cost(10, 300) == 2700.0);
  CHECK_THROWS_AS(maintenance_cost(0, 300), ModelError);
}

TEST_CASE("expected delay cost") {
  SUBCASE("no delays") {
    Scenario s = default_scenario();
    s.cost.delay_probability = 0.0;
    CHECK(expected_delay_cost(3, s, internal(s)) == 0.0);
  }
  SUBCASE("every failure delayed") {
    Scenario s = single_period(0.002, 1000);
    s.cost.delay_probability = 1.0;
    s.cost.delay_cost = 10000;
    CHECK(expected_delay_cost(1, s, internal(s)) == doctest::Approx(20000));
  }
  SUBCASE("baseline delay stays a minor share of FS cost") {
    const Scenario s = default_scenario();
    const PricingSolution p = price_variant(Variant::full, s);
    CHECK(p.breakdown.delay < 0.1 * p.breakdown.total());
  }
}

TEST_CASE("cost breakdown adds up") {
  const CostBreakdown b{1.5, 2.25, 3.125, 4.0625};
  CHECK(b.total() == 1.5 + 2.25 + 3.125 + 4.0625);
}

TEST_CASE("on-call cost moments") {
  SUBCASE("free repairs") {
    Scenario s = default_scenario();
    s.cost.unit_repair_cost.setZero();
    s.cost.repair_cost_sd = 0.0;
    const OsCostMoments m = os_cost_moments(s, internal(s));
    CHECK(m.variance == 0.0);
    CHECK(m.repair_mean == 0.0);
  }
  SUBCASE("compound count with fixed costs") {
    Scenario s = single_period(0.004, 1000);  // four expected failures
    s.cost.unit_repair_cost.setConstant(2.0);
    s.cost.repair_cost_sd = 0.0;
    s.cost.os_maintenance_count = 1;
    const OsCostMoments m = os_cost_moments(s, internal(s));
    CHECK(m.repair_mean == doctest::Approx(8.0));
    CHECK(m.variance == doctest::Approx(16.0));
    CHECK(m.maintenance == 0.0);
  }
  SUBCASE("maintenance at the on-call count") {
    const Scenario s = default_scenario();
    const OsCostMoments m = os_cost_moments(s, internal(s));
    CHECK(m.maintenance == 2700.0);
    CHECK(m.mean() == m.repair_mean + m.maintenance);
  }
  SUBCASE("variance grows with spread and with failures") {
    Scenario s = default_scenario();
    double previous = -1.0;
    for (double sd : {0.0, 1000.0, 5000.0, 20000.0}) {
      s.cost.repair_cost_sd = sd;
      const double v = os_cost_moments(s, internal(s)).variance;
      CHECK(v >= previous);
      previous = v;
    }
    Scenario more = s;
    more.failure.initial_rate *= 1.2;
    CHECK(os_cost_moments(more, internal(more)).variance > os_cost_moments(s, internal(s)).variance);
  }
}

TEST_CASE("analytic on-call variance matches simulation") {
  Scenario s = default_scenario();
  const RateSeries r = internal(s);
  const Vector n = expected_failures(s.cost.os_maintenance_count, s, r);
  SUBCASE("fixed per-repair costs") {
    s.cost.repair_cost_sd = 0.0;
    const double analytic = os_cost_moments(s, r).variance;
    CHECK(oracle::mc_os_variance(s, n, 100000, 17) == doctest::Approx(analytic).epsilon(0.03));
  }
  SUBCASE("dispersed per-repair costs") {
    const double analytic = os_cost_moments(s, r).variance;
    CHECK(oracle::mc_os_variance(s, n, 100000, 19) == doctest::Approx(analytic).epsilon(0.03));
  }
}
