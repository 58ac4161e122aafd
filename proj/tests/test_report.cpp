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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fsc;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

fs::path scratch_dir(const char* name) {
  const fs::path d = fs::temp_directory_path() / "fscontract_tests" / name;
  fs::create_directories(d);
  return d;
}

const std::vector<double> kMarkups{0.5, 0.6, 0.7, 0.8, 0.9};

}  // namespace

TEST_CASE("model comparison") {
  SUBCASE("baseline orderings") {
    const auto rows = compare_models(default_scenario());
    REQUIRE(rows.size() == 3);
    const auto &full = rows[0], &old = rows[1], &os = rows[2];
    CHECK(full.variant == "full");
    CHECK(old.variant == "auto");
    CHECK(os.variant == "os");
    CHECK(full.profit > old.profit);
    CHECK(old.profit > os.profit);
    CHECK(full.cost < old.cost);
    CHECK(old.cost < os.cost);
    CHECK(std::isnan(os.fs_share));
    CHECK(os.price == doctest::Approx(1.5 * os.cost));
    CHECK(os.profit == doctest::Approx(50 * 0.5 * os.cost));
  }
  SUBCASE("new and old coincide without learning") {
    Scenario s = default_scenario();
    s.learning.autonomous_exponent = s.learning.induced_exponent = 0.0;
    s.learning.training_cost_rate = 0.0;
    const auto rows = compare_models(s);
    CHECK(rows[0].price == doctest::Approx(rows[1].price).epsilon(1e-12));
    CHECK(rows[0].cost == doctest::Approx(rows[1].cost).epsilon(1e-12));
    CHECK(rows[0].profit == doctest::Approx(rows[1].profit).epsilon(1e-12));
    CHECK(rows[0].fs_share == rows[1].fs_share);
  }
}

TEST_CASE("sweeps") {
  const Scenario s = default_scenario();
  SUBCASE("mark-up: rising price, constant cost") {
    const auto rows = sweep({SweepParam::markup, kMarkups, Variant::full}, s);
    REQUIRE(rows.size() == kMarkups.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].value == kMarkups[i]);
      CHECK(rows[i].param == "beta");
      CHECK(rows[i].cost == rows[0].cost);
      if (i) CHECK(rows[i].price > rows[i - 1].price);
    }
  }
  SUBCASE("internal rate mean: price and cost do not fall") {
    std::vector<double> means;
    for (int k = 0; k < 10; ++k) means.push_back(0.0019 + 0.0003 * k);
    const auto rows = sweep({SweepParam::internal_rate_mean, means, Variant::full}, s);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].feasible);
      CHECK(rows[i].price >= rows[i - 1].price);
      CHECK(rows[i].cost >= rows[i - 1].cost);
    }
  }
  SUBCASE("shift below zero is flagged and the sweep continues") {
    const auto rows = sweep({SweepParam::internal_rate_mean, {1e-5, 0.0034}, Variant::full}, s);
    REQUIRE(rows.size() == 2);
    CHECK_FALSE(rows[0].feasible);
    CHECK(std::isnan(rows[0].price));
    CHECK(rows[1].feasible);
  }
  SUBCASE("training frequency: share stops rising past 0.0125") {
    const std::vector<double> lf{0.0125, 0.0167, 0.0250, 0.05};
    const auto rows = sweep({SweepParam::training_frequency, lf, Variant::full}, s);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].fs_share <= rows[i - 1].fs_share);
  }
  SUBCASE("infeasible training frequency is flagged") {
    const auto rows = sweep({SweepParam::training_frequency, {1e-4, 0.005}, Variant::full}, s);
    CHECK_FALSE(rows[0].feasible);
    CHECK(rows[1].feasible);
  }
  SUBCASE("training cost rate") {
    const auto rows = sweep({SweepParam::training_cost_rate, {0, 50, 100}, Variant::full}, s);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].cost > rows[i - 1].cost);
  }
  SUBCASE("bad value lists") {
    CHECK_THROWS_AS(sweep({SweepParam::markup, {}, Variant::full}, s), ValidationError);
    CHECK_THROWS_AS(sweep({SweepParam::markup, {0.6, 0.5}, Variant::full}, s), ValidationError);
    CHECK_THROWS_AS(sweep({SweepParam::markup, {0.5, 0.5}, Variant::full}, s), ValidationError);
  }
  SUBCASE("parallel evaluation matches one-at-a-time") {
    const auto all = sweep({SweepParam::markup, kMarkups, Variant::autonomous}, s);
    for (std::size_t i = 0; i < kMarkups.size(); ++i)
      CHECK(sweep({SweepParam::markup, {kMarkups[i]}, Variant::autonomous}, s)[0] == all[i]);
  }
}

TEST_CASE("profit premium") {
  const Scenario s = default_scenario();
  const auto rows = profit_premium({0, 50, 100}, s);
  REQUIRE(rows.size() == 3);
  const auto v = price_variants(s);
  CHECK(rows[1].profit ==
        doctest::Approx((v.at(Variant::full).profit - v.at(Variant::autonomous).profit) / 1000.0));
  CHECK(rows[0].profit >= rows[1].profit);
  CHECK(rows[1].profit >= rows[2].profit);
}

TEST_CASE("sweep parameter names") {
  for (SweepParam p : {SweepParam::markup, SweepParam::internal_rate_mean,
                       SweepParam::training_frequency, SweepParam::training_cost_rate})
    CHECK(parse_sweep_param(to_string(p)) == p);
  CHECK_THROWS_AS(parse_sweep_param("gamma"), ConfigError);
  CHECK(parse_report_format("markdown") == ReportFormat::markdown);
  CHECK_THROWS_AS(parse_report_format("pdf"), ConfigError);
}

TEST_CASE("csv rendering") {
  SUBCASE("one record, two lines") {
    const KpiRecord r{"full", "beta", 0.5, 214.1, 74.9, 6961.2, 1.0, true};
    const std::string text = render_csv({r});
    CHECK(count_lines(text) == 2);
    CHECK(text ==
          "variant,param,value,price,cost,profit,fs_share\n"
          "full,beta,0.500000,214.100000,74.900000,6961.200000,1.000000\n");
  }
  SUBCASE("missing values") {
    const auto text = render_csv(compare_models(default_scenario()));
    CHECK(text.find("os,none,NA,") != std::string::npos);
    CHECK(text.substr(text.size() - 4) == ",NA\n");
  }
  SUBCASE("round trip at six decimals") {
    std::vector<KpiRecord> records = compare_models(default_scenario());
    const auto more = sweep({SweepParam::markup, kMarkups, Variant::full}, default_scenario());
    records.insert(records.end(), more.begin(), more.end());
    const std::string text = render_csv(records);
    const auto back = parse_csv(text);
    REQUIRE(back.size() == records.size());
    CHECK(render_csv(back) == text);
    for (std::size_t i = 0; i < back.size(); ++i) {
      CHECK(back[i].variant == records[i].variant);
      CHECK(back[i].param == records[i].param);
      for (auto field : {&KpiRecord::value, &KpiRecord::price, &KpiRecord::cost,
                         &KpiRecord::profit, &KpiRecord::fs_share}) {
        const double a = back[i].*field, b = records[i].*field;
        if (std::isnan(b)) CHECK(std::isnan(a));
        else CHECK(std::abs(a - b) <= 5e-7);
      }
    }
  }
  SUBCASE("random records round trip") {
    std::mt19937_64 rng(61);
    std::vector<KpiRecord> records;
    for (int i = 0; i < 200; ++i)
      records.push_back({"full", "lf", oracle::uniform(rng, 0, 1), oracle::uniform(rng, -1e6, 1e6),
                         oracle::uniform(rng, 0, 1e3), oracle::uniform(rng, -1e4, 1e4),
                         oracle::uniform(rng, 0, 1), true});
    const std::string text = render_csv(records);
    CHECK(render_csv(parse_csv(text)) == text);
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(parse_csv("a,b\n"), ConfigError);
    CHECK_THROWS_AS(parse_csv("variant,param,value,price,cost,profit,fs_share\nfull,x,1\n"),
                    ConfigError);
    CHECK_THROWS_AS(
        parse_csv("variant,param,value,price,cost,profit,fs_share\nfull,x,1,2,3,abc,0.5\n"),
        ConfigError);
  }
}

TEST_CASE("other renderings") {
  const auto markups = sweep({SweepParam::markup, kMarkups, Variant::full}, default_scenario());
  SUBCASE("plotdata has one row per sweep value") {
    const std::string text = render_plotdata(markups);
    std::istringstream in(text);
    std::string line;
    std::vector<double> x;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream row(line);
      double v;
      row >> v;
      x.push_back(v);
    }
    CHECK(x == kMarkups);
  }
  SUBCASE("markdown comparison table") {
    const std::string md = render_markdown(compare_models(default_scenario()));
    CHECK(md.rfind("| KPI | full | auto | os |", 0) == 0);
    CHECK(md.find("| FS share | 100.0% |") != std::string::npos);
  }
  SUBCASE("markdown sweep table") {
    const std::string md = render_markdown(markups);
    CHECK(count_lines(md) == 2 + markups.size());
  }
  SUBCASE("svg is well formed and deterministic") {
    const std::string a = render_svg(markups);
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    std::size_t markers = 0;
    for (auto at = a.find("<circle"); at != std::string::npos; at = a.find("<circle", at + 1))
      ++markers;
    CHECK(markers == 4 * markups.size());
    CHECK(render_svg(markups) == a);
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(render({}, ReportFormat::csv), ValidationError);
  }
}

TEST_CASE("emitted files") {
  const fs::path dir = scratch_dir("emit");
  const auto rows = compare_models(default_scenario());
  SUBCASE("identical records give identical bytes") {
    for (ReportFormat f : {ReportFormat::csv, ReportFormat::markdown, ReportFormat::plotdata,
                           ReportFormat::svg}) {
      emit_report(rows, f, dir / (std::string("a") + file_extension(f)));
      emit_report(rows, f, dir / (std::string("b") + file_extension(f)));
      CHECK(slurp(dir / (std::string("a") + file_extension(f))) ==
            slurp(dir / (std::string("b") + file_extension(f))));
    }
  }
  SUBCASE("same seed, same report") {
    const Scenario s = default_scenario();
    const auto a = sweep({SweepParam::markup, kMarkups, Variant::full}, s);
    const auto b = sweep({SweepParam::markup, kMarkups, Variant::full}, s);
    CHECK(render_csv(a) == render_csv(b));
    CHECK(render_svg(a) == render_svg(b));
  }
  SUBCASE("unwritable path") {
    CHECK_THROWS_AS(emit_report(rows, ReportFormat::csv, dir / "missing" / "x.csv"), IoError);
  }
}
