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

#ifndef FSCONTRACT_REPORT_HPP
#define FSCONTRACT_REPORT_HPP

#include "fscontract/pricing.hpp"
#include "fscontract/scenario.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fsc {

/// One table row. Money is in report units (Scenario::market.money_unit);
/// NaN marks "not applicable" or an infeasible point.
struct KpiRecord {
  std::string variant;
  std::string param = "none";
  double value = 0.0;
  double price = 0.0;
  double cost = 0.0;
  double profit = 0.0;
  double fs_share = 0.0;
  bool feasible = true;

  friend bool operator==(const KpiRecord&, const KpiRecord&) = default;
};

enum class SweepParam { markup, internal_rate_mean, training_frequency, training_cost_rate };

const char* to_string(SweepParam p);
SweepParam parse_sweep_param(std::string_view text);

struct SweepSpec {
  SweepParam param = SweepParam::markup;
  std::vector<double> values;
  Variant variant = Variant::full;
};

/// Rows for the full model, the autonomous-only model and on-call service.
std::vector<KpiRecord> compare_models(const Scenario& s);

/// One record per value, in input order. Points run concurrently; a point
/// that fails validation or is infeasible comes back with feasible = false.
std::vector<KpiRecord> sweep(const SweepSpec& spec, const Scenario& s);

/// profit(full) - profit(auto) along a unit-training-cost sweep, carried in
/// the profit column.
std::vector<KpiRecord> profit_premium(const std::vector<double>& training_rates,
                                      const Scenario& s);

enum class ReportFormat { csv, markdown, plotdata, svg };

ReportFormat parse_report_format(std::string_view text);
const char* file_extension(ReportFormat f);

std::string render_csv(const std::vector<KpiRecord>& records);
std::vector<KpiRecord> parse_csv(std::string_view text);
std::string render_markdown(const std::vector<KpiRecord>& records);
std::string render_plotdata(const std::vector<KpiRecord>& records);
std::string render_svg(const std::vector<KpiRecord>& records);
std::string render(const std::vector<KpiRecord>& records, ReportFormat format);

/// Writes the rendered report; throws IoError when the path is unwritable.
void emit_report(const std::vector<KpiRecord>& records, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace fsc

#endif  // FSCONTRACT_REPORT_HPP
