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

#include "fscontract/report.hpp"

#include "fscontract/failure_model.hpp"
#include "fscontract/svg_chart.hpp"
#include "text_util.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>

namespace fsc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

KpiRecord to_record(const PricingSolution& p, const MarketParams& mk) {
  KpiRecord r;
  r.variant = to_string(p.variant);
  r.price = p.price / mk.money_unit;
  r.cost = p.breakdown.total() / mk.money_unit;
  r.profit = p.profit / mk.money_unit;
  r.fs_share = p.fs_share;
  return r;
}

KpiRecord infeasible_record(std::string variant, std::string param, double value) {
  return {std::move(variant), std::move(param), value, kNaN, kNaN, kNaN, kNaN, false};
}

/// Evaluates fn(i) for every index concurrently, keeping input order.
template <typename F>
std::vector<KpiRecord> parallel_map(std::size_t n, F fn) {
  std::vector<std::future<KpiRecord>> jobs;
  jobs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) jobs.push_back(std::async(std::launch::async, fn, i));
  std::vector<KpiRecord> out;
  out.reserve(n);
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

KpiRecord sweep_point(const SweepSpec& spec, double value, const Scenario& base) {
  const std::string param = to_string(spec.param);
  const std::string variant = to_string(spec.variant);
  Scenario s = base;
  VariantOptions opts;
  switch (spec.param) {
    case SweepParam::markup:
      s.market.markup = value;
      break;
    case SweepParam::internal_rate_mean: {
      const Vector shifted =
          shift_to_mean(internal_rate_series(base.failure, base.grid).values, value);
      if ((shifted.array() < 0.0).any()) return infeasible_record(variant, param, value);
      s.failure.internal_override = shifted;
      break;
    }
    case SweepParam::training_frequency:
      s.learning.training_frequency = value;
      opts.training_frequency = value;
      break;
    case SweepParam::training_cost_rate:
      s.learning.training_cost_rate = value;
      break;
  }
  try {
    if (!validate_scenario(s).empty()) return infeasible_record(variant, param, value);
    KpiRecord r = to_record(price_variant(spec.variant, s, prepare_inputs(s), opts), s.market);
    r.param = param;
    r.value = value;
    return r;
  } catch (const ModelError&) {
    return infeasible_record(variant, param, value);
  }
}

std::string number(double v) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

double parse_field(std::string_view text, int line) {
  if (text == "NA") return kNaN;
  const auto v = detail::parse_number<double>(text);
  if (!v) throw ConfigError("csv line " + std::to_string(line) + ": bad number '" +
                            std::string(text) + "'");
  return *v;
}

bool is_comparison(const std::vector<KpiRecord>& records) {
  for (const auto& r : records)
    if (r.param != "none") return false;
  return true;
}

std::string cell(const char* f, double v) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string percent(double share) {
  return std::isnan(share) ? "NA" : cell("%.1f", 100.0 * share) + "%";
}

std::vector<double> x_values(const std::vector<KpiRecord>& records) {
  std::vector<double> x;
  const bool index = is_comparison(records);
  for (std::size_t i = 0; i < records.size(); ++i)
    x.push_back(index ? double(i + 1) : records[i].value);
  return x;
}

}  // namespace

const char* to_string(SweepParam p) {
  switch (p) {
    case SweepParam::markup: return "beta";
    case SweepParam::internal_rate_mean: return "phi-int";
    case SweepParam::training_frequency: return "lf";
    case SweepParam::training_cost_rate: return "unit-training-cost";
  }
  return "unknown";
}

SweepParam parse_sweep_param(std::string_view text) {
  if (text == "beta") return SweepParam::markup;
  if (text == "phi-int" || text == "phi_int_mean") return SweepParam::internal_rate_mean;
  if (text == "lf") return SweepParam::training_frequency;
  if (text == "unit-training-cost" || text == "unit_training_cost")
    return SweepParam::training_cost_rate;
  throw ConfigError("unknown sweep parameter '" + std::string(text) +
                    "' (expected beta, phi-int, lf or unit-training-cost)");
}

std::vector<KpiRecord> compare_models(const Scenario& s) {
  const ModelInputs in = prepare_inputs(s);
  std::vector<KpiRecord> out;
  for (Variant v : {Variant::full, Variant::autonomous}) {
    KpiRecord r = to_record(price_variant(v, s, in), s.market);
    r.value = kNaN;
    out.push_back(r);
  }
  const double u = s.market.money_unit;
  const double os = in.os.mean();
  out.push_back({"os", "none", kNaN, (1.0 + s.market.markup) * os / u, os / u,
                 s.market.customers * s.market.markup * os / u, kNaN, true});
  return out;
}

std::vector<KpiRecord> sweep(const SweepSpec& spec, const Scenario& s) {
  if (spec.values.empty())
    throw ValidationError(std::vector<Violation>{{"sweep.values", "must not be empty"}});
  for (std::size_t i = 1; i < spec.values.size(); ++i)
    if (!(spec.values[i] > spec.values[i - 1]))
      throw ValidationError(
          std::vector<Violation>{{"sweep.values", "must be strictly increasing"}});
  return parallel_map(spec.values.size(),
                      [&](std::size_t i) { return sweep_point(spec, spec.values[i], s); });
}

std::vector<KpiRecord> profit_premium(const std::vector<double>& training_rates,
                                      const Scenario& s) {
  const ModelInputs in = prepare_inputs(s);
  const double base = price_variant(Variant::autonomous, s, in).profit;
  const std::string param = to_string(SweepParam::training_cost_rate);
  return parallel_map(training_rates.size(), [&](std::size_t i) {
    const double rate = training_rates[i];
    Scenario t = s;
    t.learning.training_cost_rate = rate;
    try {
      const double full = price_variant(Variant::full, t, in).profit;
      return KpiRecord{"premium", param, rate, kNaN, kNaN, (full - base) / s.market.money_unit,
                       kNaN, true};
    } catch (const ModelError&) {
      return infeasible_record("premium", param, rate);
    }
  });
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::csv;
  if (text == "markdown" || text == "md") return ReportFormat::markdown;
  if (text == "plotdata") return ReportFormat::plotdata;
  if (text == "svg") return ReportFormat::svg;
  throw ConfigError("unknown format '" + std::string(text) +
                    "' (expected csv, markdown, plotdata or svg)");
}

const char* file_extension(ReportFormat f) {
  switch (f) {
    case ReportFormat::csv: return ".csv";
    case ReportFormat::markdown: return ".md";
    case ReportFormat::plotdata: return ".dat";
    case ReportFormat::svg: return ".svg";
  }
  return "";
}

std::string render_csv(const std::vector<KpiRecord>& records) {
  std::string out = "variant,param,value,price,cost,profit,fs_share\n";
  for (const auto& r : records)
    out += r.variant + "," + r.param + "," + number(r.value) + "," + number(r.price) + "," +
           number(r.cost) + "," + number(r.profit) + "," + number(r.fs_share) + "\n";
  return out;
}

std::vector<KpiRecord> parse_csv(std::string_view text) {
  std::vector<KpiRecord> out;
  int line = 0;
  bool header = true;
  for (auto row : detail::split(text, '\n')) {
    ++line;
    if (row.empty()) continue;
    if (header) {
      if (row != "variant,param,value,price,cost,profit,fs_share")
        throw ConfigError("csv line 1: unexpected header");
      header = false;
      continue;
    }
    const auto f = detail::split(row, ',');
    if (f.size() != 7) throw ConfigError("csv line " + std::to_string(line) + ": expected 7 fields");
    KpiRecord r{std::string(f[0]),     std::string(f[1]),     parse_field(f[2], line),
                parse_field(f[3], line), parse_field(f[4], line), parse_field(f[5], line),
                parse_field(f[6], line), true};
    r.feasible = !(std::isnan(r.price) && std::isnan(r.cost) && std::isnan(r.profit));
    out.push_back(std::move(r));
  }
  return out;
}

std::string render_markdown(const std::vector<KpiRecord>& records) {
  std::string out;
  if (is_comparison(records)) {
    out += "| KPI |";
    std::string rule = "|---|";
    for (const auto& r : records) {
      out += " " + r.variant + " |";
      rule += "---:|";
    }
    out += "\n" + rule + "\n";
    auto row = [&](const char* name, auto get) {
      out += std::string("| ") + name + " |";
      for (const auto& r : records) out += " " + get(r) + " |";
      out += "\n";
    };
    row("Price", [](const KpiRecord& r) { return cell("%.3f", r.price); });
    row("Cost", [](const KpiRecord& r) { return cell("%.3f", r.cost); });
    row("Profit", [](const KpiRecord& r) { return cell("%.3f", r.profit); });
    row("FS share", [](const KpiRecord& r) { return percent(r.fs_share); });
    return out;
  }

  const std::string param = records.empty() ? "value" : records.front().param;
  out += "| " + param + " | variant | Price | Cost | Profit | FS share |\n";
  out += "|---:|---|---:|---:|---:|---:|\n";
  for (const auto& r : records)
    out += "| " + cell("%.6g", r.value) + " | " + r.variant + " | " + cell("%.3f", r.price) +
           " | " + cell("%.3f", r.cost) + " | " + cell("%.3f", r.profit) + " | " +
           percent(r.fs_share) + " |\n";
  return out;
}

std::string render_plotdata(const std::vector<KpiRecord>& records) {
  const bool compare = is_comparison(records);
  std::string out = "# " + std::string(compare ? "model" : records.front().param) +
                    " price cost profit fs_share\n";
  if (compare) {
    out += "# models:";
    for (std::size_t i = 0; i < records.size(); ++i)
      out += " " + std::to_string(i + 1) + "=" + records[i].variant;
    out += "\n";
  }
  const auto x = x_values(records);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out += number(x[i]) + " " + number(r.price) + " " + number(r.cost) + " " +
           number(r.profit) + " " + number(r.fs_share) + "\n";
  }
  return out;
}

std::string render_svg(const std::vector<KpiRecord>& records) {
  const auto x = x_values(records);
  const std::string xl = is_comparison(records) ? "model" : records.front().param;
  auto column = [&](double KpiRecord::*field) {
    std::vector<double> v;
    for (const auto& r : records) v.push_back(r.*field);
    return v;
  };
  bool premium_only = true;
  for (const auto& r : records) premium_only = premium_only && r.variant == "premium";
  if (premium_only)
    return svg_line_charts({{"Profit premium over autonomous model", xl, x,
                             column(&KpiRecord::profit)}},
                           1);
  return svg_line_charts({{"Price", xl, x, column(&KpiRecord::price)},
                          {"Cost", xl, x, column(&KpiRecord::cost)},
                          {"Profit", xl, x, column(&KpiRecord::profit)},
                          {"FS share", xl, x, column(&KpiRecord::fs_share)}});
}

std::string render(const std::vector<KpiRecord>& records, ReportFormat format) {
  if (records.empty())
    throw ValidationError(
        std::vector<Violation>{{"records", "report needs at least one record"}});
  switch (format) {
    case ReportFormat::csv: return render_csv(records);
    case ReportFormat::markdown: return render_markdown(records);
    case ReportFormat::plotdata: return render_plotdata(records);
    case ReportFormat::svg: return render_svg(records);
  }
  return {};
}

void emit_report(const std::vector<KpiRecord>& records, ReportFormat format,
                 const std::filesystem::path& path) {
  const std::string text = render(records, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace fsc
