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

// fscontract: price full-service repair contracts from a scenario config.
//
// Exit codes: 0 ok, 1 validation or parse error, 2 infeasible model,
// 3 I/O error.

#include "fscontract/fscontract.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

enum Exit { kOk = 0, kInvalid = 1, kInfeasible = 2, kIo = 3 };

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string variant = "full";
  std::string out = ".";
  std::string format = "csv";
  std::string param;
  std::string values;
};

fsc::Scenario load(const Options& o) {
  fsc::Scenario s = o.config.empty() ? fsc::default_scenario() : fsc::load_scenario(o.config);
  if (o.seed) s.rng_seed = *o.seed;
  fsc::require_valid(s);
  return s;
}

void print_kv(const char* key, double v) { std::printf("%s = %.6f\n", key, v); }

int run_price(const Options& o) {
  const fsc::Scenario s = load(o);
  const fsc::Variant v = fsc::parse_variant(o.variant);
  const fsc::PricingSolution p = fsc::price_variant(v, s);
  const double u = s.market.money_unit;

  std::printf("variant = %s\n", fsc::to_string(p.variant));
  std::printf("money_unit = %g\n", u);
  print_kv("price", p.price / u);
  print_kv("lower_bound", p.lower_bound / u);
  print_kv("upper_bound", p.upper_bound / u);
  print_kv("interior_price", p.interior_price / u);
  print_kv("fs_share", p.fs_share);
  print_kv("profit", p.profit / u);
  print_kv("cost.repair", p.breakdown.repair / u);
  print_kv("cost.maintenance", p.breakdown.maintenance / u);
  print_kv("cost.delay", p.breakdown.delay / u);
  print_kv("cost.training", p.breakdown.training / u);
  print_kv("cost.total", p.breakdown.total() / u);
  std::printf("pm_count = %d\n", p.pm_count);
  if (p.lf) std::printf("lf = %.8f\n", p.lf->lf);
  return kOk;
}

int run_optimize_lf(const Options& o) {
  const fsc::Scenario s = load(o);
  const fsc::ModelInputs in = fsc::prepare_inputs(s);
  const fsc::LfSolution lf = fsc::optimize_lf(in.plan.count, s, in.internal, in.external);
  std::printf("lf_star = %.8f\n", lf.lf);
  std::printf("cost_at_star = %.6f\n", lf.cost / s.market.money_unit);
  std::printf("vertex_hint = %.8f\n", lf.vertex_hint);
  std::printf("iterations = %d\n", lf.iterations);
  std::printf("feasible_lo = %.8f\n", lf.lower);
  std::printf("feasible_hi = %.8f\n", lf.upper);
  std::printf("pm_count = %d\n", in.plan.count);
  std::printf("money_unit = %g\n", s.market.money_unit);
  return kOk;
}

std::filesystem::path prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw fsc::IoError("cannot create output directory " + dir + ": " + ec.message());
  return dir;
}

void write(const std::vector<fsc::KpiRecord>& records, fsc::ReportFormat f,
           const std::filesystem::path& path) {
  fsc::emit_report(records, f, path);
  std::printf("wrote %s\n", path.string().c_str());
}

int run_compare(const Options& o) {
  const fsc::ReportFormat f = fsc::parse_report_format(o.format);
  if (f != fsc::ReportFormat::csv && f != fsc::ReportFormat::markdown)
    throw fsc::ConfigError("compare writes csv or markdown");
  const fsc::Scenario s = load(o);
  const auto dir = prepare_out_dir(o.out);
  write(fsc::compare_models(s), f, dir / (std::string("compare") + fsc::file_extension(f)));
  return kOk;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw fsc::ConfigError("--values: bad number '" + item + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run_sweep(const Options& o) {
  const fsc::ReportFormat f = fsc::parse_report_format(o.format);
  if (f == fsc::ReportFormat::markdown) throw fsc::ConfigError("sweep writes csv, plotdata or svg");
  fsc::SweepSpec spec;
  spec.param = fsc::parse_sweep_param(o.param);
  spec.values = parse_values(o.values);
  spec.variant = fsc::parse_variant(o.variant);
  const fsc::Scenario s = load(o);
  const auto dir = prepare_out_dir(o.out);

  const auto records = fsc::sweep(spec, s);
  int infeasible = 0;
  for (const auto& r : records) infeasible += !r.feasible;
  write(records, f, dir / ("sweep_" + std::string(fsc::to_string(spec.param)) +
                           fsc::file_extension(f)));
  if (spec.param == fsc::SweepParam::training_cost_rate)
    write(fsc::profit_premium(spec.values, s), f,
          dir / (std::string("profit_premium") + fsc::file_extension(f)));
  if (infeasible) std::fprintf(stderr, "%d of %zu points infeasible\n", infeasible, records.size());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Full-service repair contract pricing"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--config", o.config, "scenario config (key = value); defaults if omitted");
  app.add_option("--seed", o.seed, "override the scenario RNG seed");

  auto* price = app.add_subcommand("price", "optimal price for one model variant");
  price->add_option("--variant", o.variant, "full | auto | bench");

  auto* optimize = app.add_subcommand("optimize-lf", "optimal training frequency");

  auto* compare = app.add_subcommand("compare", "full vs autonomous vs on-call KPIs");
  compare->add_option("--out", o.out, "output directory");
  compare->add_option("--format", o.format, "csv | markdown");

  auto* sweep = app.add_subcommand("sweep", "one-parameter sensitivity sweep");
  sweep->add_option("--param", o.param, "beta | phi-int | lf | unit-training-cost")->required();
  sweep->add_option("--values", o.values, "comma-separated, strictly increasing")->required();
  sweep->add_option("--out", o.out, "output directory");
  sweep->add_option("--format", o.format, "csv | plotdata | svg");
  sweep->add_option("--variant", o.variant, "full | auto | bench");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*price) return run_price(o);
    if (*optimize) return run_optimize_lf(o);
    if (*compare) return run_compare(o);
    if (*sweep) return run_sweep(o);
  } catch (const fsc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const fsc::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const fsc::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const fsc::ModelError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  }
  return kInvalid;
}
