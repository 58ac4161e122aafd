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

// Flat `dotted.key = value` configuration reader and writer.

#include "fscontract/failure_model.hpp"
#include "fscontract/scenario.hpp"
#include "text_util.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fsc {

namespace {

using detail::format_double;
using detail::parse_number;
using detail::split;
using detail::trim;

const std::set<std::string, std::less<>> kKnownKeys = {
    "grid.z_periods",          "grid.t_j",
    "grid.t_jM",               "failure.phi0_int",
    "failure.stage_bounds",    "failure.k1",
    "failure.k2",              "failure.m",
    "failure.aging_scale",     "failure.rho",
    "failure.ext_mean",        "failure.ext_sd",
    "failure.internal_series", "failure.internal_table",
    "failure.internal_mean",   "cost.unit_repair_cost",
    "cost.repair_cost_sd",     "cost.avg_maintenance_cost",
    "cost.unit_delay_cost",    "cost.delay_probability",
    "cost.m0_os",              "learning.alpha_auto",
    "learning.alpha_indu",     "learning.epsilon",
    "learning.lf",             "learning.unit_training_cost",
    "learning.forgetting_model", "learning.repair_duration",
    "learning.maintenance_duration", "learning.dominance_ratio",
    "market.beta",             "market.alpha_max",
    "market.d_customers",      "market.price_ceiling",
    "market.tco",              "market.c_lease",
    "market.c_ops",            "market.money_unit",
    "rng_seed",
};

struct Entry {
  std::string value;
  int line = 0;
};

class Reader {
 public:
  explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    const auto it = entries_.find(key);
    const std::string where = it == entries_.end() ? "" : "line " + std::to_string(it->second.line) + ": ";
    throw ConfigError(where + key + ": " + what);
  }

  const std::string& raw(const std::string& key) const { return entries_.at(key).value; }

  void real(const std::string& key, double& out) const {
    if (!has(key)) return;
    const auto v = parse_number<double>(raw(key));
    if (!v) fail(key, "expected a number, got '" + raw(key) + "'");
    out = *v;
  }

  template <typename Int>
  void integer(const std::string& key, Int& out) const {
    if (!has(key)) return;
    const auto v = parse_number<Int>(raw(key));
    if (!v) fail(key, "expected an integer, got '" + raw(key) + "'");
    out = *v;
  }

  std::vector<double> list(const std::string& key) const {
    std::vector<double> out;
    for (auto item : split(raw(key), ',')) {
      const auto v = parse_number<double>(item);
      if (!v) fail(key, "expected a number, got '" + std::string(item) + "'");
      out.push_back(*v);
    }
    return out;
  }

  /// Scalar expands to z entries; a list is taken as given.
  void per_period(const std::string& key, int z, Vector& out) const {
    if (!has(key)) {
      if (out.size() != z && out.size() > 0) out = Vector::Constant(z, out[0]);
      return;
    }
    const auto values = list(key);
    if (values.size() == 1) {
      out = Vector::Constant(z, values[0]);
    } else {
      out = Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
    }
  }

 private:
  std::map<std::string, Entry> entries_;
};

std::map<std::string, Entry> tokenize(std::string_view text) {
  std::map<std::string, Entry> entries;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    if (!kKnownKeys.count(key))
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (entries.count(key))
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    entries[key] = {value, lineno};
  }
  return entries;
}

Vector table_column(const Reader& r, const std::filesystem::path& base_dir) {
  const std::string& ref = r.raw("failure.internal_table");
  const auto colon = ref.rfind(':');
  if (colon == std::string::npos) r.fail("failure.internal_table", "expected <path>:<column>");
  const auto column = parse_number<int>(std::string_view(ref).substr(colon + 1));
  if (!column) r.fail("failure.internal_table", "column must be an integer");

  std::filesystem::path path(std::string(trim(std::string_view(ref).substr(0, colon))));
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  const Eigen::MatrixXd table = load_rate_table(path);
  if (*column < 1 || *column > table.cols())
    r.fail("failure.internal_table", "column out of range 1.." + std::to_string(table.cols()));
  return table.col(*column - 1);
}

}  // namespace

Scenario parse_scenario(std::string_view text, const std::filesystem::path& base_dir) {
  const Reader r(tokenize(text));
  Scenario s = default_scenario();

  int z = s.grid.periods();
  r.integer("grid.z_periods", z);
  if (!r.has("grid.z_periods") && r.has("grid.t_j")) {
    const auto hours = r.list("grid.t_j");
    if (hours.size() > 1) z = static_cast<int>(hours.size());
  }
  if (z < 1) r.fail("grid.z_periods", "must be at least 1");
  r.per_period("grid.t_j", z, s.grid.hours);
  r.per_period("grid.t_jM", z, s.grid.maintenance_hours);

  auto& f = s.failure;
  r.real("failure.phi0_int", f.initial_rate);
  if (r.has("failure.stage_bounds")) {
    const auto b = r.list("failure.stage_bounds");
    if (b.size() != 3) r.fail("failure.stage_bounds", "expected three period indices");
    for (double x : b)
      if (x != static_cast<int>(x)) r.fail("failure.stage_bounds", "indices must be integers");
    f.stages = {static_cast<int>(b[0]), static_cast<int>(b[1]), static_cast<int>(b[2])};
  } else if (z != 20) {
    f.stages.wear_out = z;
  }
  r.real("failure.k1", f.run_in_shape);
  r.real("failure.k2", f.wear_out_shape);
  r.real("failure.m", f.scale);
  r.real("failure.aging_scale", f.aging_scale);
  r.real("failure.rho", f.pm_restoration);
  r.real("failure.ext_mean", f.external_mean);
  r.real("failure.ext_sd", f.external_sd);

  if (r.has("failure.internal_series") && r.has("failure.internal_table"))
    r.fail("failure.internal_table", "conflicts with failure.internal_series");
  if (r.has("failure.internal_series")) {
    const auto v = r.list("failure.internal_series");
    f.internal_override = Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
  } else if (r.has("failure.internal_table")) {
    f.internal_override = table_column(r, base_dir);
  }

  auto& c = s.cost;
  r.per_period("cost.unit_repair_cost", z, c.unit_repair_cost);
  r.real("cost.repair_cost_sd", c.repair_cost_sd);
  r.real("cost.avg_maintenance_cost", c.maintenance_cost);
  r.real("cost.unit_delay_cost", c.delay_cost);
  r.real("cost.delay_probability", c.delay_probability);
  r.integer("cost.m0_os", c.os_maintenance_count);

  auto& l = s.learning;
  r.real("learning.alpha_auto", l.autonomous_exponent);
  r.real("learning.alpha_indu", l.induced_exponent);
  r.real("learning.epsilon", l.revision_exponent);
  r.real("learning.lf", l.training_frequency);
  r.real("learning.unit_training_cost", l.training_cost_rate);
  if (r.has("learning.forgetting_model")) {
    const auto& v = r.raw("learning.forgetting_model");
    if (v == "simple") {
      l.forgetting = ForgettingModel::simple;
    } else if (v == "revised") {
      l.forgetting = ForgettingModel::revised;
    } else {
      r.fail("learning.forgetting_model", "expected 'simple' or 'revised'");
    }
  }
  r.real("learning.repair_duration", l.repair_duration);
  r.real("learning.maintenance_duration", l.maintenance_duration);
  r.real("learning.dominance_ratio", l.dominance_ratio);

  auto& mk = s.market;
  r.real("market.beta", mk.markup);
  r.real("market.alpha_max", mk.max_risk_aversion);
  r.integer("market.d_customers", mk.customers);
  r.real("market.price_ceiling", mk.price_ceiling);
  const int triple = r.has("market.tco") + r.has("market.c_lease") + r.has("market.c_ops");
  if (triple != 0) {
    if (triple != 3) r.fail("market.tco", "tco, c_lease and c_ops must be given together");
    OwnershipCosts o;
    r.real("market.tco", o.tco);
    r.real("market.c_lease", o.lease);
    r.real("market.c_ops", o.operations);
    mk.ownership = o;
  }
  r.real("market.money_unit", mk.money_unit);

  r.integer("rng_seed", s.rng_seed);

  // Applied last so that it sees the final grid and failure parameters.
  if (r.has("failure.internal_mean")) {
    double target = 0.0;
    r.real("failure.internal_mean", target);
    const Vector base = f.internal_override ? *f.internal_override
                                            : internal_rate_series(f, s.grid).values;
    if (base.size() == 0) r.fail("failure.internal_mean", "internal series is empty");
    f.internal_override = shift_to_mean(base, target);
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  Scenario s = parse_scenario(buf.str(), path.parent_path());
  require_valid(s);
  return s;
}

namespace {

std::string format_vector(const Vector& v) {
  if (v.size() > 0 && (v.array() == v[0]).all()) return format_double(v[0]);
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  return out;
}

std::string format_list(const Vector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  return out;
}

}  // namespace

std::string format_scenario(const Scenario& s) {
  std::ostringstream o;
  auto kv = [&o](const char* key, const std::string& value) { o << key << " = " << value << '\n'; };
  auto num = [&kv](const char* key, double v) { kv(key, format_double(v)); };

  o << "# grid\n";
  kv("grid.z_periods", std::to_string(s.grid.periods()));
  kv("grid.t_j", format_vector(s.grid.hours));
  kv("grid.t_jM", format_vector(s.grid.maintenance_hours));

  const auto& f = s.failure;
  o << "\n# failure\n";
  num("failure.phi0_int", f.initial_rate);
  kv("failure.stage_bounds", std::to_string(f.stages.run_in) + ", " +
                                 std::to_string(f.stages.useful_life) + ", " +
                                 std::to_string(f.stages.wear_out));
  num("failure.k1", f.run_in_shape);
  num("failure.k2", f.wear_out_shape);
  num("failure.m", f.scale);
  num("failure.aging_scale", f.aging_scale);
  num("failure.rho", f.pm_restoration);
  num("failure.ext_mean", f.external_mean);
  num("failure.ext_sd", f.external_sd);
  if (f.internal_override) kv("failure.internal_series", format_list(*f.internal_override));

  const auto& c = s.cost;
  o << "\n# cost\n";
  kv("cost.unit_repair_cost", format_vector(c.unit_repair_cost));
  num("cost.repair_cost_sd", c.repair_cost_sd);
  num("cost.avg_maintenance_cost", c.maintenance_cost);
  num("cost.unit_delay_cost", c.delay_cost);
  num("cost.delay_probability", c.delay_probability);
  kv("cost.m0_os", std::to_string(c.os_maintenance_count));

  const auto& l = s.learning;
  o << "\n# learning\n";
  num("learning.alpha_auto", l.autonomous_exponent);
  num("learning.alpha_indu", l.induced_exponent);
  num("learning.epsilon", l.revision_exponent);
  num("learning.lf", l.training_frequency);
  num("learning.unit_training_cost", l.training_cost_rate);
  kv("learning.forgetting_model", l.forgetting == ForgettingModel::simple ? "simple" : "revised");
  num("learning.repair_duration", l.repair_duration);
  num("learning.maintenance_duration", l.maintenance_duration);
  num("learning.dominance_ratio", l.dominance_ratio);

  const auto& mk = s.market;
  o << "\n# market\n";
  num("market.beta", mk.markup);
  num("market.alpha_max", mk.max_risk_aversion);
  kv("market.d_customers", std::to_string(mk.customers));
  num("market.price_ceiling", mk.price_ceiling);
  if (mk.ownership) {
    num("market.tco", mk.ownership->tco);
    num("market.c_lease", mk.ownership->lease);
    num("market.c_ops", mk.ownership->operations);
  }
  num("market.money_unit", mk.money_unit);

  o << '\n';
  kv("rng_seed", std::to_string(s.rng_seed));
  return o.str();
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write config " + path.string());
  out << format_scenario(s);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace fsc
