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

#ifndef FSCONTRACT_TYPES_HPP
#define FSCONTRACT_TYPES_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace fsc {

/// Per-period quantities (hours, rates, unit costs) over the contract horizon.
using Vector = Eigen::VectorXd;

/// Exact equality that tolerates size mismatch (Eigen asserts on it).
inline bool same_values(const Vector& a, const Vector& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

enum class RateKind { internal, external, aging };

/// Rates are failures/hour; aging slopes are failures/hour^2.
struct RateSeries {
  RateKind kind = RateKind::internal;
  Vector values;

  Eigen::Index size() const { return values.size(); }
  double operator[](Eigen::Index period) const { return values[period]; }
  double mean() const { return values.size() ? values.mean() : 0.0; }
};

/// Pricing model variants: benchmark (no learning, M_0 maintenance),
/// autonomous learning only, and autonomous + induced learning with
/// forgetting and training cost.
enum class Variant { bench, autonomous, full };

const char* to_string(Variant v);
Variant parse_variant(const std::string& text);

enum class ForgettingModel { simple, revised };

// Error hierarchy. The CLI maps these onto exit codes.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration text (bad line, unknown key, non-numeric value).
class ConfigError : public ModelError {
 public:
  using ModelError::ModelError;
};

struct Violation {
  std::string key;
  std::string rule;
};

class ValidationError : public ModelError {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// The model has no admissible solution (exhausted training, empty price band).
class InfeasibleError : public ModelError {
 public:
  using ModelError::ModelError;
};

class IoError : public ModelError {
 public:
  using ModelError::ModelError;
};

}  // namespace fsc

#endif  // FSCONTRACT_TYPES_HPP
