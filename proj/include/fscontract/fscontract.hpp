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

#ifndef FSCONTRACT_FSCONTRACT_HPP
#define FSCONTRACT_FSCONTRACT_HPP

#include "fscontract/cost_model.hpp"
#include "fscontract/failure_model.hpp"
#include "fscontract/golden_section.hpp"
#include "fscontract/learning_model.hpp"
#include "fscontract/lf_optimizer.hpp"
#include "fscontract/pricing.hpp"
#include "fscontract/report.hpp"
#include "fscontract/scenario.hpp"
#include "fscontract/svg_chart.hpp"
#include "fscontract/types.hpp"

#endif  // FSCONTRACT_FSCONTRACT_HPP
