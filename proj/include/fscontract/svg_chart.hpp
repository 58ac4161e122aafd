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

#ifndef FSCONTRACT_SVG_CHART_HPP
#define FSCONTRACT_SVG_CHART_HPP

#include <string>
#include <vector>

namespace fsc {

struct ChartPanel {
  std::string title;
  std::string x_label;
  std::vector<double> x;
  std::vector<double> y;  // NaN breaks the line
};

/// Line charts laid out on a grid, `columns` panels per row. Output depends
/// only on the inputs.
std::string svg_line_charts(const std::vector<ChartPanel>& panels, int columns = 2,
                            int panel_width = 360, int panel_height = 240);

}  // namespace fsc

#endif  // FSCONTRACT_SVG_CHART_HPP
