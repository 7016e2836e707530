/*
 * Copyright (c) 2026 The qpc Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

namespace qpc::cli
{

/// Minimal line-plot renderer: fixed 960x540 viewport, linear axes with
/// tick labels, polyline series and optional shaded x-bands.
class SvgPlot
{
public:
  SvgPlot(std::string title, std::string x_label, std::string y_label);

  void add_series(std::string name, std::vector<double> xs, std::vector<double> ys,
                  std::string color, bool dashed = false);
  void add_band(double x_low, double x_high);

  // Fixes the y range; otherwise it is taken from the data.
  void set_y_range(double lo, double hi);

  std::string render() const;

private:
  struct Series
  {
    std::string name;
    std::vector<double> xs;
    std::vector<double> ys;
    std::string color;
    bool dashed;
  };

  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<Series> series_;
  std::vector<std::pair<double, double>> bands_;
  bool fixed_y_ = false;
  double y_lo_ = 0.0;
  double y_hi_ = 1.0;
};

} // namespace qpc::cli
