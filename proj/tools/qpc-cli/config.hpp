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

#include "qpc/qpc.h"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpc::cli
{

// Malformed config text (bad line, unknown key, unparsable value).
class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Well-formed config whose values violate a constraint. The message starts
// with the offending field name.
class ValidationError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A frequency given either in rad/s or as a multiple of a reference:
/// "1.2e15" (absolute), "0.3qw" (quarter-wave omega of layer A) or
/// "0.3w0" (the normalization frequency omega0).
struct FrequencyValue
{
  enum class Unit
  {
    rad_per_s,
    quarter_wave,
    omega0
  };
  double value = 0.0;
  Unit unit = Unit::rad_per_s;

  double resolve(double quarter_wave_omega, double omega0) const;
};

struct RunConfig
{
  double n_a = 2.35;
  double n_b = 1.38;
  double a_nm = 165.0;
  double b_nm = 281.0;
  int periods = 8;
  FrequencyValue omega_min{0.3, FrequencyValue::Unit::quarter_wave};
  FrequencyValue omega_max{1.7, FrequencyValue::Unit::quarter_wave};
  std::size_t points = 2000;
  qpc_variant variant = QPC_VARIANT_CORRECTED;
  std::optional<double> omega0_thz; // linear frequency, THz
  double gap_threshold = 0.01;
  int min_run = 3;
  std::optional<std::string> out;
  std::optional<std::string> plot;

  // Trend studies.
  std::string parameter = "thickness_a";
  std::vector<double> values; // empty: family default for the parameter
  double window_min = 0.25;
  double window_max = 2.0;
  std::size_t window_points = 4001;
};

// Config keys, in the order they are documented.
const std::vector<std::string> &config_keys();

using Overrides = std::map<std::string, std::string>;

// Parses flat `key = value` text; '#' starts a comment.
Overrides parse_config_text(const std::string &text);

// Reads the file (if any), applies `flags` on top, converts and validates.
RunConfig parse_config(const std::optional<std::string> &path, const Overrides &flags);

// Applies one key to `config`; throws ParseError on unknown key or bad value.
void apply_setting(RunConfig &config, const std::string &key, const std::string &value);

void validate(const RunConfig &config);

// omega0 in rad/s: 2*pi*omega0_thz*1e12 if set, otherwise the quarter-wave omega.
double resolve_omega0(const RunConfig &config, double quarter_wave_omega);

} // namespace qpc::cli
