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

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qpc::cli
{

namespace
{

constexpr double kTwoPi = 6.283185307179586476925;

std::string trim(const std::string &s)
{
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string &key, const std::string &text)
{
  double value = 0.0;
  const char *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value))
    throw ParseError(key + ": expected a number, got '" + text + "'");
  return value;
}

long long to_integer(const std::string &key, const std::string &text)
{
  long long value = 0;
  const char *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(key + ": expected an integer, got '" + text + "'");
  return value;
}

FrequencyValue to_frequency(const std::string &key, const std::string &text)
{
  const auto ends_with = [&](const char *suffix) {
    const std::string s(suffix);
    return text.size() > s.size() && text.compare(text.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with("qw"))
    return {to_double(key, text.substr(0, text.size() - 2)), FrequencyValue::Unit::quarter_wave};
  if (ends_with("w0"))
    return {to_double(key, text.substr(0, text.size() - 2)), FrequencyValue::Unit::omega0};
  return {to_double(key, text), FrequencyValue::Unit::rad_per_s};
}

std::vector<double> to_list(const std::string &key, const std::string &text)
{
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(to_double(key, trim(item)));
  return out;
}

void require(bool ok, const std::string &message)
{
  if (!ok)
    throw ValidationError(message);
}

} // namespace

double FrequencyValue::resolve(double quarter_wave_omega, double omega0) const
{
  switch (unit)
  {
  case Unit::quarter_wave:
    return value * quarter_wave_omega;
  case Unit::omega0:
    return value * omega0;
  case Unit::rad_per_s:
    break;
  }
  return value;
}

const std::vector<std::string> &config_keys()
{
  static const std::vector<std::string> keys{
      "n_a",           "n_b",     "a_nm",      "b_nm",       "periods",    "omega_min",
      "omega_max",     "points",  "variant",   "omega0_thz", "gap_threshold", "min_run",
      "out",           "plot",    "parameter", "values",     "window_min", "window_max",
      "window_points"};
  return keys;
}

Overrides parse_config_text(const std::string &text)
{
  Overrides out;
  std::stringstream ss(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(ss, raw))
  {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (eq == std::string::npos)
      throw ParseError(where + "expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ParseError(where + "missing key");
    if (std::find(config_keys().begin(), config_keys().end(), key) == config_keys().end())
      throw ParseError(where + "unknown key '" + key + "'");
    if (out.count(key))
      throw ParseError(where + "duplicate key '" + key + "'");
    out[key] = value;
  }
  return out;
}

void apply_setting(RunConfig &c, const std::string &key, const std::string &value)
{
  if (key == "n_a")
    c.n_a = to_double(key, value);
  else if (key == "n_b")
    c.n_b = to_double(key, value);
  else if (key == "a_nm")
    c.a_nm = to_double(key, value);
  else if (key == "b_nm")
    c.b_nm = to_double(key, value);
  else if (key == "periods")
  {
    const long long p = to_integer(key, value);
    if (p < -1'000'000'000LL || p > 1'000'000'000LL)
      throw ParseError("periods: value out of range");
    c.periods = static_cast<int>(p);
  }
  else if (key == "omega_min")
    c.omega_min = to_frequency(key, value);
  else if (key == "omega_max")
    c.omega_max = to_frequency(key, value);
  else if (key == "points")
  {
    const long long p = to_integer(key, value);
    if (p < 0)
      throw ValidationError("points: must be >= 2");
    c.points = static_cast<std::size_t>(p);
  }
  else if (key == "variant")
  {
    if (value == "corrected")
      c.variant = QPC_VARIANT_CORRECTED;
    else if (value == "as-printed" || value == "as_printed")
      c.variant = QPC_VARIANT_AS_PRINTED;
    else
      throw ParseError("variant: expected corrected or as-printed, got '" + value + "'");
  }
  else if (key == "omega0_thz")
    c.omega0_thz = to_double(key, value);
  else if (key == "gap_threshold")
    c.gap_threshold = to_double(key, value);
  else if (key == "min_run")
    c.min_run = static_cast<int>(to_integer(key, value));
  else if (key == "out")
    c.out = value;
  else if (key == "plot")
    c.plot = value;
  else if (key == "parameter")
  {
    if (value == "thickness_a" || value == "a")
      c.parameter = "thickness_a";
    else if (value == "index_na" || value == "n_a")
      c.parameter = "index_na";
    else
      throw ParseError("parameter: expected thickness_a or index_na, got '" + value + "'");
  }
  else if (key == "values")
    c.values = to_list(key, value);
  else if (key == "window_min")
    c.window_min = to_double(key, value);
  else if (key == "window_max")
    c.window_max = to_double(key, value);
  else if (key == "window_points")
  {
    const long long p = to_integer(key, value);
    if (p < 0)
      throw ValidationError("window_points: must be >= 2");
    c.window_points = static_cast<std::size_t>(p);
  }
  else
    throw ParseError("unknown key '" + key + "'");
}

void validate(const RunConfig &c)
{
  require(c.n_a > 0.0, "n_a: must be positive");
  require(c.n_b > 0.0, "n_b: must be positive");
  require(c.a_nm > 0.0, "a_nm: must be positive");
  require(c.b_nm > 0.0, "b_nm: must be positive");
  require(c.periods >= 1, "periods: must be >= 1");
  require(c.omega_min.value > 0.0, "omega_min: must be positive");
  require(c.omega_max.value > 0.0, "omega_max: must be positive");
  if (c.omega_min.unit == c.omega_max.unit)
    require(c.omega_min.value < c.omega_max.value, "omega_max: must exceed omega_min");
  require(c.points >= 2, "points: must be >= 2");
  if (c.omega0_thz)
    require(*c.omega0_thz > 0.0, "omega0_thz: must be positive");
  require(c.gap_threshold > 0.0 && c.gap_threshold < 1.0, "gap_threshold: must lie in (0, 1)");
  require(c.min_run >= 1, "min_run: must be >= 1");
  for (std::size_t i = 0; i < c.values.size(); ++i)
  {
    require(c.values[i] > 0.0, "values: must all be positive");
    for (std::size_t j = 0; j < i; ++j)
      require(c.values[i] != c.values[j], "values: must be distinct");
  }
  require(c.window_min > 0.0, "window_min: must be positive");
  require(c.window_max > c.window_min, "window_max: must exceed window_min");
  require(c.window_points >= 2, "window_points: must be >= 2");
}

RunConfig parse_config(const std::optional<std::string> &path, const Overrides &flags)
{
  Overrides merged;
  if (path)
  {
    std::ifstream in(*path);
    if (!in)
      throw ParseError("cannot read config file '" + *path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try
    {
      merged = parse_config_text(buffer.str());
    }
    catch (const ParseError &e)
    {
      throw ParseError(*path + ": " + e.what());
    }
  }
  for (const auto &[key, value] : flags)
    merged[key] = value;

  RunConfig config;
  // Apply in documented key order so diagnostics are stable.
  for (const std::string &key : config_keys())
    if (const auto it = merged.find(key); it != merged.end())
      apply_setting(config, key, it->second);
  for (const auto &[key, value] : merged)
    if (std::find(config_keys().begin(), config_keys().end(), key) == config_keys().end())
      throw ParseError("unknown key '" + key + "'");
  validate(config);
  return config;
}

double resolve_omega0(const RunConfig &config, double quarter_wave_omega)
{
  return config.omega0_thz ? kTwoPi * *config.omega0_thz * 1e12 : quarter_wave_omega;
}

} // namespace qpc::cli
