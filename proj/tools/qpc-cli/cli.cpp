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

#include "cli.hpp"

#include "commands.hpp"
#include "config.hpp"

#include "CLI11.hpp"

#include <map>
#include <optional>

namespace qpc::cli
{

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"One-dimensional photonic crystal transfer-matrix simulator", "qpc-cli"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  app.add_option("--config", config_path, "key = value config file");

  // Each long flag maps onto the config key of the same name with '-' -> '_'.
  struct FlagSpec
  {
    const char *flag;
    const char *key;
    const char *help;
  };
  static const FlagSpec flag_specs[] = {
      {"--n-a", "n_a", "refractive index of layer A"},
      {"--n-b", "n_b", "refractive index of layer B"},
      {"--a-nm", "a_nm", "thickness of layer A, nm"},
      {"--b-nm", "b_nm", "thickness of layer B, nm"},
      {"--periods", "periods", "number of A|B periods"},
      {"--omega-min", "omega_min", "sweep start: rad/s, or e.g. 0.3qw / 0.3w0"},
      {"--omega-max", "omega_max", "sweep end: rad/s, or e.g. 1.7qw / 1.7w0"},
      {"--points", "points", "number of sweep points"},
      {"--variant", "variant", "dispersion prefactor: corrected | as-printed"},
      {"--omega0-thz", "omega0_thz", "axis normalization frequency, THz"},
      {"--gap-threshold", "gap_threshold", "transmission gap threshold"},
      {"--min-run", "min_run", "minimum consecutive samples per transmission gap"},
      {"--out", "out", "output file (default: stdout)"},
      {"--plot", "plot", "SVG plot file"},
      {"--parameter", "parameter", "trends: thickness_a | index_na"},
      {"--values", "values", "trends: comma-separated family values"},
      {"--window-min", "window_min", "trends: window start / quarter-wave omega"},
      {"--window-max", "window_max", "trends: window end / quarter-wave omega"},
      {"--window-points", "window_points", "trends: samples across the window"},
  };
  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option *> options;
  for (const FlagSpec &f : flag_specs)
    options[f.key] = app.add_option(f.flag, raw[f.key], f.help);

  CLI::App *spectrum = app.add_subcommand("spectrum", "quantum and classical transmission CSV");
  CLI::App *dispersion = app.add_subcommand("dispersion", "Bloch band structure CSV");
  CLI::App *trends = app.add_subcommand("trends", "gap trends across a parameter family (JSON)");
  CLI::App *compare = app.add_subcommand("compare", "max |T_quantum - T_classical| over a sweep");
  for (CLI::App *sub : {spectrum, dispersion, trends, compare})
    sub->fallthrough();

  std::vector<const char *> argv{"qpc-cli"};
  for (const std::string &a : args)
    argv.push_back(a.c_str());
  try
  {
    app.parse(static_cast<int>(argv.size()), argv.data());
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Overrides flags;
  for (const auto &[key, option] : options)
    if (option->count() > 0)
      flags[key] = raw[key];

  RunConfig config;
  try
  {
    config = parse_config(config_path, flags);
  }
  catch (const std::exception &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (spectrum->parsed())
    return cmd_spectrum(config, out, err);
  if (dispersion->parsed())
    return cmd_dispersion(config, out, err);
  if (trends->parsed())
    return cmd_trends(config, out, err);
  return cmd_compare(config, out, err);
}

} // namespace qpc::cli
