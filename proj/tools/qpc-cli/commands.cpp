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

#include "commands.hpp"

#include "output.hpp"
#include "svg_plot.hpp"

#include "json.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpc::cli
{

namespace
{

class ApiError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

void check(qpc_status status)
{
  if (status != QPC_OK)
    throw ApiError(std::string(qpc_status_message(status)) + ": " + qpc_last_error());
}

struct StackDeleter
{
  void operator()(qpc_stack *p) const { qpc_stack_destroy(p); }
};
struct SpectrumDeleter
{
  void operator()(qpc_spectrum *p) const { qpc_spectrum_destroy(p); }
};
struct GapReportDeleter
{
  void operator()(qpc_gap_report *p) const { qpc_gap_report_destroy(p); }
};
struct TrendDeleter
{
  void operator()(qpc_trend *p) const { qpc_trend_destroy(p); }
};

using StackPtr = std::unique_ptr<qpc_stack, StackDeleter>;
using SpectrumPtr = std::unique_ptr<qpc_spectrum, SpectrumDeleter>;
using GapReportPtr = std::unique_ptr<qpc_gap_report, GapReportDeleter>;
using TrendPtr = std::unique_ptr<qpc_trend, TrendDeleter>;

StackPtr make_stack(const RunConfig &c)
{
  qpc_stack *raw = nullptr;
  check(qpc_stack_create(c.n_a, c.a_nm, c.n_b, c.b_nm, c.periods, &raw));
  return StackPtr(raw);
}

struct Axis
{
  double omega_min;
  double omega_max;
  double omega0;
};

Axis resolve_axis(const RunConfig &c, const qpc_stack *stack)
{
  double qw = 0.0;
  check(qpc_quarter_wave_omega(stack, &qw));
  Axis axis;
  axis.omega0 = resolve_omega0(c, qw);
  axis.omega_min = c.omega_min.resolve(qw, axis.omega0);
  axis.omega_max = c.omega_max.resolve(qw, axis.omega0);
  if (!(axis.omega_min > 0.0 && axis.omega_min < axis.omega_max))
    throw ValidationError("omega_max: must exceed omega_min once both are resolved to rad/s");
  return axis;
}

std::vector<qpc_spectrum_point> run_sweep(const RunConfig &c, const qpc_stack *stack,
                                          const Axis &axis)
{
  qpc_spectrum *raw = nullptr;
  check(qpc_sweep(stack, axis.omega_min, axis.omega_max, c.points, axis.omega0, c.variant, &raw));
  const SpectrumPtr spectrum(raw);
  std::vector<qpc_spectrum_point> points(qpc_spectrum_size(spectrum.get()));
  check(qpc_spectrum_points(spectrum.get(), points.data(), points.size()));
  return points;
}

// Same grid formula as the library's sweep: endpoints exact.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n)
{
  std::vector<double> grid(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = i + 1 == n ? hi : lo + step * static_cast<double>(i);
  return grid;
}

const char *variant_name(qpc_variant v)
{
  return v == QPC_VARIANT_AS_PRINTED ? "as_printed" : "corrected";
}

// Runs a command body, mapping exceptions onto exit codes.
template <typename F> int run_command(std::ostream &err, F &&body)
{
  try
  {
    return body();
  }
  catch (const ValidationError &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (const ParseError &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (const std::exception &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

nlohmann::ordered_json gaps_json(const qpc_gap_report *report, qpc_gap_source source,
                                 double reference)
{
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < qpc_gap_report_size(report); ++i)
  {
    qpc_gap g{};
    check(qpc_gap_report_get(report, i, &g));
    if (g.source != source)
      continue;
    list.push_back({{"omega_low", g.omega_low},
                    {"omega_high", g.omega_high},
                    {"width", g.width},
                    {"low_over_reference", g.omega_low / reference},
                    {"high_over_reference", g.omega_high / reference}});
  }
  return list;
}

nlohmann::ordered_json verdicts_json(const qpc_trend_verdicts &v)
{
  return {{"count_nondecreasing", v.count_nondecreasing != 0},
          {"mean_width_nonincreasing", v.mean_width_nonincreasing != 0},
          {"primary_gap_width_increasing", v.primary_gap_width_increasing != 0},
          {"count_constant", v.count_constant != 0}};
}

} // namespace

int cmd_spectrum(const RunConfig &config, std::ostream &out, std::ostream &err)
{
  return run_command(err, [&] {
    const StackPtr stack = make_stack(config);
    const Axis axis = resolve_axis(config, stack.get());
    const std::vector<qpc_spectrum_point> points = run_sweep(config, stack.get(), axis);

    std::size_t conservation_failures = 0;
    std::size_t identity_failures = 0;
    std::ostringstream csv;
    csv << "omega_rad_s,omega_over_omega0,T_quantum,R_quantum,T_classical,rhs_dispersion,in_gap\n";
    for (const qpc_spectrum_point &p : points)
    {
      if (!(std::abs(p.t_quantum + p.r_quantum - 1.0) <= kConservationTolerance))
        ++conservation_failures;
      if (!(std::abs(p.t_quantum - p.t_classical) < kIdentityTolerance))
        ++identity_failures;
      csv << format_number(p.omega) << ',' << format_number(p.omega_normalized) << ','
          << format_number(p.t_quantum) << ',' << format_number(p.r_quantum) << ','
          << format_number(p.t_classical) << ',' << format_number(p.rhs_dispersion) << ','
          << (p.in_gap_dispersion ? 1 : 0) << '\n';
    }
    write_output(config.out, csv.str(), out);

    if (config.plot)
    {
      std::vector<double> x, tq, tc;
      for (const qpc_spectrum_point &p : points)
      {
        x.push_back(p.omega_normalized);
        tq.push_back(p.t_quantum);
        tc.push_back(p.t_classical);
      }
      SvgPlot plot("Transmissivity: quantum vs classical", "omega / omega0", "T");
      plot.set_y_range(0.0, 1.0);
      plot.add_series("quantum", x, tq, "#1f77b4");
      plot.add_series("classical", x, tc, "#d62728", true);
      write_file(*config.plot, plot.render());
    }

    if (conservation_failures || identity_failures)
    {
      err << "error: invariant check failed (T+R!=1 at " << conservation_failures
          << " points, |T_q-T_c|>=1e-8 at " << identity_failures << " points)\n";
      return kExitFailure;
    }
    return kExitOk;
  });
}

int cmd_dispersion(const RunConfig &config, std::ostream &out, std::ostream &err)
{
  return run_command(err, [&] {
    const StackPtr stack = make_stack(config);
    const Axis axis = resolve_axis(config, stack.get());
    const std::vector<double> grid = uniform_grid(axis.omega_min, axis.omega_max, config.points);
    std::vector<qpc_dispersion_point> points(grid.size());
    check(qpc_band_structure(stack.get(), grid.data(), grid.size(), config.variant,
                             points.data()));

    std::ostringstream csv;
    csv << "# variant=" << variant_name(config.variant) << '\n';
    csv << "omega_rad_s,omega_over_omega0,rhs,bloch_k_re_times_cell,evanescent_decay,in_gap\n";
    for (const qpc_dispersion_point &p : points)
    {
      csv << format_number(p.omega) << ',' << format_number(p.omega / axis.omega0) << ','
          << format_number(p.rhs) << ',' << format_number(p.bloch_phase) << ','
          << format_number(p.has_evanescent_decay ? p.evanescent_decay : 0.0) << ','
          << (p.in_gap ? 1 : 0) << '\n';
    }
    write_output(config.out, csv.str(), out);

    if (config.plot)
    {
      constexpr double kPi = 3.14159265358979323846;
      std::vector<double> x, re, im;
      for (const qpc_dispersion_point &p : points)
      {
        x.push_back(p.omega / axis.omega0);
        re.push_back(p.bloch_phase / kPi);
        im.push_back((p.has_evanescent_decay ? p.evanescent_decay : 0.0) / kPi);
      }
      SvgPlot plot(std::string("Band structure (") + variant_name(config.variant) + ")",
                   "omega / omega0", "k L / pi");
      for (std::size_t i = 0; i < points.size();)
      {
        if (!points[i].in_gap)
        {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j + 1 < points.size() && points[j + 1].in_gap)
          ++j;
        plot.add_band(x[i], x[j]);
        i = j + 1;
      }
      plot.add_series("Re(k L)/pi", x, re, "#1f77b4");
      plot.add_series("Im(k L)/pi", x, im, "#2ca02c", true);
      write_file(*config.plot, plot.render());
    }
    return kExitOk;
  });
}

int cmd_trends(const RunConfig &config, std::ostream &out, std::ostream &err)
{
  return run_command(err, [&] {
    const StackPtr base = make_stack(config);
    const bool thickness = config.parameter == "thickness_a";
    std::vector<double> values = config.values;
    if (values.empty())
      values = thickness ? std::vector<double>{82.5, 165.0, 330.0}
                         : std::vector<double>{2.02, 2.35, 3.18};

    qpc_trend_window window = qpc_trend_window_default();
    window.lo = config.window_min;
    window.hi = config.window_max;
    window.points = config.window_points;
    window.threshold = config.gap_threshold;
    window.min_run = config.min_run;

    qpc_trend *raw = nullptr;
    check(qpc_trend_study(base.get(), thickness ? QPC_TREND_THICKNESS_A : QPC_TREND_INDEX_NA,
                          values.data(), values.size(), &window, &raw));
    const TrendPtr trend(raw);

    double reference = 0.0, lo = 0.0, hi = 0.0;
    check(qpc_trend_reference(trend.get(), &reference, &lo, &hi));

    nlohmann::ordered_json report;
    report["parameter"] = config.parameter;
    report["base_stack"] = {{"n_a", config.n_a},
                            {"a_nm", config.a_nm},
                            {"n_b", config.n_b},
                            {"b_nm", config.b_nm},
                            {"periods", config.periods}};
    report["reference_omega_rad_s"] = reference;
    report["window"] = {{"omega_low", lo},
                        {"omega_high", hi},
                        {"low_over_reference", window.lo},
                        {"high_over_reference", window.hi},
                        {"points", window.points},
                        {"gap_threshold", window.threshold},
                        {"min_run", window.min_run}};

    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < qpc_trend_size(trend.get()); ++i)
    {
      double value = 0.0;
      const qpc_gap_report *gaps = nullptr;
      check(qpc_trend_entry(trend.get(), i, &value, &gaps));
      nlohmann::ordered_json entry;
      entry["value"] = value;
      for (const qpc_gap_source source : {QPC_GAP_DISPERSION, QPC_GAP_TRANSMISSION})
      {
        double primary = 0.0;
        check(qpc_trend_primary_gap_width(trend.get(), i, source, &primary));
        entry[source == QPC_GAP_DISPERSION ? "dispersion" : "transmission"] = {
            {"count", qpc_gap_report_count(gaps, source)},
            {"mean_width", qpc_gap_report_mean_width(gaps, source)},
            {"primary_gap_width", primary},
            {"gaps", gaps_json(gaps, source, reference)}};
      }
      entries.push_back(entry);
    }
    report["entries"] = entries;

    qpc_trend_verdicts by_dispersion{}, by_transmission{};
    check(qpc_trend_get_verdicts(trend.get(), QPC_GAP_DISPERSION, &by_dispersion));
    check(qpc_trend_get_verdicts(trend.get(), QPC_GAP_TRANSMISSION, &by_transmission));
    report["verdict_source"] = "dispersion";
    report["verdicts"] = verdicts_json(by_dispersion);
    report["transmission_verdicts"] = verdicts_json(by_transmission);

    write_output(config.out, report.dump(2) + "\n", out);
    return kExitOk;
  });
}

int cmd_compare(const RunConfig &config, std::ostream &out, std::ostream &err)
{
  return run_command(err, [&] {
    const StackPtr stack = make_stack(config);
    const Axis axis = resolve_axis(config, stack.get());
    qpc_spectrum *raw = nullptr;
    check(qpc_sweep(stack.get(), axis.omega_min, axis.omega_max, config.points, axis.omega0,
                    config.variant, &raw));
    const SpectrumPtr spectrum(raw);
    double max_diff = 0.0, argmax = 0.0;
    check(qpc_spectrum_compare(spectrum.get(), &max_diff, &argmax));
    out << "max |T_quantum - T_classical| = " << format_number(max_diff) << " at omega = "
        << format_number(argmax) << " rad/s (" << config.points << " points)\n";
    if (!(max_diff < kIdentityTolerance))
    {
      err << "error: quantum and classical transmissivity differ by more than 1e-8\n";
      return kExitFailure;
    }
    return kExitOk;
  });
}

} // namespace qpc::cli
