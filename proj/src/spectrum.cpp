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

#include "qpc/spectrum.hpp"

#include "qpc/classical.hpp"
#include "qpc/error.hpp"
#include "qpc/quantum_tmm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace qpc
{

namespace
{

// Collects maximal runs where `inside(i)` holds and turns them into gaps.
// `level(i)` is the quantity compared against `edge` for interpolation.
void collect_runs(std::span<const SpectrumPoint> s, std::size_t min_run, GapSource source,
                  const std::function<bool(std::size_t)> &inside,
                  const std::function<double(std::size_t)> &level, double edge,
                  std::vector<Gap> &out)
{
  const auto crossing = [&](std::size_t outer, std::size_t inner) {
    const double lo = level(outer);
    const double hi = level(inner);
    const double f = (edge - lo) / (hi - lo);
    return s[outer].omega + f * (s[inner].omega - s[outer].omega);
  };

  std::size_t i = 0;
  while (i < s.size())
  {
    if (!inside(i))
    {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < s.size() && inside(j + 1))
      ++j;
    if (j - i + 1 >= min_run)
    {
      Gap g;
      g.source = source;
      g.omega_low = i == 0 ? s[i].omega : crossing(i - 1, i);
      g.omega_high = j + 1 == s.size() ? s[j].omega : crossing(j + 1, j);
      g.width = g.omega_high - g.omega_low;
      if (g.width > 0.0)
        out.push_back(g);
    }
    i = j + 1;
  }
}

} // namespace

std::vector<SpectrumPoint> sweep(const StackSpec &stack, double omega_min, double omega_max,
                                 std::size_t points, const SweepOptions &options)
{
  stack.validate();
  if (!(omega_min > 0.0) || !std::isfinite(omega_max) || !(omega_min < omega_max))
    throw InvalidParameter("sweep requires 0 < omega_min < omega_max");
  if (points < 2)
    throw InvalidParameter("sweep requires at least 2 points");
  const double omega0 = options.omega0.value_or(quarter_wave_omega(stack));
  if (!(omega0 > 0.0))
    throw InvalidParameter("omega0 must be positive");

  std::vector<SpectrumPoint> out(points);
  const double step = (omega_max - omega_min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
  {
    const double omega = i + 1 == points ? omega_max : omega_min + step * static_cast<double>(i);
    const WaveContext ctx = make_wave_context(stack, omega);
    const TransmissionResult q = transmissivity_reflectivity(stack, omega);
    const DispersionPoint d = bloch_solve(ctx, options.variant);

    SpectrumPoint &p = out[i];
    p.omega = omega;
    p.omega_normalized = omega / omega0;
    p.t_quantum = q.transmissivity;
    p.r_quantum = q.reflectivity;
    p.t_classical = classical::classical_transmissivity(stack, omega).transmissivity;
    p.rhs_dispersion = d.rhs;
    p.in_gap_dispersion = d.in_gap;
  }
  return out;
}

std::string_view to_string(GapSource s)
{
  return s == GapSource::transmission ? "transmission" : "dispersion";
}

std::vector<Gap> GapReport::of(GapSource source) const
{
  std::vector<Gap> out;
  std::copy_if(gaps.begin(), gaps.end(), std::back_inserter(out),
               [source](const Gap &g) { return g.source == source; });
  return out;
}

std::size_t GapReport::count(GapSource source) const
{
  return static_cast<std::size_t>(std::count_if(
      gaps.begin(), gaps.end(), [source](const Gap &g) { return g.source == source; }));
}

double GapReport::mean_width(GapSource source) const
{
  const std::vector<Gap> selected = of(source);
  if (selected.empty())
    return 0.0;
  double total = 0.0;
  for (const Gap &g : selected)
    total += g.width;
  return total / static_cast<double>(selected.size());
}

std::optional<Gap> GapReport::containing(double omega, GapSource source) const
{
  for (const Gap &g : gaps)
    if (g.source == source && g.contains(omega))
      return g;
  return std::nullopt;
}

GapReport detect_gaps(std::span<const SpectrumPoint> spectrum, const GapDetection &detection)
{
  if (!(detection.threshold > 0.0 && detection.threshold < 1.0))
    throw InvalidParameter("gap threshold must lie in (0, 1)");
  if (detection.min_run < 1)
    throw InvalidParameter("min_run must be >= 1");

  GapReport report;
  const double threshold = detection.threshold;
  collect_runs(
      spectrum, static_cast<std::size_t>(detection.min_run), GapSource::transmission,
      [&](std::size_t i) { return spectrum[i].t_quantum < threshold; },
      [&](std::size_t i) { return spectrum[i].t_quantum; }, threshold, report.gaps);
  collect_runs(
      spectrum, 1, GapSource::dispersion,
      [&](std::size_t i) { return spectrum[i].in_gap_dispersion; },
      [&](std::size_t i) { return std::abs(spectrum[i].rhs_dispersion); }, 1.0, report.gaps);
  return report;
}

Comparison compare_quantum_classical(std::span<const SpectrumPoint> spectrum)
{
  if (spectrum.empty())
    throw InvalidParameter("cannot compare an empty spectrum");
  Comparison c{-1.0, 0.0};
  for (const SpectrumPoint &p : spectrum)
  {
    const double diff = std::abs(p.t_quantum - p.t_classical);
    if (diff > c.max_abs_diff)
      c = {diff, p.omega};
  }
  return c;
}

std::string_view to_string(TrendParameter p)
{
  return p == TrendParameter::thickness_a ? "thickness_a" : "index_na";
}

TrendParameter parse_trend_parameter(std::string_view text)
{
  if (text == "thickness_a" || text == "a" || text == "a_nm")
    return TrendParameter::thickness_a;
  if (text == "index_na" || text == "n_a")
    return TrendParameter::index_na;
  throw InvalidParameter("unknown trend parameter '" + std::string(text) +
                         "' (expected thickness_a or index_na)");
}

double TrendStudy::primary_gap_width(std::size_t entry, GapSource source) const
{
  const std::optional<Gap> g = entries.at(entry).report.containing(reference_omega, source);
  return g ? g->width : 0.0;
}

TrendVerdicts TrendStudy::verdicts(GapSource source) const
{
  TrendVerdicts v;
  for (std::size_t i = 1; i < entries.size(); ++i)
  {
    const GapReport &prev = entries[i - 1].report;
    const GapReport &cur = entries[i].report;
    v.count_nondecreasing = v.count_nondecreasing && cur.count(source) >= prev.count(source);
    v.mean_width_nonincreasing =
        v.mean_width_nonincreasing && cur.mean_width(source) <= prev.mean_width(source);
    v.primary_gap_width_increasing = v.primary_gap_width_increasing &&
                                     primary_gap_width(i, source) > primary_gap_width(i - 1, source);
    v.count_constant = v.count_constant && cur.count(source) == prev.count(source);
  }
  return v;
}

TrendStudy trend_study(const StackSpec &base, TrendParameter parameter,
                       std::span<const double> values, const TrendWindow &window)
{
  base.validate();
  if (values.empty())
    throw InvalidParameter("trend study needs at least one value");
  if (!(window.lo > 0.0 && window.lo < window.hi))
    throw InvalidParameter("trend window requires 0 < lo < hi");

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
  {
    if (!(sorted[i] > 0.0) || !std::isfinite(sorted[i]))
      throw InvalidParameter("trend values must be positive");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw InvalidParameter("trend values must be distinct");
  }

  TrendStudy study;
  study.parameter = parameter;
  study.reference_omega = quarter_wave_omega(base);
  study.window_lo = window.lo * study.reference_omega;
  study.window_hi = window.hi * study.reference_omega;

  SweepOptions options;
  options.omega0 = study.reference_omega;
  for (double value : sorted)
  {
    StackSpec stack = base;
    if (parameter == TrendParameter::thickness_a)
      stack.layer_a.thickness_nm = value;
    else
      stack.layer_a.refractive_index = value;
    const std::vector<SpectrumPoint> s =
        sweep(stack, study.window_lo, study.window_hi, window.points, options);
    study.entries.push_back({value, detect_gaps(s, window.detection)});
  }
  return study;
}

} // namespace qpc
