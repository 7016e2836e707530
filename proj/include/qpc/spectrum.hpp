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

#include "qpc/dispersion.hpp"
#include "qpc/stack.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qpc
{

struct SpectrumPoint
{
  double omega = 0.0;
  double omega_normalized = 0.0; // omega / omega0
  double t_quantum = 0.0;
  double r_quantum = 0.0;
  double t_classical = 0.0;
  double rhs_dispersion = 0.0;
  bool in_gap_dispersion = false;
};

struct SweepOptions
{
  // Axis normalization only; defaults to quarter_wave_omega(stack).
  std::optional<double> omega0;
  DispersionVariant variant = DispersionVariant::corrected;
};

/// Uniform grid over [omega_min, omega_max], endpoints included exactly.
std::vector<SpectrumPoint> sweep(const StackSpec &stack, double omega_min, double omega_max,
                                 std::size_t points, const SweepOptions &options = {});

enum class GapSource
{
  transmission,
  dispersion
};

std::string_view to_string(GapSource s);

struct Gap
{
  double omega_low = 0.0;
  double omega_high = 0.0;
  double width = 0.0;
  GapSource source = GapSource::transmission;

  bool contains(double omega) const { return omega_low <= omega && omega <= omega_high; }
};

/// Gaps from both sources. Sorted by source (transmission first) and then by
/// frequency; gaps of one source are disjoint.
struct GapReport
{
  std::vector<Gap> gaps;

  std::vector<Gap> of(GapSource source) const;
  std::size_t count(GapSource source) const;
  // 0 when there are no gaps of that source.
  double mean_width(GapSource source) const;
  std::optional<Gap> containing(double omega, GapSource source) const;
};

struct GapDetection
{
  double threshold = 0.01;
  int min_run = 3;
};

/// Transmission gaps are maximal runs of at least min_run samples with
/// T < threshold; dispersion gaps are maximal runs with |rhs| > 1. Edges are
/// interpolated linearly between the straddling samples.
GapReport detect_gaps(std::span<const SpectrumPoint> spectrum, const GapDetection &detection = {});

struct Comparison
{
  double max_abs_diff = 0.0;
  double argmax_omega = 0.0;
};

Comparison compare_quantum_classical(std::span<const SpectrumPoint> spectrum);

enum class TrendParameter
{
  thickness_a,
  index_na
};

std::string_view to_string(TrendParameter p);
TrendParameter parse_trend_parameter(std::string_view text);

/// Shared analysis window for trend studies, in units of the base stack's
/// quarter-wave frequency.
struct TrendWindow
{
  double lo = 0.25;
  double hi = 2.0;
  std::size_t points = 4001;
  GapDetection detection;
};

struct TrendEntry
{
  double value = 0.0;
  GapReport report;
};

struct TrendVerdicts
{
  bool count_nondecreasing = true;
  bool mean_width_nonincreasing = true;
  bool primary_gap_width_increasing = true;
  bool count_constant = true;
};

struct TrendStudy
{
  TrendParameter parameter = TrendParameter::thickness_a;
  double reference_omega = 0.0; // quarter-wave omega of the base stack
  double window_lo = 0.0;       // rad/s
  double window_hi = 0.0;       // rad/s
  std::vector<TrendEntry> entries; // sorted by value

  // Width of the gap containing reference_omega; 0 if none does.
  double primary_gap_width(std::size_t entry, GapSource source) const;
  TrendVerdicts verdicts(GapSource source) const;
};

// Values must be positive and distinct.
TrendStudy trend_study(const StackSpec &base, TrendParameter parameter,
                       std::span<const double> values, const TrendWindow &window = {});

} // namespace qpc
