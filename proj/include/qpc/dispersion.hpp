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

#include "qpc/numerics.hpp"
#include "qpc/stack.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qpc
{

/// Prefactor of the sin*sin term in the Bloch relation.
///  - corrected:  (k_A/k_B + k_B/k_A) / 2, the form satisfying the 4x4
///                boundary determinant and matching the classical relation.
///  - as_printed: (1/k_A + 1/k_B) / 2 with k in nm^-1. Dimensionally
///                inconsistent; kept so the discrepancy can be demonstrated.
enum class DispersionVariant
{
  corrected,
  as_printed
};

std::string_view to_string(DispersionVariant v);

// Accepts "corrected", "as_printed" and "as-printed".
DispersionVariant parse_variant(std::string_view text);

struct DispersionPoint
{
  double omega = 0.0;
  double rhs = 0.0;
  std::optional<double> bloch_k;          // nm^-1, in [0, pi/L]; set iff propagating
  std::optional<double> evanescent_decay; // Im(k L) per cell; set iff in gap
  double bloch_phase = 0.0;               // Re(k L): arccos(rhs), 0 or pi in a gap
  bool in_gap = false;
};

// cos(k L) as a function of omega for an infinite A|B crystal.
double dispersion_rhs(const WaveContext &ctx, DispersionVariant variant);

// |rhs| == 1 is classified as propagating.
DispersionPoint bloch_solve(const WaveContext &ctx, DispersionVariant variant);

/// Determinant of the 4x4 boundary system for the unit cell (continuity of
/// psi and psi' at x = a, plus the Bloch-shifted conditions at x = a + b),
/// divided by the product of each row's largest modulus.
Complex dispersion_determinant(const WaveContext &ctx, double bloch_k);

// Requires a strictly increasing, positive grid.
std::vector<DispersionPoint> band_structure(const StackSpec &stack,
                                            std::span<const double> omega_grid,
                                            DispersionVariant variant);

} // namespace qpc
