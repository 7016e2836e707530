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

#include "qpc/dispersion.hpp"

#include "qpc/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace qpc
{

namespace
{

using Row = std::array<Complex, 4>;
using Matrix4 = std::array<Row, 4>;

Complex det3(const Complex &a, const Complex &b, const Complex &c, const Complex &d,
             const Complex &e, const Complex &f, const Complex &g, const Complex &h,
             const Complex &i)
{
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Laplace expansion along the first row.
Complex det4(const Matrix4 &m)
{
  Complex sum = 0.0;
  for (std::size_t col = 0; col < 4; ++col)
  {
    std::array<std::size_t, 3> keep{};
    for (std::size_t c = 0, n = 0; c < 4; ++c)
      if (c != col)
        keep[n++] = c;
    const Complex minor =
        det3(m[1][keep[0]], m[1][keep[1]], m[1][keep[2]], m[2][keep[0]], m[2][keep[1]],
             m[2][keep[2]], m[3][keep[0]], m[3][keep[1]], m[3][keep[2]]);
    sum += (col % 2 == 0 ? 1.0 : -1.0) * m[0][col] * minor;
  }
  return sum;
}

} // namespace

std::string_view to_string(DispersionVariant v)
{
  return v == DispersionVariant::corrected ? "corrected" : "as_printed";
}

DispersionVariant parse_variant(std::string_view text)
{
  if (text == "corrected")
    return DispersionVariant::corrected;
  if (text == "as_printed" || text == "as-printed")
    return DispersionVariant::as_printed;
  throw InvalidParameter("unknown dispersion variant '" + std::string(text) +
                         "' (expected corrected or as-printed)");
}

double dispersion_rhs(const WaveContext &ctx, DispersionVariant variant)
{
  const double phase_a = ctx.k_a * ctx.thickness_a;
  const double phase_b = ctx.k_b * ctx.thickness_b;
  const double prefactor = variant == DispersionVariant::corrected
                               ? 0.5 * (ctx.k_a / ctx.k_b + ctx.k_b / ctx.k_a)
                               : 0.5 * (1.0 / ctx.k_a + 1.0 / ctx.k_b);
  return std::cos(phase_a) * std::cos(phase_b) -
         prefactor * std::sin(phase_a) * std::sin(phase_b);
}

DispersionPoint bloch_solve(const WaveContext &ctx, DispersionVariant variant)
{
  DispersionPoint p;
  p.omega = ctx.omega;
  p.rhs = dispersion_rhs(ctx, variant);
  const double magnitude = std::abs(p.rhs);
  p.in_gap = magnitude > 1.0;
  if (!p.in_gap)
  {
    p.bloch_phase = std::acos(std::clamp(p.rhs, -1.0, 1.0));
    p.bloch_k = p.bloch_phase / ctx.cell_length;
  }
  else
  {
    p.bloch_phase = p.rhs > 0.0 ? 0.0 : kPi;
    p.evanescent_decay = std::acosh(std::max(magnitude, 1.0));
  }
  return p;
}

Complex dispersion_determinant(const WaveContext &ctx, double bloch_k)
{
  const double a = ctx.thickness_a;
  const double cell = ctx.cell_length;
  const double ka = ctx.k_a;
  const double kb = ctx.k_b;
  const Complex bloch = cis(bloch_k * cell);

  const Matrix4 m{{
      {cis(ka * a), cis(-ka * a), -cis(kb * a), -cis(-kb * a)},
      {ka * cis(ka * a), -ka * cis(-ka * a), -kb * cis(kb * a), kb * cis(-kb * a)},
      {bloch, bloch, -cis(kb * cell), -cis(-kb * cell)},
      {ka * bloch, -ka * bloch, -kb * cis(kb * cell), kb * cis(-kb * cell)},
  }};

  double scale = 1.0;
  for (const Row &row : m)
  {
    double row_max = 0.0;
    for (const Complex &v : row)
      row_max = std::max(row_max, std::abs(v));
    scale *= row_max;
  }
  return det4(m) / scale;
}

std::vector<DispersionPoint> band_structure(const StackSpec &stack,
                                            std::span<const double> omega_grid,
                                            DispersionVariant variant)
{
  for (std::size_t i = 0; i < omega_grid.size(); ++i)
  {
    if (!(omega_grid[i] > 0.0) || !std::isfinite(omega_grid[i]))
      throw InvalidParameter("omega grid must be positive, bad value at index " +
                             std::to_string(i));
    if (i > 0 && !(omega_grid[i] > omega_grid[i - 1]))
      throw InvalidParameter("omega grid must be strictly increasing at index " +
                             std::to_string(i));
  }
  std::vector<DispersionPoint> out;
  out.reserve(omega_grid.size());
  for (double omega : omega_grid)
    out.push_back(bloch_solve(make_wave_context(stack, omega), variant));
  return out;
}

} // namespace qpc
