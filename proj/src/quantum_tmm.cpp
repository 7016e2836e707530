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

#include "qpc/quantum_tmm.hpp"

#include "qpc/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qpc
{

namespace
{

// Continuity of psi and psi' at position x, going from a medium with
// wavenumber k_from into one with k_to. Coefficients multiply e^{+-ikx} in
// global coordinates, which is where the position-dependent phases come from.
Matrix2 interface_matrix(double k_from, double k_to, double x)
{
  const double ratio = k_from / k_to;
  const Complex same = 0.5 * (1.0 + ratio);
  const Complex flip = 0.5 * (1.0 - ratio);
  return {same * cis((k_from - k_to) * x), flip * cis(-(k_from + k_to) * x),
          flip * cis((k_from + k_to) * x), same * cis((k_to - k_from) * x)};
}

double b_interface_position(const WaveContext &ctx, int j)
{
  return j * ctx.cell_length - ctx.thickness_b;
}

double a_interface_position(const WaveContext &ctx, int j)
{
  return (j - 1) * ctx.cell_length;
}

void require_periods(int periods)
{
  if (periods < 1)
    throw InvalidParameter("periods must be >= 1, got " + std::to_string(periods));
}

Complex apply_row(const Complex &c1, const Complex &c2, const CoefficientPair &v)
{
  return c1 * v.plus + c2 * v.minus;
}

CoefficientPair apply(const Matrix2 &m, const CoefficientPair &v)
{
  return {apply_row(m.m11, m.m12, v), apply_row(m.m21, m.m22, v)};
}

} // namespace

TransferMatrix matrix_a_first(const WaveContext &ctx)
{
  return {interface_matrix(ctx.big_k, ctx.k_a, 0.0), MatrixKind::a_first, 1};
}

TransferMatrix matrix_b_n(const WaveContext &ctx, int j)
{
  if (j < 1)
    throw InvalidParameter("matrix_b_n requires period index >= 1, got " + std::to_string(j));
  return {interface_matrix(ctx.k_a, ctx.k_b, b_interface_position(ctx, j)), MatrixKind::b_general,
          j};
}

TransferMatrix matrix_a_n(const WaveContext &ctx, int j)
{
  if (j < 2)
    throw InvalidParameter("matrix_a_n requires period index >= 2, got " + std::to_string(j));
  return {interface_matrix(ctx.k_b, ctx.k_a, a_interface_position(ctx, j)), MatrixKind::a_general,
          j};
}

TransferMatrix period_matrix(const WaveContext &ctx, int j)
{
  const TransferMatrix entry = j == 1 ? matrix_a_first(ctx) : matrix_a_n(ctx, j);
  return {matrix_b_n(ctx, j).inner * entry.inner, MatrixKind::period, j};
}

TransferMatrix total_matrix(const StackSpec &stack, const WaveContext &ctx)
{
  require_periods(stack.periods);
  Matrix2 m = Matrix2::identity();
  for (int j = 1; j <= stack.periods; ++j)
    m = period_matrix(ctx, j).inner * m;
  return {m, MatrixKind::total, 0};
}

Complex reflection_ratio(const TransferMatrix &total, const WaveContext &ctx, int periods)
{
  require_periods(periods);
  const double exit_x = periods * ctx.cell_length;
  const Complex fwd = cis(ctx.k_b * exit_x);
  const Complex bwd = cis(-ctx.k_b * exit_x);
  const double big_k = ctx.big_k;
  const double k_b = ctx.k_b;

  const Complex num = total.m1() * (big_k - k_b) * fwd + total.m3() * (big_k + k_b) * bwd;
  const Complex den = total.m2() * (k_b - big_k) * fwd - total.m4() * (big_k + k_b) * bwd;
  if (std::abs(den) < 1e-300)
    throw NumericalDegeneracy("reflection ratio denominator vanished");
  return num / den;
}

Complex transmission_t(const TransferMatrix &total, const WaveContext &ctx, int periods,
                       Complex f_prime_over_f)
{
  require_periods(periods);
  const double exit_x = periods * ctx.cell_length;
  return (total.m1() + total.m2() * f_prime_over_f) * cis((ctx.k_b - ctx.big_k) * exit_x) +
         (total.m3() + total.m4() * f_prime_over_f) * cis(-(ctx.k_b + ctx.big_k) * exit_x);
}

BoundaryAmplitudes boundary_amplitudes(const StackSpec &stack, double omega)
{
  const WaveContext ctx = make_wave_context(stack, omega);
  const TransferMatrix m = total_matrix(stack, ctx);
  BoundaryAmplitudes out;
  out.f = 1.0;
  out.f_prime = reflection_ratio(m, ctx, stack.periods);
  out.d = transmission_t(m, ctx, stack.periods, out.f_prime);
  return out;
}

TransmissionResult transmissivity_reflectivity(const StackSpec &stack, double omega)
{
  const BoundaryAmplitudes amp = boundary_amplitudes(stack, omega);
  return {std::norm(amp.d), std::norm(amp.f_prime)};
}

LayerCoefficients layer_coefficients(const StackSpec &stack, const WaveContext &ctx,
                                     Complex f_prime_over_f)
{
  require_periods(stack.periods);
  LayerCoefficients out;
  out.a.reserve(stack.periods);
  out.b.reserve(stack.periods);
  CoefficientPair current{1.0, f_prime_over_f};
  for (int j = 1; j <= stack.periods; ++j)
  {
    const TransferMatrix entry = j == 1 ? matrix_a_first(ctx) : matrix_a_n(ctx, j);
    current = apply(entry.inner, current);
    out.a.push_back(current);
    current = apply(matrix_b_n(ctx, j).inner, current);
    out.b.push_back(current);
  }
  return out;
}

FieldSolution::FieldSolution(const StackSpec &stack, double omega)
{
  const WaveContext ctx = make_wave_context(stack, omega);
  const TransferMatrix m = total_matrix(stack, ctx);
  amplitudes_.f = 1.0;
  amplitudes_.f_prime = reflection_ratio(m, ctx, stack.periods);
  amplitudes_.d = transmission_t(m, ctx, stack.periods, amplitudes_.f_prime);

  const LayerCoefficients coeffs = layer_coefficients(stack, ctx, amplitudes_.f_prime);

  interfaces_.reserve(2 * stack.periods + 1);
  regions_.reserve(2 * stack.periods + 2);
  regions_.push_back({ctx.big_k, {amplitudes_.f, amplitudes_.f_prime}});
  for (int j = 1; j <= stack.periods; ++j)
  {
    interfaces_.push_back(a_interface_position(ctx, j));
    regions_.push_back({ctx.k_a, coeffs.a[j - 1]});
    interfaces_.push_back(b_interface_position(ctx, j));
    regions_.push_back({ctx.k_b, coeffs.b[j - 1]});
  }
  interfaces_.push_back(stack.total_length());
  regions_.push_back({ctx.big_k, {amplitudes_.d, 0.0}});

  domain_min_ = -ctx.cell_length;
  domain_max_ = (stack.periods + 1) * ctx.cell_length;
}

const FieldSolution::Region &FieldSolution::region_at(double x, Side side) const
{
  if (!(x >= domain_min_ && x <= domain_max_))
    throw OutOfDomain("x = " + std::to_string(x) + " nm lies outside [" +
                      std::to_string(domain_min_) + ", " + std::to_string(domain_max_) + "]");
  // Region i spans [interfaces_[i-1], interfaces_[i]].
  const auto it = side == Side::left
                      ? std::lower_bound(interfaces_.begin(), interfaces_.end(), x)
                      : std::upper_bound(interfaces_.begin(), interfaces_.end(), x);
  return regions_[static_cast<std::size_t>(it - interfaces_.begin())];
}

Complex FieldSolution::psi(double x, Side side) const
{
  const Region &r = region_at(x, side);
  return r.coeffs.plus * cis(r.k * x) + r.coeffs.minus * cis(-r.k * x);
}

Complex FieldSolution::dpsi(double x, Side side) const
{
  const Region &r = region_at(x, side);
  return Complex(0.0, r.k) * (r.coeffs.plus * cis(r.k * x) - r.coeffs.minus * cis(-r.k * x));
}

std::vector<FieldSample> field_profile(const StackSpec &stack, double omega,
                                       std::span<const double> x_samples)
{
  const FieldSolution solution(stack, omega);
  std::vector<FieldSample> out;
  out.reserve(x_samples.size());
  for (double x : x_samples)
    out.push_back({x, solution.psi(x)});
  return out;
}

} // namespace qpc
