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

#include "qpc/stack.hpp"

#include "qpc/error.hpp"

#include <cmath>
#include <string>

namespace qpc
{

namespace
{

void require_positive(double value, const char *name)
{
  if (!std::isfinite(value) || value <= 0.0)
    throw InvalidParameter(std::string(name) + " must be positive and finite, got " +
                           std::to_string(value));
}

} // namespace

void StackSpec::validate() const
{
  require_positive(layer_a.refractive_index, "n_a");
  require_positive(layer_a.thickness_nm, "a_nm");
  require_positive(layer_b.refractive_index, "n_b");
  require_positive(layer_b.thickness_nm, "b_nm");
  if (periods < 1)
    throw InvalidParameter("periods must be >= 1, got " + std::to_string(periods));
  if (ambient_index != 1.0)
    throw InvalidParameter("ambient_index must be 1 (vacuum)");
}

StackSpec StackSpec::reference()
{
  return StackSpec{Layer{2.35, 165.0}, Layer{1.38, 281.0}, 8, 1.0};
}

double wavenumber(double omega, double refractive_index)
{
  require_positive(omega, "omega");
  require_positive(refractive_index, "refractive index");
  return refractive_index * omega / kSpeedOfLight * 1e-9;
}

double potential_energy(double omega, double refractive_index)
{
  require_positive(omega, "omega");
  require_positive(refractive_index, "refractive index");
  return omega * (1.0 - refractive_index);
}

WaveContext make_wave_context(const StackSpec &stack, double omega)
{
  stack.validate();
  WaveContext ctx;
  ctx.omega = omega;
  ctx.big_k = wavenumber(omega, stack.ambient_index);
  ctx.lambda_vac = 2.0 * kPi / ctx.big_k;
  ctx.k_a = wavenumber(omega, stack.layer_a.refractive_index);
  ctx.k_b = wavenumber(omega, stack.layer_b.refractive_index);
  ctx.energy = omega;
  ctx.v_a = potential_energy(omega, stack.layer_a.refractive_index);
  ctx.v_b = potential_energy(omega, stack.layer_b.refractive_index);
  ctx.cell_length = stack.cell_length();
  ctx.thickness_a = stack.layer_a.thickness_nm;
  ctx.thickness_b = stack.layer_b.thickness_nm;
  return ctx;
}

double omega_from_wavelength(double lambda_nm)
{
  require_positive(lambda_nm, "wavelength");
  return 2.0 * kPi * kSpeedOfLight / (lambda_nm * 1e-9);
}

double quarter_wave_omega(const StackSpec &stack)
{
  stack.validate();
  return omega_from_wavelength(4.0 * stack.layer_a.refractive_index * stack.layer_a.thickness_nm);
}

} // namespace qpc
