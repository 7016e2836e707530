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

#include "qpc/classical.hpp"

#include "qpc/error.hpp"

#include <cmath>
#include <string>

namespace qpc::classical
{

CharacteristicMatrix layer_characteristic(double n, double thickness_nm, double omega)
{
  if (!(n > 0.0) || !(thickness_nm > 0.0) || !(omega > 0.0))
    throw InvalidParameter("layer_characteristic requires positive n, thickness and omega");
  // Phase thickness, with omega/c converted to nm^-1.
  const double delta = omega / kSpeedOfLight * 1e-9 * n * thickness_nm;
  const double c = std::cos(delta);
  const double s = std::sin(delta);
  return {Matrix2{Complex(c, 0.0), Complex(0.0, s / n), Complex(0.0, n * s), Complex(c, 0.0)}};
}

Result classical_transmissivity(const StackSpec &stack, double omega)
{
  stack.validate();
  const CharacteristicMatrix a =
      layer_characteristic(stack.layer_a.refractive_index, stack.layer_a.thickness_nm, omega);
  const CharacteristicMatrix b =
      layer_characteristic(stack.layer_b.refractive_index, stack.layer_b.thickness_nm, omega);
  const Matrix2 cell = a.inner * b.inner;

  Matrix2 total = Matrix2::identity();
  for (int i = 0; i < stack.periods; ++i)
    total = total * cell;

  // Vacuum admittance (1) on both sides.
  const Complex sum = total.m11 + total.m12 + total.m21 + total.m22;
  if (std::abs(sum) < 1e-300)
    throw NumericalDegeneracy("characteristic matrix denominator vanished");
  Result out;
  out.t = 2.0 / sum;
  out.r = (total.m11 + total.m12 - total.m21 - total.m22) / sum;
  out.transmissivity = std::norm(out.t);
  out.reflectivity = std::norm(out.r);
  return out;
}

} // namespace qpc::classical
