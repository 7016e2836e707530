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

// Classical thin-film characteristic-matrix calculation, kept independent of
// the quantum cascade so that the two can be compared.

#include "qpc/numerics.hpp"
#include "qpc/stack.hpp"

namespace qpc::classical
{

struct CharacteristicMatrix
{
  Matrix2 inner;
};

// [[cos d, i sin d / n], [i n sin d, cos d]] with d = (omega/c) n thickness.
CharacteristicMatrix layer_characteristic(double n, double thickness_nm, double omega);

struct Result
{
  Complex r;
  Complex t;
  double transmissivity = 0.0;
  double reflectivity = 0.0;
};

// Normal incidence, vacuum on both sides.
Result classical_transmissivity(const StackSpec &stack, double omega);

} // namespace qpc::classical
