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

#include "qpc/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace qpc
{

Matrix2 operator*(const Matrix2 &a, const Matrix2 &b)
{
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

Matrix2 operator*(Complex s, const Matrix2 &m)
{
  return {s * m.m11, s * m.m12, s * m.m21, s * m.m22};
}

Complex determinant(const Matrix2 &m) { return m.m11 * m.m22 - m.m12 * m.m21; }

double max_abs_difference(const Matrix2 &a, const Matrix2 &b)
{
  return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12), std::abs(a.m21 - b.m21),
                   std::abs(a.m22 - b.m22)});
}

} // namespace qpc
