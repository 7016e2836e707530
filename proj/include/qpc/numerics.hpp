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

#include <complex>

namespace qpc
{

using Complex = std::complex<double>;

// e^{i*theta} for real theta.
inline Complex cis(double theta) { return std::polar(1.0, theta); }

/// 2x2 complex matrix in row-major naming. Used for interface transforms,
/// per-period cascades and classical characteristic matrices alike.
struct Matrix2
{
  Complex m11{1.0};
  Complex m12{0.0};
  Complex m21{0.0};
  Complex m22{1.0};

  static constexpr Matrix2 identity() { return {}; }

  friend bool operator==(const Matrix2 &, const Matrix2 &) = default;
};

// Row-by-column product. In a left-to-right cascade `a * b`, b acts first.
Matrix2 operator*(const Matrix2 &a, const Matrix2 &b);

Matrix2 operator*(Complex s, const Matrix2 &m);

Complex determinant(const Matrix2 &m);

// Largest entry-wise modulus of a - b.
double max_abs_difference(const Matrix2 &a, const Matrix2 &b);

} // namespace qpc
