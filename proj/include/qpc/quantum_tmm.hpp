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

#include <span>
#include <vector>

namespace qpc
{

enum class MatrixKind
{
  a_first,   // vacuum -> A at x = 0
  a_general, // B -> A entering period j >= 2
  b_general, // A -> B inside period j >= 1
  period,    // M_B^j * M_A^j
  total      // M^N ... M^1
};

/// Maps the coefficient column (e^{+ikx}, e^{-ikx}) on one side of an
/// interface (or cascade of interfaces) onto the next region. Coefficients
/// refer to the global x coordinate, not to a layer-local origin.
struct TransferMatrix
{
  Matrix2 inner;
  MatrixKind kind = MatrixKind::total;
  int period = 0; // 0 for total

  const Complex &m1() const { return inner.m11; }
  const Complex &m2() const { return inner.m12; }
  const Complex &m3() const { return inner.m21; }
  const Complex &m4() const { return inner.m22; }
};

TransferMatrix matrix_a_first(const WaveContext &ctx);

// A -> B interface of period j, located at x = j*(a+b) - b. Requires j >= 1.
TransferMatrix matrix_b_n(const WaveContext &ctx, int j);

// B -> A interface opening period j, located at x = (j-1)*(a+b). Requires j >= 2.
TransferMatrix matrix_a_n(const WaveContext &ctx, int j);

// M^j = M_B^j M_A^j, with M_A^1 the vacuum entry matrix.
TransferMatrix period_matrix(const WaveContext &ctx, int j);

TransferMatrix total_matrix(const StackSpec &stack, const WaveContext &ctx);

// F'/F from matching the last B layer onto the transmitted wave at x = N(a+b).
Complex reflection_ratio(const TransferMatrix &total, const WaveContext &ctx, int periods);

// D/F, given the reflected ratio from reflection_ratio().
Complex transmission_t(const TransferMatrix &total, const WaveContext &ctx, int periods,
                       Complex f_prime_over_f);

struct BoundaryAmplitudes
{
  Complex f{1.0};
  Complex f_prime;
  Complex d;
};

// Incident amplitude fixed at F = 1.
BoundaryAmplitudes boundary_amplitudes(const StackSpec &stack, double omega);

struct TransmissionResult
{
  double transmissivity = 0.0;
  double reflectivity = 0.0;
};

// T = |D/F|^2 and R = |F'/F|^2 through the full quantum cascade.
TransmissionResult transmissivity_reflectivity(const StackSpec &stack, double omega);

struct CoefficientPair
{
  Complex plus;  // e^{+ikx}
  Complex minus; // e^{-ikx}
};

/// Plane-wave amplitudes in every layer, index j-1 for period j.
struct LayerCoefficients
{
  std::vector<CoefficientPair> a;
  std::vector<CoefficientPair> b;
};

LayerCoefficients layer_coefficients(const StackSpec &stack, const WaveContext &ctx,
                                     Complex f_prime_over_f);

enum class Side
{
  left,
  right
};

/// Piecewise plane-wave solution psi_z(x) over [-L, (N+1)L] with F = 1.
/// At an interface position, `side` selects the region the point is taken
/// from; elsewhere it is ignored.
class FieldSolution
{
public:
  FieldSolution(const StackSpec &stack, double omega);

  Complex psi(double x, Side side = Side::right) const;
  Complex dpsi(double x, Side side = Side::right) const;

  // Interface positions in increasing order, starting with x = 0.
  const std::vector<double> &interfaces() const { return interfaces_; }

  double domain_min() const { return domain_min_; }
  double domain_max() const { return domain_max_; }

  const BoundaryAmplitudes &amplitudes() const { return amplitudes_; }

private:
  struct Region
  {
    double k;
    CoefficientPair coeffs;
  };

  const Region &region_at(double x, Side side) const;

  std::vector<double> interfaces_;
  std::vector<Region> regions_; // interfaces_.size() + 1 entries
  BoundaryAmplitudes amplitudes_;
  double domain_min_ = 0.0;
  double domain_max_ = 0.0;
};

struct FieldSample
{
  double x;
  Complex psi;
};

std::vector<FieldSample> field_profile(const StackSpec &stack, double omega,
                                       std::span<const double> x_samples);

} // namespace qpc
