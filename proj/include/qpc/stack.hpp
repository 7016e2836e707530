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

namespace qpc
{

// Speed of light in vacuum, m/s (exact SI value).
inline constexpr double kSpeedOfLight = 299'792'458.0;

inline constexpr double kPi = 3.14159265358979323846;

struct Layer
{
  double refractive_index = 1.0;
  double thickness_nm = 1.0;
};

/// Periodic bilayer A|B repeated `periods` times, embedded in vacuum on both
/// sides. Light enters through the first A layer at x = 0.
struct StackSpec
{
  Layer layer_a;
  Layer layer_b;
  int periods = 1;
  double ambient_index = 1.0;

  double cell_length() const { return layer_a.thickness_nm + layer_b.thickness_nm; }
  double total_length() const { return periods * cell_length(); }

  // Throws InvalidParameter naming the offending field.
  void validate() const;

  // ZnS / MgF2, 8 periods.
  static StackSpec reference();
};

/// Every frequency-derived scalar needed by the solvers at one angular
/// frequency. Wavenumbers are in nm^-1; energies use hbar = 1 so that
/// E = omega and V = omega * (1 - n).
struct WaveContext
{
  double omega = 0.0;      // rad/s
  double lambda_vac = 0.0; // nm
  double big_k = 0.0;      // vacuum wavenumber
  double k_a = 0.0;
  double k_b = 0.0;
  double v_a = 0.0;
  double v_b = 0.0;
  double energy = 0.0;
  double cell_length = 0.0; // nm
  double thickness_a = 0.0; // nm
  double thickness_b = 0.0; // nm
};

// n * omega / c in nm^-1.
double wavenumber(double omega, double refractive_index);

// Photon potential energy omega * (1 - n) in units with hbar = 1.
double potential_energy(double omega, double refractive_index);

WaveContext make_wave_context(const StackSpec &stack, double omega);

// Angular frequency of a vacuum wavelength given in nm.
double omega_from_wavelength(double lambda_nm);

// Frequency at which layer A is a quarter wave thick: 2*pi*c / (4 n_a a).
double quarter_wave_omega(const StackSpec &stack);

} // namespace qpc
