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

#include "qpc/error.hpp"
#include "qpc/stack.hpp"

#include "oracles.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace qpc;

namespace
{
const double kOmega1551 = omega_from_wavelength(1551.0);
}

TEST_CASE("wavenumber in vacuum is 2 pi / lambda")
{
  const double k = wavenumber(kOmega1551, 1.0);
  CHECK(k == doctest::Approx(2.0 * kPi / 1551.0).epsilon(1e-14));
  CHECK(k == doctest::Approx(4.0513e-3).epsilon(1e-4));
}

TEST_CASE("quarter-wave phases of the reference layers")
{
  const double ka = wavenumber(kOmega1551, 2.35);
  const double kb = wavenumber(kOmega1551, 1.38);
  CHECK(ka == doctest::Approx(9.5205e-3).epsilon(1e-4));
  CHECK(kb == doctest::Approx(5.5908e-3).epsilon(1e-4));
  CHECK(ka * 165.0 == doctest::Approx(kPi / 2).epsilon(1e-3));
  CHECK(kb * 281.0 == doctest::Approx(kPi / 2).epsilon(1e-3));
}

TEST_CASE("wavenumber rejects non-positive inputs")
{
  CHECK_THROWS_AS(wavenumber(0.0, 1.5), InvalidParameter);
  CHECK_THROWS_AS(wavenumber(-1.0, 1.5), InvalidParameter);
  CHECK_THROWS_AS(wavenumber(1e15, 0.0), InvalidParameter);
  CHECK_THROWS_AS(potential_energy(1e15, -2.0), InvalidParameter);
}

TEST_CASE("potential energy")
{
  CHECK(potential_energy(kOmega1551, 1.0) == 0.0);
  CHECK(potential_energy(kOmega1551, 2.35) == doctest::Approx(-1.35 * kOmega1551));
}

TEST_CASE("property: (E - V) / (hbar c) equals the wavenumber")
{
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> n(1.0, 4.0);
  for (int i = 0; i < 500; ++i)
  {
    const double omega = oracle::random_omega(rng);
    const double idx = n(rng);
    const double k_from_energy = (omega - potential_energy(omega, idx)) / kSpeedOfLight * 1e-9;
    CHECK(oracle::rel_diff(k_from_energy, wavenumber(omega, idx)) < 1e-14);
  }
}

TEST_CASE("property: wavenumber is linear in omega and n")
{
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> n(1.0, 4.0);
  std::uniform_real_distribution<double> s(0.1, 10.0);
  for (int i = 0; i < 500; ++i)
  {
    const double omega = oracle::random_omega(rng);
    const double idx = n(rng);
    const double scale = s(rng);
    const double k = wavenumber(omega, idx);
    CHECK(oracle::rel_diff(wavenumber(scale * omega, idx), scale * k) < 1e-14);
    CHECK(oracle::rel_diff(wavenumber(omega, scale * idx), scale * k) < 1e-14);
  }
}

TEST_CASE("wave context of the reference stack")
{
  const StackSpec stack = StackSpec::reference();
  const WaveContext ctx = make_wave_context(stack, quarter_wave_omega(stack));
  CHECK(ctx.cell_length == 446.0);
  CHECK(ctx.k_a * 165.0 == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(ctx.k_b * 281.0 == doctest::Approx(kPi / 2).epsilon(1e-3));
  CHECK(ctx.lambda_vac == doctest::Approx(1551.0).epsilon(1e-12));
  CHECK(ctx.big_k == doctest::Approx(2 * kPi / ctx.lambda_vac).epsilon(1e-14));
  CHECK(ctx.k_a == doctest::Approx(2.35 * ctx.big_k).epsilon(1e-14));
  CHECK(ctx.k_b == doctest::Approx(1.38 * ctx.big_k).epsilon(1e-14));
  CHECK((ctx.energy - ctx.v_a) / kSpeedOfLight * 1e-9 == doctest::Approx(ctx.k_a).epsilon(1e-14));
}

TEST_CASE("vacuum stack has equal wavenumbers")
{
  const StackSpec vac{{1.0, 100.0}, {1.0, 200.0}, 3, 1.0};
  const WaveContext ctx = make_wave_context(vac, kOmega1551);
  CHECK(ctx.k_a == ctx.big_k);
  CHECK(ctx.k_b == ctx.big_k);
}

TEST_CASE("property: scaling lengths by s and omega by 1/s keeps phases")
{
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> s(0.1, 20.0);
  for (int i = 0; i < 200; ++i)
  {
    StackSpec stack = oracle::random_stack(rng);
    const double omega = oracle::random_omega(rng);
    const double scale = s(rng);
    const WaveContext c1 = make_wave_context(stack, omega);
    stack.layer_a.thickness_nm *= scale;
    stack.layer_b.thickness_nm *= scale;
    const WaveContext c2 = make_wave_context(stack, omega / scale);
    CHECK(oracle::rel_diff(c2.k_a * c2.thickness_a, c1.k_a * c1.thickness_a) < 1e-14);
    CHECK(oracle::rel_diff(c2.k_b * c2.thickness_b, c1.k_b * c1.thickness_b) < 1e-14);
    CHECK(oracle::rel_diff(c2.big_k * c2.cell_length, c1.big_k * c1.cell_length) < 1e-14);
  }
}

TEST_CASE("stack validation names the offending field")
{
  StackSpec s = StackSpec::reference();
  s.periods = 0;
  CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("periods"), InvalidParameter);
  s = StackSpec::reference();
  s.layer_b.thickness_nm = -1.0;
  CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("b_nm"), InvalidParameter);
  s = StackSpec::reference();
  s.ambient_index = 1.5;
  CHECK_THROWS_AS(s.validate(), InvalidParameter);
  CHECK_THROWS_AS(make_wave_context(StackSpec::reference(), -5.0), InvalidParameter);
}
