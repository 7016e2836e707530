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

#include "oracles.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace qpc;
using qpc::classical::classical_transmissivity;
using qpc::classical::layer_characteristic;

namespace
{

const StackSpec kReference = StackSpec::reference();
const double kQuarterWave = quarter_wave_omega(kReference);

} // namespace

TEST_CASE("layer characteristic matrix")
{
  SUBCASE("full-wave layer is the identity up to sign")
  {
    // n d = lambda  =>  delta = 2 pi
    const double omega = omega_from_wavelength(600.0);
    const Matrix2 m = layer_characteristic(1.5, 400.0, omega).inner;
    CHECK(max_abs_difference(m, Matrix2::identity()) < 1e-12);
  }
  SUBCASE("half-wave layer is minus the identity")
  {
    const double omega = omega_from_wavelength(600.0);
    const Matrix2 m = layer_characteristic(2.0, 150.0, omega).inner;
    CHECK(max_abs_difference(m, Complex(-1.0) * Matrix2::identity()) < 1e-12);
  }
  SUBCASE("quarter-wave layer swaps the field components")
  {
    const Matrix2 m = layer_characteristic(2.35, 165.0, kQuarterWave).inner;
    CHECK(std::abs(m.m11) < 1e-12);
    CHECK(std::abs(m.m22) < 1e-12);
    CHECK(std::abs(m.m12 - Complex(0.0, 1.0 / 2.35)) < 1e-12);
    CHECK(std::abs(m.m21 - Complex(0.0, 2.35)) < 1e-12);
  }
  SUBCASE("unimodular")
  {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> n(1.0, 4.0), d(1.0, 1000.0);
    for (int i = 0; i < 500; ++i)
    {
      const Matrix2 m = layer_characteristic(n(rng), d(rng), oracle::random_omega(rng)).inner;
      CHECK(std::abs(determinant(m) - 1.0) < 1e-12);
    }
  }
  SUBCASE("rejects non-physical input")
  {
    CHECK_THROWS_AS(layer_characteristic(0.0, 100.0, 1e15), InvalidParameter);
    CHECK_THROWS_AS(layer_characteristic(1.5, -1.0, 1e15), InvalidParameter);
    CHECK_THROWS_AS(layer_characteristic(1.5, 100.0, 0.0), InvalidParameter);
  }
}

TEST_CASE("classical stack response")
{
  SUBCASE("vacuum stack is transparent")
  {
    const StackSpec vac{{1.0, 100.0}, {1.0, 250.0}, 6, 1.0};
    for (double f : {0.3, 0.77, 1.0, 1.9})
    {
      const auto res = classical_transmissivity(vac, f * kQuarterWave);
      CHECK(std::abs(res.transmissivity - 1.0) < 1e-12);
      CHECK(res.reflectivity < 1e-12);
    }
  }
  SUBCASE("single slab agrees with the Fabry-Perot formula")
  {
    std::mt19937_64 rng(8);
    for (double n : {1.5, 2.35, 3.7})
      for (int i = 0; i < 200; ++i)
      {
        const StackSpec s{{n, 120.0}, {n, 200.0}, 3, 1.0};
        const double omega = oracle::random_omega(rng);
        CHECK(std::abs(classical_transmissivity(s, omega).transmissivity -
                       oracle::fabry_perot_t(n, s.total_length(), omega)) < 1e-10);
      }
  }
  SUBCASE("energy conservation on random stacks")
  {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i)
    {
      const auto res = classical_transmissivity(oracle::random_stack(rng), oracle::random_omega(rng));
      CHECK(std::abs(res.transmissivity + res.reflectivity - 1.0) < 1e-10);
      CHECK(res.transmissivity >= 0.0);
      CHECK(std::abs(std::norm(res.t) - res.transmissivity) < 1e-15);
    }
  }
  SUBCASE("quarter-wave mirror")
  {
    const auto res = classical_transmissivity(kReference, kQuarterWave);
    CHECK(res.transmissivity < 0.01);
    // closed form for an ideal quarter-wave stack between vacuum
    const double p = std::pow(2.35 / 1.38, 2 * 8);
    const double r = (1.0 - p) / (1.0 + p);
    // the B layer is not exactly quarter-wave (1.38 * 281 != 2.35 * 165)
    CHECK(res.reflectivity == doctest::Approx(r * r).epsilon(1e-3));
  }
  SUBCASE("agrees with direct integration of the wave equation")
  {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 5; ++i)
    {
      StackSpec s = oracle::random_stack(rng);
      s.periods = std::min(s.periods, 4);
      const double omega = oracle::random_omega(rng);
      const auto ode = oracle::integrate_stack(s, omega, 3000);
      CHECK(std::abs(classical_transmissivity(s, omega).transmissivity - ode.transmissivity) < 1e-6);
    }
  }
}
