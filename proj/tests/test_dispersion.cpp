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

#include "qpc/dispersion.hpp"
#include "qpc/error.hpp"

#include "oracles.hpp"

#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

using namespace qpc;

namespace
{

const StackSpec kReference = StackSpec::reference();
const double kQuarterWave = quarter_wave_omega(kReference);

std::vector<double> grid(double lo, double hi, int n)
{
  std::vector<double> g;
  for (int i = 0; i < n; ++i)
    g.push_back((lo + (hi - lo) * i / (n - 1)) * kQuarterWave);
  return g;
}

// Unit-cell boundary system, built independently of the library.
oracle::cd normalized_det_oracle(const WaveContext &c, double k)
{
  using oracle::cd;
  const auto e = [](double t) { return std::exp(cd(0.0, t)); };
  const double a = c.thickness_a, L = c.cell_length, ka = c.k_a, kb = c.k_b;
  std::array<std::array<cd, 4>, 4> m{{
      {e(ka * a), e(-ka * a), -e(kb * a), -e(-kb * a)},
      {ka * e(ka * a), -ka * e(-ka * a), -kb * e(kb * a), kb * e(-kb * a)},
      {e(k * L), e(k * L), -e(kb * L), -e(-kb * L)},
      {ka * e(k * L), -ka * e(k * L), -kb * e(kb * L), kb * e(-kb * L)},
  }};
  double scale = 1.0;
  for (const auto &row : m)
  {
    double mx = 0.0;
    for (const cd &v : row)
      mx = std::max(mx, std::abs(v));
    scale *= mx;
  }
  return oracle::det_elimination(m) / scale;
}

} // namespace

TEST_CASE("dispersion rhs")
{
  SUBCASE("vacuum reduces to cos(K L)")
  {
    const StackSpec vac{{1.0, 130.0}, {1.0, 270.0}, 4, 1.0};
    for (double omega : grid(0.2, 3.0, 40))
    {
      const WaveContext c = make_wave_context(vac, omega);
      CHECK(dispersion_rhs(c, DispersionVariant::corrected) ==
            doctest::Approx(std::cos(c.big_k * 400.0)).epsilon(1e-13));
    }
  }
  SUBCASE("quarter-wave point of the reference stack")
  {
    const WaveContext c = make_wave_context(kReference, kQuarterWave);
    CHECK(std::abs(dispersion_rhs(c, DispersionVariant::corrected) - (-1.14507)) < 1e-4);
    const double exact = -0.5 * (2.35 / 1.38 + 1.38 / 2.35);
    CHECK(std::abs(dispersion_rhs(c, DispersionVariant::corrected) - exact) < 1e-5);
    // 1/k_A = 105.04 nm, 1/k_B = 178.86 nm
    CHECK(1.0 / c.k_a == doctest::Approx(105.04).epsilon(1e-4));
    CHECK(1.0 / c.k_b == doctest::Approx(178.86).epsilon(1e-4));
    CHECK(dispersion_rhs(c, DispersionVariant::as_printed) == doctest::Approx(-141.95).epsilon(1e-4));
  }
  SUBCASE("symmetric under swapping the two layers")
  {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i)
    {
      const StackSpec s = oracle::random_stack(rng);
      const StackSpec swapped{s.layer_b, s.layer_a, s.periods, 1.0};
      const double omega = oracle::random_omega(rng);
      for (DispersionVariant v : {DispersionVariant::corrected, DispersionVariant::as_printed})
      {
        const double r1 = dispersion_rhs(make_wave_context(s, omega), v);
        const double r2 = dispersion_rhs(make_wave_context(swapped, omega), v);
        CHECK(std::abs(r1 - r2) <= 1e-12 * std::max(1.0, std::abs(r1)));
      }
    }
  }
}

TEST_CASE("bloch solve")
{
  SUBCASE("vacuum Bloch vector equals K on the first zone")
  {
    const StackSpec vac{{1.0, 130.0}, {1.0, 270.0}, 4, 1.0};
    for (double omega : grid(0.05, 1.2, 30))
    {
      const WaveContext c = make_wave_context(vac, omega);
      if (c.big_k * c.cell_length > kPi)
        continue;
      const DispersionPoint p = bloch_solve(c, DispersionVariant::corrected);
      REQUIRE(p.bloch_k.has_value());
      CHECK(*p.bloch_k == doctest::Approx(c.big_k).epsilon(1e-7));
      CHECK_FALSE(p.in_gap);
    }
  }
  SUBCASE("quarter-wave point lies in a gap")
  {
    const DispersionPoint p =
        bloch_solve(make_wave_context(kReference, kQuarterWave), DispersionVariant::corrected);
    CHECK(p.in_gap);
    REQUIRE(p.evanescent_decay.has_value());
    CHECK(std::abs(*p.evanescent_decay - std::log(2.35 / 1.38)) < 1e-4);
    CHECK(std::abs(*p.evanescent_decay - 0.532332) < 1e-6);
    CHECK(p.bloch_phase == doctest::Approx(kPi));
    CHECK_FALSE(p.bloch_k.has_value());
  }
  SUBCASE("|rhs| = 1 counts as propagating")
  {
    WaveContext c;
    c.omega = 1.0;
    c.k_a = c.k_b = 1.0;
    c.thickness_a = c.thickness_b = 2.0 * kPi;
    c.cell_length = 4.0 * kPi;
    REQUIRE(dispersion_rhs(c, DispersionVariant::corrected) == 1.0);
    const DispersionPoint p = bloch_solve(c, DispersionVariant::corrected);
    CHECK_FALSE(p.in_gap);
    REQUIRE(p.bloch_k.has_value());
    CHECK(*p.bloch_k == 0.0);
  }
  SUBCASE("invariants over random stacks")
  {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i)
    {
      const StackSpec s = oracle::random_stack(rng);
      const WaveContext c = make_wave_context(s, oracle::random_omega(rng));
      const DispersionPoint p = bloch_solve(c, DispersionVariant::corrected);
      CHECK(p.in_gap == (std::abs(p.rhs) > 1.0));
      if (p.in_gap)
        CHECK(std::cosh(*p.evanescent_decay) ==
              doctest::Approx(std::abs(p.rhs)).epsilon(1e-12));
      else
      {
        CHECK(std::abs(std::cos(*p.bloch_k * c.cell_length) - p.rhs) < 1e-12);
        CHECK(*p.bloch_k >= 0.0);
        CHECK(*p.bloch_k <= kPi / c.cell_length);
      }
    }
  }
}

TEST_CASE("boundary determinant")
{
  SUBCASE("vacuum with k = K")
  {
    const StackSpec vac{{1.0, 130.0}, {1.0, 270.0}, 4, 1.0};
    const WaveContext c = make_wave_context(vac, 0.7 * kQuarterWave);
    CHECK(std::abs(dispersion_determinant(c, c.big_k)) < 1e-10);
  }
  SUBCASE("matches an elimination-based evaluation")
  {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> kk(0.0, 0.02);
    for (int i = 0; i < 200; ++i)
    {
      const StackSpec s = oracle::random_stack(rng);
      const WaveContext c = make_wave_context(s, oracle::random_omega(rng));
      const double k = kk(rng);
      CHECK(std::abs(dispersion_determinant(c, k) - normalized_det_oracle(c, k)) < 1e-12);
    }
  }
  SUBCASE("vanishes at the corrected Bloch vector, not at the printed one")
  {
    int printed_tested = 0;
    int printed_nonzero = 0;
    for (double omega : grid(0.25, 2.0, 4000))
    {
      const WaveContext c = make_wave_context(kReference, omega);
      const DispersionPoint fixed = bloch_solve(c, DispersionVariant::corrected);
      if (fixed.bloch_k)
        CHECK(std::abs(dispersion_determinant(c, *fixed.bloch_k)) < 1e-8);
      const DispersionPoint printed = bloch_solve(c, DispersionVariant::as_printed);
      if (printed.bloch_k)
      {
        ++printed_tested;
        printed_nonzero += std::abs(dispersion_determinant(c, *printed.bloch_k)) > 1e-4;
      }
    }
    REQUIRE(printed_tested > 50);
    CHECK(printed_nonzero >= 0.9 * printed_tested);
  }
  SUBCASE("vanishes at the corrected Bloch vector for random stacks")
  {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i)
    {
      const StackSpec s = oracle::random_stack(rng);
      const WaveContext c = make_wave_context(s, oracle::random_omega(rng));
      const DispersionPoint p = bloch_solve(c, DispersionVariant::corrected);
      if (p.bloch_k)
        CHECK(std::abs(dispersion_determinant(c, *p.bloch_k)) < 1e-8);
    }
  }
}

TEST_CASE("band structure")
{
  SUBCASE("vacuum has no gaps")
  {
    const StackSpec vac{{1.0, 130.0}, {1.0, 270.0}, 4, 1.0};
    for (const DispersionPoint &p :
         band_structure(vac, grid(0.1, 3.0, 500), DispersionVariant::corrected))
      CHECK_FALSE(p.in_gap);
  }
  SUBCASE("reference stack has a contiguous gap around the quarter-wave point")
  {
    const std::vector<double> g = grid(0.3, 1.7, 1401);
    const std::vector<DispersionPoint> pts =
        band_structure(kReference, g, DispersionVariant::corrected);
    const std::size_t centre = 700; // omega = omega_qw
    REQUIRE(pts[centre].in_gap);
    std::size_t lo = centre, hi = centre;
    while (lo > 0 && pts[lo - 1].in_gap)
      --lo;
    while (hi + 1 < pts.size() && pts[hi + 1].in_gap)
      ++hi;
    CHECK(lo > 0);
    CHECK(hi + 1 < pts.size());
    // Edges of the first stop band (from the prototype sweep: ~0.8325 and ~1.1674).
    CHECK(g[lo] / kQuarterWave == doctest::Approx(0.8325).epsilon(2e-3));
    CHECK(g[hi] / kQuarterWave == doctest::Approx(1.1674).epsilon(2e-3));
  }
  SUBCASE("grid must be strictly increasing and positive")
  {
    const std::vector<double> bad{1e15, 1e15};
    CHECK_THROWS_AS(band_structure(kReference, bad, DispersionVariant::corrected),
                    InvalidParameter);
    const std::vector<double> neg{-1.0, 1e15};
    CHECK_THROWS_AS(band_structure(kReference, neg, DispersionVariant::corrected),
                    InvalidParameter);
  }
}

TEST_CASE("variant names")
{
  CHECK(parse_variant("corrected") == DispersionVariant::corrected);
  CHECK(parse_variant("as-printed") == DispersionVariant::as_printed);
  CHECK(parse_variant("as_printed") == DispersionVariant::as_printed);
  CHECK(to_string(DispersionVariant::as_printed) == "as_printed");
  CHECK_THROWS_AS(parse_variant("fixed"), InvalidParameter);
}
