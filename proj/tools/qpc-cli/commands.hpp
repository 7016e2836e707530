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

#include "config.hpp"

#include <ostream>

namespace qpc::cli
{

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1; // I/O error or failed invariant check
inline constexpr int kExitUsage = 2;   // bad flags or config

// Tolerances applied to every spectrum before it is written.
inline constexpr double kConservationTolerance = 1e-10;
inline constexpr double kIdentityTolerance = 1e-8;

// CSV of the quantum and classical spectra plus the dispersion right-hand side.
int cmd_spectrum(const RunConfig &config, std::ostream &out, std::ostream &err);

// CSV of the Bloch band structure.
int cmd_dispersion(const RunConfig &config, std::ostream &out, std::ostream &err);

// JSON report of gap counts and widths across a parameter family.
int cmd_trends(const RunConfig &config, std::ostream &out, std::ostream &err);

// Prints max |T_quantum - T_classical|; nonzero exit if >= kIdentityTolerance.
int cmd_compare(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace qpc::cli
