// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// Transmit power needed to hold a per-user rate as the array grows.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmimo/model.hpp"

namespace mmimo {

enum class PowerMethod { Asymptotic, ExactBisection };

struct PowerSolveResult {
    double P_required = 0.0;
    PowerMethod method = PowerMethod::Asymptotic;
    double achieved_rate = 0.0;  ///< exact method only
    double target_rate = 0.0;
};

/// Bisection bracket and tolerances of the exact solver.
inline constexpr double kPowerBracketLo = 1e-12;
inline constexpr double kPowerBracketHi = 1e6;
inline constexpr int kPowerBisectionIterations = 200;
inline constexpr double kPowerRateTolerance = 1e-9;  // relative

/// rho_0 = 2^(R / (1 - K/T)) - 1, the SNR at which the per-user prelog rate
/// equals R.
double target_rho_for_rate(double R, int K, int T);

/// P = sqrt(4 rho_0 (T - K) / (M T^2)). Valid for M >> K; quartering M halves P.
PowerSolveResult required_power_asymptotic(double rho_0, int M, int K, int T);

/// Smallest P whose optimally split effective SNR gives per-user rate R under
/// the MRC or ZF bound with M antennas. Geometric bisection over
/// [kPowerBracketLo, kPowerBracketHi]; throws NumericalError when R is not
/// reachable at the upper bracket.
PowerSolveResult required_power_exact(double R, int M, int K, int T, Receiver receiver);

/// Per-user rate of the MRC/ZF bound at the grid-optimal split for power P.
double optimized_rate(double P, int M, int K, int T, Receiver receiver);

struct PowerSweepRow {
    int M = 0;
    std::optional<PowerSolveResult> exact;  ///< empty when the solver failed
    PowerSolveResult asymptotic;
    double ratio = 0.0;  ///< P_exact / P_asymptotic (NaN when exact is empty)
    std::string error;
};

/// One row per M in input order; rows are solved concurrently. Solver
/// failures are annotated per row. Throws DomainError if m_values is not
/// strictly increasing or some M <= K.
std::vector<PowerSweepRow> power_sweep(double R, int K, int T, Receiver receiver,
                                       std::span<const int> m_values, unsigned threads = 0);

}  // namespace mmimo
