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

// Optimal division of a user's per-interval energy P*T between the K pilot
// slots and the T-K data slots.
//
// Throughout, alpha is the TRAINING fraction E/(P T). The effective SNR as a
// function of alpha is the rational function
//
//     rho(alpha) = (P T)^2 alpha (1 - alpha) / (alpha P T (T - 2K) + K P T + T - K)
//
// whose denominator is positive on [0, 1], so rho is unimodal there.

#include <optional>

#include "mmimo/model.hpp"

namespace mmimo {

enum class SplitMethod { ClosedForm, Grid };

struct SplitSolution {
    double alpha_train = 0.0;
    double E = 0.0;
    double P_d = 0.0;
    double rho_star = 0.0;
    SplitMethod method = SplitMethod::ClosedForm;

    EnergySplit split() const { return {alpha_train, E, P_d}; }
};

/// Rational form of rho(alpha).
EffectiveSnr rho_of_alpha(double alpha, double P, int T, int K);

/// The same quantity through data_power() and effective_snr(). Kept as a
/// separate code path so the two can be checked against each other.
EffectiveSnr rho_of_alpha_composed(double alpha, double P, int T, int K);

/// gamma = (1 + P T)(T - K) / (P T (T - 2K)); undefined at T == 2K.
double gamma_aux(double P, int T, int K);

/// Closed-form maximizer. rho_star uses the piecewise expressions in gamma;
/// alpha_train is the root of the stationarity quadratic in (0, 1).
SplitSolution optimal_split_closed_form(double P, int T, int K);

/// Brute-force oracle: scans alpha on a uniform grid of the given step, then
/// refines the best cell by golden-section search to 1e-10.
SplitSolution optimal_split_grid(double P, int T, int K, double resolution = 1e-4);

struct AsymptoticSplit {
    double alpha = 0.0;  ///< see the per-function note on which fraction this is
    double rho = 0.0;
};

/// High-SNR limit (valid for P T >> 1). `alpha` is the DATA-phase energy
/// fraction sqrt(T-K) / (sqrt(T-K) + sqrt(K)); `rho` holds rho/P.
AsymptoticSplit asymptotic_split_high_snr(int T, int K);

/// Low-SNR limit (valid for P T << 1): alpha = 1/2, rho = (P T)^2 / (4 (T - K)).
AsymptoticSplit asymptotic_split_low_snr(double P, int T, int K);

}  // namespace mmimo
