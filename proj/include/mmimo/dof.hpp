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

// Degrees of freedom without receiver CSI: the K* = min(M, K, floor(T/2))
// characterization, the equal-power achievability scheme, and slope
// estimators that recover the DoF from rate curves at high SNR.

#include <span>
#include <vector>

#include "mmimo/model.hpp"
#include "mmimo/montecarlo.hpp"
#include "mmimo/slope.hpp"

namespace mmimo {

struct DofResult {
    int k_star = 0;
    double dof_total = 0.0;  ///< K* (1 - K*/T)
};

int k_star(int M, int K, int T);

DofResult dof_total(int M, int K, int T);

/// Activates the first K* users (the rest stay silent), trains with E = K* P,
/// sends data at P_d = P, and zero-forces. Requires K* < M.
RateReport achievable_rate_equal_power_zf(double P, int M, int K, int T);

/// Same scheme with MRC in place of ZF. Saturates at high SNR when K* > 1.
RateReport achievable_rate_equal_power_mrc(double P, int M, int K, int T);

/// True iff the equal-power effective SNR strictly exceeds P/3.
bool rho_floor_check(double P, int K);

/// Default high-SNR window: P = 2^10, 2^12, ..., 2^30.
std::vector<double> default_dof_grid();

/// Least-squares slope of the TOTAL rate of `scheme` against log2(P). The
/// coherent-MAC scheme uses K* active users at the equal-power effective SNR
/// and needs `mc`; the closed-form schemes ignore it.
SlopeEstimate dof_slope_estimate(SlopeScheme scheme, int M, int K, int T,
                                 std::span<const double> p_grid, const McOptions& mc = {});

}  // namespace mmimo
