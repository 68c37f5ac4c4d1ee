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

#include "mmimo/dof.hpp"

#include <algorithm>

#include "mmimo/errors.hpp"

namespace mmimo {

int k_star(int M, int K, int T) {
    validate_params({M, K, T, 0.0}, false);
    return std::min({M, K, T / 2});
}

DofResult dof_total(int M, int K, int T) {
    const int ks = k_star(M, K, T);
    return {ks, ks * (1.0 - static_cast<double>(ks) / T)};
}

namespace {

double equal_power_rho(double P, int active) {
    if (!(P >= 0.0)) throw DomainError("P ≥ 0 violated");
    return P == 0.0 ? 0.0 : effective_snr_equal_power(P, active).rho;
}

}  // namespace

RateReport achievable_rate_equal_power_zf(double P, int M, int K, int T) {
    const int ks = k_star(M, K, T);
    if (ks < 1) throw DomainError("no user can be scheduled (K* = 0)");
    if (ks >= M) throw DomainError("K* < M violated: zero-forcing achievability needs K* < M");
    return rate_zf(equal_power_rho(P, ks), M, ks, T);
}

RateReport achievable_rate_equal_power_mrc(double P, int M, int K, int T) {
    const int ks = k_star(M, K, T);
    if (ks < 1) throw DomainError("no user can be scheduled (K* = 0)");
    return rate_mrc(equal_power_rho(P, ks), M, ks, T);
}

bool rho_floor_check(double P, int K) {
    return effective_snr_equal_power(P, K).rho > P / 3.0;
}

std::vector<double> default_dof_grid() { return geometric_grid(0x1.0p10, 0x1.0p30, 4.0); }

SlopeEstimate dof_slope_estimate(SlopeScheme scheme, int M, int K, int T,
                                 std::span<const double> p_grid, const McOptions& mc) {
    validate_power_grid(p_grid);
    SlopeEstimate est;
    est.scheme = scheme;
    est.p_grid.assign(p_grid.begin(), p_grid.end());
    const int ks = k_star(M, K, T);
    for (double P : p_grid) {
        double total = 0.0;
        switch (scheme) {
            case SlopeScheme::ZfEqualPower:
                total = achievable_rate_equal_power_zf(P, M, K, T).total_rate;
                break;
            case SlopeScheme::MrcEqualPower:
                total = achievable_rate_equal_power_mrc(P, M, K, T).total_rate;
                break;
            case SlopeScheme::CoherentMac:
                total = coherent_mac_sum_rate(equal_power_rho(P, ks), M, ks, T, mc).total_rate;
                break;
            case SlopeScheme::MmseEqualPower: {
                const SystemParams params{M, ks, T, P};
                const EnergySplit split = make_split(P, T, ks, ks * P);
                total = ks * empirical_rate(Receiver::MMSE, params, split, mc).mean_per_user_rate;
                break;
            }
        }
        est.r_values.push_back(total);
    }
    est.slope = log2_regression_slope(est.p_grid, est.r_values);
    return est;
}

}  // namespace mmimo
