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

#include "mmimo/power.hpp"

#include <cmath>
#include <limits>

#include "mmimo/errors.hpp"
#include "mmimo/parallel.hpp"
#include "mmimo/split.hpp"

namespace mmimo {

double target_rho_for_rate(double R, int K, int T) {
    if (!(R >= 0.0)) throw DomainError("R ≥ 0 violated");
    if (K < 1 || K >= T) throw DomainError("K < T violated");
    return std::exp2(R / (1.0 - static_cast<double>(K) / T)) - 1.0;
}

PowerSolveResult required_power_asymptotic(double rho_0, int M, int K, int T) {
    if (M < 1) throw DomainError("M ≥ 1 violated");
    if (K < 1 || K >= T) throw DomainError("K < T violated");
    if (!(rho_0 >= 0.0)) throw DomainError("rho_0 ≥ 0 violated");
    const double t = T;
    const double p = std::sqrt(4.0 * rho_0 * (T - K) / (M * t * t));
    return {p, PowerMethod::Asymptotic, 0.0, 0.0};
}

double optimized_rate(double P, int M, int K, int T, Receiver receiver) {
    const double rho = optimal_split_grid(P, T, K).rho_star;
    switch (receiver) {
        case Receiver::MRC: return rate_mrc(rho, M, K, T).per_user_rate;
        case Receiver::ZF: return rate_zf(rho, M, K, T).per_user_rate;
        default: break;
    }
    throw DomainError("power solver supports the MRC and ZF bounds only");
}

PowerSolveResult required_power_exact(double R, int M, int K, int T, Receiver receiver) {
    if (!(R > 0.0)) throw DomainError("R > 0 violated");
    if (receiver != Receiver::MRC && receiver != Receiver::ZF)
        throw DomainError("power solver supports the MRC and ZF bounds only");
    validate_params({M, K, T, 0.0}, true);
    if (receiver == Receiver::ZF && M <= K) throw DomainError("M > K violated (zero-forcing)");

    auto rate = [&](double P) { return optimized_rate(P, M, K, T, receiver); };
    double lo = kPowerBracketLo;
    double hi = kPowerBracketHi;
    if (rate(hi) < R)
        throw NumericalError("target rate " + std::to_string(R) +
                             " is unreachable at P = " + std::to_string(hi));
    if (rate(lo) >= R) return {lo, PowerMethod::ExactBisection, rate(lo), R};

    for (int i = 0; i < kPowerBisectionIterations && hi > lo * (1.0 + 1e-15); ++i) {
        const double mid = std::sqrt(lo * hi);
        if (mid <= lo || mid >= hi) break;
        (rate(mid) < R ? lo : hi) = mid;
    }
    const double achieved = rate(hi);
    if (std::abs(achieved - R) > kPowerRateTolerance * R)
        throw NumericalError("bisection did not reach the rate tolerance");
    return {hi, PowerMethod::ExactBisection, achieved, R};
}

std::vector<PowerSweepRow> power_sweep(double R, int K, int T, Receiver receiver,
                                       std::span<const int> m_values, unsigned threads) {
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        if (m_values[i] <= K) throw DomainError("M > K violated for M = " + std::to_string(m_values[i]));
        if (i > 0 && m_values[i] <= m_values[i - 1])
            throw DomainError("M values must be strictly increasing");
    }
    const double rho_0 = target_rho_for_rate(R, K, T);
    return parallel_map(m_values.size(), threads, [&](std::size_t i) {
        PowerSweepRow row;
        row.M = m_values[i];
        row.asymptotic = required_power_asymptotic(rho_0, row.M, K, T);
        row.asymptotic.target_rate = R;
        try {
            row.exact = required_power_exact(R, row.M, K, T, receiver);
            row.ratio = row.exact->P_required / row.asymptotic.P_required;
        } catch (const NumericalError& e) {
            row.error = e.what();
            row.ratio = std::numeric_limits<double>::quiet_NaN();
        }
        return row;
    });
}

}  // namespace mmimo
