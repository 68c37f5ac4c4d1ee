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

#include "mmimo/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mmimo/errors.hpp"

namespace mmimo {

std::string_view to_string(Receiver r) {
    switch (r) {
        case Receiver::MRC: return "mrc";
        case Receiver::ZF: return "zf";
        case Receiver::MMSE: return "mmse";
        case Receiver::CoherentMac: return "coherent-mac";
    }
    return "unknown";
}

SystemParams validate_params(const SystemParams& p, bool needs_training) {
    if (p.M < 1) throw DomainError("M ≥ 1 violated");
    if (p.K < 1) throw DomainError("K ≥ 1 violated");
    if (p.T < 1) throw DomainError("T ≥ 1 violated");
    if (!(p.P >= 0.0) || !std::isfinite(p.P)) throw DomainError("P ≥ 0 violated");
    if (needs_training) {
        if (p.K > p.M) throw DomainError("K ≤ M violated");
        if (p.K >= p.T) throw DomainError("K < T violated");
    }
    return p;
}

EstimationVariances estimation_variances(double E) {
    if (!(E >= 0.0)) throw DomainError("training energy E ≥ 0 violated");
    if (std::isinf(E)) return {1.0, 0.0};
    const double tilde = 1.0 / (E + 1.0);
    // 1 - tilde rounds differently from E/(E+1); keep the pair summing to one.
    return {1.0 - tilde, tilde};
}

double data_power(double P, int T, int K, double E) {
    if (K >= T) throw DomainError("K < T violated");
    if (!(P >= 0.0)) throw DomainError("P ≥ 0 violated");
    if (!(E >= 0.0)) throw DomainError("training energy E ≥ 0 violated");
    const double total = P * T;
    if (E > total) throw DomainError("E ≤ P·T violated (negative data power)");
    return (total - E) / static_cast<double>(T - K);
}

EnergySplit make_split(double P, int T, int K, double E) {
    const double P_d = data_power(P, T, K, E);
    const double total = P * T;
    return {total > 0.0 ? E / total : 0.0, E, P_d};
}

double noise_variance_equiv(double P_d, double E, int K) {
    if (!(P_d >= 0.0) || !(E >= 0.0) || K < 1)
        throw DomainError("noise_variance_equiv requires P_d ≥ 0, E ≥ 0, K ≥ 1");
    if (std::isinf(E)) return 1.0;
    return K * P_d / (E + 1.0) + 1.0;
}

EffectiveSnr effective_snr(double P_d, double E, int K) {
    if (!(P_d >= 0.0) || !(E >= 0.0) || K < 1)
        throw DomainError("effective_snr requires P_d ≥ 0, E ≥ 0, K ≥ 1");
    if (E == 0.0 || P_d == 0.0) return {0.0};
    return {P_d * E / (K * P_d + E + 1.0)};
}

EffectiveSnr effective_snr_equal_power(double P, int K) {
    if (!(P > 0.0) || K < 1) throw DomainError("effective_snr_equal_power requires P > 0, K ≥ 1");
    const double kp = K * P;
    return {P / (1.0 + (kp + 1.0) / kp)};
}

namespace {

void check_rate_args(double rho, int M, int K, int T) {
    if (M < 1) throw DomainError("M ≥ 1 violated");
    if (K < 1) throw DomainError("K ≥ 1 violated");
    if (K >= T) throw DomainError("K < T violated");
    if (!(rho >= 0.0)) throw DomainError("rho ≥ 0 violated");
}

RateReport symmetric_report(Receiver r, double per_user, int K) {
    return {r, per_user, per_user * K, K, 0.0};
}

}  // namespace

RateReport rate_mrc(double rho, int M, int K, int T) {
    check_rate_args(rho, M, K, T);
    const double prelog = 1.0 - static_cast<double>(K) / T;
    const double sinr = rho * (M - 1) / (rho * (K - 1) + 1.0);
    return symmetric_report(Receiver::MRC, prelog * std::log1p(sinr) / std::numbers::ln2, K);
}

RateReport rate_zf(double rho, int M, int K, int T) {
    check_rate_args(rho, M, K, T);
    if (M < K) throw DomainError("M ≥ K violated (zero-forcing needs M ≥ K)");
    const double prelog = 1.0 - static_cast<double>(K) / T;
    return symmetric_report(Receiver::ZF, prelog * std::log1p(rho * (M - K)) / std::numbers::ln2, K);
}

}  // namespace mmimo
