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

// Scenario types and the closed-form quantities of a single-cell uplink with
// pilot-based MMSE channel estimation. All powers are linear and relative to
// unit noise variance; rates are in bits per channel use.

#include <cstdint>
#include <string_view>

namespace mmimo {

/// One scenario: M receive antennas, K single-antenna users, coherence
/// interval of T channel uses, average per-user transmit power P.
struct SystemParams {
    int M = 1;
    int K = 1;
    int T = 1;
    double P = 0.0;
};

/// Energy split for one coherence interval. `E + P_d * (T - K) == P * T`.
struct EnergySplit {
    double alpha_train = 0.0;  ///< E / (P T)
    double E = 0.0;            ///< training energy per user
    double P_d = 0.0;          ///< data-phase power per symbol per user
};

struct EstimationVariances {
    double sigma2_hat = 0.0;    ///< per-entry variance of the estimate
    double sigma2_tilde = 1.0;  ///< per-entry variance of the estimation error
};

struct EffectiveSnr {
    double rho = 0.0;
};

enum class Receiver { MRC, ZF, MMSE, CoherentMac };

std::string_view to_string(Receiver r);

struct RateReport {
    Receiver receiver = Receiver::MRC;
    double per_user_rate = 0.0;
    double total_rate = 0.0;
    int active_users = 0;
    double std_error = 0.0;  ///< zero for closed-form reports
};

/// Checks M, K, T >= 1 and P >= 0; with `needs_training` also K <= M and K < T.
/// Throws DomainError naming the first violated constraint.
SystemParams validate_params(const SystemParams& p, bool needs_training);

EstimationVariances estimation_variances(double E);

/// P_d = (P T - E) / (T - K).
double data_power(double P, int T, int K, double E);

/// Builds a split from the training energy, enforcing energy conservation.
EnergySplit make_split(double P, int T, int K, double E);

/// Variance of each entry of the equivalent noise (self-interference from
/// the estimation error plus thermal noise): K P_d / (E + 1) + 1.
double noise_variance_equiv(double P_d, double E, int K);

/// rho = P_d E / (K P_d + E + 1).
EffectiveSnr effective_snr(double P_d, double E, int K);

/// Equal-power scheme E = K P, P_d = P: rho = K P^2 / (2 K P + 1).
EffectiveSnr effective_snr_equal_power(double P, int K);

/// (1 - K/T) log2(1 + rho (M-1) / (rho (K-1) + 1)) per user.
RateReport rate_mrc(double rho, int M, int K, int T);

/// (1 - K/T) log2(1 + rho (M-K)) per user. M == K gives 0; M < K throws.
RateReport rate_zf(double rho, int M, int K, int T);

}  // namespace mmimo
