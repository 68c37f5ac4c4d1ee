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

// Empirical oracle for the closed-form bounds: i.i.d. block-fading channels,
// the pilot/data protocol with MMSE estimation, and per-user SINRs of the
// MRC, ZF and MMSE linear receivers.
//
// Receivers act on G = H_hat / sigma_hat, whose entries are unit-variance,
// with every power and estimation effect folded into the scalar rho. The
// estimation error is treated as independent Gaussian noise of variance
// sigma_v^2, which is the quantity the closed-form bounds lower-bound.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mmimo/errors.hpp"
#include "mmimo/model.hpp"
#include "mmimo/rng.hpp"
#include "mmimo/slope.hpp"

namespace mmimo {

using CMatrix = Eigen::MatrixXcd;

/// Condition number of G^H G above which a ZF trial is resampled.
inline constexpr double kZfConditionLimit = 1e12;

class SingularMatrixError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

struct ChannelRealization {
    CMatrix H;  ///< M x K, i.i.d. CN(0, 1)
};

struct EstimationOutput {
    CMatrix H_hat;
    CMatrix H_tilde;  ///< H - H_hat
    EstimationVariances variances;
};

struct McOptions {
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    unsigned threads = 0;  ///< 0: default_thread_count()
};

struct EmpiricalRate {
    double mean_per_user_rate = 0.0;  ///< includes the (1 - K/T) prelog
    double std_error = 0.0;
    std::size_t trials = 0;
    Receiver receiver = Receiver::MRC;
    std::size_t resamples = 0;  ///< ZF trials redrawn for ill-conditioning
};

ChannelRealization gen_channel(int M, int K, SubstreamRng& rng);
ChannelRealization gen_channel(int M, int K, TrialStream stream);

/// Pilot phase with Phi = sqrt(E) I_K: Y_p = sqrt(E) H + N and
/// H_hat = sqrt(E) / (E + 1) Y_p. Noise is drawn from `rng`. Entries of
/// gen_channel output and of H_hat sit on a 2^-44 grid, which makes
/// H_hat + H_tilde == H exact for channels produced by gen_channel.
EstimationOutput simulate_training(const CMatrix& H, double E, SubstreamRng& rng);

Eigen::VectorXd sinr_mrc(const CMatrix& G, double rho);

/// rho / [(G^H G)^-1]_kk. Throws SingularMatrixError when G^H G is
/// numerically singular (condition number above kZfConditionLimit).
Eigen::VectorXd sinr_zf(const CMatrix& G, double rho);

/// rho g_k^H (rho sum_{i != k} g_i g_i^H + I)^-1 g_k.
Eigen::VectorXd sinr_mmse(const CMatrix& G, double rho);

Eigen::VectorXd receiver_sinr(Receiver receiver, const CMatrix& G, double rho);

/// Per-trial user-averaged rates, before the prelog, in trial order.
struct TrialRates {
    std::vector<double> per_trial;
    std::size_t resamples = 0;
};

/// Runs the training/data protocol `opts.trials` times. Each trial draws from
/// TrialStream{opts.seed, trial}, so output is independent of thread count.
TrialRates simulate_trial_rates(Receiver receiver, const SystemParams& params,
                                const EnergySplit& split, const McOptions& opts);

/// Ergodic per-user rate (1 - K/T) E[mean_k log2(1 + SINR_k)] with its
/// standard error. Requires at least 100 trials.
EmpiricalRate empirical_rate(Receiver receiver, const SystemParams& params,
                             const EnergySplit& split, const McOptions& opts);

/// (1 - K_active/T) E[log2 det(I + rho G G^H)] for an M x K_active Gaussian G,
/// i.e. the coherent MAC sum rate with perfect receiver CSI.
RateReport coherent_mac_sum_rate(double rho, int M, int K_active, int T, const McOptions& opts);

/// Slope of the empirical PER-USER rate against log2(P) under the equal-power
/// split E = K P, P_d = P. The same seed is used at every grid point (common
/// random numbers), so the slope carries little sampling noise.
SlopeEstimate equal_power_empirical_slope(Receiver receiver, int M, int K, int T,
                                          std::span<const double> p_grid, const McOptions& opts);

/// equal_power_empirical_slope for the MMSE receiver at K = M.
SlopeEstimate mmse_saturation_probe(int M, int T, std::span<const double> p_grid,
                                    const McOptions& opts);

}  // namespace mmimo
