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

#include "mmimo/montecarlo.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mmimo/parallel.hpp"

namespace mmimo {

namespace {

constexpr int kMaxResamples = 100;

// Matrix samples live on a fixed binary grid so that H_hat, H and H - H_hat
// are all exactly representable and H_hat + H_tilde == H holds bit-for-bit.
constexpr double kGridScale = 0x1.0p44;

double snap(double x) { return std::nearbyint(x * kGridScale) / kGridScale; }
std::complex<double> snap(std::complex<double> z) { return {snap(z.real()), snap(z.imag())}; }

void fill_gaussian(CMatrix& m, SubstreamRng& rng) {
    // Column-major draw order is part of the reproducibility contract.
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, c) = snap(rng.complex_gaussian());
}

void check_receiver_input(const CMatrix& G, double rho) {
    if (G.rows() < 1 || G.cols() < 1) throw DomainError("receiver input must be non-empty");
    if (!(rho >= 0.0)) throw DomainError("rho ≥ 0 violated");
}

}  // namespace

ChannelRealization gen_channel(int M, int K, SubstreamRng& rng) {
    if (M < 1 || K < 1) throw DomainError("gen_channel requires M, K ≥ 1");
    ChannelRealization out{CMatrix(M, K)};
    fill_gaussian(out.H, rng);
    return out;
}

ChannelRealization gen_channel(int M, int K, TrialStream stream) {
    SubstreamRng rng(stream);
    return gen_channel(M, K, rng);
}

EstimationOutput simulate_training(const CMatrix& H, double E, SubstreamRng& rng) {
    const EstimationVariances var = estimation_variances(E);
    CMatrix N(H.rows(), H.cols());
    fill_gaussian(N, rng);
    EstimationOutput out;
    out.variances = var;
    if (E == 0.0) {
        out.H_hat = CMatrix::Zero(H.rows(), H.cols());
    } else {
        const double root_e = std::sqrt(E);
        out.H_hat = ((root_e / (E + 1.0)) * (root_e * H + N)).unaryExpr(
            [](std::complex<double> z) { return snap(z); });
    }
    out.H_tilde = H - out.H_hat;
    return out;
}

Eigen::VectorXd sinr_mrc(const CMatrix& G, double rho) {
    check_receiver_input(G, rho);
    const CMatrix gram = G.adjoint() * G;
    const Eigen::Index K = G.cols();
    Eigen::VectorXd sinr(K);
    for (Eigen::Index k = 0; k < K; ++k) {
        const double norm2 = gram(k, k).real();
        double interference = 0.0;
        for (Eigen::Index i = 0; i < K; ++i)
            if (i != k) interference += std::norm(gram(k, i));
        sinr(k) = rho == 0.0 ? 0.0 : rho * norm2 * norm2 / (rho * interference + norm2);
    }
    return sinr;
}

Eigen::VectorXd sinr_zf(const CMatrix& G, double rho) {
    check_receiver_input(G, rho);
    if (G.rows() < G.cols()) throw DomainError("zero-forcing needs M ≥ K");
    const CMatrix gram = G.adjoint() * G;
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(gram, Eigen::EigenvaluesOnly);
    const double lmin = eig.eigenvalues().minCoeff();
    const double lmax = eig.eigenvalues().maxCoeff();
    if (!(lmin > 0.0) || lmax / lmin > kZfConditionLimit)
        throw SingularMatrixError("G^H G is numerically singular");
    const CMatrix inv = gram.llt().solve(CMatrix::Identity(gram.rows(), gram.cols()));
    Eigen::VectorXd sinr(G.cols());
    for (Eigen::Index k = 0; k < G.cols(); ++k) sinr(k) = rho / inv(k, k).real();
    return sinr;
}

Eigen::VectorXd sinr_mmse(const CMatrix& G, double rho) {
    check_receiver_input(G, rho);
    const Eigen::Index M = G.rows();
    const Eigen::Index K = G.cols();
    Eigen::VectorXd sinr(K);
    if (rho == 0.0) return sinr.setZero();
    for (Eigen::Index k = 0; k < K; ++k) {
        CMatrix cov = CMatrix::Identity(M, M);
        for (Eigen::Index i = 0; i < K; ++i)
            if (i != k) cov.noalias() += rho * G.col(i) * G.col(i).adjoint();
        const Eigen::VectorXcd w = cov.llt().solve(G.col(k));
        sinr(k) = rho * G.col(k).dot(w).real();
    }
    return sinr;
}

Eigen::VectorXd receiver_sinr(Receiver receiver, const CMatrix& G, double rho) {
    switch (receiver) {
        case Receiver::MRC: return sinr_mrc(G, rho);
        case Receiver::ZF: return sinr_zf(G, rho);
        case Receiver::MMSE: return sinr_mmse(G, rho);
        case Receiver::CoherentMac: break;
    }
    throw DomainError("receiver has no per-user SINR form");
}

namespace {

void check_split(const SystemParams& p, const EnergySplit& s) {
    if (!(s.E >= 0.0) || !(s.P_d >= 0.0)) throw DomainError("split must have E ≥ 0 and P_d ≥ 0");
    const double total = p.P * p.T;
    const double spent = s.E + s.P_d * (p.T - p.K);
    if (std::abs(spent - total) > 1e-9 * std::max(1.0, total))
        throw DomainError("split violates energy conservation E + P_d (T - K) = P T");
}

}  // namespace

TrialRates simulate_trial_rates(Receiver receiver, const SystemParams& params,
                                const EnergySplit& split, const McOptions& opts) {
    validate_params(params, true);
    check_split(params, split);
    if (receiver == Receiver::CoherentMac) throw DomainError("use coherent_mac_sum_rate for the MAC");
    const double rho = effective_snr(split.P_d, split.E, params.K).rho;

    struct Outcome {
        double rate = 0.0;
        int resamples = 0;
    };
    auto run_trial = [&](std::size_t t) {
        SubstreamRng rng({opts.seed, t});
        Outcome out;
        for (;;) {
            const auto channel = gen_channel(params.M, params.K, rng);
            const auto est = simulate_training(channel.H, split.E, rng);
            if (rho == 0.0 || est.variances.sigma2_hat == 0.0) return out;
            const CMatrix G = est.H_hat / std::sqrt(est.variances.sigma2_hat);
            try {
                const Eigen::VectorXd sinr = receiver_sinr(receiver, G, rho);
                double acc = 0.0;
                for (Eigen::Index k = 0; k < sinr.size(); ++k) acc += std::log1p(sinr(k)) / std::numbers::ln2;
                out.rate = acc / static_cast<double>(sinr.size());
                return out;
            } catch (const SingularMatrixError&) {
                if (++out.resamples > kMaxResamples) throw;
            }
        }
    };

    const auto outcomes = parallel_map(opts.trials, opts.threads, run_trial);
    TrialRates result;
    result.per_trial.reserve(outcomes.size());
    for (const auto& o : outcomes) {
        result.per_trial.push_back(o.rate);
        result.resamples += static_cast<std::size_t>(o.resamples);
    }
    return result;
}

EmpiricalRate empirical_rate(Receiver receiver, const SystemParams& params,
                             const EnergySplit& split, const McOptions& opts) {
    if (opts.trials < 100) throw DomainError("empirical_rate needs at least 100 trials");
    const TrialRates tr = simulate_trial_rates(receiver, params, split, opts);
    const SampleStats st = sample_stats(tr.per_trial);
    const double prelog = 1.0 - static_cast<double>(params.K) / params.T;
    return {prelog * st.mean, prelog * st.std_error, st.count, receiver, tr.resamples};
}

RateReport coherent_mac_sum_rate(double rho, int M, int K_active, int T, const McOptions& opts) {
    if (M < 1 || K_active < 1) throw DomainError("coherent MAC requires M, K_active ≥ 1");
    if (T < 1) throw DomainError("T ≥ 1 violated");
    if (!(rho >= 0.0)) throw DomainError("rho ≥ 0 violated");
    if (opts.trials < 1) throw DomainError("trials ≥ 1 violated");
    const double prelog = std::max(0.0, 1.0 - static_cast<double>(K_active) / T);

    RateReport report{Receiver::CoherentMac, 0.0, 0.0, K_active, 0.0};
    if (rho == 0.0) return report;

    auto run_trial = [&](std::size_t t) {
        const auto channel = gen_channel(M, K_active, TrialStream{opts.seed, t});
        // det(I_M + rho G G^H) == det(I_K + rho G^H G)
        CMatrix inner = CMatrix::Identity(K_active, K_active);
        inner.noalias() += rho * channel.H.adjoint() * channel.H;
        const Eigen::LLT<CMatrix> llt(inner);
        double logdet = 0.0;
        for (int i = 0; i < K_active; ++i) logdet += std::log(llt.matrixLLT()(i, i).real());
        return 2.0 * logdet / std::numbers::ln2;
    };
    const auto samples = parallel_map(opts.trials, opts.threads, run_trial);
    const SampleStats st = sample_stats(samples);
    report.total_rate = prelog * st.mean;
    report.per_user_rate = report.total_rate / K_active;
    report.std_error = prelog * st.std_error;
    return report;
}

SlopeEstimate equal_power_empirical_slope(Receiver receiver, int M, int K, int T,
                                          std::span<const double> p_grid, const McOptions& opts) {
    validate_power_grid(p_grid);
    SlopeEstimate est;
    est.scheme = receiver == Receiver::MMSE  ? SlopeScheme::MmseEqualPower
                 : receiver == Receiver::MRC ? SlopeScheme::MrcEqualPower
                                             : SlopeScheme::ZfEqualPower;
    est.p_grid.assign(p_grid.begin(), p_grid.end());
    for (double P : p_grid) {
        const SystemParams params{M, K, T, P};
        const EnergySplit split = make_split(P, T, K, K * P);
        est.r_values.push_back(empirical_rate(receiver, params, split, opts).mean_per_user_rate);
    }
    est.slope = log2_regression_slope(est.p_grid, est.r_values);
    return est;
}

SlopeEstimate mmse_saturation_probe(int M, int T, std::span<const double> p_grid,
                                    const McOptions& opts) {
    return equal_power_empirical_slope(Receiver::MMSE, M, M, T, p_grid, opts);
}

}  // namespace mmimo
