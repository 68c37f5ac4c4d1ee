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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "mmimo/montecarlo.hpp"
#include "mmimo/parallel.hpp"
#include "mmimo/split.hpp"

using namespace mmimo;

namespace {

bool within_3se(std::span<const double> samples, double expected) {
    const auto s = sample_stats(samples);
    return std::abs(s.mean - expected) <= 3.0 * s.std_error;
}

CMatrix orthonormal_columns(int M, int K) {
    CMatrix G = CMatrix::Zero(M, K);
    for (int k = 0; k < K; ++k) G(k, k) = 1.0;
    // rotate so the fixture is not trivially sparse
    const std::complex<double> j(0.0, 1.0);
    CMatrix U = CMatrix::Identity(M, M);
    const double c = std::cos(0.3), s = std::sin(0.3);
    U(0, 0) = c;
    U(0, 1) = -s * j;
    U(1, 0) = -s * j;
    U(1, 1) = c;
    return U * G;
}

}  // namespace

TEST_CASE("gen_channel determinism and moments") {
    const auto a = gen_channel(2, 2, TrialStream{42, 0});
    const auto b = gen_channel(2, 2, TrialStream{42, 0});
    CHECK(a.H == b.H);
    CHECK(a.H != gen_channel(2, 2, TrialStream{42, 1}).H);

    std::vector<double> re, pw;
    for (std::uint64_t t = 0; t < 1563; ++t) {
        const auto c = gen_channel(8, 8, TrialStream{7, t});
        for (Eigen::Index i = 0; i < c.H.size(); ++i) {
            re.push_back(c.H(i).real());
            pw.push_back(std::norm(c.H(i)));
        }
    }
    CHECK(re.size() >= 100000);
    CHECK(within_3se(re, 0.0));
    CHECK(within_3se(pw, 1.0));

    // corresponding entries of trials 2t and 2t+1
    std::vector<double> cross;
    for (std::uint64_t t = 0; t < 5000; ++t) {
        const auto x = gen_channel(4, 5, TrialStream{7, 2 * t});
        const auto y = gen_channel(4, 5, TrialStream{7, 2 * t + 1});
        for (Eigen::Index i = 0; i < x.H.size(); ++i)
            cross.push_back((x.H(i) * std::conj(y.H(i))).real());
    }
    CHECK(within_3se(cross, 0.0));
    CHECK_THROWS_AS(gen_channel(0, 1, TrialStream{}), DomainError);
}

TEST_CASE("simulate_training") {
    SubstreamRng rng({1, 0});
    const auto ch = gen_channel(4, 3, rng);
    const auto none = simulate_training(ch.H, 0.0, rng);
    CHECK(none.H_hat.isZero(0.0));
    CHECK(none.H_tilde == ch.H);

    for (double E : {0.5, 1.0, 3.0, 10.0}) {
        std::vector<double> hat, tilde, cross;
        for (std::uint64_t t = 0; t < 1000; ++t) {
            SubstreamRng r({11, t});
            const auto h = gen_channel(10, 10, r);
            const auto est = simulate_training(h.H, E, r);
            REQUIRE((est.H_hat + est.H_tilde) == h.H);
            for (Eigen::Index i = 0; i < h.H.size(); ++i) {
                hat.push_back(std::norm(est.H_hat(i)));
                tilde.push_back(std::norm(est.H_tilde(i)));
                cross.push_back((est.H_hat(i) * std::conj(est.H_tilde(i))).real());
            }
        }
        const auto v = estimation_variances(E);
        CHECK(within_3se(hat, v.sigma2_hat));
        CHECK(within_3se(tilde, v.sigma2_tilde));
        CHECK(within_3se(cross, 0.0));
    }
}

TEST_CASE("equivalent noise variance matches the closed form") {
    // v = H_tilde s + n with unit-variance n and data symbols of power P_d.
    const double E = 3.0, P_d = 1.0;
    const int M = 4, K = 2;
    std::vector<double> pw;
    for (std::uint64_t t = 0; t < 20000; ++t) {
        SubstreamRng r({21, t});
        const auto h = gen_channel(M, K, r);
        const auto est = simulate_training(h.H, E, r);
        Eigen::VectorXcd s(K), n(M);
        for (int k = 0; k < K; ++k) s(k) = std::sqrt(P_d) * r.complex_gaussian();
        for (int m = 0; m < M; ++m) n(m) = r.complex_gaussian();
        const Eigen::VectorXcd v = est.H_tilde * s + n;
        for (int m = 0; m < M; ++m) pw.push_back(std::norm(v(m)));
    }
    CHECK(within_3se(pw, noise_variance_equiv(P_d, E, K)));
    CHECK(noise_variance_equiv(P_d, E, K) == 1.5);
}

TEST_CASE("orthonormal fixture: every receiver returns rho") {
    const CMatrix G = orthonormal_columns(6, 3);
    for (double rho : {0.0, 0.5, 7.0}) {
        const auto m = sinr_mrc(G, rho);
        const auto z = sinr_zf(G, rho);
        const auto s = sinr_mmse(G, rho);
        for (int k = 0; k < 3; ++k) {
            CHECK(m(k) == doctest::Approx(rho).epsilon(1e-14));
            CHECK(z(k) == doctest::Approx(rho).epsilon(1e-14));
            CHECK(s(k) == doctest::Approx(rho).epsilon(1e-14));
        }
    }
}

TEST_CASE("single user: MRC and MMSE coincide, mean SINR is rho M") {
    std::vector<double> sinr;
    for (std::uint64_t t = 0; t < 10000; ++t) {
        const auto g = gen_channel(8, 1, TrialStream{3, t}).H;
        const double m = sinr_mrc(g, 2.0)(0);
        CHECK(sinr_mmse(g, 2.0)(0) == doctest::Approx(m).epsilon(1e-12));
        CHECK(m == doctest::Approx(2.0 * g.squaredNorm()).epsilon(1e-12));
        sinr.push_back(m);
    }
    CHECK(within_3se(sinr, 16.0));
}

TEST_CASE("Wishart identity behind the ZF bound") {
    std::vector<double> diag;
    for (std::uint64_t t = 0; t < 10000; ++t) {
        const auto g = gen_channel(16, 4, TrialStream{4, t}).H;
        const auto s = sinr_zf(g, 1.0);
        for (int k = 0; k < 4; ++k) diag.push_back(1.0 / s(k));
    }
    CHECK(within_3se(diag, 1.0 / 12.0));
}

TEST_CASE("ZF rejects singular and short matrices") {
    CMatrix G = CMatrix::Zero(4, 2);
    G(0, 0) = 1.0;
    G(0, 1) = 1.0;
    CHECK_THROWS_AS(sinr_zf(G, 1.0), SingularMatrixError);
    CHECK_THROWS_AS(sinr_zf(CMatrix::Ones(2, 3), 1.0), DomainError);
}

TEST_CASE("MMSE dominates MRC and ZF on every realization") {
    for (std::uint64_t t = 0; t < 2000; ++t) {
        const auto g = gen_channel(8, 4, TrialStream{5, t}).H;
        const auto m = sinr_mrc(g, 1.0);
        const auto z = sinr_zf(g, 1.0);
        const auto s = sinr_mmse(g, 1.0);
        for (int k = 0; k < 4; ++k) {
            REQUIRE(s(k) >= m(k) * (1.0 - 1e-12));
            REQUIRE(s(k) >= z(k) * (1.0 - 1e-12));
        }
    }
}

TEST_CASE("MMSE approaches ZF at high SNR when M > K") {
    std::vector<double> ratio;
    for (std::uint64_t t = 0; t < 1000; ++t) {
        const auto g = gen_channel(8, 4, TrialStream{6, t}).H;
        const auto z = sinr_zf(g, 1e6);
        const auto s = sinr_mmse(g, 1e6);
        for (int k = 0; k < 4; ++k) ratio.push_back(s(k) / z(k));
    }
    const auto st = sample_stats(ratio);
    CHECK(st.mean == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("zero SNR yields zero SINR") {
    const auto g = gen_channel(6, 3, TrialStream{1, 1}).H;
    CHECK(sinr_mrc(g, 0.0).isZero(0.0));
    CHECK(sinr_zf(g, 0.0).isZero(0.0));
    CHECK(sinr_mmse(g, 0.0).isZero(0.0));
}

TEST_CASE("empirical rates dominate the closed-form bounds") {
    const double P = 2.0;
    const SystemParams q{10, 2, 10, P};
    const auto split = optimal_split_grid(P, q.T, q.K).split();
    const double rho = effective_snr(split.P_d, split.E, q.K).rho;
    const McOptions mc{10000, 99, 0};

    const auto zf = empirical_rate(Receiver::ZF, q, split, mc);
    CHECK(zf.mean_per_user_rate >= rate_zf(rho, 10, 2, 10).per_user_rate - 3 * zf.std_error);
    CHECK(zf.trials == 10000);
    CHECK(zf.receiver == Receiver::ZF);
    const auto mrc = empirical_rate(Receiver::MRC, q, split, mc);
    CHECK(mrc.mean_per_user_rate >= rate_mrc(rho, 10, 2, 10).per_user_rate - 3 * mrc.std_error);
    const auto mmse = empirical_rate(Receiver::MMSE, q, split, mc);
    CHECK(mmse.mean_per_user_rate >= zf.mean_per_user_rate);
    CHECK(mmse.mean_per_user_rate >= mrc.mean_per_user_rate);
}

TEST_CASE("empirical_rate is bit-identical across thread counts") {
    const SystemParams p{8, 4, 16, 3.0};
    const auto split = optimal_split_grid(p.P, p.T, p.K).split();
    const auto a = empirical_rate(Receiver::ZF, p, split, {100, 17, 1});
    const auto b = empirical_rate(Receiver::ZF, p, split, {100, 17, 1});
    const auto c = empirical_rate(Receiver::ZF, p, split, {100, 17, 8});
    CHECK(a.mean_per_user_rate == b.mean_per_user_rate);
    CHECK(a.mean_per_user_rate == c.mean_per_user_rate);
    CHECK(a.std_error == c.std_error);
    CHECK(a.std_error > 0.0);
}

TEST_CASE("empirical_rate preconditions") {
    const SystemParams p{8, 4, 16, 1.0};
    const auto split = optimal_split_grid(1.0, 16, 4).split();
    CHECK_THROWS_AS(empirical_rate(Receiver::ZF, p, split, {99, 1, 1}), DomainError);
    CHECK_THROWS_AS(empirical_rate(Receiver::ZF, {2, 4, 16, 1.0}, split, {100, 1, 1}), DomainError);
    EnergySplit bad = split;
    bad.E *= 2.0;
    CHECK_THROWS_AS(empirical_rate(Receiver::ZF, p, bad, {100, 1, 1}), DomainError);
    const auto zero = empirical_rate(Receiver::MRC, p, make_split(1.0, 16, 4, 0.0), {100, 1, 1});
    CHECK(zero.mean_per_user_rate == 0.0);
}

TEST_CASE("coherent MAC sum rate") {
    CHECK(coherent_mac_sum_rate(0.0, 4, 2, 8, {100, 1, 1}).total_rate == 0.0);

    // E[log2(1 + |g|^2)] = integral of log2(1 + x) e^-x over [0, inf),
    // by composite Simpson on x in [0, 60].
    const int n = 600000;
    const double h = 60.0 / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = i * h;
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += w * std::log2(1.0 + x) * std::exp(-x);
    }
    const double integral = acc * h / 3.0;
    CHECK(integral == doctest::Approx(0.8603).epsilon(1e-3));

    const int T = 4;
    const auto r = coherent_mac_sum_rate(1.0, 1, 1, T, {20000, 8, 0});
    CHECK(std::abs(r.total_rate - integral * (1.0 - 1.0 / T)) <= 3.0 * r.std_error);
    CHECK(r.per_user_rate == r.total_rate);
    CHECK(r.receiver == Receiver::CoherentMac);
}

TEST_CASE("equal-power empirical slopes") {
    const std::vector<double> grid = geometric_grid(0x1.0p10, 0x1.0p30, 4.0);
    const auto zf = equal_power_empirical_slope(Receiver::ZF, 4, 2, 8, grid, {10000, 1, 0});
    CHECK(zf.slope == doctest::Approx(0.75).epsilon(0.05 / 0.75));
    CHECK(zf.scheme == SlopeScheme::ZfEqualPower);
    CHECK(zf.r_values.size() == grid.size());
}
