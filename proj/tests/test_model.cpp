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
#include <random>

#include "mmimo/errors.hpp"
#include "mmimo/model.hpp"

using namespace mmimo;

TEST_CASE("validate_params") {
    CHECK_NOTHROW(validate_params({4, 2, 8, 1.0}, true));
    CHECK_THROWS_WITH_AS(validate_params({2, 4, 8, 1.0}, true), "K ≤ M violated", DomainError);
    CHECK_NOTHROW(validate_params({2, 4, 8, 1.0}, false));
    CHECK_THROWS_WITH_AS(validate_params({4, 4, 4, 1.0}, true), "K < T violated", DomainError);
    CHECK_THROWS_AS(validate_params({0, 1, 2, 1.0}, false), DomainError);
    CHECK_THROWS_AS(validate_params({1, 1, 2, -1.0}, false), DomainError);
    const SystemParams p{4, 2, 8, 1.5};
    const SystemParams q = validate_params(p, true);
    CHECK(q.M == 4);
    CHECK(q.P == 1.5);
}

TEST_CASE("estimation_variances") {
    auto v = estimation_variances(0.0);
    CHECK(v.sigma2_hat == 0.0);
    CHECK(v.sigma2_tilde == 1.0);
    v = estimation_variances(1.0);
    CHECK(v.sigma2_hat == 0.5);
    CHECK(v.sigma2_tilde == 0.5);
    v = estimation_variances(3.0);
    CHECK(v.sigma2_hat == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(v.sigma2_tilde == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(estimation_variances(-0.1), DomainError);

    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> logE(-6.0, 6.0);
    for (int i = 0; i < 1000; ++i) {
        const double E = std::pow(10.0, logE(gen));
        const auto s = estimation_variances(E);
        CHECK(s.sigma2_hat + s.sigma2_tilde == 1.0);
        CHECK(s.sigma2_hat >= 0.0);
        CHECK(s.sigma2_tilde <= 1.0);
        CHECK(s.sigma2_hat == doctest::Approx(E / (E + 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("data_power") {
    CHECK(data_power(1.0, 10, 2, 2.0) == 1.0);
    CHECK(2.0 + data_power(1.0, 10, 2, 2.0) * 8 == 10.0);
    CHECK(data_power(1.0, 10, 2, 10.0) == 0.0);
    CHECK(data_power(3.0, 7, 3, 0.0) == doctest::Approx(21.0 / 4.0));
    CHECK_THROWS_AS(data_power(1.0, 10, 2, 10.5), DomainError);
    CHECK_THROWS_AS(data_power(1.0, 2, 2, 0.0), DomainError);

    const EnergySplit s = make_split(2.0, 10, 2, 5.0);
    CHECK(s.alpha_train == 0.25);
    CHECK(s.E + s.P_d * 8 == doctest::Approx(20.0).epsilon(1e-15));
}

TEST_CASE("noise_variance_equiv") {
    CHECK(noise_variance_equiv(0.0, 2.0, 3) == 1.0);
    CHECK(noise_variance_equiv(5.0, 1e300, 3) == doctest::Approx(1.0));
    CHECK(noise_variance_equiv(5.0, INFINITY, 3) == 1.0);
    CHECK(noise_variance_equiv(1.0, 3.0, 2) == 1.5);
    CHECK_THROWS_AS(noise_variance_equiv(-1.0, 1.0, 1), DomainError);
}

TEST_CASE("effective_snr examples and two routes") {
    CHECK(effective_snr(5.0, 0.0, 2).rho == 0.0);
    CHECK(effective_snr(1.0, 1.0, 1).rho == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(effective_snr(2.0, 4.0, 2).rho == doctest::Approx(8.0 / 9.0).epsilon(1e-15));

    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> lg(-4.0, 4.0);
    std::uniform_int_distribution<int> kk(1, 16);
    for (int i = 0; i < 1000; ++i) {
        const double P_d = std::pow(10.0, lg(gen));
        const double E = std::pow(10.0, lg(gen));
        const int K = kk(gen);
        const double rho = effective_snr(P_d, E, K).rho;
        const double routed =
            P_d * estimation_variances(E).sigma2_hat / noise_variance_equiv(P_d, E, K);
        CHECK(rho == doctest::Approx(routed).epsilon(1e-13));
        CHECK(rho <= P_d);
        // monotone in E and in P_d
        CHECK(effective_snr(P_d, E * 1.5, K).rho >= rho);
        CHECK(effective_snr(P_d * 1.5, E, K).rho >= rho);
    }
}

TEST_CASE("effective_snr_equal_power") {
    CHECK(effective_snr_equal_power(1.0, 1).rho ==
          doctest::Approx(effective_snr(1.0, 1.0, 1).rho).epsilon(1e-15));
    CHECK(effective_snr_equal_power(1e12, 4).rho / 1e12 == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(effective_snr_equal_power(3.0, 2).rho == doctest::Approx(2 * 9.0 / 13.0).epsilon(1e-15));
    CHECK_THROWS_AS(effective_snr_equal_power(0.0, 1), DomainError);

    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> lg(-3.0, 6.0);
    std::uniform_int_distribution<int> kk(1, 64);
    for (int i = 0; i < 1000; ++i) {
        const int K = kk(gen);
        const double P = std::pow(10.0, lg(gen));
        if (K * P > 1.0) CHECK(effective_snr_equal_power(P, K).rho > P / 3.0);
    }
}

TEST_CASE("rate_mrc") {
    CHECK(rate_mrc(0.0, 10, 2, 10).per_user_rate == 0.0);
    CHECK(rate_mrc(5.0, 1, 1, 10).per_user_rate == 0.0);
    const RateReport r = rate_mrc(1.0, 10, 2, 10);
    CHECK(r.per_user_rate == doctest::Approx(1.967545).epsilon(1e-6));
    CHECK(r.per_user_rate == doctest::Approx(0.8 * std::log2(5.5)).epsilon(1e-15));
    CHECK(r.total_rate == doctest::Approx(2.0 * r.per_user_rate).epsilon(1e-15));
    CHECK(r.active_users == 2);
    CHECK(r.receiver == Receiver::MRC);
    CHECK_THROWS_AS(rate_mrc(1.0, 10, 10, 10), DomainError);
}

TEST_CASE("rate_zf") {
    CHECK(rate_zf(3.0, 4, 4, 10).per_user_rate == 0.0);
    CHECK(rate_zf(0.0, 10, 2, 10).per_user_rate == 0.0);
    const RateReport r = rate_zf(1.0, 10, 2, 10);
    CHECK(r.per_user_rate == doctest::Approx(2.535940).epsilon(1e-6));
    CHECK(r.per_user_rate == doctest::Approx(0.8 * std::log2(9.0)).epsilon(1e-15));
    CHECK(r.total_rate == doctest::Approx(2.0 * r.per_user_rate).epsilon(1e-15));
    CHECK_THROWS_AS(rate_zf(1.0, 3, 4, 10), DomainError);
}

TEST_CASE("MRC beats ZF at low SNR, ZF beats MRC at high SNR") {
    CHECK(rate_mrc(1e-3, 64, 8, 40).per_user_rate >= rate_zf(1e-3, 64, 8, 40).per_user_rate);
    CHECK(rate_zf(1e3, 64, 8, 40).per_user_rate >= rate_mrc(1e3, 64, 8, 40).per_user_rate);
}

TEST_CASE("rate bounds are monotone in rho and M") {
    for (int M = 8; M <= 64; M *= 2) {
        double prev_mrc = -1.0, prev_zf = -1.0;
        for (double rho = 1e-3; rho <= 1e3; rho *= 3.0) {
            const double m = rate_mrc(rho, M, 8, 40).per_user_rate;
            const double z = rate_zf(rho, M, 8, 40).per_user_rate;
            CHECK(m >= prev_mrc);
            CHECK(z >= prev_zf);
            CHECK(rate_mrc(rho, M + 1, 8, 40).per_user_rate >= m);
            CHECK(rate_zf(rho, M + 1, 8, 40).per_user_rate >= z);
            prev_mrc = m;
            prev_zf = z;
        }
    }
}
