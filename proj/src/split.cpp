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

#include "mmimo/split.hpp"

#include <cmath>
#include <string>

#include "mmimo/errors.hpp"

namespace mmimo {

namespace {

void check_split_args(double P, int T, int K) {
    if (K < 1) throw DomainError("K ≥ 1 violated");
    if (K >= T) throw DomainError("K < T violated");
    if (!(P > 0.0) || !std::isfinite(P)) throw DomainError("P > 0 violated");
}

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha in [0, 1] violated");
}

// Coefficients of rho(alpha) = c alpha (1 - alpha) / (a alpha + b).
struct RationalForm {
    double a, b, c;
};

RationalForm rational_form(double P, int T, int K) {
    const double pt = P * T;
    return {pt * (T - 2 * K), K * pt + (T - K), pt * pt};
}

SplitSolution make_solution(double alpha, double rho, double P, int T, int K,
                            SplitMethod method) {
    const double total = P * T;
    const double E = alpha * total;
    const double P_d = (total - E) / (T - K);
    return {alpha, E, P_d, rho, method};
}

}  // namespace

EffectiveSnr rho_of_alpha(double alpha, double P, int T, int K) {
    check_split_args(P, T, K);
    check_alpha(alpha);
    const auto [a, b, c] = rational_form(P, T, K);
    return {c * alpha * (1.0 - alpha) / (a * alpha + b)};
}

EffectiveSnr rho_of_alpha_composed(double alpha, double P, int T, int K) {
    check_split_args(P, T, K);
    check_alpha(alpha);
    const double E = alpha * P * T;
    return effective_snr(data_power(P, T, K, E), E, K);
}

double gamma_aux(double P, int T, int K) {
    check_split_args(P, T, K);
    if (T == 2 * K) throw DomainError("gamma undefined at T = 2K");
    const double pt = P * T;
    return (1.0 + pt) * (T - K) / (pt * (T - 2 * K));
}

SplitSolution optimal_split_closed_form(double P, int T, int K) {
    check_split_args(P, T, K);
    const double pt = P * T;

    // Stationarity: a alpha^2 + 2 b alpha - b = 0. The root in (0,1) is
    // (-b + sqrt(b (a + b))) / a, written without cancellation; a + b > 0
    // always, so this also covers a <= 0.
    const auto [a, b, c] = rational_form(P, T, K);
    const double alpha = b / (b + std::sqrt(b * (a + b)));

    double rho = 0.0;
    if (T == 2 * K) {
        rho = pt * pt / (2.0 * T * (1.0 + pt));
    } else if (T > 2 * K) {
        // (sqrt(g) - sqrt(g-1))^2 == 1 / (sqrt(g) + sqrt(g-1))^2
        const double g = gamma_aux(P, T, K);
        const double s = std::sqrt(g) + std::sqrt(g - 1.0);
        rho = pt / (T - 2 * K) / (s * s);
    } else {
        const double g = gamma_aux(P, T, K);
        const double s = std::sqrt(-g) + std::sqrt(-g + 1.0);
        rho = pt / (2 * K - T) / (s * s);
    }
    return make_solution(alpha, rho, P, T, K, SplitMethod::ClosedForm);
}

SplitSolution optimal_split_grid(double P, int T, int K, double resolution) {
    check_split_args(P, T, K);
    if (!(resolution > 0.0 && resolution <= 1e-4))
        throw DomainError("grid resolution must lie in (0, 1e-4]");

    const auto [a, b, c] = rational_form(P, T, K);
    auto rho = [&](double x) { return c * x * (1.0 - x) / (a * x + b); };

    const auto cells = static_cast<long>(std::ceil(1.0 / resolution));
    const double step = 1.0 / static_cast<double>(cells);
    long best = 0;
    double best_rho = rho(0.0);
    for (long i = 1; i <= cells; ++i) {
        const double r = rho(static_cast<double>(i) * step);
        if (r > best_rho) {  // strict: ties keep the smallest alpha
            best_rho = r;
            best = i;
        }
    }

    double lo = std::max(0.0, (best - 1) * step);
    double hi = std::min(1.0, (best + 1) * step);
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = rho(x1);
    double f2 = rho(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = rho(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = rho(x1);
        }
    }
    double alpha = 0.5 * (lo + hi);
    double r = rho(alpha);
    if (best_rho > r) {
        alpha = best * step;
        r = best_rho;
    }
    return make_solution(alpha, r, P, T, K, SplitMethod::Grid);
}

AsymptoticSplit asymptotic_split_high_snr(int T, int K) {
    if (K < 1 || K >= T) throw DomainError("K < T violated");
    const double sd = std::sqrt(static_cast<double>(T - K));
    const double st = std::sqrt(static_cast<double>(K));
    return {sd / (sd + st), T / ((sd + st) * (sd + st))};
}

AsymptoticSplit asymptotic_split_low_snr(double P, int T, int K) {
    if (K < 1 || K >= T) throw DomainError("K < T violated");
    if (!(P >= 0.0)) throw DomainError("P ≥ 0 violated");
    const double pt = P * T;
    return {0.5, pt * pt / (4.0 * (T - K))};
}

}  // namespace mmimo
