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

#include "mmimo/slope.hpp"

#include <cmath>

#include "mmimo/errors.hpp"

namespace mmimo {

std::string_view to_string(SlopeScheme s) {
    switch (s) {
        case SlopeScheme::ZfEqualPower: return "zf_equal_power";
        case SlopeScheme::MrcEqualPower: return "mrc_equal_power";
        case SlopeScheme::CoherentMac: return "coherent_mac";
        case SlopeScheme::MmseEqualPower: return "mmse_equal_power";
    }
    return "unknown";
}

void validate_power_grid(std::span<const double> p_grid, double min_octaves, double min_power) {
    if (p_grid.size() < 2) throw DomainError("power grid needs at least two points");
    if (!(p_grid.front() >= min_power))
        throw DomainError("power grid must start at or above " + std::to_string(min_power));
    const double ratio = p_grid[1] / p_grid[0];
    for (std::size_t i = 1; i < p_grid.size(); ++i) {
        if (!(p_grid[i] > p_grid[i - 1]) || !std::isfinite(p_grid[i]))
            throw DomainError("power grid must be strictly increasing");
        const double r = p_grid[i] / p_grid[i - 1];
        if (std::abs(r - ratio) > 1e-9 * ratio) throw DomainError("power grid must be geometric");
    }
    if (std::log2(p_grid.back() / p_grid.front()) < min_octaves - 1e-9)
        throw DomainError("power grid must span at least " + std::to_string(min_octaves) +
                          " octaves");
}

std::vector<double> geometric_grid(double p_lo, double p_hi, double ratio) {
    if (!(p_lo > 0.0) || !(p_hi >= p_lo) || !(ratio > 1.0))
        throw DomainError("geometric grid requires 0 < lo ≤ hi and ratio > 1");
    const auto steps = static_cast<int>(std::floor(std::log(p_hi / p_lo) / std::log(ratio) + 1e-9));
    std::vector<double> grid;
    grid.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i) grid.push_back(p_lo * std::pow(ratio, i));
    return grid;
}

double log2_regression_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw DomainError("regression needs ≥ 2 paired points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log2(x[i]);
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log2(x[i]) - mx;
        sxy += dx * (y[i] - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace mmimo
