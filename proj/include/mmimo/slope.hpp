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

#include <span>
#include <string_view>
#include <vector>

namespace mmimo {

enum class SlopeScheme { ZfEqualPower, MrcEqualPower, CoherentMac, MmseEqualPower };

std::string_view to_string(SlopeScheme s);

/// Growth of total rate per doubling of P: least-squares slope of the rates
/// against log2(P).
struct SlopeEstimate {
    double slope = 0.0;
    std::vector<double> p_grid;
    std::vector<double> r_values;
    SlopeScheme scheme = SlopeScheme::ZfEqualPower;
};

/// Checks a high-SNR power grid: at least two points, strictly increasing and
/// geometric, spanning at least `min_octaves`, smallest value >= `min_power`.
void validate_power_grid(std::span<const double> p_grid, double min_octaves = 10.0,
                         double min_power = 1e3);

/// p_lo, p_lo*ratio, ... up to p_hi (inclusive within rounding).
std::vector<double> geometric_grid(double p_lo, double p_hi, double ratio);

/// Ordinary least-squares slope of y against log2(x).
double log2_regression_slope(std::span<const double> x, std::span<const double> y);

}  // namespace mmimo
