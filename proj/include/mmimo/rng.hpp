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

// Counter-based random substreams for reproducible parallel Monte Carlo.
//
// Every trial owns the stream keyed by (master_seed, trial_index). Draws are
// Philox4x32-10 blocks at counter (trial_index, block), so a trial's sequence
// never depends on which worker runs it or on how many workers exist.

#include <array>
#include <complex>
#include <cstdint>

namespace mmimo {

/// Bumped whenever the mapping from (seed, trial) to samples changes.
inline constexpr int kGaussianGeneratorVersion = 1;

struct TrialStream {
    std::uint64_t master_seed = 0;
    std::uint64_t trial_index = 0;
};

using Philox4x32Block = std::array<std::uint32_t, 4>;

/// Philox4x32 with 10 rounds.
Philox4x32Block philox4x32(Philox4x32Block counter, std::array<std::uint32_t, 2> key);

class SubstreamRng {
public:
    explicit SubstreamRng(TrialStream id) : id_(id) {}

    const TrialStream& id() const { return id_; }

    std::uint32_t next_u32();

    /// Uniform on the open interval (0, 1) with 53-bit resolution.
    double uniform();

    /// Circularly-symmetric complex Gaussian with unit variance (each of the
    /// real and imaginary parts has variance 1/2), via Box-Muller.
    std::complex<double> complex_gaussian();

private:
    void refill();

    TrialStream id_;
    std::uint64_t block_ = 0;
    Philox4x32Block buffer_{};
    int used_ = 4;
};

}  // namespace mmimo
