// Copyright 2026 The Guesswork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file
 * Reference implementations used to check the solver.
 *
 * The brute-force search enumerates the regime's numbering set directly, in
 * lexicographic order, scoring each leaf with `score_norm`. It shares nothing
 * with the solver beyond the score module.
 *
 * Random generation uses std::mt19937_64 (fully specified by the C++
 * standard) and derives doubles from the top 53 bits of each draw, so seeds
 * reproduce on every conforming platform.
 */

#include <cstdint>
#include <random>

#include "guesswork/model.hpp"
#include "guesswork/score.hpp"
#include "guesswork/symmetry.hpp"

namespace guesswork {

struct OracleOptions {
    /// Enumeration refused (CapExceeded) above this many leaves.
    std::uint64_t cap = 2'000'000'000;
};

struct OracleResult {
    /// max |v(n)|.
    double score = 0.0;
    /// score / |M|.
    double norm = 0.0;
    /// Lexicographically smallest maximizer.
    Numbering numbering;
    std::uint64_t leaves = 0;
    /// mean - norm; meaningful for balanced costs.
    double value = 0.0;
};

/// Throws CapExceeded, RegimeUnavailable (antipodal regime on a channel
/// without antipodal pairs).
[[nodiscard]] OracleResult brute_force_norm(const QubitCqChannel &channel,
                                            const CostFunction &cost, Regime regime,
                                            const OracleOptions &options = {});

/// Uniform double in [0, 1) from the top 53 bits of one draw.
[[nodiscard]] double uniform_unit(std::mt19937_64 &engine);

/// SplitMix64 finalizer applied to master + stream * golden gamma. Used to give
/// independent, reproducible streams to sub-tasks.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

/// Uniform points on the sphere (surface_only) or with radius uniform in
/// [0, 1]. Size below 2 is rejected by validate_channel.
[[nodiscard]] QubitCqChannel random_channel(std::size_t size, std::uint64_t seed,
                                            bool surface_only);

/// Uniformly distributed proper rotation (from a random unit quaternion).
[[nodiscard]] Matrix3 random_rotation(std::uint64_t seed);

} // namespace guesswork
