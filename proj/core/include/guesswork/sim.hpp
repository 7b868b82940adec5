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
 * Guessing-game simulation and game-theoretic checks on numbering-valued
 * measurements: Monte Carlo play with Born-rule sampling, the adversary's
 * best prior, group averaging of a measurement, and the posterior-ordering
 * property of optimal measurements.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "guesswork/model.hpp"
#include "guesswork/symmetry.hpp"

namespace guesswork {

struct SimReport {
    std::uint64_t shots_per_state = 0;
    /// Prior-weighted mean of per-shot costs.
    double empirical_guesswork = 0.0;
    /// sqrt(sum_m p(m)^2 var_m / shots), var_m the per-shot cost variance.
    double standard_error = 0.0;
    std::vector<double> per_state_mean_cost;
    /// q[t]: fraction of rounds (prior-weighted) first correct at query t.
    std::vector<double> q;
};

/// For each label m plays `shots_per_state` rounds: draws an outcome n with
/// probability Tr[pi(n) sigma(m)] and pays gamma(n^-1(m)). Label m uses the
/// engine std::mt19937_64(derive_seed(seed, m)).
/// Throws NegativeProbability when an outcome probability is below -1e-9.
[[nodiscard]] SimReport simulate_game(const QubitCqChannel &channel, const Prior &prior,
                                      const CostFunction &cost,
                                      const NumberingMeasurement &measurement,
                                      std::uint64_t shots_per_state, std::uint64_t seed);

struct WorstCase {
    double value = 0.0;
    std::size_t worst_label = 0;
};

/// max over priors of the guesswork of a fixed measurement. The guesswork is
/// linear in the prior, so the maximum sits on a vertex: a single label.
[[nodiscard]] WorstCase max_over_priors(const QubitCqChannel &channel, const CostFunction &cost,
                                        const NumberingMeasurement &measurement);

/// Group average tau(g o n) = R_g pi(n) / |G| over the channel's symmetry
/// group, merging repeated numberings. Throws EffectSumMismatch when the
/// result is not complete.
[[nodiscard]] NumberingMeasurement covariantize_measurement(const QubitCqChannel &channel,
                                                            const SymmetryInfo &info,
                                                            const NumberingMeasurement &measurement);

struct BayesCheck {
    /// Every row p(n, .) is nonincreasing in t.
    bool ordered = true;
    /// First offending (outcome index, position t) with row[t+1] > row[t].
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    /// Rows re-sorted by the coarse-graining n -> n o g_n; equal to the input
    /// when already ordered.
    NumberingMeasurement reordered;
    double value_before = 0.0;
    double value_after = 0.0;
};

/// Expects a nondecreasing cost (ValidationError otherwise).
[[nodiscard]] BayesCheck bayes_order_check(const QubitCqChannel &channel, const Prior &prior,
                                           const CostFunction &cost,
                                           const NumberingMeasurement &measurement);

} // namespace guesswork
