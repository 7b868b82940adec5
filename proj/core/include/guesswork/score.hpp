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
 * Objective of the numbering search.
 *
 * For a qubit channel with Bloch vectors r_m, uniform prior and a balanced
 * cost gamma with mean g and centered form gamma0 = gamma - g, the minimum
 * guesswork is
 *
 *     G = g - max_n |v(n)| / |M|,   v(n) = sum_t gamma0(t) r_{n(t)},
 *
 * attained by the two-outcome measurement pairing n* with (I - u.s)/2 and the
 * mirrored numbering with (I + u.s)/2, u = v(n*)/|v(n*)|.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "guesswork/model.hpp"

namespace guesswork {

struct CostNormalization {
    double mean = 0.0;
    /// Centered cost in nonincreasing order.
    std::vector<double> weights;
    /// rearrangement[i]: user position carrying weights[i].
    std::vector<std::size_t> rearrangement;
    bool balanced = false;
};

/// Throws LengthMismatch when the cost does not cover `size` positions.
[[nodiscard]] CostNormalization normalize_cost(const CostFunction &cost, std::size_t size);

/// v(n) = sum_t weights[t] r_{n(t)}, accumulated in position order. This is
/// the canonical evaluation shared by the solver and the oracle.
[[nodiscard]] BlochVector weighted_sum(const QubitCqChannel &channel,
                                       std::span<const double> weights, const Numbering &n);

/// Same accumulation over a raw position -> label array.
[[nodiscard]] BlochVector weighted_sum(const QubitCqChannel &channel,
                                       std::span<const double> weights,
                                       std::span<const std::size_t> labels_by_position);

/// |v(n)|.
[[nodiscard]] double score_norm(const QubitCqChannel &channel, std::span<const double> weights,
                                const Numbering &n);

/// Operator norm of the E-operator for centered weights: |v(n)| / |M|.
[[nodiscard]] double e_norm(const QubitCqChannel &channel, std::span<const double> centered,
                            const Numbering &n);

/// G = mean - best_norm for a balanced cost; throws NotBalanced otherwise.
[[nodiscard]] double guesswork_value(const QubitCqChannel &channel, const CostFunction &cost,
                                     double best_norm);

struct GuessworkEvaluation {
    double value = 0.0;
    /// joint[k][t] = p(n_k(t)) Tr[pi(n_k) sigma(n_k(t))] for outcome k.
    std::vector<std::vector<double>> joint;
    /// Probability that query t is the first correct one.
    std::vector<double> marginal;
};

/// Guesswork of an arbitrary numbering-valued measurement. Any cost is
/// accepted. Throws AlphabetMismatch when sizes disagree.
[[nodiscard]] GuessworkEvaluation guesswork_of_numbering_measurement(
    const QubitCqChannel &channel, const Prior &prior, const CostFunction &cost,
    const NumberingMeasurement &measurement);

/// Two-outcome measurement attaining mean - |v(n*)|/|M| at the uniform prior.
/// When v(n*) vanishes the blind measurement on n* is returned (G = mean).
[[nodiscard]] NumberingMeasurement build_optimal_measurement(const QubitCqChannel &channel,
                                                             const CostFunction &cost,
                                                             const Numbering &optimal);

/// n composed with the cost mirror: t -> n(mirror(t)).
[[nodiscard]] Numbering mirrored(const Numbering &n, const CostFunction &cost);

/// Restriction of the numbering set searched by the solver and the oracle.
///  - Transitive: the pivot position (largest centered cost) holds label 0.
///  - CentrallySymmetric: mirrored positions hold antipodal labels.
enum class Regime { General, Transitive, CentrallySymmetric, TransitiveCs };

[[nodiscard]] std::string_view regime_name(Regime regime) noexcept;
/// Accepts general, transitive, cs, transitive-cs (and transitive_cs).
[[nodiscard]] std::optional<Regime> parse_regime(std::string_view name) noexcept;
[[nodiscard]] constexpr bool fixes_pivot(Regime r) noexcept {
    return r == Regime::Transitive || r == Regime::TransitiveCs;
}
[[nodiscard]] constexpr bool pairs_antipodes(Regime r) noexcept {
    return r == Regime::CentrallySymmetric || r == Regime::TransitiveCs;
}

inline constexpr std::size_t kPivotLabel = 0;
[[nodiscard]] std::size_t pivot_position(const CostFunction &cost);

/// Number of numberings in the regime's feasible set: |M|!, (|M|-1)!,
/// |M|!! and (|M|-2)!!. Saturates at UINT64_MAX.
[[nodiscard]] std::uint64_t regime_size(std::size_t alphabet, Regime regime) noexcept;

} // namespace guesswork
