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

#include "guesswork/score.hpp"

#include <limits>

#include "guesswork/error.hpp"

namespace guesswork {

CostNormalization normalize_cost(const CostFunction &cost, std::size_t size) {
    if (cost.size() != size) {
        throw Error(ErrorCode::LengthMismatch, "cost function has " + std::to_string(cost.size()) +
                                                   " entries for an alphabet of " +
                                                   std::to_string(size));
    }
    return {cost.mean(), cost.rearranged(), cost.order(), cost.is_balanced()};
}

BlochVector weighted_sum(const QubitCqChannel &channel, std::span<const double> weights,
                         std::span<const std::size_t> labels_by_position) {
    if (weights.size() != channel.size() || labels_by_position.size() != channel.size()) {
        throw Error(ErrorCode::AlphabetMismatch, "weights, numbering and channel sizes differ");
    }
    const auto &r = channel.bloch();
    BlochVector v;
    for (std::size_t t = 0; t < weights.size(); ++t) {
        v += weights[t] * r[labels_by_position[t]];
    }
    return v;
}

BlochVector weighted_sum(const QubitCqChannel &channel, std::span<const double> weights,
                         const Numbering &n) {
    return weighted_sum(channel, weights, std::span<const std::size_t>(n.order()));
}

double score_norm(const QubitCqChannel &channel, std::span<const double> weights,
                  const Numbering &n) {
    return weighted_sum(channel, weights, n).norm();
}

double e_norm(const QubitCqChannel &channel, std::span<const double> centered,
              const Numbering &n) {
    return score_norm(channel, centered, n) / static_cast<double>(channel.size());
}

double guesswork_value(const QubitCqChannel &channel, const CostFunction &cost,
                       double best_norm) {
    if (cost.size() != channel.size()) {
        throw Error(ErrorCode::LengthMismatch, "cost and channel sizes differ");
    }
    if (!cost.is_balanced()) {
        throw Error(ErrorCode::NotBalanced, "closed-form guesswork needs a balanced cost");
    }
    return cost.mean() - best_norm;
}

GuessworkEvaluation guesswork_of_numbering_measurement(const QubitCqChannel &channel,
                                                       const Prior &prior,
                                                       const CostFunction &cost,
                                                       const NumberingMeasurement &measurement) {
    const std::size_t size = channel.size();
    if (prior.size() != size || cost.size() != size) {
        throw Error(ErrorCode::AlphabetMismatch, "prior, cost and channel sizes differ");
    }
    measurement.validate(size);

    GuessworkEvaluation out;
    out.marginal.assign(size, 0.0);
    out.joint.reserve(measurement.outcomes.size());
    for (const auto &[n, effect] : measurement.outcomes) {
        std::vector<double> row(size);
        for (std::size_t t = 0; t < size; ++t) {
            const std::size_t m = n[t];
            row[t] = prior[m] * effect.probability(channel.state(m));
            out.marginal[t] += row[t];
            out.value += row[t] * cost[t];
        }
        out.joint.push_back(std::move(row));
    }
    return out;
}

Numbering mirrored(const Numbering &n, const CostFunction &cost) {
    std::vector<std::size_t> order(n.size());
    for (std::size_t t = 0; t < n.size(); ++t) {
        order[t] = n[cost.mirror(t)];
    }
    return Numbering(std::move(order));
}

NumberingMeasurement build_optimal_measurement(const QubitCqChannel &channel,
                                               const CostFunction &cost,
                                               const Numbering &optimal) {
    if (!cost.is_balanced()) {
        throw Error(ErrorCode::NotBalanced, "optimal measurement needs a balanced cost");
    }
    const BlochVector v = weighted_sum(channel, cost.centered(), optimal);
    const double len = v.norm();
    if (len <= kInputTolerance) {
        return NumberingMeasurement::blind(optimal);
    }
    const BlochVector u = (1.0 / len) * v;
    NumberingMeasurement m;
    m.outcomes.push_back({optimal, Effect{0.5, -0.5 * u}});
    m.outcomes.push_back({mirrored(optimal, cost), Effect{0.5, 0.5 * u}});
    return m;
}

std::string_view regime_name(Regime regime) noexcept {
    switch (regime) {
    case Regime::General: return "general";
    case Regime::Transitive: return "transitive";
    case Regime::CentrallySymmetric: return "cs";
    case Regime::TransitiveCs: return "transitive_cs";
    }
    return "";
}

std::optional<Regime> parse_regime(std::string_view name) noexcept {
    if (name == "general") return Regime::General;
    if (name == "transitive") return Regime::Transitive;
    if (name == "cs") return Regime::CentrallySymmetric;
    if (name == "transitive-cs" || name == "transitive_cs") return Regime::TransitiveCs;
    return std::nullopt;
}

std::size_t pivot_position(const CostFunction &cost) { return cost.order().front(); }

std::uint64_t regime_size(std::size_t alphabet, Regime regime) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    auto product = [&](std::size_t top, std::size_t step) {
        std::uint64_t p = 1;
        for (std::size_t k = top; k >= 1 && k <= top; k -= step) {
            if (p > kMax / k) {
                return kMax;
            }
            p *= k;
            if (k < step) {
                break;
            }
        }
        return p;
    };
    switch (regime) {
    case Regime::General: return product(alphabet, 1);
    case Regime::Transitive: return alphabet < 1 ? 0 : product(alphabet - 1, 1);
    case Regime::CentrallySymmetric: return product(alphabet, 2);
    case Regime::TransitiveCs: return alphabet < 2 ? 0 : product(alphabet - 2, 2);
    }
    return 0;
}

} // namespace guesswork
