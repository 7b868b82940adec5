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

#include "guesswork/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "guesswork/error.hpp"
#include "guesswork/oracle.hpp"
#include "guesswork/score.hpp"

namespace guesswork {

namespace {

void check_sizes(const QubitCqChannel &channel, std::size_t cost_size,
                 const NumberingMeasurement &measurement) {
    if (cost_size != channel.size()) {
        throw Error(ErrorCode::AlphabetMismatch, "cost and channel sizes differ");
    }
    for (const auto &o : measurement.outcomes) {
        if (o.numbering.size() != channel.size()) {
            throw Error(ErrorCode::AlphabetMismatch,
                        "measurement outcome numbers a different alphabet");
        }
    }
}

NumberingMeasurement merge(std::map<std::vector<std::size_t>, Effect> &&effects) {
    NumberingMeasurement out;
    for (auto &[order, effect] : effects) {
        out.outcomes.push_back({Numbering(order), effect});
    }
    return out;
}

void add_effect(std::map<std::vector<std::size_t>, Effect> &effects,
                const std::vector<std::size_t> &order, const Effect &e) {
    auto [it, inserted] = effects.try_emplace(order, e);
    if (!inserted) {
        it->second.c0 += e.c0;
        it->second.c += e.c;
    }
}

} // namespace

SimReport simulate_game(const QubitCqChannel &channel, const Prior &prior,
                        const CostFunction &cost, const NumberingMeasurement &measurement,
                        std::uint64_t shots_per_state, std::uint64_t seed) {
    check_sizes(channel, cost.size(), measurement);
    if (prior.size() != channel.size()) {
        throw Error(ErrorCode::AlphabetMismatch, "prior and channel sizes differ");
    }
    if (shots_per_state == 0) {
        throw Error(ErrorCode::ValidationError, "at least one shot per state is needed");
    }
    const std::size_t size = channel.size();
    const std::size_t outcomes = measurement.outcomes.size();

    SimReport report;
    report.shots_per_state = shots_per_state;
    report.per_state_mean_cost.assign(size, 0.0);
    report.q.assign(size, 0.0);
    double variance_sum = 0.0;
    std::vector<double> cumulative(outcomes);
    std::vector<std::uint64_t> hits(size);

    for (std::size_t m = 0; m < size; ++m) {
        double total = 0.0;
        for (std::size_t k = 0; k < outcomes; ++k) {
            const double p = measurement.outcomes[k].effect.probability(channel.state(m));
            if (p < -kAggregateTolerance) {
                throw Error(ErrorCode::NegativeProbability,
                            "outcome probability " + std::to_string(p) + " for label '" +
                                channel.labels()[m] + "'");
            }
            total += std::max(0.0, p);
            cumulative[k] = total;
        }

        std::mt19937_64 engine(derive_seed(seed, m));
        std::fill(hits.begin(), hits.end(), 0);
        for (std::uint64_t shot = 0; shot < shots_per_state; ++shot) {
            const double u = uniform_unit(engine) * total;
            auto k = static_cast<std::size_t>(
                std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
            k = std::min(k, outcomes - 1);
            ++hits[measurement.outcomes[k].numbering.position_of(m)];
        }

        const auto shots = static_cast<double>(shots_per_state);
        double mean = 0.0;
        for (std::size_t t = 0; t < size; ++t) {
            mean += static_cast<double>(hits[t]) * cost[t];
        }
        mean /= shots;
        double ss = 0.0;
        for (std::size_t t = 0; t < size; ++t) {
            const double d = cost[t] - mean;
            ss += static_cast<double>(hits[t]) * d * d;
        }
        const double variance = shots_per_state > 1 ? ss / (shots - 1.0) : 0.0;

        report.per_state_mean_cost[m] = mean;
        report.empirical_guesswork += prior[m] * mean;
        variance_sum += prior[m] * prior[m] * variance / shots;
        for (std::size_t t = 0; t < size; ++t) {
            report.q[t] += prior[m] * static_cast<double>(hits[t]) / shots;
        }
    }
    report.standard_error = std::sqrt(variance_sum);
    return report;
}

WorstCase max_over_priors(const QubitCqChannel &channel, const CostFunction &cost,
                          const NumberingMeasurement &measurement) {
    check_sizes(channel, cost.size(), measurement);
    WorstCase worst{-std::numeric_limits<double>::infinity(), 0};
    for (std::size_t m = 0; m < channel.size(); ++m) {
        double value = 0.0;
        for (const auto &[n, effect] : measurement.outcomes) {
            value += effect.probability(channel.state(m)) * cost[n.position_of(m)];
        }
        if (value > worst.value) {
            worst = {value, m};
        }
    }
    return worst;
}

NumberingMeasurement covariantize_measurement(const QubitCqChannel &channel,
                                              const SymmetryInfo &info,
                                              const NumberingMeasurement &measurement) {
    check_sizes(channel, channel.size(), measurement);
    if (info.order() <= 1) {
        return measurement;
    }
    const double weight = 1.0 / static_cast<double>(info.order());
    std::map<std::vector<std::size_t>, Effect> effects;
    std::vector<std::size_t> order(channel.size());
    for (const auto &g : info.group) {
        for (const auto &[n, effect] : measurement.outcomes) {
            for (std::size_t t = 0; t < n.size(); ++t) {
                order[t] = g.perm[n[t]];
            }
            add_effect(effects, order,
                       Effect{weight * effect.c0, weight * g.realization.apply(effect.c)});
        }
    }
    auto out = merge(std::move(effects));

    double c0 = 0.0;
    BlochVector c;
    for (const auto &o : out.outcomes) {
        c0 += o.effect.c0;
        c += o.effect.c;
    }
    if (std::abs(c0 - 1.0) > kAggregateTolerance || c.norm() > kAggregateTolerance) {
        throw Error(ErrorCode::EffectSumMismatch,
                    "group-averaged effects do not sum to the identity");
    }
    return out;
}

BayesCheck bayes_order_check(const QubitCqChannel &channel, const Prior &prior,
                             const CostFunction &cost, const NumberingMeasurement &measurement) {
    const auto &v = cost.values();
    if (!std::is_sorted(v.begin(), v.end())) {
        throw Error(ErrorCode::ValidationError, "the ordering check needs a nondecreasing cost");
    }
    const auto before = guesswork_of_numbering_measurement(channel, prior, cost, measurement);

    BayesCheck check;
    check.value_before = before.value;
    for (std::size_t k = 0; k < before.joint.size() && check.ordered; ++k) {
        const auto &row = before.joint[k];
        for (std::size_t t = 0; t + 1 < row.size(); ++t) {
            if (row[t + 1] > row[t] + kInputTolerance) {
                check.ordered = false;
                check.witness = {k, t};
                break;
            }
        }
    }
    if (check.ordered) {
        check.reordered = measurement;
        check.value_after = before.value;
        return check;
    }

    std::map<std::vector<std::size_t>, Effect> effects;
    std::vector<std::size_t> g(channel.size());
    std::vector<std::size_t> order(channel.size());
    for (std::size_t k = 0; k < measurement.outcomes.size(); ++k) {
        const auto &[n, effect] = measurement.outcomes[k];
        const auto &row = before.joint[k];
        std::iota(g.begin(), g.end(), std::size_t{0});
        std::stable_sort(g.begin(), g.end(),
                         [&](std::size_t a, std::size_t b) { return row[a] > row[b]; });
        for (std::size_t t = 0; t < g.size(); ++t) {
            order[t] = n[g[t]];
        }
        add_effect(effects, order, effect);
    }
    check.reordered = merge(std::move(effects));
    check.value_after =
        guesswork_of_numbering_measurement(channel, prior, cost, check.reordered).value;
    return check;
}

} // namespace guesswork
