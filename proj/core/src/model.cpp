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

#include "guesswork/model.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "guesswork/error.hpp"

namespace guesswork {

BlochVector cross(const BlochVector &a, const BlochVector &b) noexcept {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double max_abs_diff(const BlochVector &a, const BlochVector &b) noexcept {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

QubitCqChannel::QubitCqChannel(std::vector<std::string> labels, std::vector<BlochVector> bloch,
                               std::string name)
    : labels_(std::move(labels)), bloch_(std::move(bloch)), name_(std::move(name)) {}

std::optional<std::size_t> QubitCqChannel::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

QubitCqChannel validate_channel(std::vector<std::string> labels, std::vector<BlochVector> bloch,
                                std::string name) {
    if (labels.size() != bloch.size()) {
        throw Error(ErrorCode::LengthMismatch, "channel has " + std::to_string(labels.size()) +
                                                   " labels but " + std::to_string(bloch.size()) +
                                                   " Bloch vectors");
    }
    if (labels.size() < 2) {
        throw Error(ErrorCode::TooFewStates, "a channel needs at least two states");
    }
    std::unordered_set<std::string> seen;
    for (const auto &label : labels) {
        if (!seen.insert(label).second) {
            throw Error(ErrorCode::DuplicateLabel, "duplicate label '" + label + "'");
        }
    }
    for (std::size_t m = 0; m < bloch.size(); ++m) {
        const auto &r = bloch[m];
        if (!std::isfinite(r.x) || !std::isfinite(r.y) || !std::isfinite(r.z) ||
            r.norm() > 1.0 + kInputTolerance) {
            throw Error(ErrorCode::BlochNormExceeded,
                        "Bloch vector of '" + labels[m] + "' lies outside the unit ball");
        }
    }
    return QubitCqChannel(std::move(labels), std::move(bloch), std::move(name));
}

QubitCqChannel make_channel(std::vector<BlochVector> bloch, std::string name) {
    std::vector<std::string> labels(bloch.size());
    for (std::size_t m = 0; m < labels.size(); ++m) {
        labels[m] = std::to_string(m);
    }
    return validate_channel(std::move(labels), std::move(bloch), std::move(name));
}

Prior::Prior(std::vector<double> weights) : weights_(std::move(weights)) {
    double total = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0 && w <= 1.0)) {
            throw Error(ErrorCode::InvalidPrior, "prior weights must lie in [0, 1]");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kInputTolerance * std::max<double>(1.0, weights_.size())) {
        throw Error(ErrorCode::InvalidPrior, "prior weights must sum to 1");
    }
}

Prior Prior::uniform(std::size_t size) {
    return Prior(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

CostFunction::CostFunction(std::vector<double> values) : values_(std::move(values)) {
    const std::size_t n = values_.size();
    if (n == 0) {
        throw Error(ErrorCode::LengthMismatch, "cost function must be non-empty");
    }
    double scale = 1.0;
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::ValidationError, "cost values must be finite");
        }
        scale = std::max(scale, std::abs(v));
    }
    mean_ = std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(n);
    centered_.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        centered_[t] = values_[t] - mean_;
    }

    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return values_[a] > values_[b]; });
    rearranged_.resize(n);
    mirror_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        rearranged_[i] = centered_[order_[i]];
        mirror_[order_[i]] = order_[n - 1 - i];
    }

    balanced_ = true;
    for (std::size_t i = 0; i < n; ++i) {
        const double pair = values_[order_[i]] + values_[order_[n - 1 - i]];
        if (std::abs(pair - 2.0 * mean_) > kInputTolerance * scale) {
            balanced_ = false;
            break;
        }
    }
}

CostFunction CostFunction::identity(std::size_t size) {
    std::vector<double> v(size);
    std::iota(v.begin(), v.end(), 1.0);
    return CostFunction(std::move(v));
}

Numbering::Numbering(std::vector<std::size_t> order) : order_(std::move(order)) {
    inverse_.assign(order_.size(), order_.size());
    for (std::size_t t = 0; t < order_.size(); ++t) {
        const std::size_t m = order_[t];
        if (m >= order_.size() || inverse_[m] != order_.size()) {
            throw Error(ErrorCode::InvalidNumbering, "numbering is not a bijection");
        }
        inverse_[m] = t;
    }
}

Numbering Numbering::identity(std::size_t size) {
    std::vector<std::size_t> v(size);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return Numbering(std::move(v));
}

void NumberingMeasurement::validate(std::size_t alphabet_size) const {
    if (outcomes.empty()) {
        throw Error(ErrorCode::InvalidMeasurement, "measurement has no outcomes");
    }
    double c0_sum = 0.0;
    BlochVector c_sum;
    for (const auto &o : outcomes) {
        if (o.numbering.size() != alphabet_size) {
            throw Error(ErrorCode::AlphabetMismatch,
                        "measurement outcome numbers a different alphabet");
        }
        if (o.effect.min_eigenvalue() < -kInputTolerance ||
            o.effect.max_eigenvalue() > 1.0 + kInputTolerance) {
            throw Error(ErrorCode::InvalidMeasurement, "effect is not between 0 and I");
        }
        c0_sum += o.effect.c0;
        c_sum += o.effect.c;
    }
    if (std::abs(c0_sum - 1.0) > kAggregateTolerance || c_sum.norm() > kAggregateTolerance) {
        throw Error(ErrorCode::InvalidMeasurement, "effects do not sum to the identity");
    }
}

NumberingMeasurement NumberingMeasurement::blind(Numbering n) {
    NumberingMeasurement m;
    m.outcomes.push_back({std::move(n), Effect{1.0, {}}});
    return m;
}

} // namespace guesswork
