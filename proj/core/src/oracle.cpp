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

#include "guesswork/oracle.hpp"

#include <cmath>
#include <numbers>

#include "guesswork/error.hpp"

namespace guesswork {

namespace {

class Enumerator {
  public:
    Enumerator(const QubitCqChannel &channel, const CostFunction &cost, Regime regime,
               std::vector<std::size_t> antipode)
        : channel_(channel), cost_(cost), regime_(regime), antipode_(std::move(antipode)),
          n_(channel.size()), labels_(n_, kFree), used_(n_, false) {}

    void run() {
        if (fixes_pivot(regime_)) {
            place(pivot_position(cost_), kPivotLabel);
        }
        visit(0);
    }

    double best_score = -1.0;
    std::vector<std::size_t> best;
    std::uint64_t leaves = 0;

  private:
    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

    void place(std::size_t t, std::size_t m) {
        labels_[t] = m;
        used_[m] = true;
        if (pairs_antipodes(regime_)) {
            labels_[cost_.mirror(t)] = antipode_[m];
            used_[antipode_[m]] = true;
        }
    }

    void unplace(std::size_t t) {
        const std::size_t m = labels_[t];
        labels_[t] = kFree;
        used_[m] = false;
        if (pairs_antipodes(regime_)) {
            labels_[cost_.mirror(t)] = kFree;
            used_[antipode_[m]] = false;
        }
    }

    void visit(std::size_t t) {
        while (t < n_ && labels_[t] != kFree) {
            ++t;
        }
        if (t == n_) {
            ++leaves;
            const double s = weighted_sum(channel_, cost_.centered(),
                                          std::span<const std::size_t>(labels_))
                                 .norm();
            if (s > best_score) {
                best_score = s;
                best = labels_;
            }
            return;
        }
        for (std::size_t m = 0; m < n_; ++m) {
            if (used_[m]) {
                continue;
            }
            place(t, m);
            visit(t + 1);
            unplace(t);
        }
    }

    const QubitCqChannel &channel_;
    const CostFunction &cost_;
    Regime regime_;
    std::vector<std::size_t> antipode_;
    std::size_t n_;
    std::vector<std::size_t> labels_;
    std::vector<bool> used_;
};

} // namespace

OracleResult brute_force_norm(const QubitCqChannel &channel, const CostFunction &cost,
                              Regime regime, const OracleOptions &options) {
    if (cost.size() != channel.size()) {
        throw Error(ErrorCode::LengthMismatch, "cost and channel sizes differ");
    }
    const std::uint64_t leaves = regime_size(channel.size(), regime);
    if (leaves > options.cap) {
        throw Error(ErrorCode::CapExceeded, "regime has " + std::to_string(leaves) +
                                                " numberings, above the cap of " +
                                                std::to_string(options.cap));
    }
    std::vector<std::size_t> antipode;
    if (pairs_antipodes(regime)) {
        auto found = find_antipodes(channel);
        if (!found) {
            throw Error(ErrorCode::RegimeUnavailable, "channel is not centrally symmetric");
        }
        antipode = std::move(*found);
    }
    Enumerator e(channel, cost, regime, std::move(antipode));
    e.run();

    OracleResult out;
    out.score = e.best_score;
    out.norm = e.best_score / static_cast<double>(channel.size());
    out.numbering = Numbering(e.best);
    out.leaves = e.leaves;
    out.value = cost.mean() - out.norm;
    return out;
}

double uniform_unit(std::mt19937_64 &engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

QubitCqChannel random_channel(std::size_t size, std::uint64_t seed, bool surface_only) {
    std::mt19937_64 engine(seed);
    std::vector<BlochVector> bloch;
    bloch.reserve(size);
    for (std::size_t m = 0; m < size; ++m) {
        const double z = 2.0 * uniform_unit(engine) - 1.0;
        const double phi = 2.0 * std::numbers::pi * uniform_unit(engine);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        BlochVector v{rho * std::cos(phi), rho * std::sin(phi), z};
        if (!surface_only) {
            v *= uniform_unit(engine);
        }
        bloch.push_back(v);
    }
    return make_channel(std::move(bloch), "random-" + std::to_string(seed));
}

Matrix3 random_rotation(std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    // Shoemake's uniform unit quaternion.
    const double u1 = uniform_unit(engine);
    const double u2 = 2.0 * std::numbers::pi * uniform_unit(engine);
    const double u3 = 2.0 * std::numbers::pi * uniform_unit(engine);
    const double a = std::sqrt(1.0 - u1);
    const double b = std::sqrt(u1);
    const double w = a * std::sin(u2), x = a * std::cos(u2);
    const double y = b * std::sin(u3), z = b * std::cos(u3);
    Matrix3 m;
    m.a = {{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
            {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
            {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}}};
    return m;
}

} // namespace guesswork
