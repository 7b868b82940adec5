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
 * Core value types shared by every module: Bloch vectors, qubit
 * classical-quantum channels, priors, cost functions, numberings and
 * numbering-valued measurements.
 *
 * Qubit states are stored as Bloch vectors r, standing for the density
 * operator (I + r.s)/2. Effects are stored as (c0, c), standing for
 * c0 I + c.s, so that Tr[effect * state] = c0 + c.r.
 */

#include <cmath>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace guesswork {

inline constexpr double kInputTolerance = 1e-12;
inline constexpr double kAggregateTolerance = 1e-9;

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    [[nodiscard]] double dot(const BlochVector &o) const noexcept {
        return x * o.x + y * o.y + z * o.z;
    }
    [[nodiscard]] double norm_squared() const noexcept { return dot(*this); }
    [[nodiscard]] double norm() const noexcept { return std::sqrt(norm_squared()); }

    BlochVector &operator+=(const BlochVector &o) noexcept {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    BlochVector &operator-=(const BlochVector &o) noexcept {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    BlochVector &operator*=(double s) noexcept {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    friend BlochVector operator+(BlochVector a, const BlochVector &b) noexcept { return a += b; }
    friend BlochVector operator-(BlochVector a, const BlochVector &b) noexcept { return a -= b; }
    friend BlochVector operator*(double s, BlochVector a) noexcept { return a *= s; }
    friend BlochVector operator*(BlochVector a, double s) noexcept { return a *= s; }
    friend BlochVector operator-(const BlochVector &a) noexcept { return {-a.x, -a.y, -a.z}; }
    friend bool operator==(const BlochVector &, const BlochVector &) = default;
};

[[nodiscard]] BlochVector cross(const BlochVector &a, const BlochVector &b) noexcept;

/// Maximum coordinate-wise difference.
[[nodiscard]] double max_abs_diff(const BlochVector &a, const BlochVector &b) noexcept;

/// A validated map from an alphabet of opaque labels to qubit states.
/// Immutable after construction; all computation uses label indices.
class QubitCqChannel {
  public:
    [[nodiscard]] std::size_t size() const noexcept { return bloch_.size(); }
    [[nodiscard]] const std::vector<std::string> &labels() const noexcept { return labels_; }
    [[nodiscard]] const std::vector<BlochVector> &bloch() const noexcept { return bloch_; }
    [[nodiscard]] const BlochVector &state(std::size_t label) const { return bloch_.at(label); }
    [[nodiscard]] const std::string &name() const noexcept { return name_; }

    /// Index of a label, or nullopt.
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view label) const;

    /// Same labels, every vector replaced by `f(vector)`; revalidated.
    template <class F> [[nodiscard]] QubitCqChannel transformed(F &&f) const;

    friend bool operator==(const QubitCqChannel &, const QubitCqChannel &) = default;

  private:
    friend QubitCqChannel validate_channel(std::vector<std::string>, std::vector<BlochVector>,
                                           std::string);
    QubitCqChannel(std::vector<std::string> labels, std::vector<BlochVector> bloch,
                   std::string name);

    std::vector<std::string> labels_;
    std::vector<BlochVector> bloch_;
    std::string name_;
};

/// Validates raw labels and vectors. Throws Error with DuplicateLabel,
/// BlochNormExceeded, LengthMismatch or TooFewStates. Channels are rejected,
/// never repaired.
[[nodiscard]] QubitCqChannel validate_channel(std::vector<std::string> labels,
                                              std::vector<BlochVector> bloch,
                                              std::string name = {});

template <class F> QubitCqChannel QubitCqChannel::transformed(F &&f) const {
    std::vector<BlochVector> out;
    out.reserve(bloch_.size());
    for (const auto &r : bloch_) {
        out.push_back(f(r));
    }
    return validate_channel(labels_, std::move(out), name_);
}

/// Labels "0", "1", ... for quick construction in code.
[[nodiscard]] QubitCqChannel make_channel(std::vector<BlochVector> bloch, std::string name = {});

class Prior {
  public:
    explicit Prior(std::vector<double> weights);
    [[nodiscard]] static Prior uniform(std::size_t size);

    [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
    [[nodiscard]] double operator[](std::size_t m) const { return weights_[m]; }
    [[nodiscard]] const std::vector<double> &weights() const noexcept { return weights_; }

  private:
    std::vector<double> weights_;
};

/// Cost gamma(t) of succeeding at query t (positions are 0-based here).
///
/// Derived data: the mean, the centered cost gamma - mean, a stable
/// permutation `order()` listing positions by nonincreasing cost, and the
/// mirror involution pairing the i-th largest with the i-th smallest position.
class CostFunction {
  public:
    explicit CostFunction(std::vector<double> values);
    /// gamma(t) = t (1-based), i.e. values 1..size.
    [[nodiscard]] static CostFunction identity(std::size_t size);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const std::vector<double> &values() const noexcept { return values_; }
    [[nodiscard]] double operator[](std::size_t t) const { return values_[t]; }
    [[nodiscard]] double mean() const noexcept { return mean_; }
    [[nodiscard]] const std::vector<double> &centered() const noexcept { return centered_; }
    /// order()[i] is the user position holding the i-th largest cost.
    [[nodiscard]] const std::vector<std::size_t> &order() const noexcept { return order_; }
    /// Centered cost in nonincreasing order: centered()[order()[i]].
    [[nodiscard]] const std::vector<double> &rearranged() const noexcept { return rearranged_; }
    [[nodiscard]] std::size_t mirror(std::size_t t) const { return mirror_.at(t); }
    [[nodiscard]] bool is_balanced() const noexcept { return balanced_; }

  private:
    std::vector<double> values_;
    double mean_ = 0.0;
    std::vector<double> centered_;
    std::vector<std::size_t> order_;
    std::vector<double> rearranged_;
    std::vector<std::size_t> mirror_;
    bool balanced_ = false;
};

/// Bijection from query positions to label indices: position t holds label
/// `at(t)`. Ordered lexicographically by the label index sequence.
class Numbering {
  public:
    Numbering() = default;
    /// Throws InvalidNumbering unless `order` is a permutation of 0..n-1.
    explicit Numbering(std::vector<std::size_t> order);
    [[nodiscard]] static Numbering identity(std::size_t size);

    [[nodiscard]] std::size_t size() const noexcept { return order_.size(); }
    [[nodiscard]] std::size_t at(std::size_t t) const { return order_[t]; }
    [[nodiscard]] std::size_t operator[](std::size_t t) const { return order_[t]; }
    [[nodiscard]] std::size_t position_of(std::size_t label) const { return inverse_[label]; }
    [[nodiscard]] const std::vector<std::size_t> &order() const noexcept { return order_; }

    friend bool operator==(const Numbering &a, const Numbering &b) { return a.order_ == b.order_; }
    friend auto operator<=>(const Numbering &a, const Numbering &b) { return a.order_ <=> b.order_; }

  private:
    std::vector<std::size_t> order_;
    std::vector<std::size_t> inverse_;
};

/// The operator c0 I + c.s.
struct Effect {
    double c0 = 0.0;
    BlochVector c;

    [[nodiscard]] double probability(const BlochVector &state) const noexcept {
        return c0 + c.dot(state);
    }
    [[nodiscard]] double min_eigenvalue() const noexcept { return c0 - c.norm(); }
    [[nodiscard]] double max_eigenvalue() const noexcept { return c0 + c.norm(); }
};

struct MeasurementOutcome {
    Numbering numbering;
    Effect effect;
};

struct NumberingMeasurement {
    std::vector<MeasurementOutcome> outcomes;

    /// Checks positivity and completeness and that every numbering has
    /// `alphabet_size` entries. Throws InvalidMeasurement / AlphabetMismatch.
    void validate(std::size_t alphabet_size) const;
    /// Single outcome `n` with effect I: querying in a fixed order.
    [[nodiscard]] static NumberingMeasurement blind(Numbering n);
};

} // namespace guesswork
