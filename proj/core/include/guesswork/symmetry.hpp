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

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "guesswork/model.hpp"

namespace guesswork {

/// Row-major 3x3 real matrix acting on Bloch space.
struct Matrix3 {
    std::array<std::array<double, 3>, 3> a{};

    [[nodiscard]] static Matrix3 identity() noexcept;
    [[nodiscard]] BlochVector apply(const BlochVector &v) const noexcept;
    [[nodiscard]] Matrix3 transpose() const noexcept;
    [[nodiscard]] double determinant() const noexcept;
    /// Max entry-wise deviation of M^T M from the identity.
    [[nodiscard]] double orthogonality_defect() const noexcept;

    friend Matrix3 operator*(const Matrix3 &l, const Matrix3 &r) noexcept;
};

[[nodiscard]] double max_abs_diff(const Matrix3 &l, const Matrix3 &r) noexcept;

/// A label permutation g together with an orthogonal R_g satisfying
/// R_g r_m = r_{g(m)}. Improper R_g (det = -1) are kept.
struct SymmetryElement {
    std::vector<std::size_t> perm;
    Matrix3 realization;
};

struct SymmetryInfo {
    /// Sorted by permutation; the identity comes first.
    std::vector<SymmetryElement> group;
    bool transitive = false;
    bool centrally_symmetric = false;
    /// antipode[m] is the label with r = -r_m, when centrally symmetric.
    std::optional<std::vector<std::size_t>> antipode;

    [[nodiscard]] std::size_t order() const noexcept { return group.size(); }
    /// Index of the element with this permutation, if present.
    [[nodiscard]] std::optional<std::size_t> find(const std::vector<std::size_t> &perm) const;
};

struct SymmetryOptions {
    /// Gram entries and equivariance are compared at this tolerance.
    double tolerance = kAggregateTolerance;
    /// Enumeration stops with UnsupportedSize beyond this group order.
    /// Degenerate channels (many repeated vectors) have factorial groups.
    std::size_t max_order = 100000;
};

/// Finds every label permutation preserving the Gram matrix r_i.r_j and builds
/// its orthogonal realization. On rank-deficient channels the realization acts
/// as the identity on the orthogonal complement of the span.
[[nodiscard]] SymmetryInfo detect_symmetries(const QubitCqChannel &channel,
                                             const SymmetryOptions &options = {});

/// Pairs (m, antipode(m)) with m < antipode(m), ascending.
/// Throws NotCentrallySymmetric.
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>>
antipodal_pairing(const SymmetryInfo &info, const QubitCqChannel &channel);

/// Perfect matching of labels into antipodal pairs, or nullopt.
[[nodiscard]] std::optional<std::vector<std::size_t>>
find_antipodes(const QubitCqChannel &channel, double tolerance = kAggregateTolerance);

} // namespace guesswork
