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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "guesswork/guesswork.hpp"

namespace guesswork::testing {

inline const double kSqrt5 = std::sqrt(5.0);

// Closed forms for the identity cost on the regular-polyhedron channels.
inline double closed_form(HsicFamily family) {
    switch (family) {
    case HsicFamily::Tetrahedron:
        return 2.5 - std::sqrt(15.0) / 6.0;
    case HsicFamily::Octahedron:
        return 3.5 - std::sqrt(35.0) / 6.0;
    case HsicFamily::Cube:
        return 4.5 - std::sqrt(7.0) / 2.0;
    case HsicFamily::Icosahedron:
        return 6.5 - std::sqrt(110.0 * (65.0 + 29.0 * kSqrt5)) / 60.0;
    case HsicFamily::Dodecahedron:
        return 10.5 - std::sqrt(6.0 * (3321.0 + 1483.0 * kSqrt5)) / 60.0;
    case HsicFamily::Cuboctahedron:
        return 6.5 - std::sqrt(570.0) / 12.0;
    case HsicFamily::Icosidodecahedron:
        return 15.5 - std::sqrt(117490.0 + 52534.0 * kSqrt5) /
                          (30.0 * std::sqrt(6.0 + 2.0 * kSqrt5));
    }
    return 0.0;
}

struct NaiveOptimum {
    double norm = 0.0;  // max |v| / |M|
    double value = 0.0; // mean cost - norm
    std::uint64_t leaves = 0;
};

// Exhaustive search over all |M|! orders with std::next_permutation. Shares
// nothing with the library beyond the channel type.
inline NaiveOptimum naive_optimum(const QubitCqChannel &channel, const std::vector<double> &cost) {
    const std::size_t size = channel.size();
    const double mean = std::accumulate(cost.begin(), cost.end(), 0.0) / double(size);
    std::vector<std::size_t> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    double best = 0.0;
    std::uint64_t leaves = 0;
    do {
        double x = 0, y = 0, z = 0;
        for (std::size_t t = 0; t < size; ++t) {
            const double w = cost[t] - mean;
            const auto &r = channel.bloch()[perm[t]];
            x += w * r.x;
            y += w * r.y;
            z += w * r.z;
        }
        best = std::max(best, std::sqrt(x * x + y * y + z * z));
        ++leaves;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const double norm = best / double(size);
    return {norm, mean - norm, leaves};
}

inline std::vector<double> identity_cost(std::size_t size) {
    std::vector<double> c(size);
    std::iota(c.begin(), c.end(), 1.0);
    return c;
}

inline std::vector<QubitCqChannel> small_hsic_channels() {
    std::vector<QubitCqChannel> out;
    for (HsicFamily f : kAllHsicFamilies) {
        if (vertex_count(f) <= 12) {
            out.push_back(generate_hsic(f));
        }
    }
    return out;
}

} // namespace guesswork::testing
