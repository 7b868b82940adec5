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

#include <gtest/gtest.h>

#include "support.hpp"

namespace guesswork {
namespace {

using testing::closed_form;

TEST(Score, NormalizeCost) {
    const auto n = normalize_cost(CostFunction({4, 1, 3, 2}), 4);
    EXPECT_DOUBLE_EQ(n.mean, 2.5);
    EXPECT_EQ(n.weights, (std::vector<double>{1.5, 0.5, -0.5, -1.5}));
    EXPECT_EQ(n.rearrangement, (std::vector<std::size_t>{0, 2, 3, 1}));
    EXPECT_TRUE(n.balanced);
}

TEST(Score, WeightedSumOverloadsAgree) {
    const auto c = random_channel(6, 5, false);
    const auto cost = CostFunction::identity(6);
    const Numbering n({3, 1, 5, 0, 2, 4});
    const auto a = weighted_sum(c, cost.centered(), n);
    const auto b = weighted_sum(c, cost.centered(), std::span<const std::size_t>(n.order()));
    EXPECT_EQ(a, b);
    EXPECT_DOUBLE_EQ(e_norm(c, cost.centered(), n), a.norm() / 6.0);
}

TEST(Score, AntipodalPair) {
    const auto c = make_channel({{0, 0, 1}, {0, 0, -1}});
    const auto cost = CostFunction::identity(2);
    EXPECT_DOUBLE_EQ(e_norm(c, cost.centered(), Numbering({0, 1})), 0.5);
    EXPECT_DOUBLE_EQ(guesswork_value(c, cost, 0.5), 1.0);
}

TEST(Score, GuessworkValueNeedsBalancedCost) {
    const auto c = generate_hsic(HsicFamily::Tetrahedron);
    try {
        (void)guesswork_value(c, CostFunction({1, 1, 2, 7}), 0.1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotBalanced);
    }
}

TEST(Score, OptimalMeasurementOnAntipodalPair) {
    const auto c = make_channel({{0, 0, 1}, {0, 0, -1}});
    const auto cost = CostFunction::identity(2);
    const auto m = build_optimal_measurement(c, cost, Numbering({0, 1}));
    ASSERT_EQ(m.outcomes.size(), 2u);
    EXPECT_NO_THROW(m.validate(2));
    const auto g = guesswork_of_numbering_measurement(c, Prior::uniform(2), cost, m);
    EXPECT_NEAR(g.value, 1.0, 1e-15);
    // Projector onto the state guessed first.
    EXPECT_NEAR(m.outcomes[0].effect.probability(c.state(0)), 1.0, 1e-15);
}

TEST(Score, OptimalMeasurementReproducesOctahedron) {
    const auto c = generate_hsic(HsicFamily::Octahedron);
    const auto cost = CostFunction::identity(6);
    const auto r = solve(c, cost);
    const auto m = build_optimal_measurement(c, cost, r.best_numbering);
    const auto g = guesswork_of_numbering_measurement(c, Prior::uniform(6), cost, m);
    EXPECT_NEAR(g.value, closed_form(HsicFamily::Octahedron), 1e-12);
    for (const auto &o : m.outcomes) {
        EXPECT_NEAR(o.effect.min_eigenvalue(), 0.0, 1e-12);
        EXPECT_NEAR(o.effect.max_eigenvalue(), 1.0, 1e-12);
    }
}

TEST(Score, IdenticalStatesGiveBlindMeasurement) {
    const auto c = make_channel({{0.3, 0, 0}, {0.3, 0, 0}, {0.3, 0, 0}});
    const auto cost = CostFunction::identity(3);
    const auto m = build_optimal_measurement(c, cost, Numbering::identity(3));
    ASSERT_EQ(m.outcomes.size(), 1u);
    const auto g = guesswork_of_numbering_measurement(c, Prior::uniform(3), cost, m);
    EXPECT_NEAR(g.value, 2.0, 1e-15);
}

TEST(Score, JointDistributionMarginals) {
    const auto c = generate_hsic(HsicFamily::Cube);
    const auto cost = CostFunction::identity(8);
    const auto r = solve(c, cost);
    const auto m = build_optimal_measurement(c, cost, r.best_numbering);
    const auto g = guesswork_of_numbering_measurement(c, Prior::uniform(8), cost, m);
    double total = 0.0;
    for (const auto &row : g.joint) {
        for (double p : row) {
            EXPECT_GE(p, -1e-15);
            total += p;
        }
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    double expected = 0.0;
    for (std::size_t t = 0; t < 8; ++t) {
        expected += g.marginal[t] * cost[t];
    }
    EXPECT_NEAR(g.value, expected, 1e-12);
}

TEST(Score, MirroredNumbering) {
    const auto cost = CostFunction::identity(4);
    EXPECT_EQ(mirrored(Numbering({2, 0, 3, 1}), cost), Numbering({1, 3, 0, 2}));
}

TEST(Score, RegimeSizes) {
    EXPECT_EQ(regime_size(6, Regime::General), 720u);
    EXPECT_EQ(regime_size(6, Regime::Transitive), 120u);
    EXPECT_EQ(regime_size(6, Regime::CentrallySymmetric), 48u);
    EXPECT_EQ(regime_size(6, Regime::TransitiveCs), 8u);
    EXPECT_EQ(regime_size(4, Regime::General), 24u);
    EXPECT_EQ(regime_size(100, Regime::General), std::numeric_limits<std::uint64_t>::max());
    EXPECT_EQ(parse_regime("transitive-cs"), Regime::TransitiveCs);
    EXPECT_EQ(regime_name(Regime::CentrallySymmetric), "cs");
    EXPECT_FALSE(parse_regime("bogus").has_value());
}

// Properties.

TEST(ScoreProperty, RotationInvariance) {
    const auto cost = CostFunction::identity(8);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto c = random_channel(8, seed, false);
        const auto rot = random_rotation(1000 + seed);
        EXPECT_LT(rot.orthogonality_defect(), 1e-12);
        const auto rc = c.transformed([&](const BlochVector &r) { return rot.apply(r); });
        std::mt19937_64 rng(seed);
        std::vector<std::size_t> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        for (int k = 0; k < 20; ++k) {
            std::shuffle(perm.begin(), perm.end(), rng);
            const Numbering n(perm);
            EXPECT_NEAR(e_norm(c, cost.centered(), n), e_norm(rc, cost.centered(), n), 1e-12);
        }
    }
}

TEST(ScoreProperty, TriangleBound) {
    const auto cost = CostFunction({1, 2, 2, 5, 8, 9});
    double abs_sum = 0.0;
    for (double w : cost.centered()) {
        abs_sum += std::abs(w);
    }
    std::vector<std::size_t> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto c = random_channel(6, seed, false);
        do {
            EXPECT_LE(e_norm(c, cost.centered(), Numbering(perm)), abs_sum / 6.0 + 1e-15);
        } while (std::next_permutation(perm.begin(), perm.end()) && seed < 2);
    }
}

TEST(ScoreProperty, MeasurementConsistency) {
    for (const auto &c : testing::small_hsic_channels()) {
        const auto cost = CostFunction::identity(c.size());
        const auto r = solve(c, cost);
        const auto m = build_optimal_measurement(c, cost, r.best_numbering);
        const auto g = guesswork_of_numbering_measurement(c, Prior::uniform(c.size()), cost, m);
        EXPECT_NEAR(g.value, r.value, 1e-12) << c.name();
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto c = random_channel(4 + seed % 4, seed, false);
        const auto cost = CostFunction::identity(c.size());
        const auto r = solve(c, cost);
        const auto m = build_optimal_measurement(c, cost, r.best_numbering);
        const auto g = guesswork_of_numbering_measurement(c, Prior::uniform(c.size()), cost, m);
        EXPECT_NEAR(g.value, r.value, 1e-12);
    }
}

TEST(ScoreProperty, ShrinkLinearity) {
    for (HsicFamily f : {HsicFamily::Tetrahedron, HsicFamily::Cube, HsicFamily::Icosahedron}) {
        const auto c = generate_hsic(f);
        const auto cost = CostFunction::identity(c.size());
        const double full = solve(c, cost).value;
        for (double lambda : {0.0, 0.25, 0.5, 1.0}) {
            const auto shrunk = c.transformed([&](const BlochVector &r) { return lambda * r; });
            const double g = solve(shrunk, cost).value;
            EXPECT_NEAR(g, cost.mean() - lambda * (cost.mean() - full), 1e-9)
                << family_name(f) << " lambda " << lambda;
        }
    }
}

} // namespace
} // namespace guesswork
