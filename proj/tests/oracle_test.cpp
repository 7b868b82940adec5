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

TEST(Oracle, AgreesWithSolverOnRandomChannels) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t size = 4 + seed % 5;
        const auto c = random_channel(size, seed, seed % 3 == 0);
        const auto cost = CostFunction::identity(size);
        const auto oracle = brute_force_norm(c, cost, Regime::General);
        const auto naive = testing::naive_optimum(c, cost.values());
        const auto solved = solve(c, cost);
        EXPECT_NEAR(oracle.norm, naive.norm, 1e-12);
        EXPECT_EQ(oracle.leaves, naive.leaves);
        EXPECT_NEAR(solved.best_norm, oracle.norm, 1e-12) << seed;
        EXPECT_NEAR(solved.value, oracle.value, 1e-12) << seed;
        EXPECT_EQ(solved.best_numbering, oracle.numbering) << seed;
    }
}

TEST(Oracle, HsicValues) {
    for (HsicFamily f : {HsicFamily::Tetrahedron, HsicFamily::Octahedron, HsicFamily::Cube,
                         HsicFamily::Cuboctahedron}) {
        const auto c = generate_hsic(f);
        const auto regime = select_regime(detect_symmetries(c));
        const auto r = brute_force_norm(c, CostFunction::identity(c.size()), regime);
        EXPECT_NEAR(r.value, testing::closed_form(f), 1e-12) << family_name(f);
        EXPECT_EQ(r.leaves, regime_size(c.size(), regime));
    }
}

TEST(Oracle, CuboctahedronLeafCount) {
    const auto c = generate_hsic(HsicFamily::Cuboctahedron);
    const auto r = brute_force_norm(c, CostFunction::identity(12), Regime::CentrallySymmetric);
    EXPECT_EQ(r.leaves, 46080u);
    const auto t = brute_force_norm(c, CostFunction::identity(12), Regime::TransitiveCs);
    EXPECT_EQ(t.leaves, 3840u);
    EXPECT_NEAR(r.value, t.value, 1e-12);
}

TEST(Oracle, CsRegimeMatchesGeneralRegime) {
    std::vector<QubitCqChannel> channels{generate_hsic(HsicFamily::Octahedron),
                                         generate_hsic(HsicFamily::Cube)};
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto half = random_channel(4, seed, false);
        std::vector<BlochVector> v = half.bloch();
        for (const auto &r : half.bloch()) {
            v.push_back(-r);
        }
        channels.push_back(make_channel(v));
    }
    for (const auto &c : channels) {
        const auto cost = CostFunction::identity(c.size());
        EXPECT_NEAR(brute_force_norm(c, cost, Regime::CentrallySymmetric).norm,
                    brute_force_norm(c, cost, Regime::General).norm, 1e-12);
    }
}

TEST(Oracle, UnbalancedCostIsAccepted) {
    const auto c = random_channel(5, 9, false);
    const CostFunction cost({1, 2, 2, 3, 10});
    const auto r = brute_force_norm(c, cost, Regime::General);
    EXPECT_NEAR(r.norm, testing::naive_optimum(c, cost.values()).norm, 1e-12);
}

TEST(Oracle, Errors) {
    const auto c = generate_hsic(HsicFamily::Tetrahedron);
    try {
        (void)brute_force_norm(c, CostFunction::identity(4), Regime::General, {10});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
    }
    try {
        (void)brute_force_norm(c, CostFunction::identity(4), Regime::CentrallySymmetric);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::RegimeUnavailable);
    }
}

TEST(RandomChannel, Reproducible) {
    EXPECT_EQ(random_channel(4, 7, true), random_channel(4, 7, true));
    EXPECT_NE(random_channel(4, 7, true), random_channel(4, 8, true));
    const auto surface = random_channel(50, 7, true);
    for (const auto &r : surface.bloch()) {
        EXPECT_NEAR(r.norm(), 1.0, 1e-12);
    }
    const auto ball = random_channel(50, 7, false);
    for (const auto &r : ball.bloch()) {
        EXPECT_LE(r.norm(), 1.0);
    }
    EXPECT_EQ(random_channel(2, 1, true).size(), 2u);
    try {
        (void)random_channel(1, 1, true);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::TooFewStates);
    }
}

TEST(RandomChannel, GeneratorMatchesStandard) {
    std::mt19937_64 engine;
    engine.discard(9999);
    EXPECT_EQ(engine(), 9981545732273789042ULL);
    std::mt19937_64 a(1);
    std::mt19937_64 b(1);
    EXPECT_EQ(uniform_unit(a), double(b() >> 11) * 0x1.0p-53);
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_EQ(derive_seed(1, 0), derive_seed(1, 0));
}

TEST(RandomRotation, IsProperOrthogonal) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = random_rotation(seed);
        EXPECT_LT(r.orthogonality_defect(), 1e-12);
        EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
    }
}

} // namespace
} // namespace guesswork
