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

#include <set>

#include <gtest/gtest.h>

#include "support.hpp"

namespace guesswork {
namespace {

struct Expected {
    HsicFamily family;
    std::size_t order;
    bool centrally_symmetric;
};

// Point-group orders of the vertex sets, counting reflections.
const Expected kExpected[] = {
    {HsicFamily::Tetrahedron, 24, false},      {HsicFamily::Octahedron, 48, true},
    {HsicFamily::Cube, 48, true},              {HsicFamily::Icosahedron, 120, true},
    {HsicFamily::Dodecahedron, 120, true},     {HsicFamily::Cuboctahedron, 48, true},
    {HsicFamily::Icosidodecahedron, 120, true},
};

std::vector<std::size_t> compose(const std::vector<std::size_t> &a,
                                 const std::vector<std::size_t> &b) {
    std::vector<std::size_t> out(a.size());
    for (std::size_t m = 0; m < a.size(); ++m) {
        out[m] = a[b[m]];
    }
    return out;
}

TEST(Symmetry, HsicGroupOrders) {
    for (const auto &e : kExpected) {
        const auto info = detect_symmetries(generate_hsic(e.family));
        EXPECT_EQ(info.order(), e.order) << family_name(e.family);
        EXPECT_TRUE(info.transitive) << family_name(e.family);
        EXPECT_EQ(info.centrally_symmetric, e.centrally_symmetric) << family_name(e.family);
    }
}

TEST(Symmetry, GroupIsClosedAndRealizedByOrthogonalMaps) {
    for (HsicFamily f : {HsicFamily::Tetrahedron, HsicFamily::Octahedron, HsicFamily::Cube,
                         HsicFamily::Cuboctahedron, HsicFamily::Icosahedron}) {
        const auto c = generate_hsic(f);
        const auto info = detect_symmetries(c);
        ASSERT_FALSE(info.group.empty());
        for (std::size_t m = 0; m < c.size(); ++m) {
            EXPECT_EQ(info.group[0].perm[m], m);
        }
        for (const auto &g : info.group) {
            EXPECT_LT(g.realization.orthogonality_defect(), 1e-9);
            for (std::size_t m = 0; m < c.size(); ++m) {
                EXPECT_LT(max_abs_diff(g.realization.apply(c.state(m)), c.state(g.perm[m])),
                          1e-9);
            }
            for (const auto &h : info.group) {
                EXPECT_TRUE(info.find(compose(g.perm, h.perm)).has_value());
            }
        }
    }
}

TEST(Symmetry, OrbitOfEveryLabelIsEverything) {
    const auto info = detect_symmetries(generate_hsic(HsicFamily::Dodecahedron));
    std::set<std::size_t> orbit;
    for (const auto &g : info.group) {
        orbit.insert(g.perm[0]);
    }
    EXPECT_EQ(orbit.size(), 20u);
}

TEST(Symmetry, RandomChannelIsTrivial) {
    const auto info = detect_symmetries(random_channel(6, 3, false));
    EXPECT_EQ(info.order(), 1u);
    EXPECT_FALSE(info.transitive);
    EXPECT_FALSE(info.centrally_symmetric);
}

TEST(Symmetry, AntipodalPairChannel) {
    const auto c = make_channel({{0, 0, 1}, {0, 0, -1}});
    const auto info = detect_symmetries(c);
    EXPECT_TRUE(info.transitive);
    EXPECT_TRUE(info.centrally_symmetric);
    const auto pairs = antipodal_pairing(info, c);
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_EQ(pairs[0], (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(Symmetry, PairingRejectsNonSymmetric) {
    const auto c = generate_hsic(HsicFamily::Tetrahedron);
    const auto info = detect_symmetries(c);
    try {
        (void)antipodal_pairing(info, c);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCentrallySymmetric);
    }
}

TEST(Symmetry, AntipodesOfCube) {
    const auto c = generate_hsic(HsicFamily::Cube);
    const auto anti = find_antipodes(c);
    ASSERT_TRUE(anti.has_value());
    for (std::size_t m = 0; m < c.size(); ++m) {
        EXPECT_LT(max_abs_diff(c.state((*anti)[m]), -c.state(m)), 1e-12);
        EXPECT_EQ((*anti)[(*anti)[m]], m);
    }
}

TEST(Symmetry, OrderCapIsEnforced) {
    try {
        (void)detect_symmetries(generate_hsic(HsicFamily::Icosahedron), {1e-9, 50});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedSize);
    }
}

TEST(Symmetry, InvariantUnderRotation) {
    const auto c = generate_hsic(HsicFamily::Cuboctahedron);
    const auto rot = random_rotation(99);
    const auto rotated = c.transformed([&](const BlochVector &r) { return rot.apply(r); });
    const auto a = detect_symmetries(c);
    const auto b = detect_symmetries(rotated);
    EXPECT_EQ(a.order(), b.order());
    for (const auto &g : a.group) {
        EXPECT_TRUE(b.find(g.perm).has_value());
    }
}

} // namespace
} // namespace guesswork
