/*
 * Copyright 2026 The cppforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cppforge/construct.hpp"
#include "cppforge/number.hpp"
#include "cppforge/perm_check.hpp"
#include "cppforge/search.hpp"

using namespace cppforge;

TEST(Search, Interpolation)
{
    auto f5 = make_prime_field(5);
    EXPECT_EQ(lagrange_interpolate(f5, std::vector<Code>{0, 1, 2, 3, 4}), Poly::identity(f5));
    EXPECT_TRUE(lagrange_interpolate(f5, std::vector<Code>(5, 0)).is_zero());
    EXPECT_THROW(lagrange_interpolate(f5, std::vector<Code>{0, 1}), Error);

    auto f7 = make_prime_field(7);
    std::vector<Code> table(7);
    std::iota(table.begin(), table.end(), 0);
    std::mt19937 rng(8);
    for (int i = 0; i < 20; ++i) {
        std::shuffle(table.begin(), table.end(), rng);
        const Poly p = lagrange_interpolate(f7, table);
        EXPECT_LT(p.degree(), 7);
        EXPECT_EQ(tabulate(p), table);
    }
}

TEST(Search, SmallCatalogs)
{
    EXPECT_TRUE(enumerate_complete_mappings(make_prime_field(2), true).empty());
    auto f4 = make_field(2, 2);
    auto found = enumerate_complete_mappings(f4, true);
    ASSERT_EQ(found.size(), 2u);
    EXPECT_EQ(found[0].table, (std::vector<Code>{0, 2, 3, 1}));
    EXPECT_EQ(found[1].table, (std::vector<Code>{0, 3, 1, 2}));
    EXPECT_EQ(found[0].poly, Poly(f4, {0, 2}));
    EXPECT_FALSE(found[0].normalized);
}

TEST(Search, DualPathCounts)
{
    for (std::uint64_t q : {3, 4, 5, 7, 8}) {
        auto pp = *prime_power(q);
        auto f = make_field(pp.first, pp.second);
        EXPECT_EQ(enumerate_complete_mappings(f, true).size(), count_complete_mappings_by_interpolation(f, true));
    }
    auto f5 = make_prime_field(5);
    EXPECT_EQ(enumerate_complete_mappings(f5, false).size(), count_complete_mappings_by_interpolation(f5, false));
    EXPECT_EQ(enumerate_complete_mappings(f5, false).size(), 15u);
}

TEST(Search, Cap)
{
    try {
        enumerate_complete_mappings(make_prime_field(13), true);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SearchCapExceeded);
    }
}

TEST(Search, HForm)
{
    auto f5 = make_prime_field(5);
    EXPECT_EQ(to_h_form(Poly(f5, {0, 3}), 3), Poly(f5, {3}));
    EXPECT_EQ(to_h_form(Poly(f5, {0, 0, 0, 1}), 1), Poly(f5, {0, 0, 1}));
    EXPECT_THROW(to_h_form(Poly(f5, {1, 1}), 3), Error);
    EXPECT_THROW(to_h_form(Poly(f5, {0, 1}), 2), Error);

    auto f8 = make_field(2, 3);
    for (const auto& m : enumerate_complete_mappings(f8, true)) {
        const Poly h = to_h_form(m.poly, 2);
        EXPECT_EQ(tabulate(from_h_form(h, 2)), m.table);
    }
}
