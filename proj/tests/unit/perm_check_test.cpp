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

#include <random>

#include "cppforge/construct.hpp"
#include "cppforge/field_maps.hpp"
#include "cppforge/perm_check.hpp"

using namespace cppforge;

TEST(PermCheck, EvalPoly)
{
    auto f3 = make_prime_field(3);
    EXPECT_EQ(eval_poly(Poly(f3, {0, 0, 1}), Element(f3, 2)).code(), 1u);
    EXPECT_EQ(eval_poly(Poly::identity(f3), Element(f3, 2)).code(), 2u);
    EXPECT_THROW(eval_poly(Poly::identity(f3), Element(make_prime_field(5), 1)), Error);
}

TEST(PermCheck, BasicVerdicts)
{
    auto f3 = make_prime_field(3);
    auto v = is_permutation(Poly(f3, {0, 0, 1}));
    EXPECT_FALSE(v.is_permutation);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(*v.witness, (std::pair<Code, Code>{1, 2}));
    EXPECT_TRUE(is_permutation(Poly(make_field(2, 3), {0, 0, 0, 1})).is_permutation);
    EXPECT_TRUE(is_permutation(Poly::identity(make_tower(3, 1, 2))).is_permutation);
    EXPECT_FALSE(is_permutation(Poly::identity(f3)).witness.has_value());
}

TEST(PermCheck, WitnessIsSmallestCollision)
{
    auto f7 = make_prime_field(7);
    // x^3 on F_7 takes values 0, 1, 1, 6, 1, 6, 6.
    auto v = is_permutation(Poly(f7, {0, 0, 0, 1}));
    EXPECT_EQ(*v.witness, (std::pair<Code, Code>{1, 2}));
    auto t = check_table(std::vector<Code>{3, 0, 2, 0, 3});
    EXPECT_EQ(*t.witness, (std::pair<Code, Code>{0, 4}));
}

TEST(PermCheck, CompletePermutations)
{
    auto f4 = make_field(2, 2);
    EXPECT_TRUE(is_cpp(is_complete_permutation(Poly(f4, {0, 2}))));
    for (std::uint64_t p : {3, 5, 7}) {
        EXPECT_TRUE(is_cpp(is_complete_permutation(Poly::identity(make_prime_field(p)))));
    }
    auto v = is_complete_permutation(Poly::identity(make_prime_field(2)));
    EXPECT_TRUE(v.first.is_permutation);
    EXPECT_FALSE(v.second.is_permutation);
}

TEST(PermCheck, ShiftSymmetry)
{
    auto f = make_prime_field(7);
    std::mt19937 rng(2);
    std::uniform_int_distribution<Code> c(0, 6);
    for (int i = 0; i < 200; ++i) {
        Poly poly(f, {c(rng), c(rng), c(rng), c(rng)});
        const Poly g = poly + Poly::identity(f);
        const auto forward = is_complete_permutation(poly);
        EXPECT_EQ(is_permutation(g).is_permutation, forward.second.is_permutation);
        EXPECT_EQ(is_permutation(g - Poly::identity(f)).is_permutation, forward.first.is_permutation);
    }
}

TEST(PermCheck, MonomialOverF64MatchesSubfield)
{
    auto tower = make_tower(2, 3, 2);
    auto f8 = tower->base();
    for (Code alpha = 1; alpha < 8; ++alpha) {
        const bool lifted = is_cpp(is_complete_permutation(Poly::monomial(tower, alpha, 10)));
        const bool sub = is_cpp(is_complete_permutation(Poly::monomial(f8, alpha, 3)));
        EXPECT_EQ(lifted, sub) << alpha;
    }
}

TEST(PermCheck, ChunkedTabulateEqualsSerial)
{
    auto f = make_tower(3, 2, 2);
    Poly poly(f, {4, 0, 7, 1, 0, 33, 2});
    EXPECT_EQ(tabulate(poly, CheckOptions{f->order(), 4}), tabulate(poly, CheckOptions{f->order(), 1}));
    EXPECT_EQ(tabulate(poly, CheckOptions{f->order(), 1}), tabulate(poly));
}

TEST(PermCheck, CapEnforced)
{
    auto f = make_tower(2, 4, 2);
    try {
        is_permutation(Poly::identity(f), CheckOptions{100, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OrderCapExceeded);
    }
}

TEST(PermCheck, AgwIdentity)
{
    auto tower = make_tower(2, 2, 3);
    auto r = agw_verify(Poly::identity(tower), Poly::identity(tower->base()), LambdaKind::Trace);
    EXPECT_TRUE(r.square_commutes && r.lambda_surjective && r.lambdabar_surjective);
    EXPECT_TRUE(r.h_bijective && r.fibers_injective && r.applicable && r.conclusion && r.cross_check);
}

TEST(PermCheck, AgwScalarTraceLift)
{
    auto tower = make_tower(5, 1, 2);
    auto r = agw_verify(Poly(tower, {0, 2}), Poly(tower->base(), {0, 2}), LambdaKind::Trace);
    EXPECT_TRUE(r.square_commutes);
    EXPECT_TRUE(r.conclusion);
    EXPECT_TRUE(r.cross_check);
}

TEST(PermCheck, AgwBrokenFibre)
{
    auto tower = make_tower(2, 2, 2);
    TowerMaps maps(tower);
    std::vector<Code> f(tower->order()), h(4);
    for (Code x = 0; x < f.size(); ++x) {
        f[x] = x;
    }
    for (Code y = 0; y < 4; ++y) {
        h[y] = y;
    }
    // Two distinct elements of one fibre now share an image.
    const Code a = maps.kernel()[1], b = maps.kernel()[2];
    f[a] = b;
    auto r = agw_verify(maps, f, h, LambdaKind::Trace);
    EXPECT_TRUE(r.square_commutes);
    EXPECT_TRUE(r.h_bijective);
    EXPECT_FALSE(r.fibers_injective);
    EXPECT_FALSE(r.conclusion);
    EXPECT_FALSE(r.cross_check);
}

TEST(PermCheck, AgwSquareNotCommuting)
{
    auto tower = make_tower(3, 1, 2);
    auto r = agw_verify(Poly(tower, {0, 0, 1}), Poly::identity(tower->base()), LambdaKind::Norm);
    EXPECT_FALSE(r.square_commutes);
    EXPECT_FALSE(r.applicable);
}
