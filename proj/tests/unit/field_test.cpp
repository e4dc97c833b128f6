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
#include <set>

#include "cppforge/construct.hpp"

using namespace cppforge;

namespace {

// F_4 = F_2[y]/(y^2+y+1) with codes 0, 1, w = 2, w+1 = 3, written out by hand.
constexpr Code kF4Mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};

} // namespace

TEST(Field, PrimeFieldArithmetic)
{
    auto f5 = make_prime_field(5);
    EXPECT_EQ(f5->order(), 5u);
    EXPECT_EQ(f5->inv(2), 3u);
    EXPECT_EQ(f5->add(3, 4), 2u);
    EXPECT_EQ(f5->neg(1), 4u);
    EXPECT_EQ(f5->minus_one(), 4u);
    EXPECT_THROW(f5->inv(0), Error);
}

TEST(Field, F4MatchesHandTable)
{
    auto f4 = make_field(2, 2);
    for (Code a = 0; a < 4; ++a) {
        for (Code b = 0; b < 4; ++b) {
            EXPECT_EQ(f4->mul(a, b), kF4Mul[a][b]);
            EXPECT_EQ(f4->add(a, b), a ^ b);
        }
    }
    EXPECT_EQ(f4->pow(2, 3), 1u);
    EXPECT_EQ(f4->frobenius(2, 1), 3u);
}

TEST(Field, FrobeniusFullOrderIsIdentity)
{
    auto f64 = make_tower(2, 2, 3);
    for (Code x = 0; x < 64; ++x) {
        EXPECT_EQ(f64->frobenius(x, 6), x);
        EXPECT_EQ(f64->frobenius(x, 0), x);
    }
}

TEST(Field, AxiomsOnSampledTowers)
{
    std::mt19937 rng(7);
    for (auto f : {make_tower(2, 2, 3), make_tower(3, 2, 2), make_tower(5, 1, 3), make_field(7, 3)}) {
        std::uniform_int_distribution<Code> pick(0, static_cast<Code>(f->order() - 1));
        for (int i = 0; i < 500; ++i) {
            const Code a = pick(rng), b = pick(rng), c = pick(rng);
            EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            EXPECT_EQ(f->sub(f->add(a, b), b), a);
            if (a != 0) {
                EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
                EXPECT_EQ(f->pow(a, f->order() - 1), 1u);
            }
        }
    }
}

TEST(Field, SlowPathAgreesAboveTableLimit)
{
    // Above the table limit every product goes through polynomial reduction.
    auto big = make_tower(2, 9, 2);
    ASSERT_GT(big->order(), kTableOrderLimit);
    std::mt19937 rng(11);
    std::uniform_int_distribution<Code> pick(1, static_cast<Code>(big->order() - 1));
    for (int i = 0; i < 50; ++i) {
        const Code a = pick(rng), b = pick(rng);
        EXPECT_EQ(big->pow(a, big->order() - 1), 1u);
        EXPECT_EQ(big->mul(big->div(a, b), b), a);
    }
}

TEST(Field, EncodeDecodeRoundTrip)
{
    auto f4 = make_field(2, 2);
    EXPECT_EQ(decode(f4, 2).coeffs(), (std::vector<Code>{0, 1}));
    auto f5 = make_prime_field(5);
    EXPECT_EQ(encode(decode(f5, 3)), 3u);
    auto f64 = make_tower(2, 2, 3);
    std::set<std::uint64_t> seen;
    for (const auto& x : enumerate(f64)) {
        EXPECT_EQ(encode(decode(f64, encode(x))), encode(x));
        EXPECT_EQ(f64->from_coeffs(x.coeffs()), x.code());
        seen.insert(encode(x));
    }
    EXPECT_EQ(seen.size(), 64u);
    EXPECT_THROW(decode(f64, 64), Error);
}

TEST(Field, EnumerateSmallFields)
{
    auto f2 = make_prime_field(2);
    ASSERT_EQ(enumerate(f2).size(), 2u);
    auto f4 = make_field(2, 2);
    auto all = enumerate(f4);
    ASSERT_EQ(all.size(), 4u);
    EXPECT_EQ(all[2].coeffs(), (std::vector<Code>{0, 1}));
}

TEST(Field, EmbedIsHomomorphism)
{
    auto f4 = make_field(2, 2);
    auto f64 = make_tower(2, 2, 3);
    EXPECT_EQ(embed(Element(f4, 1), f64), Element(f64, 1));
    const Element w = embed(Element(f4, 2), f64);
    EXPECT_TRUE((w * w + w + Element(f64, 1)).is_zero());
    for (Code a = 0; a < 4; ++a) {
        for (Code b = 0; b < 4; ++b) {
            const Element x(f4, a), y(f4, b);
            EXPECT_EQ(embed(x * y, f64), embed(x, f64) * embed(y, f64));
            EXPECT_EQ(embed(x + y, f64), embed(x, f64) + embed(y, f64));
        }
    }
    EXPECT_THROW(embed(Element(f64, 3), f4), Error);
}

TEST(Field, MixedElementsAutoEmbed)
{
    auto f4 = make_field(2, 2);
    auto f64 = make_tower(2, 2, 3);
    const Element sum = Element(f4, 2) + Element(f64, 5);
    EXPECT_EQ(sum.home(), f64);
    EXPECT_EQ(sum.code(), f64->add(2, 5));
    EXPECT_THROW(Element(make_prime_field(3), 1) + Element(f4, 1), Error);
}
