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

#include "cppforge/construct.hpp"

using namespace cppforge;

namespace {

constexpr Code kF4Mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};

// First monic cubic over F_4 without a root, scanning c0 fastest.
std::vector<Code> first_rootless_cubic()
{
    for (Code m = 0; m < 64; ++m) {
        const Code c[3] = {static_cast<Code>(m % 4), static_cast<Code>(m / 4 % 4), static_cast<Code>(m / 16)};
        bool root = false;
        for (Code x = 0; x < 4; ++x) {
            const Code x2 = kF4Mul[x][x];
            const Code x3 = kF4Mul[x2][x];
            root = root || (x3 ^ kF4Mul[c[2]][x2] ^ kF4Mul[c[1]][x] ^ c[0]) == 0;
        }
        if (!root) {
            return {c[0], c[1], c[2], 1};
        }
    }
    return {};
}

} // namespace

TEST(Construct, PrimeFields)
{
    EXPECT_EQ(make_prime_field(2)->order(), 2u);
    EXPECT_EQ(make_prime_field(5)->order(), 5u);
    try {
        make_prime_field(6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
    }
}

TEST(Construct, CanonicalQuadraticOverF2)
{
    auto f4 = make_field(2, 2);
    EXPECT_EQ(f4->modulus(), (std::vector<Code>{1, 1, 1}));
}

TEST(Construct, CanonicalCubicOverF4)
{
    auto f64 = make_tower(2, 2, 3);
    EXPECT_TRUE(f64->is_tower());
    EXPECT_EQ(f64->order(), 64u);
    EXPECT_EQ(f64->modulus(), first_rootless_cubic());
    EXPECT_EQ(f64->modulus(), (std::vector<Code>{2, 0, 0, 1}));
}

TEST(Construct, ReducibleModulusRejected)
{
    auto f2 = make_prime_field(2);
    try {
        make_extension(f2, 2, Poly(f2, {1, 0, 1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotIrreducible);
        EXPECT_EQ(e.detail(), "[1,0,1]");
    }
}

TEST(Construct, ThreeLevelTowerUnsupported)
{
    auto f16 = make_tower(2, 2, 2);
    try {
        make_extension(f16, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
    }
}

TEST(Construct, OrderCap)
{
    EXPECT_THROW(make_tower(2, 7, 3), Error);
    EXPECT_NO_THROW(make_tower(2, 10, 2));
}

TEST(Construct, DescriptorRoundTrip)
{
    for (auto f : {make_prime_field(5), make_field(2, 2), make_tower(2, 2, 3), make_tower(3, 1, 3), make_tower(5, 2, 2)}) {
        const auto text = format_descriptor(*f);
        auto back = parse_descriptor(text);
        EXPECT_EQ(format_descriptor(*back), text);
        EXPECT_EQ(back->order(), f->order());
    }
    EXPECT_EQ(format_descriptor(*make_field(2, 2)), "p=2;r=2;mod=[1,1,1]");
    EXPECT_EQ(format_descriptor(*make_tower(2, 2, 3)), "p=2;r=2;mod=[1,1,1];n=3;tmod=[[0,1],[0,0],[0,0],[1,0]]");
}

TEST(Construct, DescriptorErrors)
{
    auto kind = [](const char* text) {
        try {
            parse_descriptor(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Unsupported;
    };
    EXPECT_EQ(kind("p=2;r=2;mod=[1,x,1]"), ErrorKind::ParseError);
    EXPECT_EQ(kind("p=2;q=3"), ErrorKind::ParseError);
    EXPECT_EQ(kind("p=2;r=2;mod=[1,0,1]"), ErrorKind::NotIrreducible);
    EXPECT_EQ(kind("p=9"), ErrorKind::NotPrime);
    EXPECT_EQ(kind("p=2;r=2;tmod=[[1,0]]"), ErrorKind::ParseError);
}
