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

#include "cppforge/error.hpp"
#include "cppforge/number.hpp"

using namespace cppforge;

TEST(Number, PrimesBelowFifty)
{
    std::vector<std::uint64_t> found;
    for (std::uint64_t n = 0; n < 50; ++n) {
        if (is_prime(n)) {
            found.push_back(n);
        }
    }
    EXPECT_EQ(found, (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}));
}

TEST(Number, PrimeDivisors)
{
    EXPECT_EQ(prime_divisors(4095), (std::vector<std::uint64_t>{3, 5, 7, 13}));
    EXPECT_TRUE(prime_divisors(1).empty());
}

TEST(Number, PowersAndOverflow)
{
    EXPECT_EQ(ipow(4, 3), 64u);
    EXPECT_EQ(checked_pow(2, 63).value(), std::uint64_t{1} << 63);
    EXPECT_FALSE(checked_pow(2, 64).has_value());
    EXPECT_THROW(ipow(3, 80), Error);
}

TEST(Number, InverseMod)
{
    EXPECT_EQ(inverse_mod(2, 7).value(), 4u);
    EXPECT_EQ(inverse_mod(3, 5).value(), 2u);
    EXPECT_FALSE(inverse_mod(3, 6).has_value());
    EXPECT_EQ(inverse_mod(5, 1).value(), 1u);
}

TEST(Number, PrimePower)
{
    EXPECT_EQ(prime_power(64).value(), (std::pair<std::uint64_t, unsigned>{2, 6}));
    EXPECT_EQ(prime_power(11).value(), (std::pair<std::uint64_t, unsigned>{11, 1}));
    EXPECT_FALSE(prime_power(12).has_value());
    EXPECT_FALSE(prime_power(1).has_value());
}
