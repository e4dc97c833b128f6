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

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace cppforge {

// Small-integer number theory used by field construction and the
// arithmetic side conditions of the lift constructions.

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

/// base^exp; throws OutOfRange on overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Smallest positive m with a*m = 1 (mod modulus), or nullopt when
/// gcd(a, modulus) != 1. For modulus == 1 the answer is 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t modulus);

/// If n = p^k for a prime p and k >= 1, returns {p, k}.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

} // namespace cppforge
