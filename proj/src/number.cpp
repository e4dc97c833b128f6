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

#include "cppforge/number.hpp"

#include "cppforge/error.hpp"

namespace cppforge {

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp)
{
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) {
            return std::nullopt;
        }
        result *= base;
    }
    return result;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
    auto value = checked_pow(base, exp);
    if (!value) {
        throw Error(ErrorKind::OutOfRange, "integer power overflows 64 bits");
    }
    return *value;
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t modulus)
{
    if (modulus == 0) {
        return std::nullopt;
    }
    if (modulus == 1) {
        return 1;
    }
    // extended Euclid on signed 128-bit to stay clear of overflow
    __int128 old_r = static_cast<__int128>(a % modulus), r = modulus;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 quot = old_r / r;
        __int128 tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        return std::nullopt;
    }
    __int128 m = old_s % static_cast<__int128>(modulus);
    if (m <= 0) {
        m += modulus;
    }
    return static_cast<std::uint64_t>(m);
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n)
{
    if (n < 2) {
        return std::nullopt;
    }
    auto primes = prime_divisors(n);
    if (primes.size() != 1) {
        return std::nullopt;
    }
    unsigned k = 0;
    while (n > 1) {
        n /= primes.front();
        ++k;
    }
    return std::make_pair(primes.front(), k);
}

} // namespace cppforge
