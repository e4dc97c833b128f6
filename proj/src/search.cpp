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

#include "cppforge/search.hpp"

#include <algorithm>
#include <numeric>

#include "cppforge/number.hpp"
#include "cppforge/perm_check.hpp"

namespace cppforge {

namespace {

void enforce_search_cap(const Field& field, std::uint64_t cap)
{
    if (field.order() > cap) {
        throw Error(ErrorKind::SearchCapExceeded,
                    "permutation search over q = " + std::to_string(field.order()) + " exceeds cap " +
                        std::to_string(cap));
    }
}

struct Backtrack {
    const Field& field;
    std::vector<Code> table;
    std::vector<bool> used_f;
    std::vector<bool> used_g;
    std::vector<std::vector<Code>> found;

    void run(std::size_t x)
    {
        const std::size_t q = table.size();
        if (x == q) {
            found.push_back(table);
            return;
        }
        for (Code v = 0; v < q; ++v) {
            if (used_f[v]) {
                continue;
            }
            const Code g = field.add(v, static_cast<Code>(x));
            if (used_g[g]) {
                continue;
            }
            used_f[v] = used_g[g] = true;
            table[x] = v;
            run(x + 1);
            used_f[v] = used_g[g] = false;
        }
    }
};

} // namespace

Poly lagrange_interpolate(const FieldPtr& field, std::span<const Code> table)
{
    const Field& f = *field;
    const std::uint64_t q = f.order();
    if (table.size() != q) {
        throw Error(ErrorKind::BadTableLength,
                    "table has " + std::to_string(table.size()) + " entries, field has " + std::to_string(q));
    }
    // f(x) = -sum_a f(a) * (x^q - x)/(x - a), since d/dx (x^q - x) = -1.
    std::vector<Code> acc(q, 0);
    std::vector<Code> quot(q, 0);
    const Code minus_one = f.minus_one();
    for (std::uint64_t a = 0; a < q; ++a) {
        const Code value = table[a];
        f.check(value);
        if (value == 0) {
            continue;
        }
        // synthetic division of x^q - x by (x - a)
        Code carry = 1;
        quot[q - 1] = carry;
        for (std::uint64_t i = q - 1; i >= 1; --i) {
            const Code c = i == 1 ? minus_one : 0;
            carry = f.add(c, f.mul(static_cast<Code>(a), carry));
            quot[i - 1] = carry;
        }
        const Code scale = f.neg(value);
        for (std::uint64_t i = 0; i < q; ++i) {
            acc[i] = f.add(acc[i], f.mul(scale, quot[i]));
        }
    }
    return Poly(field, std::move(acc));
}

std::vector<CompleteMapping> enumerate_complete_mappings(const FieldPtr& field, bool zero_fixed, std::uint64_t cap)
{
    enforce_search_cap(*field, cap);
    const auto q = static_cast<std::size_t>(field->order());
    Backtrack search{*field, std::vector<Code>(q, 0), std::vector<bool>(q, false), std::vector<bool>(q, false), {}};
    if (zero_fixed) {
        search.used_f[0] = search.used_g[0] = true;
        search.run(1);
    } else {
        search.run(0);
    }
    std::vector<CompleteMapping> out;
    out.reserve(search.found.size());
    for (auto& table : search.found) {
        Poly poly = lagrange_interpolate(field, table);
        const bool normalized = poly.is_monic() && poly.coeff(0) == 0;
        out.push_back({field, std::move(table), std::move(poly), normalized});
    }
    return out;
}

std::uint64_t count_complete_mappings_by_interpolation(const FieldPtr& field, bool zero_fixed, std::uint64_t cap)
{
    enforce_search_cap(*field, cap);
    const auto q = static_cast<std::size_t>(field->order());
    std::vector<Code> table(q);
    std::iota(table.begin(), table.end(), Code{0});
    const auto first = zero_fixed ? table.begin() + 1 : table.begin();
    std::uint64_t count = 0;
    do {
        const Poly poly = lagrange_interpolate(field, table);
        if (is_cpp(is_complete_permutation(poly))) {
            ++count;
        }
    } while (std::next_permutation(first, table.end()));
    return count;
}

Poly from_h_form(const Poly& h, unsigned n)
{
    std::vector<Code> coeffs(h.is_zero() ? 0 : static_cast<std::size_t>(h.degree()) * n + 2, 0);
    for (auto [i, c] : h.terms()) {
        coeffs[1 + i * n] = c;
    }
    return Poly(h.field(), std::move(coeffs));
}

Poly to_h_form(const Poly& f, unsigned n)
{
    const FieldPtr& field = f.field();
    const Field& k = *field;
    const std::uint64_t q = k.order();
    require(f.eval(0) == 0, "f(0) = 0");
    require(n >= 1 && gcd(n, q - 1) == 1, "gcd(n, q-1) = 1");
    const std::uint64_t n_prime = *inverse_mod(n, q - 1);

    const auto table = tabulate(f);
    const Poly reduced = lagrange_interpolate(field, table);
    std::vector<Code> h(q - 1, 0);
    for (auto [m, c] : reduced.terms()) {
        // m >= 1 because the constant term vanishes
        const std::uint64_t e = (m - 1) * n_prime % (q - 1);
        h[e] = k.add(h[e], c);
    }
    Poly result(field, std::move(h));
    if (tabulate(from_h_form(result, n)) != table) {
        throw Error(ErrorKind::ReconstructionMismatch, "x*h(x^n) does not reproduce f");
    }
    return result;
}

} // namespace cppforge
