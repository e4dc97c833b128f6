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

#include <span>
#include <vector>

#include "cppforge/field.hpp"
#include "cppforge/poly.hpp"

namespace cppforge {

inline constexpr std::uint64_t kDefaultSearchCap = 11;

/// A complete mapping f of a small field: f and x -> f(x) + x both permute.
struct CompleteMapping {
    FieldPtr field;
    /// table[i] = f(decode(i)).
    std::vector<Code> table;
    /// Interpolant of degree < q.
    Poly poly;
    /// Interpolant is monic with zero constant term.
    bool normalized = false;
};

/// Unique polynomial of degree < q taking the tabulated values.
/// Throws BadTableLength unless |table| = q.
Poly lagrange_interpolate(const FieldPtr& field, std::span<const Code> table);

/// Complete mappings in lexicographic order of their value tables. With
/// `zero_fixed` only maps with f(0) = 0 are produced; `normalized` merely
/// flags monic interpolants, since rescaling does not preserve
/// completeness. Throws SearchCapExceeded when q > cap.
std::vector<CompleteMapping> enumerate_complete_mappings(const FieldPtr& field, bool zero_fixed,
                                                         std::uint64_t cap = kDefaultSearchCap);

/// Independent count: walks every permutation table (f(0) = 0 when
/// `zero_fixed`), interpolates it and tests completeness of the polynomial.
std::uint64_t count_complete_mappings_by_interpolation(const FieldPtr& field, bool zero_fixed,
                                                       std::uint64_t cap = kDefaultSearchCap);

/// h over F_q of degree < q - 1 with x*h(x^n) = f as maps on F_q.
/// Requires f(0) = 0 and gcd(n, q-1) = 1. The result is verified
/// pointwise; a mismatch throws ReconstructionMismatch.
Poly to_h_form(const Poly& f, unsigned n);

/// x*h(x^n) over the field of h.
Poly from_h_form(const Poly& h, unsigned n);

} // namespace cppforge
