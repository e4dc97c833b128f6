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

#include <optional>
#include <string>
#include <string_view>

#include "cppforge/field.hpp"
#include "cppforge/poly.hpp"

namespace cppforge {

/// F_p. Throws NotPrime for composite p and OutOfRange for p >= 2^16.
FieldPtr make_prime_field(std::uint64_t p);

/// Lexicographically smallest monic irreducible of the given degree over
/// `base`: candidates (c_{d-1}, ..., c_0) are scanned in ascending order of
/// their coefficient codes with c_0 varying fastest.
Poly canonical_modulus(const FieldPtr& base, unsigned degree);

/// base[y]/(modulus). Without a modulus the canonical one is used, so the
/// same (base, degree) always yields the same field. `base` must be a prime
/// field or an extension of one; towers deeper than two levels are rejected.
FieldPtr make_extension(const FieldPtr& base, unsigned degree, std::optional<Poly> modulus = std::nullopt);

/// F_{p^r} with its canonical modulus (F_p itself when r == 1).
FieldPtr make_field(std::uint64_t p, unsigned r);

/// The tower F_{q^n} / F_q with q = p^r, canonical moduli at both levels.
FieldPtr make_tower(std::uint64_t p, unsigned r, unsigned n);

/// Text form `p=<int>;r=<int>;mod=[c0,...,1]`, followed for towers by
/// `;n=<int>;tmod=[[...],...,[...]]` where each tower-modulus coefficient
/// is written as its coefficient list over the prime field.
std::string format_descriptor(const Field& field);

/// Inverse of format_descriptor. Moduli are validated; `mod` may be omitted
/// (canonical modulus), as may `tmod` when `n` is present.
FieldPtr parse_descriptor(std::string_view text);

} // namespace cppforge
