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
#include <utility>
#include <vector>

#include "cppforge/field.hpp"

namespace cppforge {

/// Dense univariate polynomial over a field. coeffs()[i] is the coefficient
/// of x^i; trailing zeros are trimmed so the zero polynomial is empty.
class Poly {
  public:
    explicit Poly(FieldPtr field, std::vector<Code> coeffs = {});

    static Poly constant(FieldPtr field, Code c);
    static Poly monomial(FieldPtr field, Code c, std::size_t exponent);
    static Poly identity(FieldPtr field) { return monomial(std::move(field), 1, 1); }

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Code>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Code coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Code leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const noexcept { return leading() == 1; }

    /// Nonzero terms as (exponent, coefficient), ascending exponent.
    std::vector<std::pair<std::size_t, Code>> terms() const;

    /// Value at x. Sparse polynomials are evaluated term by term, dense
    /// ones by Horner; both give the same result.
    Code eval(Code x) const;
    Code eval_horner(Code x) const;
    Code eval_power_sum(Code x) const;

    /// The same polynomial with coefficients read in `tower`, whose base
    /// must be this polynomial's field.
    Poly embedded(const FieldPtr& tower) const;

    Poly scaled(Code c) const;
    Poly monic() const;

    friend bool operator==(const Poly& a, const Poly& b)
    {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

  private:
    void trim();

    FieldPtr field_;
    std::vector<Code> coeffs_;
    std::size_t nonzero_ = 0;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Rabin's test: x^(Q^d) = x mod f and gcd(x^(Q^(d/l)) - x, f) = 1 for
/// every prime l | d, where Q is the order of the coefficient field.
/// Low degrees (<= 3) are additionally decided by the absence of roots.
bool is_irreducible(const Poly& f);

/// Value table of f over its home field, indexed by code.
std::vector<Code> tabulate(const Poly& f);

} // namespace cppforge
