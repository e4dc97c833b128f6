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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cppforge/field.hpp"
#include "cppforge/poly.hpp"

namespace cppforge {

// Relative trace and norm of F_{q^n} over F_q. `tower` is any extension
// field; its base plays the role of F_q (so F_4 over F_2 has q = 2, n = 2).
// Results are base-field codes, which are also the embedded tower codes.

/// tr(x) = x + x^q + ... + x^(q^(n-1)).
Code rel_trace(const Field& tower, Code x);
/// nor(x) = x^((q^n - 1)/(q - 1)).
Code rel_norm(const Field& tower, Code x);

Element rel_trace(const Element& x);
Element rel_norm(const Element& x);

/// (q^n - 1)/(q - 1) for the tower.
std::uint64_t norm_exponent(const Field& tower);

/// Exponent r in q = p^r for the tower's base field.
inline unsigned base_prime_degree(const Field& tower) { return tower.base()->prime_degree(); }

/// Trace and norm value tables of a tower plus its trace kernel, built
/// once and read-only afterwards.
class TowerMaps {
  public:
    explicit TowerMaps(FieldPtr tower);

    const FieldPtr& tower() const noexcept { return tower_; }
    const std::vector<Code>& trace() const noexcept { return trace_; }
    const std::vector<Code>& norm() const noexcept { return norm_; }
    /// Trace-zero codes, ascending.
    const std::vector<Code>& kernel() const noexcept { return kernel_; }

  private:
    FieldPtr tower_;
    std::vector<Code> trace_;
    std::vector<Code> norm_;
    std::vector<Code> kernel_;
};

/// All x with tr(x) = 0 in encoding order; q^(n-1) elements.
std::vector<Element> trace_kernel(const FieldPtr& tower);

/**
 * p-polynomial L(x) = sum a_i x^(p^i) with coefficients in the base field
 * F_q and exponent indices 0 <= i < r*n. Zero coefficients are allowed;
 * L itself must be nonzero.
 */
class PPoly {
  public:
    PPoly(FieldPtr tower, std::map<unsigned, Code> coeffs);

    /// x^(p^k), with k reduced mod r*n.
    static PPoly frobenius_power(FieldPtr tower, unsigned k);

    const FieldPtr& tower() const noexcept { return tower_; }
    const std::map<unsigned, Code>& coeffs() const noexcept { return coeffs_; }
    Code coeff(unsigned i) const;

    Code eval(Code x) const;
    Element eval(const Element& x) const;

    /// A(x) = L(x)/x as a polynomial: monomials a_i x^(p^i - 1).
    Poly quotient() const;
    /// A(x) without expanding the polynomial.
    Code quotient_at(Code x) const;

    /// True when every nonzero index lies below r and every a_i (i < r) is
    /// nonzero, i.e. the coefficient pattern a literal reading of the
    /// general trace-lift statement requires.
    bool strict_form() const;

  private:
    FieldPtr tower_;
    std::map<unsigned, Code> coeffs_;
};

/// Whether x -> L(x) - theta*x permutes ker(tr). Throws MapEscapesKernel
/// when some kernel element is sent outside the kernel (theta not in F_q).
bool ppoly_permutes_kernel(const PPoly& L, Code theta, const TowerMaps& maps);
bool ppoly_permutes_kernel(const PPoly& L, Code theta);

enum class KernelCase { Case1, Case2, NoCaseApplies };

std::string_view to_string(KernelCase c);

struct KernelCriterionVerdict {
    KernelCase case_applied = KernelCase::NoCaseApplies;
    std::optional<bool> predicted;
    unsigned k = 0;
    Code c = 0;
    /// gcd(k, r).
    unsigned d = 0;
    std::string note;
};

/// Sufficient conditions for x^(p^k) - c x to permute ker(tr), for
/// gcd(k, n) = 1 and c in F_q, with d = gcd(k, r):
///   Case1: c^((q-1)/(p^d-1)) = 1 and p does not divide n;
///   Case2: c^(n(q-1)/(p^d-1)) != 1, or c = 0 (a Frobenius power).
/// NoCaseApplies makes no prediction. Throws PreconditionViolated when
/// gcd(k, n) != 1 or k == 0.
KernelCriterionVerdict binomial_kernel_criterion(unsigned k, Code c, const FieldPtr& tower);

} // namespace cppforge
