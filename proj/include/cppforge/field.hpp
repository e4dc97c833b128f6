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
#include <memory>
#include <span>
#include <vector>

#include "cppforge/error.hpp"

namespace cppforge {

/// Canonical integer encoding of a field element: the base-q positional
/// code of its coefficient tuple (the residue itself in a prime field).
using Code = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Fields up to this order keep internal exp/log/Zech tables so that the
/// exhaustive kernels run on table lookups. Encoding is unaffected.
inline constexpr std::uint64_t kTableOrderLimit = std::uint64_t{1} << 16;

/// Largest order for which arithmetic is supported.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/**
 * A finite field, either the prime field F_p or a simple extension
 * base[y]/(modulus) of another field. A field whose base is prime plays the
 * role of F_q = F_{p^r}; a field whose base is itself an extension is a
 * two-level tower F_{q^n} / F_q.
 *
 * Fields are immutable after construction and shared through FieldPtr.
 * All arithmetic is expressed on codes; Element wraps a code with its home.
 *
 * Because a tower code is sum(c_i * q^i), the codes 0..q-1 are exactly the
 * constant polynomials, so embedding F_q into F_{q^n} is the identity on
 * codes.
 */
class Field {
    struct Key {
        explicit Key() = default;
    };

  public:
    Field(Key, std::uint32_t p);
    Field(Key, FieldPtr base, std::vector<Code> modulus);
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    static FieldPtr create_prime(std::uint32_t p);
    /// No validation of irreducibility here; see make_extension.
    static FieldPtr create_extension(FieldPtr base, std::vector<Code> modulus);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint64_t order() const noexcept { return order_; }
    bool is_prime() const noexcept { return base_ == nullptr; }
    /// True when the base is itself an extension field.
    bool is_tower() const noexcept { return base_ && !base_->is_prime(); }
    /// Base field; null for a prime field.
    const FieldPtr& base() const noexcept { return base_; }
    /// Order of the base field (p for extensions of F_p, 1 for F_p itself).
    std::uint64_t base_order() const noexcept { return base_ ? base_->order() : 1; }
    /// Degree over the base field (1 for F_p).
    unsigned degree() const noexcept { return degree_; }
    /// Degree over the prime field.
    unsigned prime_degree() const noexcept { return prime_degree_; }
    /// Monic modulus over the base, lowest coefficient first. For F_p this
    /// is the formal modulus x - 0, i.e. {0, 1}.
    const std::vector<Code>& modulus() const noexcept { return modulus_; }

    bool contains(Code a) const noexcept { return a < order_; }
    Code zero() const noexcept { return 0; }
    Code one() const noexcept { return 1; }
    Code minus_one() const noexcept { return minus_one_; }

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const { return add(a, neg(b)); }
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;
    Code div(Code a, Code b) const { return mul(a, inv(b)); }
    Code pow(Code a, std::uint64_t e) const;
    /// a^(p^i).
    Code frobenius(Code a, std::uint64_t i) const;
    /// The integer m reduced into the prime subfield.
    Code from_integer(std::int64_t m) const;

    /// Coefficient tuple over the base field, length degree().
    std::vector<Code> coeffs(Code a) const;
    Code from_coeffs(std::span<const Code> coeffs) const;

    /// Throws OutOfRange unless a < order().
    void check(Code a) const;

  private:
    Code add_digits(Code a, Code b) const;
    Code neg_digits(Code a) const;
    Code mul_slow(Code a, Code b) const;
    Code pow_slow(Code a, std::uint64_t e) const;
    void build_tables();

    std::uint32_t p_;
    FieldPtr base_;
    unsigned degree_ = 1;
    unsigned prime_degree_ = 1;
    std::uint64_t order_;
    std::vector<Code> modulus_;
    std::vector<Code> neg_modulus_;
    Code minus_one_ = 0;

    // exp_ has length 2*(order-1) so products of logs need no reduction.
    bool tables_ = false;
    std::vector<std::uint32_t> log_;
    std::vector<Code> exp_;
    std::vector<std::uint32_t> zech_;
};

/// A field element: code plus home field.
class Element {
  public:
    Element(FieldPtr home, Code code);

    const FieldPtr& home() const noexcept { return home_; }
    const Field& field() const noexcept { return *home_; }
    Code code() const noexcept { return code_; }
    std::vector<Code> coeffs() const { return home_->coeffs(code_); }
    bool is_zero() const noexcept { return code_ == 0; }

    friend bool operator==(const Element& a, const Element& b)
    {
        return a.home_ == b.home_ && a.code_ == b.code_;
    }

  private:
    FieldPtr home_;
    Code code_;
};

Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element mul(const Element& x, const Element& y);
Element neg(const Element& x);
Element inv(const Element& x);
Element pow(const Element& x, std::uint64_t e);
Element frobenius(const Element& x, std::uint64_t i);

inline Element operator+(const Element& x, const Element& y) { return add(x, y); }
inline Element operator-(const Element& x, const Element& y) { return sub(x, y); }
inline Element operator*(const Element& x, const Element& y) { return mul(x, y); }
inline Element operator-(const Element& x) { return neg(x); }

/// Canonical integer encoding.
inline std::uint64_t encode(const Element& x) { return x.code(); }
/// Throws OutOfRange unless k < order.
Element decode(const FieldPtr& home, std::uint64_t k);
/// decode(home, 0), ..., decode(home, order - 1).
std::vector<Element> enumerate(const FieldPtr& home);

/// Constant-coefficient image of a base-field element in `tower`.
Element embed(const Element& x, const FieldPtr& tower);

} // namespace cppforge
