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

#include "cppforge/field.hpp"

#include <limits>
#include <string>

#include "cppforge/number.hpp"

namespace cppforge {

namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

} // namespace

Field::Field(Key, std::uint32_t p) : p_(p), order_(p), modulus_{0, 1}
{
    minus_one_ = p - 1;
}

Field::Field(Key, FieldPtr base, std::vector<Code> modulus)
    : p_(base->characteristic()), base_(std::move(base)), modulus_(std::move(modulus))
{
    degree_ = static_cast<unsigned>(modulus_.size() - 1);
    prime_degree_ = base_->prime_degree() * degree_;
    auto order = checked_pow(base_->order(), degree_);
    if (!order || *order > kMaxFieldOrder) {
        throw Error(ErrorKind::Unsupported,
                    "field order exceeds the supported maximum 2^20");
    }
    order_ = *order;
    neg_modulus_.reserve(degree_);
    for (unsigned j = 0; j < degree_; ++j) {
        neg_modulus_.push_back(base_->neg(modulus_[j]));
    }
    minus_one_ = p_ - 1;
    if (order_ <= kTableOrderLimit) {
        build_tables();
    }
}

FieldPtr Field::create_prime(std::uint32_t p)
{
    return std::make_shared<const Field>(Key{}, p);
}

FieldPtr Field::create_extension(FieldPtr base, std::vector<Code> modulus)
{
    return std::make_shared<const Field>(Key{}, std::move(base), std::move(modulus));
}

void Field::check(Code a) const
{
    if (a >= order_) {
        throw Error(ErrorKind::OutOfRange,
                    "code " + std::to_string(a) + " outside field of order " +
                        std::to_string(order_));
    }
}

Code Field::add_digits(Code a, Code b) const
{
    Code result = 0;
    Code place = 1;
    for (unsigned i = 0; i < prime_degree_; ++i) {
        Code s = a % p_ + b % p_;
        if (s >= p_) {
            s -= p_;
        }
        result += s * place;
        place *= p_;
        a /= p_;
        b /= p_;
    }
    return result;
}

Code Field::neg_digits(Code a) const
{
    Code result = 0;
    Code place = 1;
    for (unsigned i = 0; i < prime_degree_; ++i) {
        Code d = a % p_;
        result += (d == 0 ? 0 : p_ - d) * place;
        place *= p_;
        a /= p_;
    }
    return result;
}

Code Field::add(Code a, Code b) const
{
    if (p_ == 2) {
        return a ^ b;
    }
    if (is_prime()) {
        Code s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (tables_) {
        if (a == 0) {
            return b;
        }
        if (b == 0) {
            return a;
        }
        const std::uint32_t n = static_cast<std::uint32_t>(order_ - 1);
        std::uint32_t k = log_[b] >= log_[a] ? log_[b] - log_[a] : log_[b] + n - log_[a];
        std::uint32_t z = zech_[k];
        if (z == kNoLog) {
            return 0;
        }
        return exp_[log_[a] + z];
    }
    return add_digits(a, b);
}

Code Field::neg(Code a) const
{
    if (p_ == 2 || a == 0) {
        return a;
    }
    if (is_prime()) {
        return p_ - a;
    }
    if (tables_) {
        // -1 = g^((order-1)/2) in odd characteristic
        return exp_[log_[a] + static_cast<std::uint32_t>((order_ - 1) / 2)];
    }
    return neg_digits(a);
}

Code Field::mul_slow(Code a, Code b) const
{
    if (is_prime()) {
        return static_cast<Code>(std::uint64_t{a} * b % p_);
    }
    const Field& k = *base_;
    auto ca = coeffs(a);
    auto cb = coeffs(b);
    std::vector<Code> prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        if (ca[i] == 0) {
            continue;
        }
        for (unsigned j = 0; j < degree_; ++j) {
            if (cb[j] != 0) {
                prod[i + j] = k.add(prod[i + j], k.mul(ca[i], cb[j]));
            }
        }
    }
    for (std::size_t i = prod.size(); i-- > degree_;) {
        Code c = prod[i];
        if (c == 0) {
            continue;
        }
        // y^degree = -(m_0 + ... + m_{d-1} y^{d-1})
        for (unsigned j = 0; j < degree_; ++j) {
            prod[i - degree_ + j] = k.add(prod[i - degree_ + j], k.mul(c, neg_modulus_[j]));
        }
        prod[i] = 0;
    }
    return from_coeffs(std::span<const Code>(prod.data(), degree_));
}

Code Field::mul(Code a, Code b) const
{
    if (a == 0 || b == 0) {
        return 0;
    }
    if (tables_) {
        return exp_[log_[a] + log_[b]];
    }
    return mul_slow(a, b);
}

Code Field::pow_slow(Code a, std::uint64_t e) const
{
    Code result = 1;
    Code base = a;
    while (e != 0) {
        if (e & 1) {
            result = mul(result, base);
        }
        e >>= 1;
        if (e != 0) {
            base = mul(base, base);
        }
    }
    return result;
}

Code Field::pow(Code a, std::uint64_t e) const
{
    if (a == 0) {
        return e == 0 ? 1 : 0;
    }
    if (tables_) {
        const std::uint64_t n = order_ - 1;
        return exp_[static_cast<std::size_t>(log_[a] * (e % n) % n)];
    }
    return pow_slow(a, e % (order_ - 1));
}

Code Field::inv(Code a) const
{
    if (a == 0) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    }
    if (tables_) {
        return exp_[static_cast<std::size_t>(order_ - 1 - log_[a])];
    }
    if (is_prime()) {
        return static_cast<Code>(*inverse_mod(a, p_));
    }
    return pow_slow(a, order_ - 2);
}

Code Field::frobenius(Code a, std::uint64_t i) const
{
    i %= prime_degree_;
    for (std::uint64_t step = 0; step < i; ++step) {
        a = pow(a, p_);
    }
    return a;
}

Code Field::from_integer(std::int64_t m) const
{
    std::int64_t r = m % static_cast<std::int64_t>(p_);
    if (r < 0) {
        r += p_;
    }
    return static_cast<Code>(r);
}

std::vector<Code> Field::coeffs(Code a) const
{
    if (is_prime()) {
        return {a};
    }
    const auto q = static_cast<Code>(base_->order());
    std::vector<Code> out(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
        out[i] = a % q;
        a /= q;
    }
    return out;
}

Code Field::from_coeffs(std::span<const Code> coeffs) const
{
    const auto q = static_cast<Code>(base_order());
    Code code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        code = code * (is_prime() ? p_ : q) + coeffs[i];
    }
    return code;
}

void Field::build_tables()
{
    const std::uint64_t n = order_ - 1;
    const auto divisors = prime_divisors(n);
    Code generator = 1;
    for (Code g = 1; g < order_; ++g) {
        bool primitive = true;
        for (auto l : divisors) {
            if (pow_slow(g, n / l) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator = g;
            break;
        }
    }
    exp_.assign(2 * n, 0);
    log_.assign(order_, kNoLog);
    Code value = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        exp_[i] = value;
        exp_[i + n] = value;
        log_[value] = static_cast<std::uint32_t>(i);
        value = mul_slow(value, generator);
    }
    if (p_ != 2) {
        zech_.assign(n, kNoLog);
        for (std::uint64_t k = 0; k < n; ++k) {
            Code s = add_digits(1, exp_[k]);
            zech_[k] = s == 0 ? kNoLog : log_[s];
        }
    }
    tables_ = true;
}

Element::Element(FieldPtr home, Code code) : home_(std::move(home)), code_(code)
{
    if (!home_) {
        throw Error(ErrorKind::FieldMismatch, "element without a home field");
    }
    home_->check(code_);
}

namespace {

// Operands share a home, or one lives in the direct base of the other and
// is embedded (identity on codes).
const FieldPtr& common_home(const Element& x, const Element& y)
{
    if (x.home() == y.home()) {
        return x.home();
    }
    if (y.home()->base() == x.home()) {
        return y.home();
    }
    if (x.home()->base() == y.home()) {
        return x.home();
    }
    throw Error(ErrorKind::FieldMismatch, "operands live in unrelated fields");
}

} // namespace

Element add(const Element& x, const Element& y)
{
    const auto& home = common_home(x, y);
    return {home, home->add(x.code(), y.code())};
}

Element sub(const Element& x, const Element& y)
{
    const auto& home = common_home(x, y);
    return {home, home->sub(x.code(), y.code())};
}

Element mul(const Element& x, const Element& y)
{
    const auto& home = common_home(x, y);
    return {home, home->mul(x.code(), y.code())};
}

Element neg(const Element& x) { return {x.home(), x.field().neg(x.code())}; }

Element inv(const Element& x) { return {x.home(), x.field().inv(x.code())}; }

Element pow(const Element& x, std::uint64_t e) { return {x.home(), x.field().pow(x.code(), e)}; }

Element frobenius(const Element& x, std::uint64_t i)
{
    return {x.home(), x.field().frobenius(x.code(), i)};
}

Element decode(const FieldPtr& home, std::uint64_t k)
{
    if (k >= home->order()) {
        throw Error(ErrorKind::OutOfRange,
                    "code " + std::to_string(k) + " outside field of order " +
                        std::to_string(home->order()));
    }
    return {home, static_cast<Code>(k)};
}

std::vector<Element> enumerate(const FieldPtr& home)
{
    std::vector<Element> out;
    out.reserve(home->order());
    for (std::uint64_t k = 0; k < home->order(); ++k) {
        out.emplace_back(home, static_cast<Code>(k));
    }
    return out;
}

Element embed(const Element& x, const FieldPtr& tower)
{
    if (tower->base() != x.home()) {
        throw Error(ErrorKind::FieldMismatch, "element does not live in the tower's base field");
    }
    return {tower, x.code()};
}

} // namespace cppforge
