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

#include "cppforge/poly.hpp"

#include <algorithm>
#include <bit>

#include "cppforge/number.hpp"

namespace cppforge {

namespace {

void same_field(const Poly& a, const Poly& b)
{
    if (a.field() != b.field()) {
        throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
    }
}

} // namespace

Poly::Poly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    if (!field_) {
        throw Error(ErrorKind::FieldMismatch, "polynomial without a field");
    }
    for (Code c : coeffs_) {
        field_->check(c);
    }
    trim();
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
    nonzero_ = static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Code c) { return c != 0; }));
}

Poly Poly::constant(FieldPtr field, Code c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Code c, std::size_t exponent)
{
    std::vector<Code> coeffs(exponent + 1, 0);
    coeffs[exponent] = c;
    return Poly(std::move(field), std::move(coeffs));
}

std::vector<std::pair<std::size_t, Code>> Poly::terms() const
{
    std::vector<std::pair<std::size_t, Code>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            out.emplace_back(i, coeffs_[i]);
        }
    }
    return out;
}

Code Poly::eval_horner(Code x) const
{
    const Field& f = *field_;
    Code acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = f.add(f.mul(acc, x), coeffs_[i]);
    }
    return acc;
}

Code Poly::eval_power_sum(Code x) const
{
    const Field& f = *field_;
    Code acc = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            acc = f.add(acc, f.mul(coeffs_[i], f.pow(x, i)));
        }
    }
    return acc;
}

Code Poly::eval(Code x) const
{
    // each power costs about log2(degree) multiplications
    std::size_t width = std::bit_width(coeffs_.size());
    if (nonzero_ * (width + 1) < coeffs_.size()) {
        return eval_power_sum(x);
    }
    return eval_horner(x);
}

Poly Poly::embedded(const FieldPtr& tower) const
{
    if (tower->base() != field_) {
        throw Error(ErrorKind::FieldMismatch, "target is not an extension of the coefficient field");
    }
    return Poly(tower, coeffs_);
}

Poly Poly::scaled(Code c) const
{
    std::vector<Code> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] = field_->mul(coeffs_[i], c);
    }
    return Poly(field_, std::move(out));
}

Poly Poly::monic() const
{
    if (is_zero()) {
        return *this;
    }
    return scaled(field_->inv(leading()));
}

Poly operator+(const Poly& a, const Poly& b)
{
    same_field(a, b);
    const Field& f = *a.field();
    std::vector<Code> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = f.add(a.coeff(i), b.coeff(i));
    }
    return Poly(a.field(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b)
{
    same_field(a, b);
    const Field& f = *a.field();
    std::vector<Code> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = f.sub(a.coeff(i), b.coeff(i));
    }
    return Poly(a.field(), std::move(out));
}

Poly operator*(const Poly& a, const Poly& b)
{
    same_field(a, b);
    if (a.is_zero() || b.is_zero()) {
        return Poly(a.field());
    }
    const Field& f = *a.field();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<Code> out(ca.size() + cb.size() - 1, 0);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < cb.size(); ++j) {
            if (cb[j] != 0) {
                out[i + j] = f.add(out[i + j], f.mul(ca[i], cb[j]));
            }
        }
    }
    return Poly(a.field(), std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    same_field(a, b);
    if (b.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    }
    const Field& f = *a.field();
    if (a.degree() < b.degree()) {
        return {Poly(a.field()), a};
    }
    std::vector<Code> rem = a.coeffs();
    const auto& cb = b.coeffs();
    const std::size_t db = cb.size() - 1;
    const Code lead_inv = f.inv(cb.back());
    std::vector<Code> quot(rem.size() - db, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
        Code c = f.mul(rem[i], lead_inv);
        if (c == 0) {
            continue;
        }
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, cb[j]));
        }
    }
    rem.resize(db);
    return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m)
{
    Poly result = Poly::constant(base.field(), 1) % m;
    Poly b = base % m;
    while (e != 0) {
        if (e & 1) {
            result = (result * b) % m;
        }
        e >>= 1;
        if (e != 0) {
            b = (b * b) % m;
        }
    }
    return result;
}

bool is_irreducible(const Poly& f)
{
    const long d = f.degree();
    if (d < 1) {
        return false;
    }
    if (d == 1) {
        return true;
    }
    const FieldPtr& k = f.field();
    const std::uint64_t q = k->order();
    if (d <= 3) {
        for (Code a = 0; a < q; ++a) {
            if (f.eval(a) == 0) {
                return false;
            }
        }
        return true;
    }
    const Poly x = Poly::identity(k);
    // frob[i] = x^(q^i) mod f
    std::vector<Poly> frob{x % f};
    for (long i = 1; i <= d; ++i) {
        frob.push_back(powmod(frob.back(), q, f));
    }
    if (!(frob[static_cast<std::size_t>(d)] - x).is_zero()) {
        return false;
    }
    for (auto l : prime_divisors(static_cast<std::uint64_t>(d))) {
        Poly g = gcd(frob[static_cast<std::size_t>(d / static_cast<long>(l))] - x, f);
        if (g.degree() != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Code> tabulate(const Poly& f)
{
    const std::uint64_t order = f.field()->order();
    std::vector<Code> table(order);
    for (std::uint64_t a = 0; a < order; ++a) {
        table[a] = f.eval(static_cast<Code>(a));
    }
    return table;
}

} // namespace cppforge
