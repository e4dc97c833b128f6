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

#include "cppforge/field_maps.hpp"

#include <stdexcept>

#include "cppforge/number.hpp"

namespace cppforge {

namespace {

void require_extension(const Field& tower)
{
    if (tower.is_prime()) {
        throw Error(ErrorKind::FieldMismatch, "relative maps need an extension field");
    }
}

} // namespace

std::uint64_t norm_exponent(const Field& tower)
{
    require_extension(tower);
    const std::uint64_t q = tower.base_order();
    return (tower.order() - 1) / (q - 1);
}

Code rel_trace(const Field& tower, Code x)
{
    require_extension(tower);
    const std::uint64_t q = tower.base_order();
    Code acc = 0;
    Code term = x;
    for (unsigned i = 0; i < tower.degree(); ++i) {
        acc = tower.add(acc, term);
        term = tower.pow(term, q);
    }
    if (acc >= q) {
        throw std::logic_error("trace value outside the base field");
    }
    return acc;
}

Code rel_norm(const Field& tower, Code x)
{
    Code value = tower.pow(x, norm_exponent(tower));
    if (value >= tower.base_order()) {
        throw std::logic_error("norm value outside the base field");
    }
    return value;
}

Element rel_trace(const Element& x) { return {x.field().base(), rel_trace(x.field(), x.code())}; }

Element rel_norm(const Element& x) { return {x.field().base(), rel_norm(x.field(), x.code())}; }

TowerMaps::TowerMaps(FieldPtr tower) : tower_(std::move(tower))
{
    require_extension(*tower_);
    const std::uint64_t order = tower_->order();
    trace_.resize(order);
    norm_.resize(order);
    for (std::uint64_t x = 0; x < order; ++x) {
        const auto c = static_cast<Code>(x);
        trace_[x] = rel_trace(*tower_, c);
        norm_[x] = rel_norm(*tower_, c);
        if (trace_[x] == 0) {
            kernel_.push_back(c);
        }
    }
}

std::vector<Element> trace_kernel(const FieldPtr& tower)
{
    std::vector<Element> out;
    for (std::uint64_t x = 0; x < tower->order(); ++x) {
        if (rel_trace(*tower, static_cast<Code>(x)) == 0) {
            out.emplace_back(tower, static_cast<Code>(x));
        }
    }
    return out;
}

PPoly::PPoly(FieldPtr tower, std::map<unsigned, Code> coeffs) : tower_(std::move(tower))
{
    require_extension(*tower_);
    const unsigned span = tower_->prime_degree();
    const std::uint64_t q = tower_->base_order();
    for (auto [i, a] : coeffs) {
        if (i >= span) {
            throw Error(ErrorKind::OutOfRange,
                        "p-polynomial index " + std::to_string(i) + " exceeds r*n - 1");
        }
        if (a >= q) {
            throw Error(ErrorKind::FieldMismatch, "p-polynomial coefficient outside the base field");
        }
        if (a != 0) {
            coeffs_[i] = a;
        }
    }
    if (coeffs_.empty()) {
        throw Error(ErrorKind::PreconditionViolated, "p-polynomial must be nonzero", "L != 0");
    }
}

PPoly PPoly::frobenius_power(FieldPtr tower, unsigned k)
{
    const unsigned span = tower->prime_degree();
    return PPoly(std::move(tower), {{k % span, 1}});
}

Code PPoly::coeff(unsigned i) const
{
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? 0 : it->second;
}

Code PPoly::eval(Code x) const
{
    const Field& f = *tower_;
    Code acc = 0;
    Code power = x;
    unsigned at = 0;
    for (auto [i, a] : coeffs_) {
        for (; at < i; ++at) {
            power = f.pow(power, f.characteristic());
        }
        acc = f.add(acc, f.mul(a, power));
    }
    return acc;
}

Element PPoly::eval(const Element& x) const
{
    if (x.home() != tower_ && x.home() != tower_->base()) {
        throw Error(ErrorKind::FieldMismatch, "argument outside the p-polynomial's tower");
    }
    return {tower_, eval(x.code())};
}

Poly PPoly::quotient() const
{
    const std::uint64_t top = ipow(tower_->characteristic(), coeffs_.rbegin()->first);
    std::vector<Code> dense(top, 0);
    for (auto [i, a] : coeffs_) {
        dense[ipow(tower_->characteristic(), i) - 1] = a;
    }
    return Poly(tower_, std::move(dense));
}

Code PPoly::quotient_at(Code x) const
{
    const Field& f = *tower_;
    Code acc = 0;
    for (auto [i, a] : coeffs_) {
        acc = f.add(acc, f.mul(a, f.pow(x, ipow(f.characteristic(), i) - 1)));
    }
    return acc;
}

bool PPoly::strict_form() const
{
    const unsigned r = base_prime_degree(*tower_);
    for (unsigned i = 0; i < r; ++i) {
        if (coeff(i) == 0) {
            return false;
        }
    }
    return coeffs_.rbegin()->first < r;
}

bool ppoly_permutes_kernel(const PPoly& L, Code theta, const TowerMaps& maps)
{
    const Field& f = *maps.tower();
    if (L.tower() != maps.tower()) {
        throw Error(ErrorKind::FieldMismatch, "p-polynomial and tower tables disagree");
    }
    f.check(theta);
    std::vector<bool> hit(f.order(), false);
    for (Code x : maps.kernel()) {
        Code y = f.sub(L.eval(x), f.mul(theta, x));
        if (maps.trace()[y] != 0) {
            throw Error(ErrorKind::MapEscapesKernel,
                        "image of kernel element " + std::to_string(x) + " has nonzero trace");
        }
        if (hit[y]) {
            return false;
        }
        hit[y] = true;
    }
    return true;
}

bool ppoly_permutes_kernel(const PPoly& L, Code theta)
{
    return ppoly_permutes_kernel(L, theta, TowerMaps(L.tower()));
}

std::string_view to_string(KernelCase c)
{
    switch (c) {
    case KernelCase::Case1: return "Case1";
    case KernelCase::Case2: return "Case2";
    case KernelCase::NoCaseApplies: return "NoCaseApplies";
    }
    return "NoCaseApplies";
}

KernelCriterionVerdict binomial_kernel_criterion(unsigned k, Code c, const FieldPtr& tower)
{
    require_extension(*tower);
    const Field& base = *tower->base();
    base.check(c);
    const unsigned n = tower->degree();
    const unsigned r = base_prime_degree(*tower);
    const std::uint64_t p = tower->characteristic();
    const std::uint64_t q = base.order();
    require(k >= 1, "k >= 1");
    require(gcd(k, n) == 1, "gcd(k, n) = 1");

    KernelCriterionVerdict v;
    v.k = k;
    v.c = c;
    v.d = static_cast<unsigned>(gcd(k, r));
    const std::uint64_t e = (q - 1) / (ipow(p, v.d) - 1);

    if (c != 0 && base.pow(c, e) == 1 && n % p != 0) {
        v.case_applied = KernelCase::Case1;
        v.predicted = true;
        return v;
    }
    if (c == 0) {
        v.case_applied = KernelCase::Case2;
        v.predicted = true;
        v.note = "c = 0: x^(p^k) is a Frobenius power";
        return v;
    }
    if (base.pow(c, n * e) != 1) {
        v.case_applied = KernelCase::Case2;
        v.predicted = true;
        return v;
    }
    return v;
}

} // namespace cppforge
