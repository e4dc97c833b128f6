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

#include "cppforge/lift.hpp"

#include <map>

#include "cppforge/construct.hpp"
#include "cppforge/number.hpp"

namespace cppforge {

namespace {

using Sparse = std::map<std::uint64_t, Code>;

std::string code_list(const std::vector<Code>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + "]";
}

void accumulate(const Field& f, Sparse& into, std::uint64_t e, Code c)
{
    if (c == 0) {
        return;
    }
    Code& slot = into[e];
    slot = f.add(slot, c);
    if (slot == 0) {
        into.erase(e);
    }
}

Sparse sparse_mul(const Field& f, const Sparse& a, const Sparse& b)
{
    Sparse out;
    for (auto [ea, ca] : a) {
        for (auto [eb, cb] : b) {
            accumulate(f, out, ea + eb, f.mul(ca, cb));
        }
    }
    return out;
}

// tr(x)^m as a polynomial; the trace polynomial has unit coefficients so
// its p^j-th power is obtained by scaling exponents.
Sparse trace_power(const Field& tower, std::uint64_t m)
{
    const std::uint64_t p = tower.characteristic();
    const std::uint64_t q = tower.base_order();
    Sparse result{{0, 1}};
    std::uint64_t scale = 1;
    while (m != 0) {
        const std::uint64_t digit = m % p;
        if (digit != 0) {
            Sparse frob;
            std::uint64_t qi = 1;
            for (unsigned i = 0; i < tower.degree(); ++i) {
                accumulate(tower, frob, qi * scale, 1);
                qi *= q;
            }
            for (std::uint64_t d = 0; d < digit; ++d) {
                result = sparse_mul(tower, result, frob);
            }
        }
        m /= p;
        scale *= p;
    }
    return result;
}

void require_base(const Poly& h, const FieldPtr& tower)
{
    if (tower->is_prime() || h.field() != tower->base()) {
        throw Error(ErrorKind::FieldMismatch, "h must be a polynomial over the tower's base field");
    }
}

/// Records and enforces preconditions in order.
class PreconditionLog {
  public:
    explicit PreconditionLog(std::vector<Precondition>& out) : out_(out) {}

    void check(bool holds, const std::string& name)
    {
        out_.push_back({name, holds});
        require(holds, name);
    }

  private:
    std::vector<Precondition>& out_;
};

bool witness_is_cpp(const Poly& witness)
{
    return is_cpp(is_complete_permutation(witness, CheckOptions{witness.field()->order(), 1}));
}

std::uint64_t exponent_bound(std::uint64_t degree, std::uint64_t max_degree)
{
    if (degree > max_degree) {
        throw Error(ErrorKind::Unsupported,
                    "expanded degree " + std::to_string(degree) + " exceeds " + std::to_string(max_degree));
    }
    return degree;
}

} // namespace

LiftedMap::LiftedMap(Shape shape, FieldPtr tower, Poly h, std::optional<PPoly> L, Code a)
    : shape_(shape), tower_(std::move(tower)), h_(std::move(h)), L_(std::move(L)), a_(a)
{
    require_base(h_, tower_);
    if (L_ && L_->tower() != tower_) {
        throw Error(ErrorKind::FieldMismatch, "p-polynomial lives in a different tower");
    }
    if (L_ && shape_ != Shape::Trace) {
        throw Error(ErrorKind::Unsupported, "a p-polynomial term needs the trace shape");
    }
    tower_->base()->check(a_);
    norm_exponent_ = norm_exponent(*tower_);
}

Code LiftedMap::eval(Code x) const
{
    const Field& f = *tower_;
    if (shape_ == Shape::Norm) {
        return f.mul(x, h_.eval(f.pow(x, norm_exponent_)));
    }
    const Code t = rel_trace(f, x);
    Code inner = h_.eval(t);
    if (L_) {
        inner = f.add(inner, f.mul(a_, f.sub(L_->quotient_at(t), L_->quotient_at(x))));
    }
    return f.mul(x, inner);
}

std::vector<Code> LiftedMap::tabulate(const TowerMaps& maps, Code shift) const
{
    if (maps.tower() != tower_) {
        throw Error(ErrorKind::FieldMismatch, "tables belong to a different tower");
    }
    const Field& f = *tower_;
    const Field& base = *tower_->base();
    const std::uint64_t q = base.order();
    const std::uint64_t order = f.order();
    std::vector<Code> hv(q);
    for (std::uint64_t y = 0; y < q; ++y) {
        hv[y] = base.add(h_.eval(static_cast<Code>(y)), shift);
    }
    std::vector<Code> out(order);
    if (shape_ == Shape::Norm) {
        const auto& norm = maps.norm();
        for (std::uint64_t x = 0; x < order; ++x) {
            out[x] = f.mul(static_cast<Code>(x), hv[norm[x]]);
        }
        return out;
    }
    const auto& trace = maps.trace();
    if (!L_) {
        for (std::uint64_t x = 0; x < order; ++x) {
            out[x] = f.mul(static_cast<Code>(x), hv[trace[x]]);
        }
        return out;
    }
    std::vector<Code> a_of(order);
    for (std::uint64_t x = 0; x < order; ++x) {
        a_of[x] = L_->quotient_at(static_cast<Code>(x));
    }
    for (std::uint64_t x = 0; x < order; ++x) {
        const Code t = trace[x];
        const Code inner = f.add(hv[t], f.mul(a_, f.sub(a_of[t], a_of[x])));
        out[x] = f.mul(static_cast<Code>(x), inner);
    }
    return out;
}

std::vector<Code> LiftedMap::induced_table(Code shift) const
{
    const Field& base = *tower_->base();
    const std::uint64_t q = base.order();
    std::vector<Code> out(q);
    for (std::uint64_t y = 0; y < q; ++y) {
        const auto c = static_cast<Code>(y);
        const Code hv = base.add(h_.eval(c), shift);
        out[y] = shape_ == Shape::Norm ? base.mul(c, base.pow(hv, tower_->degree())) : base.mul(c, hv);
    }
    return out;
}

std::vector<std::pair<std::uint64_t, Code>> LiftedMap::expand_terms(std::uint64_t max_degree) const
{
    const Field& f = *tower_;
    Sparse inner;
    if (shape_ == Shape::Norm) {
        exponent_bound(static_cast<std::uint64_t>(std::max(0L, h_.degree())) * norm_exponent_ + 1, max_degree);
        for (auto [i, c] : h_.terms()) {
            accumulate(f, inner, i * norm_exponent_, c);
        }
    } else {
        const std::uint64_t trace_degree = f.order() / f.base_order();
        exponent_bound(static_cast<std::uint64_t>(std::max(0L, h_.degree())) * trace_degree + 1, max_degree);
        if (!h_.is_zero()) {
            Sparse power{{0, 1}};
            const Sparse trace = trace_power(f, 1);
            for (std::size_t j = 0; j < h_.coeffs().size(); ++j) {
                if (j > 0) {
                    power = sparse_mul(f, power, trace);
                }
                for (auto [e, c] : power) {
                    accumulate(f, inner, e, f.mul(h_.coeffs()[j], c));
                }
            }
        }
        if (L_) {
            for (auto [i, coeff] : L_->coeffs()) {
                const std::uint64_t m = ipow(f.characteristic(), i) - 1;
                exponent_bound(m * trace_degree + 1, max_degree);
                const Code scale = f.mul(a_, coeff);
                for (auto [e, c] : trace_power(f, m)) {
                    accumulate(f, inner, e, f.mul(scale, c));
                }
                accumulate(f, inner, m, f.neg(scale));
            }
        }
    }
    std::vector<std::pair<std::uint64_t, Code>> out;
    out.reserve(inner.size());
    for (auto [e, c] : inner) {
        out.emplace_back(e + 1, c);
    }
    return out;
}

Poly LiftedMap::expand(std::uint64_t max_degree) const
{
    auto terms = expand_terms(max_degree);
    std::vector<Code> dense(terms.empty() ? 0 : terms.back().first + 1, 0);
    for (auto [e, c] : terms) {
        dense[e] = c;
    }
    return Poly(tower_, std::move(dense));
}

ZieveCheck zieve_permutation_criterion(std::uint64_t exp_r, const Poly& h, const FieldPtr& tower)
{
    require_base(h, tower);
    const Field& base = *tower->base();
    const std::uint64_t q = base.order();
    const unsigned n = tower->degree();
    require(exp_r >= 1, "exp_r >= 1");
    require(gcd(n, q - 1) == 1, "gcd(n, q-1) = 1");
    require(!h.is_zero(), "h != 0");

    ZieveCheck check;
    check.n_prime = *inverse_mod(n, q - 1);
    check.gcd_condition = gcd(exp_r, norm_exponent(*tower)) == 1;
    std::vector<Code> g(q), g_tilde(q);
    for (std::uint64_t y = 0; y < q; ++y) {
        const auto c = static_cast<Code>(y);
        g[y] = base.mul(base.pow(c, exp_r * check.n_prime), h.eval(c));
        g_tilde[y] = base.mul(base.pow(c, exp_r), h.eval(base.pow(c, n)));
    }
    check.g_permutes = is_bijective(g);
    check.g_tilde_permutes = is_bijective(g_tilde);
    if (check.g_permutes != check.g_tilde_permutes) {
        throw Error(ErrorKind::ReconstructionMismatch, "the two forms of the subfield condition disagree");
    }
    return check;
}

LiftResult norm_lift(const Poly& h, const FieldPtr& tower)
{
    require_base(h, tower);
    const std::uint64_t q = tower->base_order();
    const unsigned n = tower->degree();
    std::vector<Precondition> pre;
    PreconditionLog log(pre);
    log.check(gcd(n, q - 1) == 1, "gcd(n, q-1) = 1");

    std::vector<Code> witness(h.coeffs().empty() ? 0 : 1 + static_cast<std::size_t>(h.degree()) * n + 1, 0);
    for (auto [i, c] : h.terms()) {
        witness[1 + i * n] = c;
    }
    LiftResult result{
        .construction = "norm-lift",
        .params = {{"q", std::to_string(q)}, {"n", std::to_string(n)}, {"h", code_list(h.coeffs())}},
        .preconditions = std::move(pre),
        .subfield_witness = Poly(tower->base(), std::move(witness)),
        .lifted = LiftedMap(LiftedMap::Shape::Norm, tower, h),
    };
    result.predicted_cpp = witness_is_cpp(result.subfield_witness);
    return result;
}

LiftResult monomial_cpp_check(Code alpha, std::uint64_t s, const FieldPtr& tower)
{
    if (tower->is_prime()) {
        throw Error(ErrorKind::FieldMismatch, "monomial lift needs an extension field");
    }
    const FieldPtr& base = tower->base();
    base->check(alpha);
    const std::uint64_t q = base->order();
    const unsigned n = tower->degree();
    std::vector<Precondition> pre;
    PreconditionLog log(pre);
    log.check(gcd(n, q - 1) == 1, "gcd(n, q-1) = 1");
    log.check(alpha != 0, "alpha != 0");

    const Poly h = Poly::monomial(base, alpha, s);
    LiftResult result{
        .construction = "monomial",
        .params = {{"q", std::to_string(q)},
                   {"n", std::to_string(n)},
                   {"alpha", std::to_string(alpha)},
                   {"s", std::to_string(s)},
                   {"exponent", std::to_string(1 + s * norm_exponent(*tower))}},
        .preconditions = std::move(pre),
        .subfield_witness = Poly::monomial(base, alpha, 1 + n * s),
        .lifted = LiftedMap(LiftedMap::Shape::Norm, tower, h),
    };
    result.predicted_cpp = witness_is_cpp(result.subfield_witness);
    return result;
}

LiftResult cppeg_construct(unsigned e, unsigned t, unsigned k, Code alpha)
{
    std::vector<Precondition> pre;
    PreconditionLog log(pre);
    log.check(e >= 1 && t >= 1, "e >= 1 and t >= 1");
    log.check(k >= 1 && k < t, "1 <= k < t");
    log.check(e != 1 || gcd(k, t) != 1, "gcd(k, t) != 1 when e = 1");
    log.check(2 * e * t <= 20, "q^2 <= 2^20");

    auto fq = make_field(2, e * t);
    const std::uint64_t q = fq->order();
    fq->check(alpha);
    const std::uint64_t rk = ipow(2, e * k);
    const std::uint64_t g = gcd(rk - 1, q - 1);
    log.check(alpha != 0 && fq->pow(alpha, (q - 1) / g) != 1, "alpha not in (F_q)^(r^k-1)");

    auto tower = make_tower(2, e * t, 2);
    LiftResult result = monomial_cpp_check(alpha, (rk - 1) * q / 2, tower);
    result.construction = "cppeg";
    result.params.insert(result.params.begin(), {{"e", std::to_string(e)}, {"t", std::to_string(t)}, {"k", std::to_string(k)}});
    pre.insert(pre.end(), result.preconditions.begin(), result.preconditions.end());
    result.preconditions = std::move(pre);
    result.claimed_cpp = true;
    result.reduced_witness = Poly::monomial(fq, alpha, rk);
    return result;
}

LiftResult trace_lift_simple(const Poly& h, const FieldPtr& tower)
{
    require_base(h, tower);
    const Field& base = *tower->base();
    std::vector<Precondition> pre;
    PreconditionLog log(pre);
    log.check(h.coeff(0) != 0, "h(0) != 0");
    log.check(h.coeff(0) != base.minus_one(), "h(0) != -1");

    std::vector<Code> witness(h.coeffs().size() + 1, 0);
    std::copy(h.coeffs().begin(), h.coeffs().end(), witness.begin() + 1);
    LiftResult result{
        .construction = "trace-simple",
        .params = {{"q", std::to_string(base.order())},
                   {"n", std::to_string(tower->degree())},
                   {"h", code_list(h.coeffs())}},
        .preconditions = std::move(pre),
        .subfield_witness = Poly(tower->base(), std::move(witness)),
        .lifted = LiftedMap(LiftedMap::Shape::Trace, tower, h),
    };
    result.predicted_cpp = witness_is_cpp(result.subfield_witness);
    return result;
}

bool trace_identity_holds(const Poly& h, const PPoly& L, Code a, const TowerMaps& maps)
{
    const FieldPtr& tower = maps.tower();
    const Field& base = *tower->base();
    const LiftedMap lifted(LiftedMap::Shape::Trace, tower, h, L, a);
    const auto values = lifted.tabulate(maps);
    const auto& trace = maps.trace();
    for (std::size_t x = 0; x < values.size(); ++x) {
        const Code t = trace[x];
        if (trace[values[x]] != base.mul(t, h.eval(t))) {
            return false;
        }
    }
    return true;
}

LiftResult trace_lift_general(const Poly& h, const PPoly& L, Code a, const FieldPtr& tower)
{
    require_base(h, tower);
    if (L.tower() != tower) {
        throw Error(ErrorKind::FieldMismatch, "p-polynomial lives in a different tower");
    }
    const Field& base = *tower->base();
    base.check(a);
    std::vector<Precondition> pre;
    PreconditionLog log(pre);
    log.check(a != 0, "a != 0");

    const TowerMaps maps(tower);
    const Code a_inv = base.inv(a);
    for (std::uint64_t b = 0; b < base.order(); ++b) {
        const auto c = static_cast<Code>(b);
        const Code hb = h.eval(c);
        const Code ab = L.quotient_at(c);
        const Code theta0 = base.add(base.mul(hb, a_inv), ab);
        const Code theta1 = base.add(base.mul(base.add(hb, 1), a_inv), ab);
        if (!ppoly_permutes_kernel(L, theta0, maps)) {
            throw Error(ErrorKind::HypothesisFails,
                        "L(x) - (h(b)/a + A(b))x does not permute ker(tr) at b = " + std::to_string(b),
                        "b=" + std::to_string(b) + ";map=h(b)");
        }
        if (!ppoly_permutes_kernel(L, theta1, maps)) {
            throw Error(ErrorKind::HypothesisFails,
                        "L(x) - ((h(b)+1)/a + A(b))x does not permute ker(tr) at b = " + std::to_string(b),
                        "b=" + std::to_string(b) + ";map=h(b)+1");
        }
    }
    pre.push_back({"L(x) - (h(b)/a + A(b))x permutes ker(tr) for all b", true});
    pre.push_back({"L(x) - ((h(b)+1)/a + A(b))x permutes ker(tr) for all b", true});

    std::string l_text = "[";
    bool first = true;
    for (auto [i, c] : L.coeffs()) {
        l_text += (first ? "" : ",") + std::string("(") + std::to_string(i) + "," + std::to_string(c) + ")";
        first = false;
    }
    l_text += "]";

    std::vector<Code> witness(h.coeffs().size() + 1, 0);
    std::copy(h.coeffs().begin(), h.coeffs().end(), witness.begin() + 1);
    LiftResult result{
        .construction = "trace-general",
        .params = {{"q", std::to_string(base.order())},
                   {"n", std::to_string(tower->degree())},
                   {"h", code_list(h.coeffs())},
                   {"L", l_text},
                   {"a", std::to_string(a)}},
        .preconditions = std::move(pre),
        .subfield_witness = Poly(tower->base(), std::move(witness)),
        .lifted = LiftedMap(LiftedMap::Shape::Trace, tower, h, L, a),
    };
    result.trace_identity = trace_identity_holds(h, L, a, maps);
    if (!L.strict_form()) {
        result.notes.push_back("L uses the F_q-coefficient reading (indices up to rn-1, zero coefficients allowed)");
    }
    result.predicted_cpp = witness_is_cpp(result.subfield_witness);
    return result;
}

LiftResult trace_lift_binomial(const Poly& h, unsigned k, Code a, const FieldPtr& tower)
{
    require_base(h, tower);
    const std::uint64_t p = tower->characteristic();
    const unsigned n = tower->degree();
    const unsigned r = base_prime_degree(*tower);
    std::vector<Precondition> pre;
    PreconditionLog log(pre);
    log.check(k >= 1, "k >= 1");
    log.check(gcd(k, n) == 1, "gcd(k, n) = 1");
    log.check(n % p != 0, "p does not divide n");
    log.check(gcd(n, ipow(p, static_cast<unsigned>(gcd(k, r))) - 1) == 1, "gcd(n, p^gcd(k,r) - 1) = 1");
    log.check(a != 0, "a != 0");

    LiftResult result = trace_lift_general(h, PPoly::frobenius_power(tower, k), a, tower);
    result.construction = "trace-binomial";
    result.params.emplace_back("k", std::to_string(k));
    pre.insert(pre.end(), result.preconditions.begin() + 1, result.preconditions.end());
    result.preconditions = std::move(pre);
    result.notes.clear();
    return result;
}

std::optional<bool> verify_lift(const LiftResult& result, const CheckOptions& options)
{
    const FieldPtr& tower = result.lifted.tower();
    if (tower->order() > options.cap) {
        return std::nullopt;
    }
    const TowerMaps maps(tower);
    return is_bijective(result.lifted.tabulate(maps, 0)) && is_bijective(result.lifted.tabulate(maps, 1));
}

} // namespace cppforge
