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
#include <utility>
#include <vector>

#include "cppforge/field_maps.hpp"
#include "cppforge/perm_check.hpp"
#include "cppforge/poly.hpp"

namespace cppforge {

/**
 * A lifted polynomial kept in structured form.
 *
 *   Norm:  f(x) = x * h(nor(x))
 *   Trace: f(x) = x * (h(tr(x)) + a*A(tr(x)) - a*A(x)),  A = L(x)/x
 *
 * The plain trace lift x*h(tr(x)) is the Trace shape without L. Maps are
 * evaluated from this form; expand() writes the polynomial out exactly as
 * it reads, with no reduction of exponents modulo q^n - 1.
 */
class LiftedMap {
  public:
    enum class Shape { Norm, Trace };

    LiftedMap(Shape shape, FieldPtr tower, Poly h, std::optional<PPoly> L = std::nullopt, Code a = 0);

    Shape shape() const noexcept { return shape_; }
    const FieldPtr& tower() const noexcept { return tower_; }
    const Poly& h() const noexcept { return h_; }
    const std::optional<PPoly>& L() const noexcept { return L_; }
    Code a() const noexcept { return a_; }
    LambdaKind lambda() const noexcept { return shape_ == Shape::Norm ? LambdaKind::Norm : LambdaKind::Trace; }

    Code eval(Code x) const;

    /// Value table of f(x) + shift*x, using the tower's trace/norm tables.
    std::vector<Code> tabulate(const TowerMaps& maps, Code shift = 0) const;

    /// The map on F_q closing the square lambda(f(x) + shift*x) = g(lambda(x)):
    /// g(y) = y*(h(y) + shift)^n for the norm shape, y*(h(y) + shift) for
    /// the trace shape.
    std::vector<Code> induced_table(Code shift = 0) const;

    /// Nonzero terms (exponent, coefficient) of the written-out polynomial.
    /// Throws Unsupported when the degree would exceed `max_degree`.
    std::vector<std::pair<std::uint64_t, Code>> expand_terms(std::uint64_t max_degree = kMaxExpandedDegree) const;
    Poly expand(std::uint64_t max_degree = kMaxExpandedDegree) const;

    static constexpr std::uint64_t kMaxExpandedDegree = std::uint64_t{1} << 22;

  private:
    Shape shape_;
    FieldPtr tower_;
    Poly h_;
    std::optional<PPoly> L_;
    Code a_;
    std::uint64_t norm_exponent_ = 0;
};

struct Precondition {
    std::string name;
    bool holds = false;
};

struct LiftResult {
    std::string construction;
    /// Ordered (name, value) pairs describing the inputs.
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Precondition> preconditions;
    /// Polynomial over F_q whose CPP status the construction transports.
    Poly subfield_witness;
    LiftedMap lifted;
    /// Exhaustive CPP status of subfield_witness.
    std::optional<bool> predicted_cpp;
    /// Construction-level claim that holds without any subfield test.
    std::optional<bool> claimed_cpp;
    /// A simpler polynomial with the same map as the witness on F_q.
    std::optional<Poly> reduced_witness;
    /// tr(x*H(x)) = tr(x)*h(tr(x)) on all of F_{q^n} (trace-general family).
    std::optional<bool> trace_identity;
    std::vector<std::string> notes;
};

struct ZieveCheck {
    bool gcd_condition = false;     // gcd(exp_r, (q^n-1)/(q-1)) = 1
    bool g_permutes = false;        // x^(exp_r*n') h(x) permutes F_q
    bool g_tilde_permutes = false;  // x^exp_r h(x^n) permutes F_q
    std::uint64_t n_prime = 0;
    bool holds() const noexcept { return gcd_condition && g_permutes; }
};

/// Whether x^exp_r h(x^((q^n-1)/(q-1))) permutes F_{q^n}, decided on F_q.
/// Requires gcd(n, q-1) = 1 and h != 0. Both forms of the subfield
/// condition are evaluated; a disagreement throws ReconstructionMismatch.
ZieveCheck zieve_permutation_criterion(std::uint64_t exp_r, const Poly& h, const FieldPtr& tower);

/// x*h(nor(x)) on F_{q^n} versus x*h(x^n) on F_q; gcd(n, q-1) = 1.
LiftResult norm_lift(const Poly& h, const FieldPtr& tower);

/// alpha*x^(1 + s(q^n-1)/(q-1)) versus alpha*x^(1+ns); gcd(n, q-1) = 1, alpha != 0.
LiftResult monomial_cpp_check(Code alpha, std::uint64_t s, const FieldPtr& tower);

/// alpha*x^(1 + (r^k-1)(q+1)q/2) on F_{q^2}, q = r^t = 2^(et), with k < t,
/// gcd(k, t) != 1 when e = 1, and alpha not an (r^k-1)-th power in F_q.
/// `alpha` is a code of the canonical F_{2^(et)}.
LiftResult cppeg_construct(unsigned e, unsigned t, unsigned k, Code alpha);

/// x*h(tr(x)) versus x*h(x); requires h(0) not in {0, -1}.
LiftResult trace_lift_simple(const Poly& h, const FieldPtr& tower);

/// x*H(x), H = h(tr(x)) + a*A(tr(x)) - a*A(x), versus x*h(x). Requires
/// a != 0 and that L(x) - (h(b)/a + A(b))x and L(x) - ((h(b)+1)/a + A(b))x
/// permute ker(tr) for every b in F_q (HypothesisFails names the first b).
LiftResult trace_lift_general(const Poly& h, const PPoly& L, Code a, const FieldPtr& tower);

/// tr(x*H(x)) = tr(x)*h(tr(x)) for all x, with no hypothesis on L.
bool trace_identity_holds(const Poly& h, const PPoly& L, Code a, const TowerMaps& maps);

/// x*(h(tr(x)) + a tr(x)^(p^k-1) - a x^(p^k-1)); requires gcd(k, n) = 1,
/// p not dividing n, gcd(n, p^gcd(k,r) - 1) = 1 and a != 0.
LiftResult trace_lift_binomial(const Poly& h, unsigned k, Code a, const FieldPtr& tower);

/// Exhaustive CPP test of the lifted map; nullopt when the tower exceeds
/// the cap.
std::optional<bool> verify_lift(const LiftResult& result, const CheckOptions& options = {});

} // namespace cppforge
