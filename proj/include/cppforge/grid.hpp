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
#include <string>
#include <string_view>
#include <vector>

#include "cppforge/perm_check.hpp"

namespace cppforge {

/// Parameters of a tower F_{q^n} / F_q with q = p^r.
struct TowerParams {
    std::uint64_t p = 2;
    unsigned r = 1;
    unsigned n = 2;

    std::uint64_t q() const;
    std::uint64_t order() const;
    std::string label() const;
};

/// Every (p, r, n) with n >= min_n and q^n <= max_order, ordered by
/// (q, n).
std::vector<TowerParams> towers_up_to(std::uint64_t max_order, unsigned min_n = 2);

struct GridOptions {
    std::uint64_t max_order = 4096;
    /// Explicit towers; empty means towers_up_to(max_order).
    std::vector<TowerParams> towers;
    /// Explicit k values for the binomial sweeps; empty means all admissible.
    std::vector<unsigned> ks;
    /// Every h of degree <= max_h_degree is swept when q^(max_h_degree+1) is
    /// at most exhaustive_h_limit; otherwise random_h seeded samples are used.
    unsigned max_h_degree = 2;
    std::uint64_t exhaustive_h_limit = std::uint64_t{1} << 18;
    /// Extra seeded-random h of degree < q per tower.
    unsigned random_h = 100;
    std::uint64_t seed = 20240601;
    /// Run the AGW decomposition on every lifted f and f + x.
    bool agw = false;
    CheckOptions check;
};

struct GridReport {
    std::string name;
    std::uint64_t total = 0;
    std::uint64_t agreements = 0;
    /// Cases skipped because a precondition or hypothesis did not hold.
    std::uint64_t skipped = 0;
    /// Cases in which both sides are CPPs (both truth directions must occur).
    std::uint64_t positive = 0;
    std::uint64_t agw_applicable = 0;
    std::uint64_t agw_agreements = 0;
    std::vector<std::string> counterexamples;
    double seconds = 0.0;

    bool passed() const
    {
        return counterexamples.empty() && agreements == total && agw_agreements == agw_applicable;
    }
};

/// x*h(nor(x)) is a CPP of F_{q^n} iff x*h(x^n) is one of F_q, for every
/// tower with gcd(n, q-1) = 1.
GridReport sweep_norm_lift(const GridOptions& options);
/// alpha*x^(1+s(q^n-1)/(q-1)) versus alpha*x^(1+ns), alpha in F_q*, 0 <= s <= q.
GridReport sweep_monomial(const GridOptions& options);
/// Every admissible (e, t, k, alpha) with q^2 <= max_order gives a CPP.
GridReport sweep_cppeg(const GridOptions& options);
/// x*h(tr(x)) versus x*h(x) for h(0) not in {0, -1}.
GridReport sweep_trace_simple(const GridOptions& options);
/// Random p-polynomials L and scalars a; cases whose kernel hypothesis
/// holds are compared, and the trace identity is checked on all of them.
GridReport sweep_trace_general(const GridOptions& options);
/// The binomial trace lift with L = x^(p^k).
GridReport sweep_trace_binomial(const GridOptions& options);
/// Every predicted kernel permutation of x^(p^k) - c x is confirmed, and
/// with c^((q-1)/(p^d-1)) = 1 and p | n the map never permutes.
GridReport sweep_kernel_criterion(const GridOptions& options);
/// Trace and norm identities checked exhaustively on every tower.
GridReport sweep_substrate(const GridOptions& options);
/// Complete mappings of F_q (f(0) = 0) for q <= max_order: interpolants,
/// h-forms and the two counting paths agree.
GridReport sweep_search(const GridOptions& options);

/// Names accepted by run_grid, in display order. Each sweep is reachable
/// by a descriptive name and by a short alias.
std::vector<std::string> grid_names();
GridReport run_grid(std::string_view name, const GridOptions& options);

} // namespace cppforge
