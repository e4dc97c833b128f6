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
#include <span>
#include <utility>
#include <vector>

#include "cppforge/field.hpp"
#include "cppforge/poly.hpp"

namespace cppforge {

class TowerMaps;

inline constexpr std::uint64_t kDefaultExhaustiveCap = std::uint64_t{1} << 16;

struct CheckOptions {
    /// Exhaustive routines refuse fields larger than this.
    std::uint64_t cap = kDefaultExhaustiveCap;
    /// Number of disjoint code ranges evaluated concurrently (1 = serial).
    unsigned workers = 1;
};

/// Throws OrderCapExceeded when `order` exceeds the cap.
void enforce_cap(std::uint64_t order, const CheckOptions& options);

struct PermVerdict {
    bool is_permutation = false;
    /// Lexicographically smallest (x1, x2), x1 < x2, with f(x1) = f(x2).
    std::optional<std::pair<Code, Code>> witness;
};

/// Horner evaluation of f at x; x may also live in the base of f's field.
Element eval_poly(const Poly& f, const Element& x);

/// Verdict for a value table; the witness depends only on the table.
PermVerdict check_table(std::span<const Code> table);

/// Early-exit bijectivity test of a value table.
bool is_bijective(std::span<const Code> table);

/// Value table of f, computed over `options.workers` disjoint chunks of the
/// code range.
std::vector<Code> tabulate(const Poly& f, const CheckOptions& options);

PermVerdict is_permutation(const Poly& f, const CheckOptions& options = {});

/// Verdicts for f and for f + x; f is a CPP when both hold.
std::pair<PermVerdict, PermVerdict> is_complete_permutation(const Poly& f, const CheckOptions& options = {});

inline bool is_cpp(const std::pair<PermVerdict, PermVerdict>& v)
{
    return v.first.is_permutation && v.second.is_permutation;
}

/// Early-exit CPP test: both `table` and x -> table[x] + x are bijective.
bool table_is_cpp(const Field& field, std::span<const Code> table);

enum class LambdaKind { Trace, Norm };

std::string_view to_string(LambdaKind kind);

/// Outcome of checking bijectivity of f on F_{q^n} through the square
/// lambda(f(x)) = h(lambda(x)) with lambda = trace or norm onto F_q.
struct AGWReport {
    bool square_commutes = false;
    bool lambda_surjective = false;
    bool lambdabar_surjective = false;
    bool h_bijective = false;
    bool fibers_injective = false;
    /// square_commutes and both surjectivities: the decomposition applies.
    bool applicable = false;
    /// h_bijective && fibers_injective.
    bool conclusion = false;
    /// Direct exhaustive test of f.
    bool cross_check = false;
};

/// f is a value table on the tower, h a value table on its base field.
AGWReport agw_verify(const TowerMaps& maps, std::span<const Code> f, std::span<const Code> h, LambdaKind kind,
                     const CheckOptions& options = {});

/// Polynomial front end: f over the tower, h over the base field.
AGWReport agw_verify(const Poly& f, const Poly& h, LambdaKind kind, const CheckOptions& options = {});

} // namespace cppforge
