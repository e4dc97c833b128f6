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

#include "cppforge/perm_check.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

#include "cppforge/field_maps.hpp"

namespace cppforge {

namespace {

constexpr Code kUnset = std::numeric_limits<Code>::max();

} // namespace

void enforce_cap(std::uint64_t order, const CheckOptions& options)
{
    if (order > options.cap) {
        throw Error(ErrorKind::OrderCapExceeded,
                    "field order " + std::to_string(order) + " exceeds exhaustive cap " +
                        std::to_string(options.cap));
    }
}

Element eval_poly(const Poly& f, const Element& x)
{
    if (x.home() != f.field() && x.home() != f.field()->base()) {
        throw Error(ErrorKind::FieldMismatch, "evaluation point outside the polynomial's field");
    }
    return {f.field(), f.eval_horner(x.code())};
}

PermVerdict check_table(std::span<const Code> table)
{
    const std::size_t order = table.size();
    std::vector<Code> first(order, kUnset);
    std::vector<Code> second(order, kUnset);
    bool collision = false;
    for (std::size_t x = 0; x < order; ++x) {
        const Code v = table[x];
        if (first[v] == kUnset) {
            first[v] = static_cast<Code>(x);
        } else {
            collision = true;
            if (second[v] == kUnset) {
                second[v] = static_cast<Code>(x);
            }
        }
    }
    PermVerdict verdict;
    verdict.is_permutation = !collision;
    if (collision) {
        std::pair<Code, Code> best{kUnset, kUnset};
        for (std::size_t v = 0; v < order; ++v) {
            if (second[v] != kUnset && first[v] < best.first) {
                best = {first[v], second[v]};
            }
        }
        verdict.witness = best;
    }
    return verdict;
}

bool is_bijective(std::span<const Code> table)
{
    std::vector<bool> hit(table.size(), false);
    for (Code v : table) {
        if (hit[v]) {
            return false;
        }
        hit[v] = true;
    }
    return true;
}

std::vector<Code> tabulate(const Poly& f, const CheckOptions& options)
{
    const std::uint64_t order = f.field()->order();
    std::vector<Code> table(order);
    const unsigned workers = std::max(1u, options.workers);
    const std::uint64_t chunk = (order + workers - 1) / workers;
    auto fill = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t x = lo; x < hi; ++x) {
            table[x] = f.eval(static_cast<Code>(x));
        }
    };
    if (workers == 1) {
        fill(0, order);
        return table;
    }
    std::vector<std::thread> pool;
    for (std::uint64_t lo = 0; lo < order; lo += chunk) {
        pool.emplace_back(fill, lo, std::min(order, lo + chunk));
    }
    for (auto& t : pool) {
        t.join();
    }
    return table;
}

PermVerdict is_permutation(const Poly& f, const CheckOptions& options)
{
    enforce_cap(f.field()->order(), options);
    return check_table(tabulate(f, options));
}

std::pair<PermVerdict, PermVerdict> is_complete_permutation(const Poly& f, const CheckOptions& options)
{
    enforce_cap(f.field()->order(), options);
    auto table = tabulate(f, options);
    const Field& field = *f.field();
    auto first = check_table(table);
    for (std::size_t x = 0; x < table.size(); ++x) {
        table[x] = field.add(table[x], static_cast<Code>(x));
    }
    return {first, check_table(table)};
}

bool table_is_cpp(const Field& field, std::span<const Code> table)
{
    if (!is_bijective(table)) {
        return false;
    }
    std::vector<bool> hit(table.size(), false);
    for (std::size_t x = 0; x < table.size(); ++x) {
        const Code v = field.add(table[x], static_cast<Code>(x));
        if (hit[v]) {
            return false;
        }
        hit[v] = true;
    }
    return true;
}

std::string_view to_string(LambdaKind kind)
{
    return kind == LambdaKind::Trace ? "trace" : "norm";
}

AGWReport agw_verify(const TowerMaps& maps, std::span<const Code> f, std::span<const Code> h, LambdaKind kind,
                     const CheckOptions& options)
{
    const Field& tower = *maps.tower();
    const std::uint64_t order = tower.order();
    const std::uint64_t q = tower.base_order();
    enforce_cap(order, options);
    if (f.size() != order || h.size() != q) {
        throw Error(ErrorKind::BadTableLength, "value tables do not match the tower and its base");
    }
    const auto& lambda = kind == LambdaKind::Trace ? maps.trace() : maps.norm();

    AGWReport report;
    report.square_commutes = true;
    for (std::uint64_t x = 0; x < order; ++x) {
        if (lambda[f[x]] != h[lambda[x]]) {
            report.square_commutes = false;
            break;
        }
    }
    // lambda and lambda-bar coincide here but are checked independently
    std::vector<bool> image(q, false);
    for (Code v : lambda) {
        image[v] = true;
    }
    report.lambda_surjective = std::find(image.begin(), image.end(), false) == image.end();
    std::vector<bool> image_bar(q, false);
    for (std::uint64_t x = 0; x < order; ++x) {
        image_bar[lambda[x]] = true;
    }
    report.lambdabar_surjective = std::find(image_bar.begin(), image_bar.end(), false) == image_bar.end();

    report.h_bijective = is_bijective(h);

    // f injective on each fiber lambda^{-1}(s): no repeated (lambda(x), f(x)).
    std::vector<bool> seen(q * order, false);
    report.fibers_injective = true;
    for (std::uint64_t x = 0; x < order; ++x) {
        const std::uint64_t key = lambda[x] * order + f[x];
        if (seen[key]) {
            report.fibers_injective = false;
            break;
        }
        seen[key] = true;
    }
    report.applicable = report.square_commutes && report.lambda_surjective && report.lambdabar_surjective;
    report.conclusion = report.h_bijective && report.fibers_injective;
    report.cross_check = is_bijective(f);
    return report;
}

AGWReport agw_verify(const Poly& f, const Poly& h, LambdaKind kind, const CheckOptions& options)
{
    const FieldPtr& tower = f.field();
    if (tower->is_prime() || h.field() != tower->base()) {
        throw Error(ErrorKind::FieldMismatch, "h must live over the base of f's field");
    }
    enforce_cap(tower->order(), options);
    TowerMaps maps(tower);
    auto ft = tabulate(f, options);
    auto ht = tabulate(h, CheckOptions{options.cap, 1});
    return agw_verify(maps, ft, ht, kind, options);
}

} // namespace cppforge
