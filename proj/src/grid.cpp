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

#include "cppforge/grid.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "cppforge/construct.hpp"
#include "cppforge/field_maps.hpp"
#include "cppforge/lift.hpp"
#include "cppforge/number.hpp"
#include "cppforge/search.hpp"

namespace cppforge {

std::uint64_t TowerParams::q() const { return ipow(p, r); }

std::uint64_t TowerParams::order() const { return ipow(q(), n); }

std::string TowerParams::label() const
{
    return "p=" + std::to_string(p) + ",r=" + std::to_string(r) + ",n=" + std::to_string(n);
}

std::vector<TowerParams> towers_up_to(std::uint64_t max_order, unsigned min_n)
{
    std::vector<TowerParams> out;
    for (std::uint64_t q = 2; q * q <= max_order || (min_n <= 1 && q <= max_order); ++q) {
        auto pp = prime_power(q);
        if (!pp) {
            continue;
        }
        std::uint64_t order = 1;
        for (unsigned n = 1;; ++n) {
            if (order > max_order / q) {
                break;
            }
            order *= q;
            if (n >= min_n) {
                out.push_back({pp->first, pp->second, n});
            }
        }
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string codes(const std::vector<Code>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + "]";
}

std::vector<TowerParams> selected_towers(const GridOptions& options)
{
    return options.towers.empty() ? towers_up_to(options.max_order) : options.towers;
}

/// Every h of degree <= max_h_degree when that set is small enough,
/// followed by seeded-random h of degree < q.
std::vector<Poly> h_family(const FieldPtr& base, const GridOptions& options, std::mt19937_64& rng)
{
    const std::uint64_t q = base->order();
    std::vector<Poly> out;
    const auto count = checked_pow(q, options.max_h_degree + 1);
    const bool exhaustive = count && *count <= options.exhaustive_h_limit;
    if (exhaustive) {
        std::vector<Code> c(options.max_h_degree + 1);
        for (std::uint64_t m = 0; m < *count; ++m) {
            std::uint64_t rest = m;
            for (auto& digit : c) {
                digit = static_cast<Code>(rest % q);
                rest /= q;
            }
            out.emplace_back(base, c);
        }
    }
    std::uniform_int_distribution<Code> coeff(0, static_cast<Code>(q - 1));
    std::uniform_int_distribution<std::uint64_t> length(1, q);
    const unsigned samples = exhaustive ? options.random_h : std::max(options.random_h, 1u);
    for (unsigned i = 0; i < samples; ++i) {
        std::vector<Code> c(length(rng));
        for (auto& v : c) {
            v = coeff(rng);
        }
        out.emplace_back(base, std::move(c));
    }
    return out;
}

/// Early-exit bijectivity of x -> value(x) on codes 0..order-1.
bool injective(std::uint64_t order, const std::function<Code(Code)>& value)
{
    std::vector<bool> seen(order, false);
    for (std::uint64_t x = 0; x < order; ++x) {
        const Code y = value(static_cast<Code>(x));
        if (seen[y]) {
            return false;
        }
        seen[y] = true;
    }
    return true;
}

bool lifted_is_cpp(const LiftedMap& lifted, const TowerMaps& maps)
{
    const Field& f = *lifted.tower();
    const Field& base = *f.base();
    const std::uint64_t q = base.order();
    const auto& lambda = lifted.shape() == LiftedMap::Shape::Norm ? maps.norm() : maps.trace();
    std::vector<Code> quotient;
    if (lifted.L()) {
        quotient.resize(f.order());
        for (std::uint64_t x = 0; x < f.order(); ++x) {
            quotient[x] = lifted.L()->quotient_at(static_cast<Code>(x));
        }
    }
    for (Code shift : {Code{0}, Code{1}}) {
        std::vector<Code> hv(q);
        for (std::uint64_t y = 0; y < q; ++y) {
            hv[y] = base.add(lifted.h().eval(static_cast<Code>(y)), shift);
        }
        const bool ok = injective(f.order(), [&](Code x) {
            const Code t = lambda[x];
            Code inner = hv[t];
            if (!quotient.empty()) {
                inner = f.add(inner, f.mul(lifted.a(), f.sub(quotient[t], quotient[x])));
            }
            return f.mul(x, inner);
        });
        if (!ok) {
            return false;
        }
    }
    return true;
}

/// AGW checks on f and f + x; returns the direct CPP status of f.
bool agw_pass(const LiftedMap& lifted, const TowerMaps& maps, const GridOptions& options, GridReport& report,
              const std::string& label)
{
    bool cpp = true;
    for (Code shift : {Code{0}, Code{1}}) {
        const auto f = lifted.tabulate(maps, shift);
        const auto g = lifted.induced_table(shift);
        const auto agw = agw_verify(maps, f, g, lifted.lambda(), options.check);
        const bool direct = is_bijective(f);
        cpp = cpp && direct;
        if (!agw.applicable) {
            continue;
        }
        ++report.agw_applicable;
        if (agw.conclusion == agw.cross_check && agw.cross_check == direct) {
            ++report.agw_agreements;
        } else {
            report.counterexamples.push_back("agw " + label + " shift=" + std::to_string(shift));
        }
    }
    return cpp;
}

/// Compares the lifted map against the prediction carried by `result`.
void compare(const LiftResult& result, const TowerMaps& maps, const GridOptions& options, GridReport& report,
             const std::string& label)
{
    ++report.total;
    const bool lifted =
        options.agw ? agw_pass(result.lifted, maps, options, report, label) : lifted_is_cpp(result.lifted, maps);
    const bool predicted = result.predicted_cpp.value_or(false);
    if (lifted == predicted) {
        ++report.agreements;
        report.positive += lifted ? 1 : 0;
    } else {
        report.counterexamples.push_back(label + " lifted=" + std::to_string(lifted) +
                                         " predicted=" + std::to_string(predicted));
    }
}

bool is_skip(const Error& e)
{
    return e.kind() == ErrorKind::PreconditionViolated || e.kind() == ErrorKind::HypothesisFails;
}

template <typename Body>
GridReport timed(std::string name, Body body)
{
    GridReport report;
    report.name = std::move(name);
    const auto start = Clock::now();
    body(report);
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

PPoly random_ppoly(const FieldPtr& tower, std::mt19937_64& rng)
{
    const unsigned rn = base_prime_degree(*tower) * tower->degree();
    std::uniform_int_distribution<Code> coeff(0, static_cast<Code>(tower->base_order() - 1));
    std::uniform_int_distribution<unsigned> index(0, rn - 1);
    std::map<unsigned, Code> terms;
    const unsigned count = 1 + index(rng) % 3;
    for (unsigned i = 0; i < count; ++i) {
        terms[index(rng)] = coeff(rng);
    }
    if (std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second == 0; })) {
        terms.begin()->second = 1;
    }
    return PPoly(tower, std::move(terms));
}

std::vector<unsigned> binomial_ks(const TowerParams& t, const GridOptions& options)
{
    if (!options.ks.empty()) {
        return options.ks;
    }
    std::vector<unsigned> ks;
    for (unsigned k = 1; k < t.r * t.n; ++k) {
        if (gcd(k, t.n) == 1) {
            ks.push_back(k);
        }
    }
    return ks;
}

} // namespace

GridReport sweep_norm_lift(const GridOptions& options)
{
    return timed("norm-lift", [&](GridReport& report) {
        std::mt19937_64 rng(options.seed);
        for (const auto& t : selected_towers(options)) {
            if (gcd(t.n, t.q() - 1) != 1) {
                continue;
            }
            auto tower = make_tower(t.p, t.r, t.n);
            const TowerMaps maps(tower);
            for (const auto& h : h_family(tower->base(), options, rng)) {
                compare(norm_lift(h, tower), maps, options, report, t.label() + " h=" + codes(h.coeffs()));
            }
        }
    });
}

GridReport sweep_monomial(const GridOptions& options)
{
    return timed("monomial", [&](GridReport& report) {
        for (const auto& t : selected_towers(options)) {
            if (gcd(t.n, t.q() - 1) != 1) {
                continue;
            }
            auto tower = make_tower(t.p, t.r, t.n);
            const TowerMaps maps(tower);
            for (Code alpha = 1; alpha < t.q(); ++alpha) {
                for (std::uint64_t s = 0; s <= t.q(); ++s) {
                    compare(monomial_cpp_check(alpha, s, tower), maps, options, report,
                            t.label() + " alpha=" + std::to_string(alpha) + " s=" + std::to_string(s));
                }
            }
        }
    });
}

GridReport sweep_cppeg(const GridOptions& options)
{
    return timed("cppeg", [&](GridReport& report) {
        for (unsigned et = 1; 2 * et <= 20 && (std::uint64_t{1} << (2 * et)) <= options.max_order; ++et) {
            auto tower = make_tower(2, et, 2);
            const TowerMaps maps(tower);
            const Field& fq = *tower->base();
            for (unsigned e = 1; e <= et; ++e) {
                if (et % e != 0) {
                    continue;
                }
                const unsigned t = et / e;
                for (unsigned k = 1; k < t; ++k) {
                    if (e == 1 && gcd(k, t) == 1) {
                        continue;
                    }
                    const std::uint64_t g = gcd(ipow(2, e * k) - 1, fq.order() - 1);
                    for (Code alpha = 1; alpha < fq.order(); ++alpha) {
                        if (fq.pow(alpha, (fq.order() - 1) / g) == 1) {
                            continue;
                        }
                        const std::string label = "e=" + std::to_string(e) + " t=" + std::to_string(t) +
                                                  " k=" + std::to_string(k) + " alpha=" + std::to_string(alpha);
                        auto result = cppeg_construct(e, t, k, alpha);
                        compare(result, maps, options, report, label);
                        if (!result.predicted_cpp.value_or(false)) {
                            report.counterexamples.push_back(label + " subfield witness is not a CPP");
                        }
                    }
                }
            }
        }
    });
}

GridReport sweep_trace_simple(const GridOptions& options)
{
    return timed("trace-simple", [&](GridReport& report) {
        std::mt19937_64 rng(options.seed);
        for (const auto& t : selected_towers(options)) {
            auto tower = make_tower(t.p, t.r, t.n);
            const TowerMaps maps(tower);
            for (const auto& h : h_family(tower->base(), options, rng)) {
                try {
                    compare(trace_lift_simple(h, tower), maps, options, report,
                            t.label() + " h=" + codes(h.coeffs()));
                } catch (const Error& e) {
                    if (!is_skip(e)) {
                        throw;
                    }
                    ++report.skipped;
                }
            }
        }
    });
}

namespace {

void general_case(const Poly& h, const PPoly& L, Code a, const TowerParams& t, const TowerMaps& maps,
                  const GridOptions& options, GridReport& report, const std::function<LiftResult()>& build)
{
    const std::string label = t.label() + " h=" + codes(h.coeffs()) + " L=" + [&] {
        std::string s;
        for (auto [i, c] : L.coeffs()) {
            s += "(" + std::to_string(i) + "," + std::to_string(c) + ")";
        }
        return s;
    }() + " a=" + std::to_string(a);
    if (!trace_identity_holds(h, L, a, maps)) {
        report.counterexamples.push_back(label + " trace identity fails");
    }
    try {
        compare(build(), maps, options, report, label);
    } catch (const Error& e) {
        if (!is_skip(e)) {
            throw;
        }
        ++report.skipped;
    }
}

} // namespace

GridReport sweep_trace_general(const GridOptions& options)
{
    return timed("trace-general", [&](GridReport& report) {
        std::mt19937_64 rng(options.seed);
        for (const auto& t : selected_towers(options)) {
            auto tower = make_tower(t.p, t.r, t.n);
            const TowerMaps maps(tower);
            std::uniform_int_distribution<Code> scalar(1, static_cast<Code>(t.q() - 1));
            const auto hs = h_family(tower->base(), options, rng);
            std::uniform_int_distribution<std::size_t> pick(0, hs.size() - 1);
            for (unsigned i = 0; i < std::max(options.random_h, 1u); ++i) {
                const PPoly L = random_ppoly(tower, rng);
                const Code a = scalar(rng);
                const Poly& h = hs[pick(rng)];
                general_case(h, L, a, t, maps, options, report,
                             [&] { return trace_lift_general(h, L, a, tower); });
            }
        }
    });
}

GridReport sweep_trace_binomial(const GridOptions& options)
{
    return timed("trace-binomial", [&](GridReport& report) {
        std::mt19937_64 rng(options.seed);
        for (const auto& t : selected_towers(options)) {
            if (t.n % t.p == 0) {
                continue;
            }
            auto tower = make_tower(t.p, t.r, t.n);
            const TowerMaps maps(tower);
            const auto hs = h_family(tower->base(), options, rng);
            for (unsigned k : binomial_ks(t, options)) {
                const PPoly L = PPoly::frobenius_power(tower, k);
                for (Code a = 1; a < t.q(); ++a) {
                    for (const auto& h : hs) {
                        general_case(h, L, a, t, maps, options, report,
                                     [&] { return trace_lift_binomial(h, k, a, tower); });
                    }
                }
            }
        }
    });
}

GridReport sweep_kernel_criterion(const GridOptions& options)
{
    return timed("kernel-criterion", [&](GridReport& report) {
        for (const auto& t : selected_towers(options)) {
            auto tower = make_tower(t.p, t.r, t.n);
            const TowerMaps maps(tower);
            const Field& base = *tower->base();
            std::vector<unsigned> ks = options.ks;
            if (ks.empty()) {
                for (unsigned k = 1; k <= t.r * t.n; ++k) {
                    if (gcd(k, t.n) == 1) {
                        ks.push_back(k);
                    }
                }
            }
            for (unsigned k : ks) {
                const PPoly L = PPoly::frobenius_power(tower, k);
                const unsigned d = static_cast<unsigned>(gcd(k, t.r));
                const std::uint64_t e = (t.q() - 1) / (ipow(t.p, d) - 1);
                for (Code c = 0; c < t.q(); ++c) {
                    const auto verdict = binomial_kernel_criterion(k, c, tower);
                    const bool actual = ppoly_permutes_kernel(L, c, maps);
                    const std::string label = t.label() + " k=" + std::to_string(k) + " c=" + std::to_string(c);
                    if (verdict.predicted) {
                        ++report.total;
                        if (actual == *verdict.predicted) {
                            ++report.agreements;
                            report.positive += actual ? 1 : 0;
                        } else {
                            report.counterexamples.push_back(label + " predicted=" +
                                                             std::to_string(*verdict.predicted));
                        }
                    } else if (c != 0 && base.pow(c, e) == 1 && t.n % t.p == 0) {
                        ++report.total;
                        if (!actual) {
                            ++report.agreements;
                        } else {
                            report.counterexamples.push_back(label + " permutes although p divides n");
                        }
                    } else {
                        ++report.skipped;
                    }
                }
            }
        }
    });
}

GridReport sweep_substrate(const GridOptions& options)
{
    return timed("substrate", [&](GridReport& report) {
        std::mt19937_64 rng(options.seed);
        for (const auto& t : selected_towers(options)) {
            auto tower = make_tower(t.p, t.r, t.n);
            const TowerMaps maps(tower);
            const Field& f = *tower;
            const Field& base = *tower->base();
            const std::uint64_t order = f.order();
            const std::uint64_t q = base.order();
            const auto& tr = maps.trace();
            const auto& nm = maps.norm();
            auto check = [&](bool ok, const std::string& what) {
                ++report.total;
                if (ok) {
                    ++report.agreements;
                } else {
                    report.counterexamples.push_back(t.label() + " " + what);
                }
            };

            bool ok = true;
            for (std::uint64_t x = 0; x < order && ok; ++x) {
                Code sum = 0;
                Code power = static_cast<Code>(x);
                for (unsigned i = 0; i < t.n; ++i) {
                    sum = f.add(sum, power);
                    power = f.pow(power, q);
                }
                ok = sum == tr[x] && sum < q;
            }
            check(ok, "trace table differs from the sum of conjugates");

            ok = true;
            for (std::uint64_t x = 0; x < order && ok; ++x) {
                for (std::uint64_t y = 0; y < order && ok; ++y) {
                    ok = tr[f.add(static_cast<Code>(x), static_cast<Code>(y))] == base.add(tr[x], tr[y]);
                }
            }
            check(ok, "trace is not additive");

            ok = true;
            for (std::uint64_t c = 0; c < q && ok; ++c) {
                for (std::uint64_t x = 0; x < order && ok; ++x) {
                    ok = tr[f.mul(static_cast<Code>(c), static_cast<Code>(x))] ==
                         base.mul(static_cast<Code>(c), tr[x]);
                }
            }
            check(ok, "trace is not F_q-linear");

            std::vector<std::uint64_t> fibre(q, 0);
            for (Code v : tr) {
                ++fibre[v];
            }
            check(std::all_of(fibre.begin(), fibre.end(), [&](auto c) { return c == order / q; }),
                  "trace fibres are not uniform");
            check(maps.kernel().size() == order / q, "kernel size differs from q^(n-1)");

            ok = true;
            const Code n_code = base.from_integer(t.n);
            for (std::uint64_t a = 0; a < q && ok; ++a) {
                ok = tr[a] == base.mul(n_code, static_cast<Code>(a)) && nm[a] == base.pow(static_cast<Code>(a), t.n);
            }
            check(ok, "trace or norm of a base element is wrong");

            ok = true;
            for (std::uint64_t x = 0; x < order && ok; ++x) {
                for (std::uint64_t y = 0; y < order && ok; ++y) {
                    ok = nm[f.mul(static_cast<Code>(x), static_cast<Code>(y))] == base.mul(nm[x], nm[y]);
                }
            }
            check(ok, "norm is not multiplicative");

            std::vector<bool> hit(q, false);
            for (std::uint64_t x = 1; x < order; ++x) {
                hit[nm[x]] = true;
            }
            check(!hit[0] && std::count(hit.begin(), hit.end(), true) == static_cast<long>(q - 1),
                  "norm is not onto the nonzero base elements");

            std::vector<PPoly> ls;
            for (unsigned k = 0; k < t.r * t.n; ++k) {
                ls.push_back(PPoly::frobenius_power(tower, k));
            }
            for (int i = 0; i < 3; ++i) {
                ls.push_back(random_ppoly(tower, rng));
            }
            for (const auto& L : ls) {
                ok = true;
                for (std::uint64_t x = 0; x < order && ok; ++x) {
                    ok = L.eval(tr[x]) == tr[L.eval(static_cast<Code>(x))];
                }
                std::string name;
                for (auto [i, c] : L.coeffs()) {
                    name += "(" + std::to_string(i) + "," + std::to_string(c) + ")";
                }
                check(ok, "L(tr x) != tr(L x) for L=" + name);
            }
        }
    });
}

GridReport sweep_search(const GridOptions& options)
{
    return timed("search", [&](GridReport& report) {
        for (std::uint64_t q = 2; q <= std::min(options.max_order, kDefaultSearchCap); ++q) {
            auto pp = prime_power(q);
            if (!pp) {
                continue;
            }
            auto field = make_field(pp->first, pp->second);
            const auto found = enumerate_complete_mappings(field, true);
            for (const auto& m : found) {
                ++report.total;
                bool ok = is_cpp(is_complete_permutation(m.poly)) && tabulate(m.poly) == m.table &&
                          m.poly.degree() < static_cast<long>(q);
                for (unsigned n = 1; n <= 6 && ok; ++n) {
                    if (gcd(n, q - 1) != 1) {
                        continue;
                    }
                    const Poly h = to_h_form(m.poly, n);
                    ok = tabulate(from_h_form(h, n)) == m.table && h.degree() < static_cast<long>(q - 1);
                }
                if (ok) {
                    ++report.agreements;
                    ++report.positive;
                } else {
                    report.counterexamples.push_back("q=" + std::to_string(q) + " table=" + codes(m.table));
                }
            }
            ++report.total;
            const auto counted = count_complete_mappings_by_interpolation(field, true);
            if (counted == found.size()) {
                ++report.agreements;
            } else {
                report.counterexamples.push_back("q=" + std::to_string(q) + " counts " +
                                                 std::to_string(found.size()) + " vs " + std::to_string(counted));
            }
        }
    });
}

namespace {

struct GridEntry {
    const char* name;
    const char* alias;
    GridReport (*run)(const GridOptions&);
};

constexpr GridEntry kGrids[] = {
    {"norm-lift", "thm2.2", sweep_norm_lift},
    {"monomial", "cor2.3", sweep_monomial},
    {"cppeg", "cor2.5", sweep_cppeg},
    {"trace-simple", "thm3.2", sweep_trace_simple},
    {"trace-general", "thm3.3", sweep_trace_general},
    {"trace-binomial", "thm3.7", sweep_trace_binomial},
    {"kernel-criterion", "lemma3.4", sweep_kernel_criterion},
    {"substrate", "maps", sweep_substrate},
    {"search", "catalog", sweep_search},
};

} // namespace

std::vector<std::string> grid_names()
{
    std::vector<std::string> out;
    for (const auto& g : kGrids) {
        out.emplace_back(g.name);
        out.emplace_back(g.alias);
    }
    return out;
}

GridReport run_grid(std::string_view name, const GridOptions& options)
{
    for (const auto& g : kGrids) {
        if (name == g.name || name == g.alias) {
            return g.run(options);
        }
    }
    throw Error(ErrorKind::ParseError, "unknown grid '" + std::string(name) + "'", std::string(name));
}

} // namespace cppforge
