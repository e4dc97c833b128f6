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

#include "cppforge/construct.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cppforge/number.hpp"

namespace cppforge {

FieldPtr make_prime_field(std::uint64_t p)
{
    if (p < 2 || !is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime", std::to_string(p));
    }
    if (p >= (std::uint64_t{1} << 16)) {
        throw Error(ErrorKind::OutOfRange, "characteristic must be below 2^16");
    }
    return Field::create_prime(static_cast<std::uint32_t>(p));
}

Poly canonical_modulus(const FieldPtr& base, unsigned degree)
{
    require(degree >= 1, "degree >= 1");
    const std::uint64_t q = base->order();
    auto count = checked_pow(q, degree);
    if (!count || *count > kMaxFieldOrder) {
        throw Error(ErrorKind::Unsupported, "extension too large for a modulus scan");
    }
    std::vector<Code> coeffs(degree + 1, 0);
    coeffs[degree] = 1;
    for (std::uint64_t m = 0; m < *count; ++m) {
        std::uint64_t rest = m;
        for (unsigned i = 0; i < degree; ++i) {
            coeffs[i] = static_cast<Code>(rest % q);
            rest /= q;
        }
        Poly candidate(base, coeffs);
        if (is_irreducible(candidate)) {
            return candidate;
        }
    }
    // unreachable: irreducibles of every degree exist
    throw Error(ErrorKind::NotIrreducible, "no irreducible polynomial found");
}

FieldPtr make_extension(const FieldPtr& base, unsigned degree, std::optional<Poly> modulus)
{
    if (!base) {
        throw Error(ErrorKind::FieldMismatch, "null base field");
    }
    if (base->is_tower()) {
        throw Error(ErrorKind::Unsupported, "towers are limited to two levels above F_p");
    }
    require(degree >= 1, "degree >= 1");
    auto order = checked_pow(base->order(), degree);
    if (!order || *order > kMaxFieldOrder) {
        throw Error(ErrorKind::Unsupported, "field order exceeds the supported maximum 2^20");
    }
    Poly chosen = modulus ? std::move(*modulus) : canonical_modulus(base, degree);
    if (chosen.field() != base) {
        throw Error(ErrorKind::FieldMismatch, "modulus is not over the base field");
    }
    require(chosen.degree() == static_cast<long>(degree) && chosen.is_monic(),
            "modulus is monic of degree " + std::to_string(degree));
    if (!is_irreducible(chosen)) {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < chosen.coeffs().size(); ++i) {
            os << (i ? "," : "") << chosen.coeffs()[i];
        }
        os << ']';
        throw Error(ErrorKind::NotIrreducible, "modulus " + os.str() + " is reducible", os.str());
    }
    return Field::create_extension(base, chosen.coeffs());
}

namespace {

// Canonical fields are deterministic, so they are built once per process.
struct CanonicalCache {
    std::mutex mutex;
    std::map<std::tuple<std::uint64_t, unsigned, unsigned>, FieldPtr> fields;
};

CanonicalCache& canonical_cache()
{
    static CanonicalCache cache;
    return cache;
}

} // namespace

FieldPtr make_field(std::uint64_t p, unsigned r)
{
    require(r >= 1, "r >= 1");
    auto& cache = canonical_cache();
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.fields.find({p, r, 0}); it != cache.fields.end()) {
            return it->second;
        }
    }
    auto prime = make_prime_field(p);
    auto field = r == 1 ? prime : make_extension(prime, r);
    std::lock_guard lock(cache.mutex);
    return cache.fields.try_emplace({p, r, 0}, field).first->second;
}

FieldPtr make_tower(std::uint64_t p, unsigned r, unsigned n)
{
    require(n >= 1, "n >= 1");
    auto& cache = canonical_cache();
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.fields.find({p, r, n}); it != cache.fields.end()) {
            return it->second;
        }
    }
    auto tower = make_extension(make_field(p, r), n);
    std::lock_guard lock(cache.mutex);
    return cache.fields.try_emplace({p, r, n}, tower).first->second;
}

namespace {

std::string list(const std::vector<Code>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + "]";
}

[[noreturn]] void parse_fail(const std::string& what, const std::string& token)
{
    throw Error(ErrorKind::ParseError, what + " near '" + token + "'", token);
}

std::uint64_t parse_uint(const std::string& key, const std::string& value)
{
    try {
        std::size_t used = 0;
        auto v = std::stoull(value, &used);
        if (used != value.size()) {
            parse_fail("trailing characters in " + key, value);
        }
        return v;
    } catch (const std::logic_error&) {
        parse_fail("expected an unsigned integer for " + key, value);
    }
}

nlohmann::json parse_list(const std::string& key, const std::string& value)
{
    auto j = nlohmann::json::parse(value, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
        parse_fail("expected a bracketed list for " + key, value);
    }
    return j;
}

std::vector<Code> codes_from(const std::string& key, const nlohmann::json& j)
{
    std::vector<Code> out;
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) {
            parse_fail("expected non-negative integers in " + key, v.dump());
        }
        out.push_back(v.get<Code>());
    }
    return out;
}

} // namespace

std::string format_descriptor(const Field& field)
{
    const Field* level = &field;
    const Field* tower = nullptr;
    if (field.is_tower()) {
        tower = &field;
        level = field.base().get();
    }
    std::string out = "p=" + std::to_string(level->characteristic()) + ";r=" +
                      std::to_string(level->prime_degree()) + ";mod=" + list(level->modulus());
    if (tower) {
        out += ";n=" + std::to_string(tower->degree()) + ";tmod=[";
        for (std::size_t i = 0; i < tower->modulus().size(); ++i) {
            out += (i ? "," : "") + list(level->coeffs(tower->modulus()[i]));
        }
        out += "]";
    }
    return out;
}

FieldPtr parse_descriptor(std::string_view text)
{
    std::map<std::string, std::string> kv;
    std::string s(text);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find(';', pos);
        if (end == std::string::npos) {
            end = s.size();
        }
        std::string item = s.substr(pos, end - pos);
        if (!item.empty()) {
            auto eq = item.find('=');
            if (eq == std::string::npos) {
                parse_fail("expected key=value", item);
            }
            auto key = item.substr(0, eq);
            if (key != "p" && key != "r" && key != "mod" && key != "n" && key != "tmod") {
                parse_fail("unknown key", key);
            }
            kv[key] = item.substr(eq + 1);
        }
        pos = end + 1;
    }
    if (!kv.count("p")) {
        parse_fail("missing p", s);
    }
    auto prime = make_prime_field(parse_uint("p", kv["p"]));
    const unsigned r = kv.count("r") ? static_cast<unsigned>(parse_uint("r", kv["r"])) : 1;
    require(r >= 1, "r >= 1");
    FieldPtr base;
    if (kv.count("mod")) {
        auto coeffs = codes_from("mod", parse_list("mod", kv["mod"]));
        if (r == 1 && coeffs == std::vector<Code>{0, 1}) {
            base = prime;
        } else {
            base = make_extension(prime, r, Poly(prime, coeffs));
        }
    } else {
        base = make_field(prime->characteristic(), r);
    }
    if (!kv.count("n")) {
        if (kv.count("tmod")) {
            parse_fail("tmod given without n", kv["tmod"]);
        }
        return base;
    }
    const auto n = static_cast<unsigned>(parse_uint("n", kv["n"]));
    if (!kv.count("tmod")) {
        return make_extension(base, n);
    }
    auto rows = parse_list("tmod", kv["tmod"]);
    std::vector<Code> tmod;
    for (const auto& row : rows) {
        if (!row.is_array()) {
            parse_fail("tmod entries must be coefficient lists", row.dump());
        }
        auto digits = codes_from("tmod", row);
        if (base->is_prime()) {
            if (digits.size() != 1) {
                parse_fail("tmod entry length must equal r", row.dump());
            }
            prime->check(digits[0]);
            tmod.push_back(digits[0]);
        } else {
            if (digits.size() != base->degree()) {
                parse_fail("tmod entry length must equal r", row.dump());
            }
            for (Code d : digits) {
                prime->check(d);
            }
            tmod.push_back(base->from_coeffs(digits));
        }
    }
    return make_extension(base, n, Poly(base, tmod));
}

} // namespace cppforge
