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

#include "cppforge/report.hpp"

#include <cctype>
#include <map>

#include "cppforge/construct.hpp"

namespace cppforge {

using nlohmann::json;

json to_json(const PermVerdict& v)
{
    json j{{"is_permutation", v.is_permutation}};
    j["witness"] = v.witness ? json::array({v.witness->first, v.witness->second}) : json(nullptr);
    return j;
}

json to_json(const AGWReport& r)
{
    return json{{"square_commutes", r.square_commutes},
                {"lambda_surjective", r.lambda_surjective},
                {"lambdabar_surjective", r.lambdabar_surjective},
                {"h_bijective", r.h_bijective},
                {"fibers_injective", r.fibers_injective},
                {"applicable", r.applicable},
                {"conclusion", r.conclusion},
                {"cross_check", r.cross_check}};
}

json to_json(const KernelCriterionVerdict& v)
{
    json j{{"case", std::string(to_string(v.case_applied))},
           {"predicted", v.predicted ? json(*v.predicted) : json(nullptr)},
           {"k", v.k},
           {"c", v.c}};
    if (!v.note.empty()) {
        j["note"] = v.note;
    }
    return j;
}

json to_json(const Poly& f) { return json(f.coeffs()); }

json to_json(const LiftResult& r, std::optional<bool> verified_cpp)
{
    json params = json::object();
    for (const auto& [name, value] : r.params) {
        params[name] = value;
    }
    json pre = json::array();
    for (const auto& p : r.preconditions) {
        pre.push_back({{"name", p.name}, {"holds", p.holds}});
    }
    json lifted{{"shape", r.lifted.shape() == LiftedMap::Shape::Norm ? "x*h(nor(x))" : "x*H(x), H from tr(x)"},
                {"field", format_descriptor(*r.lifted.tower())}};
    try {
        json terms = json::array();
        for (auto [e, c] : r.lifted.expand_terms()) {
            terms.push_back({e, c});
        }
        lifted["terms"] = std::move(terms);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Unsupported) {
            throw;
        }
        lifted["terms"] = nullptr;
        lifted["terms_omitted"] = e.what();
    }
    json j{{"construction", r.construction},
           {"params", std::move(params)},
           {"preconditions", std::move(pre)},
           {"subfield_witness", to_json(r.subfield_witness)},
           {"lifted", std::move(lifted)},
           {"predicted_cpp", r.predicted_cpp ? json(*r.predicted_cpp) : json(nullptr)},
           {"verified_cpp", verified_cpp ? json(*verified_cpp) : json(nullptr)}};
    if (r.claimed_cpp) {
        j["claimed_cpp"] = *r.claimed_cpp;
    }
    if (r.reduced_witness) {
        j["reduced_witness"] = to_json(*r.reduced_witness);
    }
    if (r.trace_identity) {
        j["trace_identity"] = *r.trace_identity;
    }
    if (!r.notes.empty()) {
        j["notes"] = r.notes;
    }
    return j;
}

json to_json(const CompleteMapping& m)
{
    return json{{"field", format_descriptor(*m.field)},
                {"table", m.table},
                {"poly_coeffs", m.poly.coeffs()},
                {"normalized", m.normalized}};
}

std::string format_ppoly(const PPoly& L)
{
    std::string out = "L=[";
    bool first = true;
    for (auto [i, a] : L.coeffs()) {
        out += (first ? "" : ",") + std::string("(") + std::to_string(i) + "," + std::to_string(a) + ")";
        first = false;
    }
    return out + "]";
}

namespace {

[[noreturn]] void fail(const std::string& what, std::string_view text, std::size_t pos)
{
    throw Error(ErrorKind::ParseError, what + " at position " + std::to_string(pos), std::string(text));
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'", text, pos);
        }
    }

    std::uint64_t number()
    {
        skip_space();
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v > 0xffffffffULL) {
                fail("number too large", text, start);
            }
            ++pos;
        }
        if (pos == start) {
            fail("expected a non-negative integer", text, pos);
        }
        return v;
    }

    void finish()
    {
        skip_space();
        if (pos != text.size()) {
            fail("unexpected trailing input", text, pos);
        }
    }
};

} // namespace

PPoly parse_ppoly(const FieldPtr& tower, std::string_view text)
{
    Cursor cur{text};
    cur.skip_space();
    if (text.substr(cur.pos, 2) == "L=") {
        cur.pos += 2;
    }
    cur.expect('[');
    std::map<unsigned, Code> coeffs;
    if (!cur.accept(']')) {
        do {
            cur.expect('(');
            const auto i = static_cast<unsigned>(cur.number());
            cur.expect(',');
            const auto a = static_cast<Code>(cur.number());
            cur.expect(')');
            coeffs[i] = a;
        } while (cur.accept(','));
        cur.expect(']');
    }
    cur.finish();
    return PPoly(tower, std::move(coeffs));
}

Poly parse_poly(const FieldPtr& field, std::string_view text)
{
    Cursor cur{text};
    cur.expect('[');
    std::vector<Code> coeffs;
    if (!cur.accept(']')) {
        do {
            const std::size_t at = cur.pos;
            const auto v = cur.number();
            if (v >= field->order()) {
                fail("coefficient " + std::to_string(v) + " outside the field", text, at);
            }
            coeffs.push_back(static_cast<Code>(v));
        } while (cur.accept(','));
        cur.expect(']');
    }
    cur.finish();
    return Poly(field, std::move(coeffs));
}

} // namespace cppforge
