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

// cppforge command-line front end.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cppforge/construct.hpp"
#include "cppforge/field_maps.hpp"
#include "cppforge/grid.hpp"
#include "cppforge/lift.hpp"
#include "cppforge/perm_check.hpp"
#include "cppforge/report.hpp"
#include "cppforge/search.hpp"

using namespace cppforge;
using nlohmann::json;

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitParse = 4;

struct Config {
    std::optional<std::uint64_t> p;
    unsigned r = 1;
    std::optional<unsigned> n;
    std::string mod;
    std::string tmod;
    std::string poly;
    std::string h;
    std::string L;
    std::optional<unsigned> k;
    std::optional<Code> a;
    std::optional<Code> c;
    std::optional<std::uint64_t> s;
    std::optional<unsigned> e;
    std::optional<unsigned> t;
    std::optional<Code> alpha;
    std::string format = "json";
    std::string out;
    std::optional<std::uint64_t> cap;
    bool reproducible = false;
    std::string lambda;
    std::string construction;
    std::string grid;
    std::optional<std::uint64_t> max_order;
    std::uint64_t search_cap = kDefaultSearchCap;
    bool all_tables = false;
    bool agw = false;
    std::uint64_t seed = 20240601;
    std::optional<unsigned> random_h;
    std::optional<unsigned> max_h_degree;
};

[[noreturn]] void parse_error(const std::string& message)
{
    throw Error(ErrorKind::ParseError, message);
}

template <typename T>
T need(const std::optional<T>& v, const char* flag)
{
    if (!v) {
        parse_error(std::string("missing ") + flag);
    }
    return *v;
}

std::string need(const std::string& v, const char* flag)
{
    if (v.empty()) {
        parse_error(std::string("missing ") + flag);
    }
    return v;
}

CheckOptions check_options(const Config& cfg)
{
    CheckOptions options;
    if (cfg.cap) {
        options.cap = *cfg.cap;
    } else if (const char* env = std::getenv("CPPFORGE_CAP")) {
        try {
            options.cap = std::stoull(env);
        } catch (const std::logic_error&) {
            parse_error(std::string("CPPFORGE_CAP is not an integer: ") + env);
        }
    }
    return options;
}

FieldPtr field_from(const Config& cfg, bool want_tower)
{
    const auto p = need(cfg.p, "--p");
    if (want_tower && !cfg.n) {
        parse_error("missing --n");
    }
    if (!cfg.mod.empty() || !cfg.tmod.empty()) {
        std::string desc = "p=" + std::to_string(p) + ";r=" + std::to_string(cfg.r);
        if (!cfg.mod.empty()) {
            desc += ";mod=" + cfg.mod;
        }
        if (cfg.n) {
            desc += ";n=" + std::to_string(*cfg.n);
        }
        if (!cfg.tmod.empty()) {
            desc += ";tmod=" + cfg.tmod;
        }
        return parse_descriptor(desc);
    }
    return cfg.n ? make_tower(p, cfg.r, *cfg.n) : make_field(p, cfg.r);
}

std::string timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string scalar(const json& v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_null()) {
        return "";
    }
    std::string s = v.dump();
    if (s.find(',') != std::string::npos) {
        s = "\"" + s + "\"";
    }
    return s;
}

std::string as_text(const json& j)
{
    std::ostringstream os;
    for (const auto& [key, value] : j.items()) {
        os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    return os.str();
}

std::string as_csv(const json& j, const std::vector<std::string>& columns)
{
    std::string header, row;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        header += (i ? "," : "") + columns[i];
        row += (i ? "," : "") + (j.contains(columns[i]) ? scalar(j[columns[i]]) : std::string());
    }
    return header + "\n" + row + "\n";
}

class Output {
  public:
    explicit Output(const Config& cfg) : cfg_(cfg)
    {
        if (!cfg.out.empty()) {
            file_.open(cfg.out);
            if (!file_) {
                throw Error(ErrorKind::ParseError, "cannot open " + cfg.out, cfg.out);
            }
        }
    }

    std::ostream& stream() { return cfg_.out.empty() ? std::cout : file_; }

    void report(json j, const std::vector<std::string>& csv_columns)
    {
        if (!cfg_.reproducible) {
            j["timestamp"] = timestamp();
        }
        if (cfg_.format == "json") {
            stream() << j.dump(2) << '\n';
        } else if (cfg_.format == "csv") {
            stream() << as_csv(j, csv_columns);
        } else {
            stream() << as_text(j);
        }
    }

  private:
    const Config& cfg_;
    std::ofstream file_;
};

int cmd_verify(const Config& cfg)
{
    auto field = field_from(cfg, false);
    const Poly f = parse_poly(field, need(cfg.poly, "--poly"));
    const auto options = check_options(cfg);
    const auto [plain, plus_x] = is_complete_permutation(f, options);
    json j{{"field", format_descriptor(*field)},
           {"poly", to_json(f)},
           {"f", to_json(plain)},
           {"f_plus_x", to_json(plus_x)},
           {"permutation", plain.is_permutation},
           {"complete", plain.is_permutation && plus_x.is_permutation}};
    if (!cfg.lambda.empty()) {
        if (cfg.lambda != "trace" && cfg.lambda != "norm") {
            parse_error("--lambda must be trace or norm");
        }
        if (field->is_prime()) {
            parse_error("--lambda needs an extension field");
        }
        const Poly h = parse_poly(field->base(), need(cfg.h, "--h"));
        j["agw"] = to_json(agw_verify(f, h, cfg.lambda == "trace" ? LambdaKind::Trace : LambdaKind::Norm, options));
    }
    Output(cfg).report(j, {"field", "permutation", "complete"});
    return 0;
}

int cmd_construct(const Config& cfg)
{
    const std::string& kind = cfg.construction;
    std::optional<LiftResult> result;
    if (kind == "cppeg") {
        result = cppeg_construct(need(cfg.e, "--e"), need(cfg.t, "--t"), need(cfg.k, "--k"), need(cfg.alpha, "--alpha"));
    } else {
        auto tower = field_from(cfg, true);
        auto h = [&] { return parse_poly(tower->base(), need(cfg.h, "--h")); };
        if (kind == "norm-lift") {
            result = norm_lift(h(), tower);
        } else if (kind == "monomial") {
            result = monomial_cpp_check(need(cfg.alpha, "--alpha"), need(cfg.s, "--s"), tower);
        } else if (kind == "trace-simple") {
            result = trace_lift_simple(h(), tower);
        } else if (kind == "trace-general") {
            result = trace_lift_general(h(), parse_ppoly(tower, need(cfg.L, "--L")), need(cfg.a, "--a"), tower);
        } else if (kind == "trace-binomial") {
            result = trace_lift_binomial(h(), need(cfg.k, "--k"), need(cfg.a, "--a"), tower);
        } else {
            parse_error("unknown construction '" + kind + "'");
        }
    }
    const auto verified = verify_lift(*result, check_options(cfg));
    Output(cfg).report(to_json(*result, verified), {"construction", "predicted_cpp", "verified_cpp", "claimed_cpp"});
    const bool disagree = result->predicted_cpp && verified && *result->predicted_cpp != *verified;
    return disagree ? kExitCounterexample : 0;
}

int cmd_search(const Config& cfg)
{
    auto field = field_from(cfg, false);
    const bool zero_fixed = !cfg.all_tables;
    const auto found = enumerate_complete_mappings(field, zero_fixed, cfg.search_cap);
    const auto counted = count_complete_mappings_by_interpolation(field, zero_fixed, cfg.search_cap);
    Output out(cfg);
    auto& os = out.stream();
    if (cfg.format == "csv") {
        os << "index,table,poly_coeffs,normalized\n";
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
        const auto j = to_json(found[i]);
        if (cfg.format == "csv") {
            os << i << ',' << scalar(j["table"]) << ',' << scalar(j["poly_coeffs"]) << ','
               << (found[i].normalized ? "true" : "false") << '\n';
        } else {
            os << j.dump() << '\n';
        }
    }
    json summary{{"field", format_descriptor(*field)},
                 {"zero_fixed", zero_fixed},
                 {"count", found.size()},
                 {"interpolation_count", counted}};
    std::ostream& info = cfg.out.empty() ? std::cerr : std::cout;
    info << summary.dump() << '\n';
    return counted == found.size() ? 0 : kExitCounterexample;
}

int cmd_kernel_check(const Config& cfg)
{
    auto tower = field_from(cfg, true);
    const unsigned k = need(cfg.k, "--k");
    const Code c = need(cfg.c, "--c");
    const auto verdict = binomial_kernel_criterion(k, c, tower);
    const bool exhaustive = ppoly_permutes_kernel(PPoly::frobenius_power(tower, k), c);
    json j = to_json(verdict);
    j["field"] = format_descriptor(*tower);
    j["exhaustive"] = exhaustive;
    Output(cfg).report(j, {"case", "predicted", "exhaustive", "k", "c"});
    return verdict.predicted && *verdict.predicted != exhaustive ? kExitCounterexample : 0;
}

int cmd_grid(const Config& cfg)
{
    GridOptions options;
    const bool cppeg = cfg.grid == "cppeg" || cfg.grid == "cor2.5";
    options.max_order = cfg.max_order.value_or(cppeg ? std::uint64_t{1} << 16 : 4096);
    options.check = check_options(cfg);
    options.agw = cfg.agw;
    options.seed = cfg.seed;
    if (cfg.random_h) {
        options.random_h = *cfg.random_h;
    }
    if (cfg.max_h_degree) {
        options.max_h_degree = *cfg.max_h_degree;
    }
    if (cfg.p && cfg.n) {
        options.towers = {{*cfg.p, cfg.r, *cfg.n}};
    }
    if (cfg.k) {
        options.ks = {*cfg.k};
    }
    const auto report = run_grid(cfg.grid, options);
    json j{{"name", report.name},
           {"total", report.total},
           {"agreements", report.agreements},
           {"skipped", report.skipped},
           {"positive", report.positive},
           {"agw_applicable", report.agw_applicable},
           {"agw_agreements", report.agw_agreements},
           {"counterexamples", report.counterexamples},
           {"passed", report.passed()}};
    if (!cfg.reproducible) {
        j["seconds"] = report.seconds;
    }
    Output(cfg).report(j, {"name", "total", "agreements", "skipped", "positive", "agw_applicable",
                           "agw_agreements", "passed"});
    return report.passed() ? 0 : kExitCounterexample;
}

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::BadTableLength:
        return kExitParse;
    case ErrorKind::ReconstructionMismatch:
        return 1;
    default:
        return kExitPrecondition;
    }
}

void field_flags(CLI::App* cmd, Config& cfg)
{
    cmd->add_option("--p", cfg.p, "Characteristic");
    cmd->add_option("--r", cfg.r, "Degree of F_q over F_p");
    cmd->add_option("--n", cfg.n, "Degree of the tower over F_q");
    cmd->add_option("--mod", cfg.mod, "Modulus of F_q over F_p, e.g. [1,1,1]");
    cmd->add_option("--tmod", cfg.tmod, "Tower modulus, one F_p-coefficient list per coefficient");
}

void output_flags(CLI::App* cmd, Config& cfg)
{
    cmd->add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", cfg.out, "Write the report to this file");
    cmd->add_option("--cap", cfg.cap, "Largest field order checked exhaustively (also CPPFORGE_CAP)");
    cmd->add_flag("--reproducible", cfg.reproducible, "Omit timestamps and timings");
}

} // namespace

int main(int argc, char** argv)
{
    Config cfg;
    CLI::App app{"Construct and verify complete permutation polynomials over finite field towers"};
    // --h names a polynomial, so help is reachable only as --help.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Exhaustive CPP test of a polynomial; CSV columns: field,permutation,complete");
    field_flags(verify, cfg);
    output_flags(verify, cfg);
    verify->add_option("--poly", cfg.poly, "Coefficients, lowest degree first, e.g. [0,2]");
    verify->add_option("--lambda", cfg.lambda, "Also run the AGW check with trace or norm");
    verify->add_option("--h", cfg.h, "Induced map on F_q for --lambda");

    auto* construct = app.add_subcommand(
        "construct", "Build a lifted CPP and verify it; CSV columns: construction,predicted_cpp,verified_cpp,claimed_cpp");
    construct->add_option("construction", cfg.construction,
                          "norm-lift | monomial | cppeg | trace-simple | trace-general | trace-binomial")
        ->required();
    field_flags(construct, cfg);
    output_flags(construct, cfg);
    construct->add_option("--h", cfg.h, "h over F_q, lowest degree first");
    construct->add_option("--L", cfg.L, "p-polynomial, e.g. L=[(1,1),(0,2)]");
    construct->add_option("--k", cfg.k, "Frobenius index");
    construct->add_option("--a", cfg.a, "Scalar a in F_q");
    construct->add_option("--s", cfg.s, "Monomial parameter s");
    construct->add_option("--e", cfg.e, "r = 2^e");
    construct->add_option("--t", cfg.t, "q = r^t");
    construct->add_option("--alpha", cfg.alpha, "Scalar alpha in F_q");

    auto* search = app.add_subcommand(
        "search", "Complete mappings of a small field as JSON lines; CSV columns: index,table,poly_coeffs,normalized");
    field_flags(search, cfg);
    output_flags(search, cfg);
    search->add_option("--search-cap", cfg.search_cap, "Largest q enumerated");
    search->add_flag("--all-tables", cfg.all_tables, "Do not require f(0) = 0");

    auto* kernel = app.add_subcommand(
        "kernel-check", "Kernel criterion for x^(p^k) - c x; CSV columns: case,predicted,exhaustive,k,c");
    field_flags(kernel, cfg);
    output_flags(kernel, cfg);
    kernel->add_option("--k", cfg.k, "Frobenius index");
    kernel->add_option("--c", cfg.c, "Scalar c in F_q");

    auto* grid = app.add_subcommand(
        "grid",
        "Run an equivalence sweep; CSV columns: name,total,agreements,skipped,positive,agw_applicable,agw_agreements,passed");
    std::string names;
    for (const auto& name : grid_names()) {
        names += (names.empty() ? "" : " | ") + name;
    }
    grid->add_option("name", cfg.grid, names)->required();
    field_flags(grid, cfg);
    output_flags(grid, cfg);
    grid->add_option("--max-order", cfg.max_order, "Largest tower order swept");
    grid->add_option("--k", cfg.k, "Restrict the binomial sweeps to one k");
    grid->add_flag("--agw", cfg.agw, "Run the AGW decomposition on every lifted map");
    grid->add_option("--seed", cfg.seed, "Seed for sampled cases");
    grid->add_option("--random-h", cfg.random_h, "Random h per tower");
    grid->add_option("--max-h-degree", cfg.max_h_degree, "Degree bound of the exhaustive h family");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*verify) {
            return cmd_verify(cfg);
        }
        if (*construct) {
            return cmd_construct(cfg);
        }
        if (*search) {
            return cmd_search(cfg);
        }
        if (*kernel) {
            return cmd_kernel_check(cfg);
        }
        return cmd_grid(cfg);
    } catch (const Error& e) {
        json err{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
        if (!e.detail().empty()) {
            err["detail"] = e.detail();
        }
        std::cerr << err.dump() << '\n';
        return exit_code(e.kind());
    }
}
