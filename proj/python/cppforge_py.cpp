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

// Python bindings. Structured results cross the boundary as JSON text and
// are decoded by the package wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cppforge/construct.hpp"
#include "cppforge/field_maps.hpp"
#include "cppforge/grid.hpp"
#include "cppforge/lift.hpp"
#include "cppforge/perm_check.hpp"
#include "cppforge/report.hpp"
#include "cppforge/search.hpp"

namespace py = pybind11;
using namespace cppforge;

namespace {

// pybind11 holders must be non-const, so fields travel in a small handle.
struct FieldHandle {
    FieldPtr ptr;
};

Poly poly_of(const FieldPtr& field, const std::vector<Code>& coeffs)
{
    for (Code c : coeffs) {
        field->check(c);
    }
    return Poly(field, coeffs);
}

std::string lift_json(const LiftResult& r, std::uint64_t cap)
{
    return to_json(r, verify_lift(r, CheckOptions{cap, 1})).dump();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Complete permutation polynomials over finite field towers";

    static py::handle error_type = py::exception<Error>(m, "CppforgeError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            exc.attr("detail") = e.detail();
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<FieldHandle>(m, "Field")
        .def_property_readonly("characteristic", [](const FieldHandle& f) { return f.ptr->characteristic(); })
        .def_property_readonly("order", [](const FieldHandle& f) { return f.ptr->order(); })
        .def_property_readonly("degree", [](const FieldHandle& f) { return f.ptr->degree(); })
        .def_property_readonly("is_tower", [](const FieldHandle& f) { return f.ptr->is_tower(); })
        .def_property_readonly("base",
                               [](const FieldHandle& f) -> std::optional<FieldHandle> {
                                   if (!f.ptr->base()) {
                                       return std::nullopt;
                                   }
                                   return FieldHandle{f.ptr->base()};
                               })
        .def("add", [](const FieldHandle& f, Code a, Code b) { f.ptr->check(a); f.ptr->check(b); return f.ptr->add(a, b); })
        .def("sub", [](const FieldHandle& f, Code a, Code b) { f.ptr->check(a); f.ptr->check(b); return f.ptr->sub(a, b); })
        .def("mul", [](const FieldHandle& f, Code a, Code b) { f.ptr->check(a); f.ptr->check(b); return f.ptr->mul(a, b); })
        .def("inv", [](const FieldHandle& f, Code a) { f.ptr->check(a); return f.ptr->inv(a); })
        .def("pow", [](const FieldHandle& f, Code a, std::uint64_t e) { f.ptr->check(a); return f.ptr->pow(a, e); })
        .def("coeffs", [](const FieldHandle& f, Code a) { f.ptr->check(a); return f.ptr->coeffs(a); })
        .def("descriptor", [](const FieldHandle& f) { return format_descriptor(*f.ptr); })
        .def("__repr__", [](const FieldHandle& f) { return "Field(" + format_descriptor(*f.ptr) + ")"; });

    m.def("make_field", [](std::uint64_t p, unsigned r) { return FieldHandle{make_field(p, r)}; }, py::arg("p"),
          py::arg("r") = 1);
    m.def("make_tower", [](std::uint64_t p, unsigned r, unsigned n) { return FieldHandle{make_tower(p, r, n)}; },
          py::arg("p"), py::arg("r"), py::arg("n"));
    m.def("parse_descriptor", [](const std::string& text) { return FieldHandle{parse_descriptor(text)}; });

    m.def("rel_trace", [](const FieldHandle& f, Code x) {
        f.ptr->check(x);
        return rel_trace(*f.ptr, x);
    });
    m.def("rel_norm", [](const FieldHandle& f, Code x) {
        f.ptr->check(x);
        return rel_norm(*f.ptr, x);
    });
    m.def("trace_kernel", [](const FieldHandle& f) { return TowerMaps(f.ptr).kernel(); });

    m.def("evaluate",
          [](const FieldHandle& f, const std::vector<Code>& coeffs) { return tabulate(poly_of(f.ptr, coeffs)); });
    m.def("is_permutation_json", [](const FieldHandle& f_, const std::vector<Code>& coeffs, std::uint64_t cap) {
        const FieldPtr& f = f_.ptr;
        return to_json(is_permutation(poly_of(f, coeffs), CheckOptions{cap, 1})).dump();
    });
    m.def("is_complete_permutation_json", [](const FieldHandle& f_, const std::vector<Code>& coeffs, std::uint64_t cap) {
        const FieldPtr& f = f_.ptr;
        auto [plain, plus_x] = is_complete_permutation(poly_of(f, coeffs), CheckOptions{cap, 1});
        return nlohmann::json::array({to_json(plain), to_json(plus_x)}).dump();
    });

    m.def("norm_lift_json", [](const FieldHandle& t_, const std::vector<Code>& h, std::uint64_t cap) {
        const FieldPtr& t = t_.ptr;
        return lift_json(norm_lift(poly_of(t->base(), h), t), cap);
    });
    m.def("monomial_json", [](const FieldHandle& t_, Code alpha, std::uint64_t s, std::uint64_t cap) {
        const FieldPtr& t = t_.ptr;
        return lift_json(monomial_cpp_check(alpha, s, t), cap);
    });
    m.def("cppeg_json", [](unsigned e, unsigned t, unsigned k, Code alpha, std::uint64_t cap) {
        return lift_json(cppeg_construct(e, t, k, alpha), cap);
    });
    m.def("trace_simple_json", [](const FieldHandle& t_, const std::vector<Code>& h, std::uint64_t cap) {
        const FieldPtr& t = t_.ptr;
        return lift_json(trace_lift_simple(poly_of(t->base(), h), t), cap);
    });
    m.def("trace_general_json",
          [](const FieldHandle& t_, const std::vector<Code>& h, const std::string& L, Code a, std::uint64_t cap) {
              const FieldPtr& t = t_.ptr;
              return lift_json(trace_lift_general(poly_of(t->base(), h), parse_ppoly(t, L), a, t), cap);
          });
    m.def("trace_binomial_json", [](const FieldHandle& t_, const std::vector<Code>& h, unsigned k, Code a, std::uint64_t cap) {
        const FieldPtr& t = t_.ptr;
        return lift_json(trace_lift_binomial(poly_of(t->base(), h), k, a, t), cap);
    });

    m.def("kernel_check_json", [](const FieldHandle& t_, unsigned k, Code c) {
        const FieldPtr& t = t_.ptr;
        auto j = to_json(binomial_kernel_criterion(k, c, t));
        j["exhaustive"] = ppoly_permutes_kernel(PPoly::frobenius_power(t, k), c);
        return j.dump();
    });

    m.def("search_json", [](const FieldHandle& f_, bool zero_fixed, std::uint64_t cap) {
        const FieldPtr& f = f_.ptr;
        std::vector<std::string> out;
        for (const auto& cm : enumerate_complete_mappings(f, zero_fixed, cap)) {
            out.push_back(to_json(cm).dump());
        }
        return out;
    });
    m.def("count_by_interpolation", [](const FieldHandle& f_, bool zero_fixed, std::uint64_t cap) {
        const FieldPtr& f = f_.ptr;
        return count_complete_mappings_by_interpolation(f, zero_fixed, cap);
    });
    m.def("to_h_form", [](const FieldHandle& f_, const std::vector<Code>& coeffs, unsigned n) {
        const FieldPtr& f = f_.ptr;
        return to_h_form(poly_of(f, coeffs), n).coeffs();
    });

    m.def("grid_names", &grid_names);
    m.def("run_grid_json", [](const std::string& name, std::uint64_t max_order, unsigned random_h, std::uint64_t seed,
                              bool agw) {
        GridOptions o;
        o.max_order = max_order;
        o.random_h = random_h;
        o.seed = seed;
        o.agw = agw;
        GridReport r;
        {
            py::gil_scoped_release release;
            r = run_grid(name, o);
        }
        return nlohmann::json{{"name", r.name},
                              {"total", r.total},
                              {"agreements", r.agreements},
                              {"skipped", r.skipped},
                              {"positive", r.positive},
                              {"agw_applicable", r.agw_applicable},
                              {"agw_agreements", r.agw_agreements},
                              {"counterexamples", r.counterexamples},
                              {"passed", r.passed()}}
            .dump();
    });
}
