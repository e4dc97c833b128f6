"""Complete permutation polynomials over finite field towers.

Elements are canonical integer codes and polynomials are coefficient lists,
lowest degree first.
"""

import json

from . import _core
from ._core import (
    CppforgeError,
    Field,
    count_by_interpolation,
    evaluate,
    grid_names,
    make_field,
    make_tower,
    parse_descriptor,
    rel_norm,
    rel_trace,
    to_h_form,
    trace_kernel,
)

DEFAULT_CAP = 1 << 16

__all__ = [
    "CppforgeError",
    "Field",
    "construct",
    "count_by_interpolation",
    "evaluate",
    "grid_names",
    "is_complete_permutation",
    "is_permutation",
    "kernel_check",
    "make_field",
    "make_tower",
    "parse_descriptor",
    "rel_norm",
    "rel_trace",
    "run_grid",
    "search",
    "to_h_form",
    "trace_kernel",
]


def is_permutation(field, coeffs, cap=DEFAULT_CAP):
    return json.loads(_core.is_permutation_json(field, list(coeffs), cap))


def is_complete_permutation(field, coeffs, cap=DEFAULT_CAP):
    plain, plus_x = json.loads(_core.is_complete_permutation_json(field, list(coeffs), cap))
    return plain, plus_x


def construct(kind, tower=None, *, h=None, L=None, k=None, a=None, alpha=None, s=None, e=None, t=None,
              cap=DEFAULT_CAP):
    """Run a lift construction and return its report with `verified_cpp` filled in."""
    if kind == "cppeg":
        text = _core.cppeg_json(e, t, k, alpha, cap)
    elif kind == "norm-lift":
        text = _core.norm_lift_json(tower, list(h), cap)
    elif kind == "monomial":
        text = _core.monomial_json(tower, alpha, s, cap)
    elif kind == "trace-simple":
        text = _core.trace_simple_json(tower, list(h), cap)
    elif kind == "trace-general":
        text = _core.trace_general_json(tower, list(h), L, a, cap)
    elif kind == "trace-binomial":
        text = _core.trace_binomial_json(tower, list(h), k, a, cap)
    else:
        raise ValueError(f"unknown construction {kind!r}")
    return json.loads(text)


def kernel_check(tower, k, c):
    return json.loads(_core.kernel_check_json(tower, k, c))


def search(field, zero_fixed=True, cap=11):
    return [json.loads(line) for line in _core.search_json(field, zero_fixed, cap)]


def run_grid(name, max_order=4096, random_h=100, seed=20240601, agw=False):
    return json.loads(_core.run_grid_json(name, max_order, random_h, seed, agw))
