"""Planar drawings of fixed-mobile bigraphs.

Instances, drawings and results are exchanged as JSON; the helpers below
accept dicts or JSON strings and return dicts.
"""

import json

from . import _fmbend
from ._fmbend import FmbendError, is_planar, oracle_is_planar

__all__ = [
    "FmbendError",
    "generate",
    "is_planar",
    "oracle_is_planar",
    "reduce_bpsewc",
    "reduce_sat",
    "render_svg",
    "solve_collinear",
    "solve_convex_hull",
    "solve_strip",
    "validate_drawing",
    "validate_instance",
]


def _text(value):
    return value if isinstance(value, str) else json.dumps(value)


def validate_instance(instance):
    return json.loads(_fmbend.validate_instance(_text(instance)))


def validate_drawing(instance, drawing, mode="generic", max_bends=None):
    return json.loads(_fmbend.validate_drawing(_text(instance), _text(drawing), mode, max_bends))


def solve_collinear(instance):
    return json.loads(_fmbend.solve_collinear(_text(instance)))


def solve_convex_hull(instance, cap=1_000_000):
    return json.loads(_fmbend.solve_convex_hull(_text(instance), cap))


def solve_strip(instance, h=None):
    return json.loads(_fmbend.solve_strip(_text(instance), h))


def reduce_bpsewc(bpsewc):
    return json.loads(_fmbend.reduce_bpsewc(_text(bpsewc)))


def reduce_sat(dimacs, cap=1_000_000):
    return json.loads(_fmbend.reduce_sat(dimacs, cap))


def generate(kind, seed=1, n_fixed=5, n_mobile=3, strips=2, max_degree=4):
    return json.loads(_fmbend.generate(kind, seed, n_fixed, n_mobile, strips, max_degree))


def render_svg(instance, drawing):
    return _fmbend.render_svg(_text(instance), _text(drawing))
