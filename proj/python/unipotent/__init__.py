"""Exact verification tools for 3-unipotent noncommutative algebras."""

import json
from fractions import Fraction

from . import _core
from ._core import InversionRequired, m_words, reduce

__all__ = [
    "InversionRequired",
    "acceptance",
    "derive",
    "m_words",
    "matrix",
    "quadratic_report",
    "reduce",
    "ring_report",
    "spanning_report",
    "variety_report",
]


def derive(ring="z16"):
    return json.loads(_core.derive_json(ring))


def ring_report():
    return json.loads(_core.ring_report_json())


def matrix(which):
    """Printed matrix of U ('a') or V ('b') as nested lists of Fractions."""
    return [[Fraction(x) for x in row] for row in _core.matrix_entries(which)]


def quadratic_report(d, max_d=8):
    return json.loads(_core.quadratic_report_json(d, max_d))


def variety_report(n=(-6, 6), m=(-6, 6), word_length=6):
    return json.loads(_core.variety_json(n[0], n[1], m[0], m[1], word_length))


def spanning_report(kind, d):
    fn = {"em": _core.spanning_em_json, "bound": _core.spanning_bound_json, "pw": _core.spanning_pw_json}[kind]
    return json.loads(fn(d))


def acceptance(only=()):
    return json.loads(_core.acceptance_json(list(only)))
