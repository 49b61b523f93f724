"""Hypothesis strategies and small independent oracles shared by the tests."""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import sympy
from hypothesis import strategies as st

from cgarep.exact import ParamPoly

d_sym, p_sym = sympy.symbols("d p")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero_rationals = rationals.filter(lambda q: q != 0)


@st.composite
def polys(draw, max_deg: int = 2, max_terms: int = 4, laurent: bool = False):
    lo = -1 if laurent else 0
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        ed = draw(st.integers(0, max_deg))
        ep = draw(st.integers(lo, max_deg))
        terms[(ed, ep)] = str(draw(rationals))
    return ParamPoly(terms)


@st.composite
def matrices(draw, n: int, max_deg: int = 2):
    return [[draw(polys(max_deg=max_deg, max_terms=3)) for _ in range(n)] for _ in range(n)]


def to_sympy(f: ParamPoly):
    out = sympy.Integer(0)
    for (ed, ep), c in f.terms.items():
        out += sympy.Rational(int(c.numerator), int(c.denominator)) * d_sym ** ed * p_sym ** ep
    return sympy.expand(out)


def to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _perm_sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def leibniz_det(rows):
    """Determinant by the permutation expansion; fine for n <= 4."""
    n = len(rows)
    total = ParamPoly()
    for perm in permutations(range(n)):
        term = ParamPoly.const(_perm_sign(perm))
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + term
    return total


def cofactor_det(rows):
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return ParamPoly.const(1)
    if n == 1:
        return rows[0][0]
    total = ParamPoly()
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total
