"""Exact coefficient arithmetic: rationals, polynomials in the weight
parameters ``d`` (delta) and ``p``, and fraction-free linear algebra.

Coefficients live in Q[d, p, 1/p]: the exponent of ``p`` may be negative.
This keeps the relations of quotient modules (which divide by powers of
``p``) inside a ring where every operation we need is exact.  Determinants
and null spaces are computed on matrices that have first been scaled into
the honest polynomial ring Q[d, p].
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from typing import Union

import gmpy2

Rational = type(gmpy2.mpq())

Number = Union[int, "Rational", str]
Monomial = tuple[int, int]  # (exponent of d, exponent of p)


def Q(x) -> Rational:
    """Coerce ints, strings like ``"-3/2"`` and fractions to a rational."""
    if isinstance(x, Rational):
        return x
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return gmpy2.mpq(int(x.numerator), int(x.denominator))
    return gmpy2.mpq(x)


class DimensionError(ValueError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


def _grlex_key(mono: Monomial) -> tuple[int, int]:
    return (mono[0] + mono[1], mono[0])


class ParamPoly:
    """Polynomial in ``d`` and ``p`` (Laurent in ``p``) with rational coefficients.

    Immutable.  Zero coefficients are never stored, so structural equality
    of the term dictionaries is polynomial equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        clean: dict[Monomial, Rational] = {}
        if terms:
            for mono, c in terms.items():
                c = Q(c)
                if c:
                    clean[(int(mono[0]), int(mono[1]))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Rational]) -> ParamPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, c: Number) -> ParamPoly:
        return cls({(0, 0): c})

    @classmethod
    def delta(cls) -> ParamPoly:
        return cls({(1, 0): 1})

    @classmethod
    def p(cls) -> ParamPoly:
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, c: Number, e_delta: int = 0, e_p: int = 0) -> ParamPoly:
        return cls({(e_delta, e_p): c})

    @classmethod
    def coerce(cls, x) -> ParamPoly:
        if isinstance(x, ParamPoly):
            return x
        return cls.const(x)

    # -- basic protocol ---------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Rational]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, ParamPoly):
            return self._terms == other._terms
        try:
            return self._terms == ParamPoly.const(other)._terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"ParamPoly({str(self)!r})"

    # -- ring operations ------------------------------------------------
    def __add__(self, other) -> ParamPoly:
        other = ParamPoly.coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono)
            if s is None:
                out[mono] = c
            else:
                s = s + c
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return ParamPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> ParamPoly:
        return ParamPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> ParamPoly:
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other) -> ParamPoly:
        return ParamPoly.coerce(other) + (-self)

    def __mul__(self, other) -> ParamPoly:
        if not isinstance(other, ParamPoly):
            c = Q(other)
            if not c:
                return ZERO
            if c == 1:
                return self
            return ParamPoly._raw({m: v * c for m, v in self._terms.items()})
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out: dict[Monomial, Rational] = {}
        for (ad, ap), ac in b.items():
            for (bd, bp), bc in a.items():
                mono = (ad + bd, ap + bp)
                v = out.get(mono)
                out[mono] = ac * bc if v is None else v + ac * bc
        return ParamPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> ParamPoly:
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift_p")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other) -> ParamPoly:
        if not isinstance(other, ParamPoly):
            c = Q(other)
            if not c:
                raise ZeroDivisionError("division by zero")
            return ParamPoly._raw({m: v / c for m, v in self._terms.items()})
        return self.exact_div(other)

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_value(self) -> Rational:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((0, 0), gmpy2.mpq(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        """True when no negative power of ``p`` occurs."""
        return all(mono[1] >= 0 for mono in self._terms)

    def monomials(self) -> list[Monomial]:
        """Monomials in descending graded-lex order (d > p)."""
        return sorted(self._terms, key=_grlex_key, reverse=True)

    def leading_term(self) -> tuple[Monomial, Rational]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms, key=_grlex_key)
        return mono, self._terms[mono]

    def leading_coefficient(self) -> Rational:
        return self.leading_term()[1]

    def degree(self) -> int:
        return max((a + b for a, b in self._terms), default=-1)

    def min_p_exponent(self) -> int:
        return min((b for _, b in self._terms), default=0)

    def min_d_exponent(self) -> int:
        return min((a for a, _ in self._terms), default=0)

    def content(self) -> Rational:
        """Positive rational gcd of the coefficients (0 for the zero poly)."""
        num = 0
        den = 1
        for c in self._terms.values():
            num = gmpy2.gcd(num, c.numerator)
            den = gmpy2.lcm(den, c.denominator)
        return gmpy2.mpq(num, den) if num else gmpy2.mpq(0)

    def primitive_part(self) -> ParamPoly:
        c = self.content()
        return self / c if c else self

    # -- transformations --------------------------------------------------
    def shift_p(self, k: int) -> ParamPoly:
        """Multiply by ``p**k`` (``k`` may be negative)."""
        if not k:
            return self
        return ParamPoly._raw({(a, b + k): c for (a, b), c in self._terms.items()})

    def shift(self, kd: int, kp: int) -> ParamPoly:
        return ParamPoly._raw({(a + kd, b + kp): c for (a, b), c in self._terms.items()})

    def subs(self, delta=None, p=None) -> ParamPoly:
        """Substitute ParamPolys or rationals for ``d`` and/or ``p``."""
        if delta is None and p is None:
            return self
        dval = ParamPoly.coerce(delta) if delta is not None else None
        pval = ParamPoly.coerce(p) if p is not None else None
        out = ZERO
        dpow: dict[int, ParamPoly] = {}
        ppow: dict[int, ParamPoly] = {}
        for (a, b), c in self._terms.items():
            term = ParamPoly.const(c)
            if dval is not None:
                if a not in dpow:
                    dpow[a] = dval ** a
                term = term * dpow[a]
            else:
                term = term.shift(a, 0)
            if pval is not None:
                if b not in ppow:
                    if b >= 0:
                        ppow[b] = pval ** b
                    elif pval.is_monomial():
                        ppow[b] = _monomial_inverse(pval) ** (-b)
                    else:
                        raise ZeroDivisionError(f"cannot invert {pval} for p^{b}")
                term = term * ppow[b]
            else:
                term = term.shift(0, b)
            out = out + term
        return out

    def evaluate(self, delta: Number, p: Number) -> Rational:
        return self.subs(delta=Q(delta), p=Q(p)).constant_value()

    def exact_div(self, other: ParamPoly) -> ParamPoly:
        """Exact quotient in Q[d, p, 1/p]; raises NotDivisibleError otherwise."""
        other = ParamPoly.coerce(other)
        if not other._terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._terms:
            return ZERO
        if other.is_monomial():
            (a, b), c = next(iter(other.items()))
            if a and self.min_d_exponent() < a:
                raise NotDivisibleError(f"{self} is not divisible by {other}")
            return ParamPoly._raw({(x - a, y - b): v / c for (x, y), v in self._terms.items()})
        # shift both into Q[d, p] and run the division algorithm
        sa = -min(self.min_p_exponent(), 0)
        sb = -min(other.min_p_exponent(), 0)
        num = self.shift_p(sa)
        den = other.shift_p(sb)
        quotient = _poly_divide_exact(num, den)
        return quotient.shift_p(sb - sa)

    # -- output ---------------------------------------------------------------
    def __str__(self) -> str:
        return self.format()

    def format(self, d_name: str = "d", p_name: str = "p", mul: str = "*") -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, mono in enumerate(self.monomials()):
            c = self._terms[mono]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            factors = []
            if mono[0]:
                factors.append(d_name if mono[0] == 1 else f"{d_name}^{mono[0]}")
            if mono[1]:
                factors.append(p_name if mono[1] == 1 else f"{p_name}^{mono[1]}")
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = mul.join(factors)
            else:
                body = mul.join([str(mag)] + factors)
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, mono in enumerate(self.monomials()):
            c = self._terms[mono]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            factors = []
            if mono[0]:
                factors.append(r"\delta" if mono[0] == 1 else rf"\delta^{{{mono[0]}}}")
            if mono[1]:
                factors.append("p" if mono[1] == 1 else f"p^{{{mono[1]}}}")
            if mag.denominator != 1:
                num = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            else:
                num = str(mag.numerator)
            if not factors:
                body = num
            elif mag == 1:
                body = " ".join(factors)
            else:
                body = " ".join([num] + factors)
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    @classmethod
    def parse(cls, text: str) -> ParamPoly:
        """Inverse of ``str``: parses e.g. ``"3*d^2*p - 1/2*p^3"``."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial string")
        tokens = re.split(r"\s+([+-])\s+", s)
        chunks = [tokens[0]]
        signs = ["+"]
        for i in range(1, len(tokens), 2):
            signs.append(tokens[i])
            chunks.append(tokens[i + 1])
        out = ZERO
        for sign, chunk in zip(signs, chunks):
            chunk = chunk.strip()
            neg = sign == "-"
            if chunk.startswith("-"):
                neg = not neg
                chunk = chunk[1:]
            coeff = gmpy2.mpq(1)
            e = [0, 0]
            for factor in chunk.split("*"):
                factor = factor.strip()
                m = re.fullmatch(r"([dp])(?:\^(-?\d+))?", factor)
                if m:
                    e["dp".index(m.group(1))] += int(m.group(2) or 1)
                elif re.fullmatch(r"\d+(?:/\d+)?", factor):
                    coeff *= gmpy2.mpq(factor)
                else:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            out = out + ParamPoly.monomial(-coeff if neg else coeff, e[0], e[1])
        return out


ZERO = ParamPoly._raw({})
ONE = ParamPoly._raw({(0, 0): gmpy2.mpq(1)})
DELTA = ParamPoly.delta()
P = ParamPoly.p()


def _monomial_inverse(m: ParamPoly) -> ParamPoly:
    (a, b), c = next(iter(m.items()))
    if a:
        raise NotDivisibleError(f"{m} is not invertible in Q[d, p, 1/p]")
    return ParamPoly._raw({(0, -b): 1 / c})


def _poly_divide_exact(num: ParamPoly, den: ParamPoly) -> ParamPoly:
    (lda, ldb), ldc = den.leading_term()
    rem = dict(num._terms)
    quot: dict[Monomial, Rational] = {}
    den_items = list(den._terms.items())
    while rem:
        mono = max(rem, key=_grlex_key)
        c = rem[mono]
        qa, qb = mono[0] - lda, mono[1] - ldb
        if qa < 0 or qb < 0:
            raise NotDivisibleError(f"{num} is not divisible by {den}")
        qc = c / ldc
        quot[(qa, qb)] = qc
        for (a, b), dc in den_items:
            key = (a + qa, b + qb)
            v = rem.get(key, 0) - qc * dc
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return ParamPoly._raw(quot)


# -- gcd ---------------------------------------------------------------------

def _to_sympy(f: ParamPoly):
    import sympy

    d, p = sympy.symbols("d p")
    return sympy.Poly.from_dict(
        {mono: sympy.Rational(int(c.numerator), int(c.denominator)) for mono, c in f.items()},
        d, p, domain="QQ",
    )


def _from_sympy(poly) -> ParamPoly:
    return ParamPoly({mono: Q(c) for mono, c in poly.as_dict().items()})


def poly_gcd(polys: Iterable[ParamPoly]) -> ParamPoly:
    """Monic-content gcd in Q[d, p] of polynomials (Laurent parts ignored).

    Result is primitive with positive leading coefficient; the gcd of an
    empty or all-zero family is 0.
    """
    nonzero = [f for f in polys if f]
    if not nonzero:
        return ZERO
    low = min(0, min(f.min_p_exponent() for f in nonzero))
    shifted = [f.shift_p(-low) for f in nonzero]
    if any(f.is_constant() for f in shifted):
        return ONE
    # cheap monomial gcd first; full gcd only if something is left
    md = min(f.min_d_exponent() for f in shifted)
    mp = min(f.min_p_exponent() for f in shifted)
    reduced = [f.shift(-md, -mp) for f in shifted]
    if any(f.is_monomial() for f in reduced):
        g = ONE
    else:
        g = _to_sympy(reduced[0])
        for f in reduced[1:]:
            g = g.gcd(_to_sympy(f))
            if g.total_degree() == 0:
                break
        g = _from_sympy(g)
        if g.is_constant():
            g = ONE
    g = g.shift(md, mp).primitive_part()
    if g.leading_coefficient() < 0:
        g = -g
    return g


def normalize_vector(vec: Sequence[ParamPoly]) -> list[ParamPoly]:
    """Scale a nonzero vector to the canonical representative of its line.

    Entries become polynomials (no 1/p) with no common polynomial factor and
    rational content 1; the first nonzero entry has a positive leading
    coefficient under graded-lex with d > p.
    """
    vec = [ParamPoly.coerce(v) for v in vec]
    nonzero = [v for v in vec if v]
    if not nonzero:
        raise ValueError("cannot normalize the zero vector")
    shift = -min(v.min_p_exponent() for v in nonzero)
    vec = [v.shift_p(shift) for v in vec]
    g = poly_gcd(vec)
    vec = [v.exact_div(g) for v in vec]
    num = 0
    den = 1
    for v in vec:
        for c in v._terms.values():
            num = gmpy2.gcd(num, c.numerator)
            den = gmpy2.lcm(den, c.denominator)
    scale = gmpy2.mpq(den, num)
    first = next(v for v in vec if v)
    if first.leading_coefficient() < 0:
        scale = -scale
    return [v * scale for v in vec]


# -- matrices ----------------------------------------------------------------

class PolyMatrix:
    """Dense rectangular matrix of ParamPolys."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        rows = [[ParamPoly.coerce(x) for x in row] for row in entries]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self._entries = rows

    @classmethod
    def zeros(cls, rows: int, cols: int) -> PolyMatrix:
        return cls([[ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> PolyMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, ij: tuple[int, int]) -> ParamPoly:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry {ij} out of range for {self.rows}x{self.cols}")
        return self._entries[i][j]

    def row(self, i: int) -> list[ParamPoly]:
        return list(self._entries[i])

    def to_lists(self) -> list[list[ParamPoly]]:
        return [list(r) for r in self._entries]

    def transpose(self) -> PolyMatrix:
        return PolyMatrix([[self._entries[i][j] for i in range(self.rows)]
                           for j in range(self.cols)], cols=self.rows)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PolyMatrix) and self.rows == other.rows
                and self.cols == other.cols and self._entries == other._entries)

    def __repr__(self) -> str:
        return f"PolyMatrix({[[str(x) for x in r] for r in self._entries]})"

    def apply(self, vec: Sequence[ParamPoly]) -> list[ParamPoly]:
        if len(vec) != self.cols:
            raise DimensionError("vector length does not match column count")
        out = []
        for r in self._entries:
            acc = ZERO
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def subs(self, delta=None, p=None) -> PolyMatrix:
        return PolyMatrix([[x.subs(delta=delta, p=p) for x in r] for r in self._entries],
                          cols=self.cols)


def _cost(x: ParamPoly) -> tuple[int, int]:
    return (len(x._terms), x.degree())


def _clear_p_denominators(rows: list[list[ParamPoly]]) -> tuple[list[list[ParamPoly]], int]:
    """Scale each row by a power of p so every entry is a polynomial.

    Returns the new rows and the total power of p that was multiplied in.
    """
    total = 0
    out = []
    for r in rows:
        s = -min((x.min_p_exponent() for x in r if x), default=0)
        s = max(s, 0)
        total += s
        out.append([x.shift_p(s) for x in r] if s else list(r))
    return out, total


def poly_det(m: PolyMatrix) -> ParamPoly:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return ONE
    a, shift = _clear_p_denominators(m.to_lists())
    sign = 1
    prev = ONE
    for k in range(n - 1):
        candidates = [i for i in range(k, n) if a[i][k]]
        if not candidates:
            return ZERO
        piv = min(candidates, key=lambda i: _cost(a[i][k]))
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                v = pk * rowi[j]
                if aik and rowk[j]:
                    v = v - aik * rowk[j]
                rowi[j] = v.exact_div(prev) if v else ZERO
            rowi[k] = ZERO
        prev = pk
    det = a[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det.shift_p(-shift)


def fraction_free_rref(m: PolyMatrix) -> tuple[list[list[ParamPoly]], list[tuple[int, int]], ParamPoly]:
    """Fraction-free Gauss-Jordan reduction with full pivoting.

    Returns ``(rows, pivots, den)`` where ``pivots`` lists ``(row, col)``
    positions.  Every pivot entry equals ``den``, all other entries of a
    pivot column vanish, and rows past ``len(pivots)`` are zero.  All
    entries stay in Q[d, p] because every division is exact.
    """
    a, _ = _clear_p_denominators(m.to_lists())
    nrows, ncols = m.rows, m.cols
    pivots: list[tuple[int, int]] = []
    used_cols: set[int] = set()
    den = ONE
    r = 0
    while r < nrows:
        best = None
        best_cost = None
        for i in range(r, nrows):
            for j, x in enumerate(a[i]):
                if x and j not in used_cols:
                    c = _cost(x)
                    if best_cost is None or c < best_cost:
                        best, best_cost = (i, j), c
                        if c == (1, 0):
                            break
            if best_cost == (1, 0):
                break
        if best is None:
            break
        i, j = best
        a[r], a[i] = a[i], a[r]
        pv = a[r][j]
        prow = a[r]
        for k in range(nrows):
            if k == r:
                continue
            row = a[k]
            mkj = row[j]
            new = []
            for l in range(ncols):
                v = pv * row[l]
                if mkj and prow[l]:
                    v = v - mkj * prow[l]
                new.append(v.exact_div(den) if (v and den != ONE) else v)
            a[k] = new
        den = pv
        pivots.append((r, j))
        used_cols.add(j)
        r += 1
    return a, pivots, den


def poly_nullspace(m: PolyMatrix) -> list[list[ParamPoly]]:
    """Basis of the right kernel over the fraction field Q(d, p).

    The basis is put in a canonical form: reduced echelon with respect to
    the natural column order, each vector scaled by ``normalize_vector``.
    """
    if m.cols == 0:
        return []
    rows, pivots, den = fraction_free_rref(m)
    pivot_cols = {j: i for i, j in pivots}
    kernel = []
    for f in range(m.cols):
        if f in pivot_cols:
            continue
        vec = [ZERO] * m.cols
        vec[f] = den
        for i, j in pivots:
            vec[j] = -rows[i][f]
        kernel.append(vec)
    return canonical_span_basis(kernel)


def canonical_span_basis(vectors: Sequence[Sequence[ParamPoly]]) -> list[list[ParamPoly]]:
    """Canonical basis for the span of ``vectors`` over Q(d, p).

    Reduced echelon form with pivots taken in natural column order, so two
    spanning sets of the same space give identical output.
    """
    vectors = [list(v) for v in vectors if any(v)]
    if not vectors:
        return []
    ncols = len(vectors[0])
    a = [[ParamPoly.coerce(x) for x in v] for v in vectors]
    a, _ = _clear_p_denominators(a)
    nrows = len(a)
    den = ONE
    r = 0
    pivots = []
    for j in range(ncols):
        if r >= nrows:
            break
        cands = [i for i in range(r, nrows) if a[i][j]]
        if not cands:
            continue
        i = min(cands, key=lambda i: _cost(a[i][j]))
        a[r], a[i] = a[i], a[r]
        pv = a[r][j]
        prow = a[r]
        for k in range(nrows):
            if k == r:
                continue
            row = a[k]
            mkj = row[j]
            new = []
            for l in range(ncols):
                v = pv * row[l]
                if mkj and prow[l]:
                    v = v - mkj * prow[l]
                new.append(v.exact_div(den) if (v and den != ONE) else v)
            a[k] = new
        den = pv
        pivots.append(j)
        r += 1
    return [normalize_vector(a[i]) for i in range(r)]


def in_span(vec: Sequence[ParamPoly], basis: Sequence[Sequence[ParamPoly]]) -> bool:
    """Whether ``vec`` lies in the Q(d, p)-span of ``basis``."""
    if not any(vec):
        return True
    if not basis:
        return False
    rank_before = len(canonical_span_basis(basis))
    rank_after = len(canonical_span_basis(list(basis) + [list(vec)]))
    return rank_after == rank_before


def proportional(u: Sequence[ParamPoly], v: Sequence[ParamPoly]) -> bool:
    """Whether two vectors span the same line (both must be nonzero)."""
    if len(u) != len(v) or not any(u) or not any(v):
        return False
    return normalize_vector(u) == normalize_vector(v)
