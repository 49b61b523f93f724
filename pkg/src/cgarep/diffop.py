"""Polynomial-coefficient differential operators and the invariant PDE emitter.

A :class:`DiffOp` is a sum of terms ``c * x^a * d^b`` with coefficients to
the left of derivatives.  Terms are keyed by ``(a, b)``, two exponent tuples
over the operator's variable names, with ParamPoly values.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb, factorial, perm
from typing import Iterable, Sequence

from .exact import ONE, ZERO, P as P_SYMBOL, ParamPoly, Q
from .liealg import AlgebraConfig, ConfigError, Generator, bracket, raising
from .uea import UEAElement

Exps = tuple[int, ...]


class UnsupportedOperatorError(ValueError):
    pass


class FormatError(ValueError):
    pass


def _add(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Exps, b: Exps) -> Exps:
    return tuple(x - y for x, y in zip(a, b))


def _bounded(limits: Exps) -> Iterable[Exps]:
    """All exponent tuples j with 0 <= j <= limits componentwise."""
    if not limits:
        yield ()
        return
    for head in range(limits[0] + 1):
        for tail in _bounded(limits[1:]):
            yield (head,) + tail


class DiffOp:
    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms=None):
        self.names = tuple(names)
        nv = len(self.names)
        clean: dict[tuple[Exps, Exps], ParamPoly] = {}
        for (a, b), c in (terms or {}).items():
            a, b = tuple(a), tuple(b)
            if len(a) != nv or len(b) != nv or min(a + b, default=0) < 0:
                raise ValueError(f"bad exponent tuple {(a, b)} for variables {self.names}")
            c = ParamPoly.coerce(c)
            if c:
                clean[(a, b)] = clean.get((a, b), ZERO) + c
        self.terms = {k: c for k, c in clean.items() if c}

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, names: Sequence[str]) -> DiffOp:
        return cls(names)

    @classmethod
    def identity(cls, names: Sequence[str]) -> DiffOp:
        z = (0,) * len(names)
        return cls(names, {(z, z): ONE})

    @classmethod
    def derivative(cls, names: Sequence[str], i: int, order: int = 1) -> DiffOp:
        z = [0] * len(names)
        b = list(z)
        b[i] = order
        return cls(names, {(tuple(z), tuple(b)): ONE})

    @classmethod
    def multiplication(cls, names: Sequence[str], mono: Exps, coeff=ONE) -> DiffOp:
        return cls(names, {(tuple(mono), (0,) * len(names)): coeff})

    @classmethod
    def vector_field(cls, names: Sequence[str], coeffs: dict[Exps, object], i: int) -> DiffOp:
        """sum_a coeffs[a] * x^a * d/dx_i."""
        b = [0] * len(names)
        b[i] = 1
        return cls(names, {(tuple(a), tuple(b)): c for a, c in coeffs.items()})

    # -- algebra ------------------------------------------------------------
    def _check(self, other: DiffOp) -> None:
        if other.names != self.names:
            raise ValueError(f"variable mismatch {self.names} vs {other.names}")

    def __add__(self, other: DiffOp) -> DiffOp:
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return DiffOp(self.names, out)

    def __neg__(self) -> DiffOp:
        return DiffOp(self.names, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: DiffOp) -> DiffOp:
        return self + (-other)

    def scale(self, c) -> DiffOp:
        c = ParamPoly.coerce(c)
        return DiffOp(self.names, {k: v * c for k, v in self.terms.items()})

    def compose(self, other: DiffOp) -> DiffOp:
        """self o other, normal-formed with x^a d^b x^c = sum_j binom(b,j) c!/(c-j)! x^(a+c-j) d^(b-j)."""
        self._check(other)
        out: dict[tuple[Exps, Exps], ParamPoly] = {}
        for (a, b), c1 in self.terms.items():
            for (c, e), c2 in other.terms.items():
                lim = tuple(min(x, y) for x, y in zip(b, c))
                for j in _bounded(lim):
                    k = 1
                    for bi, ci, ji in zip(b, c, j):
                        k *= comb(bi, ji) * perm(ci, ji)
                    key = (_sub(_add(a, c), j), _add(_sub(b, j), e))
                    out[key] = out.get(key, ZERO) + c1 * c2 * k
        return DiffOp(self.names, out)

    __mul__ = compose

    def __pow__(self, k: int) -> DiffOp:
        if k < 0:
            raise ValueError("negative power")
        out = DiffOp.identity(self.names)
        for _ in range(k):
            out = out.compose(self)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, DiffOp) and self.names == other.names and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant_coefficient(self) -> bool:
        return all(not any(a) for a, _ in self.terms)

    def order(self) -> int:
        return max((sum(b) for _, b in self.terms), default=0)

    def subs(self, delta=None, p=None) -> DiffOp:
        return DiffOp(self.names, {k: c.subs(delta=delta, p=p) for k, c in self.terms.items()})

    def apply(self, f: dict[Exps, ParamPoly]) -> dict[Exps, ParamPoly]:
        """Act on a polynomial {exponents: coeff} by honest differentiation."""
        out: dict[Exps, ParamPoly] = {}
        for (a, b), c in self.terms.items():
            for e, fc in f.items():
                if any(ei < bi for ei, bi in zip(e, b)):
                    continue
                k = 1
                for ei, bi in zip(e, b):
                    k *= perm(ei, bi)
                key = _add(_sub(e, b), a)
                out[key] = out.get(key, ZERO) + c * fc * k
        return {k: v for k, v in out.items() if v}

    def sorted_terms(self) -> list[tuple[tuple[Exps, Exps], ParamPoly]]:
        def key(item):
            (a, b), _ = item
            return (sum(b), tuple(-x for x in b), sum(a), tuple(-x for x in a))
        return sorted(self.terms.items(), key=key)

    def __repr__(self) -> str:
        return f"DiffOp({render(self, 'text')})"

    def __str__(self) -> str:
        return render(self, "text")


def diffop_commutator(a: DiffOp, b: DiffOp) -> DiffOp:
    return a.compose(b) - b.compose(a)


# -- rendering ------------------------------------------------------------------

def _var_text(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def _text_term(names, a, b) -> str:
    parts = [_var_text(n, e) for n, e in zip(names, a) if e]
    parts += [_var_text(f"d_{n}", e) for n, e in zip(names, b) if e]
    return "*".join(parts)


def _latex_name(n: str) -> str:
    if "_" in n:
        head, tail = n.split("_", 1)
        return f"{head}_{tail}" if len(tail) == 1 else f"{head}_{{{tail}}}"
    return n


def _latex_term(names, a, b) -> str:
    parts = []
    for n, e in zip(names, a):
        if e:
            parts.append(_latex_name(n) if e == 1 else f"{_latex_name(n)}^{{{e}}}")
    for n, e in zip(names, b):
        if e:
            d = rf"\partial_{{{_latex_name(n)}}}"
            parts.append(d if e == 1 else f"{d}^{e}" if e < 10 else f"{d}^{{{e}}}")
    return " ".join(parts)


def _join(pieces: list[tuple[bool, str]]) -> str:
    out = ""
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def _coeff_piece(c: ParamPoly, body: str, fmt: str, mul: str) -> tuple[bool, str]:
    text = c.latex() if fmt == "latex" else str(c)
    if not body:
        if c.is_monomial():
            return (text.startswith("-"), text.lstrip("-"))
        return (False, f"({text})")
    if c.is_monomial():
        neg = c.leading_coefficient() < 0
        mag = -c if neg else c
        if mag == ONE:
            return (neg, body)
        return (neg, f"{mag.latex() if fmt == 'latex' else mag}{mul}{body}")
    return (False, f"({text}){mul}{body}")


def render(op: DiffOp, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(diffop_to_json(op), sort_keys=True)
    if fmt not in ("text", "latex"):
        raise FormatError(f"unknown format {fmt!r} (expected text, latex or json)")
    if not op.terms:
        return "0"
    pieces = []
    for (a, b), c in op.sorted_terms():
        if fmt == "latex":
            pieces.append(_coeff_piece(c, _latex_term(op.names, a, b), fmt, " "))
        else:
            pieces.append(_coeff_piece(c, _text_term(op.names, a, b), fmt, "*"))
    return _join(pieces)


def diffop_to_json(op: DiffOp) -> dict:
    return {
        "variables": list(op.names),
        "terms": [{"coeff": str(c), "mono": list(a), "deriv": list(b)} for (a, b), c in op.sorted_terms()],
    }


def diffop_from_json(obj) -> DiffOp:
    if isinstance(obj, str):
        obj = json.loads(obj)
    names = obj["variables"]
    terms = {}
    for t in obj["terms"]:
        terms[(tuple(t["mono"]), tuple(t["deriv"]))] = ParamPoly.parse(t["coeff"])
    return DiffOp(names, terms)


# -- right action on the raising subalgebra ---------------------------------

def right_variables(ell: int) -> tuple[str, ...]:
    return ("t",) + tuple(f"x_{i}" for i in range(ell))


def pi_R(cfg: AlgebraConfig, g: Generator) -> DiffOp:
    """P_n -> d/dx_n and H -> d/dt + sum_j j x_j d/dx_{j-1}."""
    ell = cfg.ell
    names = right_variables(ell)
    if g.kind == "P" and 0 <= g.index < ell:
        return DiffOp.derivative(names, 1 + g.index)
    if g.kind == "H":
        op = DiffOp.derivative(names, 0)
        for j in range(1, ell):
            mono = [0] * len(names)
            mono[1 + j] = 1
            op = op + DiffOp.vector_field(names, {tuple(mono): j}, j)
        return op
    raise ConfigError(f"{g} is not a raising generator of g_{ell}")


def pi_R_element(cfg: AlgebraConfig, x) -> DiffOp:
    names = right_variables(cfg.ell)
    if isinstance(x, Generator):
        return pi_R(cfg, x)
    out = DiffOp.zero(names)
    for g, c in x.terms.items():
        out = out + pi_R(cfg, g).scale(c)
    return out


def pi_R_homomorphism_check(cfg: AlgebraConfig) -> dict[tuple[Generator, Generator], bool]:
    gens = raising(cfg)
    report = {}
    for i, x in enumerate(gens):
        for y in gens[i + 1:]:
            lhs = diffop_commutator(pi_R(cfg, x), pi_R(cfg, y))
            report[(x, y)] = lhs == pi_R_element(cfg, bracket(cfg, x, y))
    return report


# -- PDE emission -------------------------------------------------------------

@dataclass(frozen=True)
class PDEHierarchy:
    family: str
    n: int
    k: int
    operator: DiffOp

    def rendered(self) -> dict[str, str]:
        return {"text": render(self.operator, "text"),
                "latex": render(self.operator, "latex"),
                "json": json.dumps(self.to_json(), sort_keys=True)}

    def to_json(self) -> dict:
        if not self.operator.is_constant_coefficient():
            raise UnsupportedOperatorError("hierarchy operators have constant coefficients")
        terms = []
        for (_, b), c in self.operator.sorted_terms():
            terms.append({"coeff": str(c), "dt": b[0], "dx": list(b[1:])})
        return {"schema_version": 1, "family": self.family, "n": self.n, "k": self.k, "terms": terms}

    @classmethod
    def from_json(cls, obj) -> PDEHierarchy:
        if isinstance(obj, str):
            obj = json.loads(obj)
        ell = len(obj["terms"][0]["dx"]) if obj["terms"] else 0
        names = right_variables(ell)
        terms = {}
        for t in obj["terms"]:
            b = (t["dt"],) + tuple(t["dx"])
            terms[((0,) * len(names), b)] = ParamPoly.parse(t["coeff"])
        return cls(obj["family"], obj["n"], obj["k"], DiffOp(names, terms))


def polynomial_to_diffop(cfg: AlgebraConfig, x: UEAElement) -> DiffOp:
    """Substitute P_n -> d/dx_n in a polynomial of the commuting raising P's."""
    ell = cfg.ell
    names = right_variables(ell)
    terms = {}
    zero = (0,) * len(names)
    for word, c in x.terms.items():
        b = [0] * len(names)
        for g in word:
            if g.kind != "P" or not 0 <= g.index < ell:
                raise UnsupportedOperatorError(
                    f"{g} has no constant-coefficient image; only P_0..P_{ell - 1} are supported")
            b[1 + g.index] += 1
        key = (zero, tuple(b))
        terms[key] = terms.get(key, ZERO) + c
    return DiffOp(names, terms)


def emit_pde(cfg: AlgebraConfig, x: UEAElement, k: int, family: str = "custom", n: int = 0) -> PDEHierarchy:
    if k < 1:
        raise ValueError("k must be >= 1")
    base = polynomial_to_diffop(cfg, x)
    return PDEHierarchy(family, n, k, base ** k)


def constant_ratio(a: DiffOp, b: DiffOp):
    """Rational r with a = r*b, or None when no such constant exists."""
    if a.names != b.names or set(a.terms) != set(b.terms):
        return None
    if not a.terms:
        return Q(1)
    ratio = None
    for key, ca in a.terms.items():
        cb = b.terms[key]
        # find r with ca = r*cb, r a rational number
        (mono, lead_b) = cb.leading_term()
        lead_a = ca.terms.get(mono)
        if lead_a is None:
            return None
        r = lead_a / lead_b
        if ca != cb * r:
            return None
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    return ratio


# -- displayed hierarchy equations, transcribed term by term ---------------

def _dx(ell: int, *indices: int) -> DiffOp:
    names = right_variables(ell)
    b = [0] * len(names)
    for i in indices:
        if not 0 <= i < ell:
            raise UnsupportedOperatorError(f"x_{i} is not a coordinate for ell={ell}")
        b[1 + i] += 1
    return DiffOp(names, {((0,) * len(names), tuple(b)): ONE})


def displayed_hierarchy(ell: int, family: str, n: int) -> DiffOp:
    """The k=1 displayed operators for n = 1, 2, written out at a given ell."""
    L = ell
    p = P_SYMBOL
    fr = lambda a, b: ParamPoly.const(Q(a) / Q(b))
    table = {
        ("S_even", 1): lambda: (_dx(L, L - 2).scale(p)
                                - _dx(L, L - 1, L - 1).scale(fr(L + 2, 2 * (L + 1)))),
        ("S_odd", 1): lambda: (_dx(L, L - 3).scale(p * p)
                               - _dx(L, L - 2, L - 1).scale(p * fr(L + 3, L + 1))
                               + _dx(L, L - 1, L - 1, L - 1).scale(fr((L + 2) * (L + 3), 3 * (L + 1) ** 2))),
        ("T", 1): lambda: (_dx(L, L - 1, L - 1, L - 1).scale(L + 2)
                           - _dx(L, L - 1, L - 2).scale(p * (3 * (L + 1)))
                           + _dx(L, L - 3).scale(p * p * fr(3 * (L + 1) ** 2, L + 3))),
        ("S_even", 2): lambda: (_dx(L, L - 4).scale(p)
                                - _dx(L, L - 3, L - 1).scale(fr(L + 4, L + 1))
                                + _dx(L, L - 2, L - 2).scale(fr((L + 3) * (L + 4), 2 * (L + 1) * (L + 2)))),
        # the last term is third order: d^2/dx_{l-2}^2 d/dx_{l-1}
        ("S_odd", 2): lambda: (_dx(L, L - 5).scale(p * p)
                               - _dx(L, L - 4, L - 1).scale(p * fr(L + 5, L + 1))
                               + _dx(L, L - 3, L - 2).scale(p * fr((L + 4) * (L + 5), 5 * (L + 1) * (L + 2)))
                               + _dx(L, L - 3, L - 1, L - 1).scale(fr(2 * (L + 4) * (L + 5), 5 * (L + 1) ** 2))
                               - _dx(L, L - 2, L - 2, L - 1).scale(
                                   fr((L + 3) * (L + 4) * (L + 5), 5 * (L + 1) ** 2 * (L + 2)))),
        ("T", 2): lambda: (_dx(L, *[L - 1] * 5).scale((L + 2) ** 2)
                           - _dx(L, L - 2, L - 1, L - 1, L - 1).scale(p * (5 * (L + 1) * (L + 2)))
                           + _dx(L, L - 1, L - 1, L - 3).scale(p * p * fr(3 * (L + 1) ** 2 * (L + 2), L + 3))
                           + _dx(L, L - 1, L - 2, L - 2).scale(p * p * (6 * (L + 1) ** 2))
                           - _dx(L, L - 2, L - 3).scale(p ** 3 * fr(6 * (L + 1) ** 3, L + 3))),
    }
    if (family, n) in table:
        return table[(family, n)]()
    if family == "P_top":
        return _dx(L, L - 1)
    if family in ("S_tilde", "P_S_tilde"):
        op = _dx(L, L - n, L - n)
        for j in range(1, n):
            c = Q((-1) ** (n + j) * 2 * factorial(L + n) ** 2) / (factorial(L + j) * factorial(L + 2 * n - j))
            op = op + _dx(L, L - 2 * n + j, L - j).scale(c)
        if family == "P_S_tilde":
            op = _dx(L, L - 1).compose(op)
        return op
    raise KeyError(f"no displayed equation for family {family!r}, n={n}")


INVARIANCE_NOTE = ("invariance is certified at the Lie algebra level: the source polynomial is "
                   "singular and pi_R is a homomorphism; the group action itself is not built")


def verify_prop6_prop7(cfg: AlgebraConfig, n_max: int = 2) -> list[dict]:
    """Emit k=1 operators and compare them with the displayed equations up to a constant."""
    from .singular import (P_NONZERO_FAMILIES, P_ZERO_FAMILIES, admissible_ns, construct_family,
                           verify_singular)
    from .verma import ModulePresentation

    ell = cfg.ell
    verma = ModulePresentation.verma(cfg)
    rows = []
    for family in P_NONZERO_FAMILIES + P_ZERO_FAMILIES:
        p_zero = family in P_ZERO_FAMILIES
        ns = [1] if family == "P_top" else admissible_ns(cfg, family, n_max)
        pres = verma.specialize(p=0) if p_zero else verma
        for n in ns:
            x = construct_family(cfg, family, n)
            emitted = emit_pde(cfg, x, 1, family, n).operator
            if p_zero:
                emitted = emitted.subs(p=0)
            shown = displayed_hierarchy(ell, family, n)
            ratio = constant_ratio(emitted, shown)
            sing = verify_singular(pres, x, 1)["ok"]
            rows.append({"ell": ell, "family": family, "n": n, "p_zero": p_zero,
                         "ratio": None if ratio is None else str(ratio),
                         "singular": sing, "ok": ratio is not None and sing,
                         "emitted": render(emitted, "text")})
    return rows
