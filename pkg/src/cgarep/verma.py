"""Lowest weight modules of g_ell: the Verma module and its quotients.

A vector is stored on the basis

    |k, m> = H^k P_{ell-1}^{m_1} P_{ell-2}^{m_2} ... P_0^{m_ell} |u0>

with ``m = (m_1, ..., m_ell)``.  A :class:`ModulePresentation` records the
extra relations satisfied by ``|u0>`` in a quotient module:

* ``relations``: ``P_{ell-a} |u0> = c_a P_{ell-1}^a |u0>``,
* ``annihilated``: raising ``P_n`` with ``P_n |u0> = 0``,
* ``h_power``: ``H^K |u0> = 0``.  ``K = 1`` makes ``H`` act by its
  commutator on the P-monomials; ``K >= 2`` is only allowed once every
  raising P annihilates ``|u0>`` (the sl(2) endgame).

Because the P's commute, a relation on ``|u0>`` rewrites any monomial
containing the constrained generator, so every presentation has a basis of
labels that simply omit the constrained exponents.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, perm
from typing import Iterator

from .exact import DELTA, ONE, P as P_SYMBOL, ZERO, ParamPoly
from .liealg import AlgebraConfig, Generator, LieElement, P, degree
from .uea import UEAElement


class StructuralError(ValueError):
    pass


@dataclass(frozen=True)
class Weight:
    delta: ParamPoly = DELTA
    p: ParamPoly = P_SYMBOL

    def __post_init__(self):
        object.__setattr__(self, "delta", ParamPoly.coerce(self.delta))
        object.__setattr__(self, "p", ParamPoly.coerce(self.p))

    @classmethod
    def symbolic(cls) -> Weight:
        return cls(DELTA, P_SYMBOL)

    @property
    def p_is_zero(self) -> bool:
        return self.p.is_zero()

    def __str__(self) -> str:
        return f"(delta={self.delta}, p={self.p})"


@dataclass(frozen=True, order=True)
class BasisLabel:
    k: int
    m: tuple[int, ...]

    @property
    def level(self) -> int:
        return self.k + sum((i + 1) * e for i, e in enumerate(self.m))

    @property
    def ell(self) -> int:
        return len(self.m)

    def word(self) -> tuple[Generator, ...]:
        ell = len(self.m)
        out = [Generator("H")] * self.k
        for i, e in enumerate(self.m, start=1):
            out.extend([P(ell - i)] * e)
        return tuple(out)

    def __str__(self) -> str:
        ell = len(self.m)
        parts = []
        if self.k:
            parts.append("H" if self.k == 1 else f"H^{self.k}")
        for i, e in enumerate(self.m, start=1):
            if e:
                parts.append(f"P{ell - i}" if e == 1 else f"P{ell - i}^{e}")
        return "*".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {"k": self.k, "m": list(self.m)}

    @classmethod
    def from_json(cls, obj: dict) -> BasisLabel:
        return cls(int(obj["k"]), tuple(int(x) for x in obj["m"]))


@dataclass(frozen=True)
class ModulePresentation:
    cfg: AlgebraConfig
    weight: Weight = field(default_factory=Weight.symbolic)
    relations: tuple[tuple[int, ParamPoly], ...] = ()
    annihilated: frozenset[int] = frozenset()
    h_power: int | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        ell = self.cfg.ell
        rel_idx = [a for a, _ in self.relations]
        if len(set(rel_idx)) != len(rel_idx):
            raise StructuralError("duplicate relation")
        for a, c in self.relations:
            if not 2 <= a <= ell:
                raise StructuralError(f"relation index a={a} outside 2..{ell}")
            if not isinstance(c, ParamPoly):
                raise StructuralError("relation coefficients must be ParamPolys")
        for n in self.annihilated:
            if not 0 <= n < ell:
                raise StructuralError(f"only raising P's can annihilate u0, got P{n}")
            if ell - n in rel_idx:
                raise StructuralError(f"P{n} is both rewritten and annihilated")
        if rel_idx and (ell - 1) in self.annihilated:
            raise StructuralError(f"relations need P{ell - 1} to act freely")
        if self.h_power is not None:
            if self.h_power < 1:
                raise StructuralError("h_power must be >= 1")
            if self.h_power >= 2 and set(self.annihilated) != set(range(ell)):
                raise StructuralError("H^K truncation with K >= 2 needs every raising P to annihilate u0")

    @classmethod
    def verma(cls, cfg: AlgebraConfig, weight: Weight | None = None) -> ModulePresentation:
        return cls(cfg, weight or Weight.symbolic())

    @property
    def ell(self) -> int:
        return self.cfg.ell

    @property
    def is_verma(self) -> bool:
        return not self.relations and not self.annihilated and self.h_power is None

    def relation_map(self) -> dict[int, ParamPoly]:
        """m-index (= a) -> coefficient of the rewrite rule."""
        return dict(self.relations)

    def free_indices(self) -> list[int]:
        """m-indices i whose generator P_{ell-i} survives in the basis."""
        rel = self.relation_map()
        return [i for i in range(1, self.ell + 1)
                if i not in rel and (self.ell - i) not in self.annihilated]

    def with_relation(self, a: int, coeff: ParamPoly) -> ModulePresentation:
        return ModulePresentation(self.cfg, self.weight, self.relations + ((a, coeff),),
                                  self.annihilated, self.h_power)

    def with_annihilated(self, n: int) -> ModulePresentation:
        return ModulePresentation(self.cfg, self.weight, self.relations,
                                  self.annihilated | {n}, self.h_power)

    def with_h_power(self, k: int) -> ModulePresentation:
        return ModulePresentation(self.cfg, self.weight, self.relations, self.annihilated, k)

    def specialize(self, delta=None, p=None) -> ModulePresentation:
        w = Weight(self.weight.delta.subs(delta=delta, p=p), self.weight.p.subs(delta=delta, p=p))
        rels = tuple((a, c.subs(delta=delta, p=p)) for a, c in self.relations)
        return ModulePresentation(self.cfg, w, rels, self.annihilated, self.h_power)

    def vacuum_label(self) -> BasisLabel:
        return BasisLabel(0, (0,) * self.ell)

    def vacuum(self) -> VermaVector:
        return VermaVector(self, {self.vacuum_label(): ONE})

    def describe(self) -> list[str]:
        ell = self.ell
        out = []
        for a, c in self.relations:
            out.append(f"P{ell - a}|u0> = ({c})*P{ell - 1}^{a}|u0>")
        for n in sorted(self.annihilated, reverse=True):
            out.append(f"P{n}|u0> = 0")
        if self.h_power is not None:
            out.append("H|u0> = 0" if self.h_power == 1 else f"H^{self.h_power}|u0> = 0")
        return out

    def basis_shape(self) -> str:
        ell = self.ell
        parts = []
        if self.h_power != 1:
            parts.append("H^k")
        free = self.free_indices()
        if len(free) == 1:
            parts.append(f"P{ell - free[0]}^m")
        else:
            for i in free:
                parts.append(f"P{ell - i}^m{i}")
        if self.h_power and self.h_power >= 2:
            return f"H^k (k < {self.h_power})"
        return " ".join(parts) if parts else "1"

    def finite_dimension(self) -> int | None:
        """Dimension when the presentation describes a finite module."""
        if self.free_indices():
            return None
        if self.h_power is None:
            return None
        return self.h_power

    # -- reduction of monomials ---------------------------------------------
    def reduce(self, k: int, m: list[int] | tuple[int, ...], coeff: ParamPoly) -> tuple[BasisLabel, ParamPoly] | None:
        """Bring ``H^k P^m |u0>`` (m possibly using constrained P's) to a basis label."""
        if self.h_power is not None and k >= self.h_power:
            return None
        ell = self.ell
        m = list(m)
        for n in self.annihilated:
            if m[ell - n - 1]:
                return None
        for a, c in self.relations:
            e = m[a - 1]
            if e:
                m[a - 1] = 0
                m[0] += a * e
                coeff = coeff * (c ** e)
        return BasisLabel(k, tuple(m)), coeff


class VermaVector:
    """Finite linear combination of basis labels of a presentation."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: ModulePresentation, terms=None):
        self.pres = pres
        self.terms: dict[BasisLabel, ParamPoly] = {
            lab: ParamPoly.coerce(c) for lab, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, pres: ModulePresentation) -> VermaVector:
        return cls(pres)

    def __add__(self, other: VermaVector) -> VermaVector:
        out = dict(self.terms)
        for lab, c in other.terms.items():
            out[lab] = out.get(lab, ZERO) + c
        return VermaVector(self.pres, out)

    def __neg__(self) -> VermaVector:
        return VermaVector(self.pres, {l: -c for l, c in self.terms.items()})

    def __sub__(self, other: VermaVector) -> VermaVector:
        return self + (-other)

    def scale(self, c) -> VermaVector:
        c = ParamPoly.coerce(c)
        return VermaVector(self.pres, {l: v * c for l, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, VermaVector) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def levels(self) -> set[int]:
        return {lab.level for lab in self.terms}

    def level(self) -> int:
        lv = self.levels()
        if len(lv) != 1:
            raise StructuralError(f"vector is not homogeneous (levels {sorted(lv)})")
        return lv.pop()

    def coefficient(self, label: BasisLabel) -> ParamPoly:
        return self.terms.get(label, ZERO)

    def sorted_items(self) -> list[tuple[BasisLabel, ParamPoly]]:
        return sorted(self.terms.items(), key=lambda lc: lc[0], reverse=True)

    def coordinates(self, basis: list[BasisLabel]) -> list[ParamPoly]:
        extra = set(self.terms) - set(basis)
        if extra:
            raise StructuralError(f"labels {sorted(map(str, extra))} not in the given basis")
        return [self.terms.get(b, ZERO) for b in basis]

    def subs(self, delta=None, p=None) -> VermaVector:
        return VermaVector(self.pres, {l: c.subs(delta=delta, p=p) for l, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"VermaVector({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for i, (lab, c) in enumerate(self.sorted_items()):
            body = str(lab)
            if body == "1":
                term = str(c) if c.is_monomial() else f"({c})"
            elif c == ONE:
                term = body
            elif c == -ONE:
                term = "-" + body
            elif c.is_monomial():
                term = f"{c}*{body}"
            else:
                term = f"({c})*{body}"
            if i == 0:
                out = term
            elif term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def to_json(self) -> list[dict]:
        return [{"label": lab.to_json(), "coeff": str(c)} for lab, c in self.sorted_items()]


# -- bases ---------------------------------------------------------------------

def _compositions(weights: list[int], total: int) -> Iterator[dict[int, int]]:
    if not weights:
        if total == 0:
            yield {}
        return
    w, rest = weights[0], weights[1:]
    for e in range(total // w + 1):
        for tail in _compositions(rest, total - e * w):
            out = dict(tail)
            out[w] = e
            yield out


def level_basis(pres: ModulePresentation, N: int) -> list[BasisLabel]:
    """Basis labels at level N, ordered descending by (k, m)."""
    if N < 0:
        return []
    key = ("basis", N)
    cached = pres._cache.get(key)
    if cached is not None:
        return list(cached)
    ell = pres.ell
    free = pres.free_indices()
    if pres.h_power == 1:
        k_range = [0]
    elif pres.h_power is not None:
        k_range = range(min(N, pres.h_power - 1) + 1)
    else:
        k_range = range(N + 1)
    labels = []
    for k in k_range:
        for comp in _compositions(free, N - k):
            m = [0] * ell
            for i, e in comp.items():
                m[i - 1] = e
            labels.append(BasisLabel(k, tuple(m)))
    labels.sort(reverse=True)
    pres._cache[key] = tuple(labels)
    return labels


def vector_from_label(pres: ModulePresentation, label: BasisLabel, coeff=ONE) -> VermaVector:
    return VermaVector(pres, {label: coeff})


# -- generator action ----------------------------------------------------------

def _times_P(pres: ModulePresentation, j: int, k: int, m: tuple[int, ...], coeff: ParamPoly,
             out: dict[BasisLabel, ParamPoly]) -> None:
    """Accumulate P_j H^0-part: H^k P_j P^m |u0> into ``out``."""
    ell = pres.ell
    if j > ell:
        return
    if j == ell:
        c = coeff * pres.weight.p
        if c:
            lab = BasisLabel(k, m)
            out[lab] = out.get(lab, ZERO) + c
        return
    mm = list(m)
    mm[ell - j - 1] += 1
    red = pres.reduce(k, mm, coeff)
    if red is not None:
        lab, c = red
        if c:
            out[lab] = out.get(lab, ZERO) + c


def _act_label(pres: ModulePresentation, g: Generator, label: BasisLabel) -> dict[BasisLabel, ParamPoly]:
    key = ("act", g, label)
    cached = pres._cache.get(key)
    if cached is not None:
        return cached
    ell = pres.ell
    k, m = label.k, label.m
    out: dict[BasisLabel, ParamPoly] = {}
    if g.kind == "D":
        c = pres.weight.delta + label.level
        if c:
            out[label] = c
    elif g.kind == "H":
        if pres.h_power == 1:
            # H|u0> = 0, so H acts on P^m|u0> through [H, P_n] = -n P_{n-1}
            for i, e in enumerate(m, start=1):
                n = ell - i
                if e and n:
                    mm = list(m)
                    mm[i - 1] -= 1
                    _times_P(pres, n - 1, 0, tuple(mm), ParamPoly.const(-n * e), out)
        else:
            red = pres.reduce(k + 1, m, ONE)
            if red is not None:
                out[red[0]] = red[1]
    elif g.kind == "P":
        n = g.index
        for i in range(min(n, k) + 1):
            c = ParamPoly.const(comb(n, i) * perm(k, i))
            _times_P(pres, n - i, k - i, m, c, out)
    else:  # C
        # H^k [C, P^m] |u0>
        for i, e in enumerate(m, start=1):
            if not e:
                continue
            n = ell - i
            mm = list(m)
            mm[i - 1] -= 1
            _times_P(pres, n + 1, k, tuple(mm), ParamPoly.const(e * (2 * ell - n)), out)
        # [C, H^k] P^m |u0> = H^{k-1} (2k D + k(k-1)) P^m |u0>
        if k:
            level_m = label.level - k
            c = (pres.weight.delta + level_m) * (2 * k) + k * (k - 1)
            if c:
                lab = BasisLabel(k - 1, m)
                out[lab] = out.get(lab, ZERO) + c
    out = {lab: c for lab, c in out.items() if c}
    pres._cache[key] = out
    return out


def act(pres: ModulePresentation, g, v: VermaVector) -> VermaVector:
    """Action of a generator or LieElement on a vector of the presentation."""
    if isinstance(g, LieElement):
        total = VermaVector(pres)
        for gen, c in g.terms.items():
            total = total + act(pres, gen, v).scale(c)
        return total
    pres.cfg.check(g)
    out: dict[BasisLabel, ParamPoly] = {}
    for lab, c in v.terms.items():
        for lab2, c2 in _act_label(pres, g, lab).items():
            out[lab2] = out.get(lab2, ZERO) + c * c2
    return VermaVector(pres, out)


def act_uea(pres: ModulePresentation, x: UEAElement, v: VermaVector) -> VermaVector:
    """Apply each word's factors right to left and sum."""
    total: dict[BasisLabel, ParamPoly] = {}
    for word, c in x.terms.items():
        w = v
        for g in reversed(word):
            w = act(pres, g, w)
            if not w:
                break
        for lab, c2 in w.terms.items():
            total[lab] = total.get(lab, ZERO) + c * c2
    return VermaVector(pres, total)


def label_vector(pres: ModulePresentation, label: BasisLabel) -> VermaVector:
    """The basis vector, built by acting with its word on the vacuum."""
    return act_uea(pres, UEAElement.word(pres.ell, *label.word()), pres.vacuum())


def level_dimension_bruteforce(ell: int, N: int) -> int:
    """Count solutions of k + sum i*m_i = N directly (no generating function)."""
    count = 0

    def rec(i: int, remaining: int):
        nonlocal count
        if i > ell:
            count += 1  # k absorbs the rest
            return
        for e in range(remaining // i + 1):
            rec(i + 1, remaining - e * i)

    rec(1, N)
    return count


def grading_shift(pres: ModulePresentation, g: Generator) -> int:
    return degree(pres.cfg, g)
