"""The d=1 conformal Galilei algebra g_ell for integer ell.

Basis: D, H, C and P_0..P_{2 ell}.  The sl(2) part {H, D, C} acts on the
abelian ideal spanned by the P's as the spin-ell representation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .exact import ONE, ZERO, ParamPoly


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraConfig:
    ell: int

    def __post_init__(self):
        if not isinstance(self.ell, int) or self.ell < 1:
            raise ConfigError(f"ell must be a positive integer, got {self.ell!r}")

    @property
    def dim(self) -> int:
        return 2 * self.ell + 4

    def generators(self) -> list[Generator]:
        return [D, H, C] + [P(n) for n in range(2 * self.ell + 1)]

    def check(self, g: Generator) -> Generator:
        if g.kind == "P" and not 0 <= g.index <= 2 * self.ell:
            raise ConfigError(f"P{g.index} is not in g_{self.ell} (need 0 <= n <= {2 * self.ell})")
        return g


@dataclass(frozen=True, slots=True)
class Generator:
    kind: str  # "D", "H", "C" or "P"
    index: int = -1

    def __str__(self) -> str:
        return f"P{self.index}" if self.kind == "P" else self.kind

    def __repr__(self) -> str:
        return str(self)

    @classmethod
    def parse(cls, text: str) -> Generator:
        text = text.strip()
        if text in ("D", "H", "C"):
            return cls(text)
        if text.startswith("P") and text[1:].isdigit():
            return cls("P", int(text[1:]))
        raise ValueError(f"unknown generator {text!r}")


D = Generator("D")
H = Generator("H")
C = Generator("C")

_P_CACHE: dict[int, Generator] = {}


def P(n: int) -> Generator:
    g = _P_CACHE.get(n)
    if g is None:
        g = _P_CACHE[n] = Generator("P", n)
    return g


def structure_constants(cfg: AlgebraConfig, x: Generator, y: Generator) -> dict[Generator, int]:
    """[x, y] for basis elements, as a dict generator -> integer."""
    cfg.check(x)
    cfg.check(y)
    ell = cfg.ell
    if x == y:
        return {}
    kx, ky = x.kind, y.kind
    if kx == "P" and ky == "P":
        return {}
    if kx == "P":
        return {g: -c for g, c in structure_constants(cfg, y, x).items()}
    if ky == "P":
        n = y.index
        if kx == "H":
            coef, target = -n, n - 1
        elif kx == "D":
            coef, target = ell - n, n
        else:  # C
            coef, target = 2 * ell - n, n + 1
        if coef == 0:
            return {}
        # the only out-of-range targets (P_-1, P_{2 ell + 1}) carry coefficient 0
        assert 0 <= target <= 2 * ell, (x, y)
        return {P(target): coef}
    table = {
        ("D", "H"): {H: 1},
        ("D", "C"): {C: -1},
        ("C", "H"): {D: 2},
    }
    if (kx, ky) in table:
        return dict(table[(kx, ky)])
    return {g: -c for g, c in table[(ky, kx)].items()}


class LieElement:
    """Formal linear combination of generators with ParamPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for g, c in (terms or {}).items():
            c = ParamPoly.coerce(c)
            if c:
                clean[g] = c
        self.terms: dict[Generator, ParamPoly] = clean

    @classmethod
    def of(cls, g: Generator, coeff=ONE) -> LieElement:
        return cls({g: coeff})

    def __add__(self, other: LieElement) -> LieElement:
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, ZERO) + c
        return LieElement(out)

    def __neg__(self) -> LieElement:
        return LieElement({g: -c for g, c in self.terms.items()})

    def __sub__(self, other: LieElement) -> LieElement:
        return self + (-other)

    def scale(self, c) -> LieElement:
        return LieElement({g: v * c for g, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, LieElement) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"LieElement({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for g in sorted(self.terms, key=_display_key):
            c = self.terms[g]
            if c == ONE:
                parts.append(str(g))
            elif c == -ONE:
                parts.append(f"-{g}")
            elif c.is_monomial():
                parts.append(f"{c}*{g}")
            else:
                parts.append(f"({c})*{g}")
        return " + ".join(parts).replace("+ -", "- ")


def _display_key(g: Generator) -> tuple[int, int]:
    return ({"D": 0, "H": 1, "C": 2, "P": 3}[g.kind], g.index)


def _as_element(x) -> LieElement:
    if isinstance(x, Generator):
        return LieElement.of(x)
    return x


def bracket(cfg: AlgebraConfig, x, y) -> LieElement:
    """Bilinear Lie bracket of generators or LieElements."""
    x, y = _as_element(x), _as_element(y)
    out: dict[Generator, ParamPoly] = {}
    for gx, cx in x.terms.items():
        for gy, cy in y.terms.items():
            for g, k in structure_constants(cfg, gx, gy).items():
                out[g] = out.get(g, ZERO) + cx * cy * k
    return LieElement(out)


def omega_generator(cfg: AlgebraConfig, g: Generator) -> Generator:
    cfg.check(g)
    if g.kind == "P":
        return P(2 * cfg.ell - g.index)
    return {"D": D, "H": C, "C": H}[g.kind]


def omega(cfg: AlgebraConfig, x) -> LieElement:
    """The anti-involution D -> D, H <-> C, P_n -> P_{2 ell - n}."""
    x = _as_element(x)
    return LieElement({omega_generator(cfg, g): c for g, c in x.terms.items()})


def degree(cfg: AlgebraConfig, g: Generator) -> int:
    """Eigenvalue of ad D on ``g``."""
    cfg.check(g)
    if g.kind == "P":
        return cfg.ell - g.index
    return {"D": 0, "H": 1, "C": -1}[g.kind]


Part = Literal["plus", "zero", "minus"]


def triangular_part(cfg: AlgebraConfig, g: Generator) -> Part:
    deg = degree(cfg, g)
    if deg > 0:
        return "plus"
    if deg < 0:
        return "minus"
    return "zero"


def raising(cfg: AlgebraConfig) -> list[Generator]:
    return [H] + [P(n) for n in range(cfg.ell)]


def lowering(cfg: AlgebraConfig) -> list[Generator]:
    return [C] + [P(n) for n in range(cfg.ell + 1, 2 * cfg.ell + 1)]


def jacobi_check(cfg: AlgebraConfig) -> dict[tuple[Generator, Generator, Generator], bool]:
    """Jacobi identity on every unordered triple of basis elements."""
    report = {}
    for x, y, z in itertools.combinations(cfg.generators(), 3):
        total = (bracket(cfg, bracket(cfg, x, y), z)
                 + bracket(cfg, bracket(cfg, y, z), x)
                 + bracket(cfg, bracket(cfg, z, x), y))
        report[(x, y, z)] = not total
    return report


def spacetime_fields(cfg: AlgebraConfig):
    """Vector fields on (t, x) realizing g_ell as DiffOps."""
    from .diffop import DiffOp

    ell = cfg.ell
    names = ("t", "x")
    fields = {
        H: DiffOp.derivative(names, 0),
        D: DiffOp.vector_field(names, {(1, 0): -1}, 0) + DiffOp.vector_field(names, {(0, 1): -ell}, 1),
        C: DiffOp.vector_field(names, {(2, 0): 1}, 0) + DiffOp.vector_field(names, {(1, 1): 2 * ell}, 1),
    }
    for n in range(2 * ell + 1):
        fields[P(n)] = DiffOp.vector_field(names, {(n, 0): (-1) ** n}, 1)
    return fields


def spacetime_bracket_check(cfg: AlgebraConfig) -> dict[tuple[Generator, Generator], bool]:
    """Compare commutators of the (t, x) vector fields with ``bracket``."""
    from .diffop import DiffOp, diffop_commutator

    fields = spacetime_fields(cfg)
    names = ("t", "x")
    report = {}
    for x, y in itertools.combinations(cfg.generators(), 2):
        lhs = diffop_commutator(fields[x], fields[y])
        rhs = DiffOp.zero(names)
        for g, c in bracket(cfg, x, y).terms.items():
            rhs = rhs + fields[g].scale(c)
        report[(x, y)] = lhs == rhs
    return report
