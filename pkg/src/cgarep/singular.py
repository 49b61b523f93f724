"""Singular vectors: a kernel solver and explicit polynomial families.

A singular vector at level N is a nonzero v with C v = 0, P_j v = 0 for
j > ell, and P_ell v = p v.  The families below are polynomials in the
commuting raising P's, so ``x^k |u0>`` is singular whenever ``x |u0>`` is
annihilated together with its commutator structure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

from .exact import DELTA, ONE, ZERO, P as P_SYMBOL, ParamPoly, PolyMatrix, Q, in_span, poly_nullspace
from .liealg import AlgebraConfig, C, D, P
from .uea import UEAElement
from .verma import (BasisLabel, ModulePresentation, VermaVector, act, act_uea, level_basis,
                    vector_from_label)


class InadmissibleFamilyError(ValueError):
    """A family/ell/n combination that uses a P index outside [0, 2 ell]."""


FAMILIES = ("S_even", "S_odd", "T", "S_tilde", "P_top", "P_S_tilde")
P_NONZERO_FAMILIES = ("S_even", "S_odd", "T")
P_ZERO_FAMILIES = ("P_top", "S_tilde", "P_S_tilde")


# -- solve modes ---------------------------------------------------------------

@dataclass(frozen=True)
class SolveMode:
    kind: str = "generic_p_nonzero"
    delta: object = None
    p: object = None

    def __post_init__(self):
        if self.kind not in ("generic_p_nonzero", "p_zero_generic_delta", "specialized"):
            raise ValueError(f"unknown mode {self.kind!r}")
        if self.kind == "specialized" and (self.delta is None or self.p is None):
            raise ValueError("specialized mode needs rational delta and p")

    @classmethod
    def coerce(cls, mode) -> SolveMode:
        if isinstance(mode, SolveMode):
            return mode
        if isinstance(mode, tuple):
            return cls("specialized", Q(mode[1]), Q(mode[2]))
        return cls(mode)

    def apply(self, pres: ModulePresentation) -> ModulePresentation:
        if self.kind == "p_zero_generic_delta":
            return pres.specialize(p=0)
        if self.kind == "specialized":
            return pres.specialize(delta=Q(self.delta), p=Q(self.p))
        return pres

    def conditions(self) -> list[ParamPoly]:
        if self.kind == "p_zero_generic_delta":
            return [P_SYMBOL]
        if self.kind == "specialized":
            return [DELTA - Q(self.delta), P_SYMBOL - Q(self.p)]
        return []


@dataclass
class SingularVector:
    vector: VermaVector
    level: int
    eigen_delta: ParamPoly
    eigen_p: ParamPoly
    parameter_conditions: list[ParamPoly] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "vector": [{"label": str(lab), "coeff": str(c)} for lab, c in self.vector.sorted_items()],
            "eigen_delta": str(self.eigen_delta),
            "eigen_p": str(self.eigen_p),
            "conditions": [str(c) for c in self.parameter_conditions],
        }

    def __str__(self) -> str:
        return str(self.vector)


def lowering_conditions(pres: ModulePresentation) -> list[tuple[str, object]]:
    """(name, generator) pairs whose action must vanish on a singular vector."""
    ell = pres.ell
    return [("C", C)] + [(f"P{j}", P(j)) for j in range(ell + 1, 2 * ell + 1)]


def singular_system(pres: ModulePresentation, N: int,
                    require_p_eigen: bool = True) -> tuple[list[BasisLabel], PolyMatrix]:
    """Stack C v = 0, P_j v = 0 (j > ell) and (P_ell - p) v = 0 over the level-N basis.

    With ``require_p_eigen=False`` the last block is dropped, leaving only
    annihilation by the lowering subalgebra.
    """
    basis = level_basis(pres, N)
    images = []
    for b in basis:
        v = vector_from_label(pres, b)
        cols = {}
        for name, g in lowering_conditions(pres):
            for lab, c in act(pres, g, v).terms.items():
                cols[(name, lab)] = c
        if require_p_eigen:
            w = act(pres, P(pres.ell), v) - v.scale(pres.weight.p)
            for lab, c in w.terms.items():
                cols[("Pl-p", lab)] = c
        images.append(cols)
    keys = sorted({k for img in images for k in img}, key=lambda k: (k[0], k[1]))
    rows = [[img.get(k, ZERO) for img in images] for k in keys]
    return basis, PolyMatrix(rows, cols=len(basis))


def find_singular(pres: ModulePresentation, N: int, mode="generic_p_nonzero",
                  require_p_eigen: bool = True) -> list[SingularVector]:
    mode = SolveMode.coerce(mode)
    pres = mode.apply(pres)
    if N <= 0:
        return []
    basis, m = singular_system(pres, N, require_p_eigen)
    if not basis:
        return []
    if m.rows == 0:
        kernel = [[ONE if i == j else ZERO for i in range(len(basis))] for j in range(len(basis))]
    else:
        kernel = poly_nullspace(m)
    out = []
    for vec in kernel:
        v = VermaVector(pres, dict(zip(basis, vec)))
        out.append(SingularVector(v, N, pres.weight.delta + N, pres.weight.p, mode.conditions()))
    return out


def kernel_coordinates(pres: ModulePresentation, N: int, mode="generic_p_nonzero") -> tuple[list[BasisLabel], list]:
    mode = SolveMode.coerce(mode)
    sv = find_singular(pres, N, mode)
    basis = level_basis(mode.apply(pres), N)
    return basis, [s.vector.coordinates(basis) for s in sv]


# -- explicit families ----------------------------------------------------------

def _poly(ell: int, terms: list[tuple[object, tuple[int, ...]]]) -> UEAElement:
    """sum coeff * prod P_i over the listed subscripts."""
    out = {}
    for coeff, idx in terms:
        word = tuple(P(i) for i in sorted(idx, reverse=True))
        out[word] = out.get(word, ZERO) + ParamPoly.coerce(coeff)
    return UEAElement(ell, out)


def _frac(a, b) -> ParamPoly:
    return ParamPoly.const(Q(a) / Q(b))


def check_admissible(cfg: AlgebraConfig, family: str, n: int) -> list[str]:
    """Raise if any subscript leaves [0, 2 ell]; return notes on boundary cases."""
    ell = cfg.ell
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if n < 1 and family != "P_top":
        raise InadmissibleFamilyError(f"n must be a positive integer, got n={n}")
    bound = {
        "S_even": (ell - 2 * n, "ell - 2n >= 0"),
        "S_odd": (ell - 2 * n - 1, "ell - 2n - 1 >= 0"),
        "T": (ell - 3, "ell - 3 >= 0"),
        "S_tilde": (ell - 2 * n + 1, "ell - 2n + 1 >= 0"),
        "P_S_tilde": (ell - 2 * n + 1, "ell - 2n + 1 >= 0"),
        "P_top": (ell - 1, "ell - 1 >= 0"),
    }[family]
    if bound[0] < 0:
        raise InadmissibleFamilyError(
            f"family {family} with n={n} needs {bound[1]} (ell={ell}); "
            f"the lowest subscript would be {bound[0]}")
    notes = []
    if family in ("S_tilde", "P_S_tilde") and ell - 2 * n < 0:
        notes.append(f"boundary case ell - 2n = {ell - 2 * n} < 0: the formula still only uses "
                     f"subscripts >= {ell - 2 * n + 1}")
    return notes


@dataclass
class SVFamilyCoefficients:
    family: str
    n: int
    a: list[ParamPoly] = field(default_factory=list)
    b: list[ParamPoly] = field(default_factory=list)
    c: list[ParamPoly] = field(default_factory=list)
    d: list[ParamPoly] = field(default_factory=list)


def a_coeff(ell: int, n: int, j: int) -> ParamPoly:
    return _frac((-1) ** j * factorial(ell) * factorial(ell + 2 * n),
                 factorial(ell + j) * factorial(ell + 2 * n - j))


def b_coeff(ell: int, n: int, j: int) -> ParamPoly:
    # (n - 1/2 - j)/(n + 1/2) = (2n - 1 - 2j)/(2n + 1)
    c = _frac((-1) ** j * (2 * n - 1 - 2 * j) * factorial(ell) * factorial(ell + 2 * n + 1),
              (2 * n + 1) * factorial(ell + j + 1) * factorial(ell + 2 * n - j))
    return c * P_SYMBOL


def t_coefficients(ell: int, n: int) -> tuple[list[ParamPoly], list[ParamPoly]]:
    """Solve the d-recurrence: returns (c_0..c_{n-1}, d_1..d_n).

    Each d_j is tracked as alpha_j + beta_j * c0; the j = n equation with
    d_{n+1} = 0 is linear in c0 and fixes it.
    """
    p = P_SYMBOL
    r = p * _frac(-2 * (ell + 1), ell + 2)
    cshape = [r ** j * comb(n - 1, j) for j in range(n)]  # c_j = cshape[j] * c0
    alpha = {1: p * (-(ell + 1) * (ell + 2) ** (n - 1))}
    beta = {1: ZERO}
    for j in range(1, n + 1):
        inhom = (p * (ell + 1)) ** (j + 1) * (comb(n, j) * (-2) ** j * (ell + 2) ** (n - j))
        # (j+1)(l+2) d_{j+1} = -[(2n-2j+1) p (l+1) d_j + (l+3) c_{j-1} + inhom]
        a_rest = alpha[j] * p * ((2 * n - 2 * j + 1) * (ell + 1)) + inhom
        b_rest = beta[j] * p * ((2 * n - 2 * j + 1) * (ell + 1)) + cshape[j - 1] * (ell + 3)
        if j < n:
            scale = _frac(-1, (j + 1) * (ell + 2))
            alpha[j + 1] = a_rest * scale
            beta[j + 1] = b_rest * scale
        else:
            # a_rest + b_rest * c0 = 0
            c0 = (-a_rest).exact_div(b_rest)
    d = [alpha[j] + beta[j] * c0 for j in range(1, n + 1)]
    c = [s * c0 for s in cshape]
    return c, d


def family_coefficients(cfg: AlgebraConfig, family: str, n: int) -> SVFamilyCoefficients:
    ell = cfg.ell
    out = SVFamilyCoefficients(family, n)
    if family in ("S_even", "S_odd"):
        out.a = [a_coeff(ell, n, j) for j in range(1, n)]
    if family == "S_odd":
        out.b = [b_coeff(ell, n, j) for j in range(1, n)]
    if family == "T":
        out.c, out.d = t_coefficients(ell, n)
    return out


def s_tilde_coeff(ell: int, n: int, j: int) -> ParamPoly:
    return _frac((-1) ** (n + j) * 2 * factorial(ell + n) ** 2,
                 factorial(ell + j) * factorial(ell + 2 * n - j))


def _s_even(ell: int, n: int) -> UEAElement:
    terms = [(P_SYMBOL, (ell - 2 * n,))]
    for j in range(1, n):
        terms.append((a_coeff(ell, n, j), (ell - 2 * n + j, ell - j)))
    last = _frac((-1) ** n * factorial(ell) * factorial(ell + 2 * n), 2 * factorial(ell + n) ** 2)
    terms.append((last, (ell - n, ell - n)))
    return _poly(ell, terms)


def _s_tilde(ell: int, n: int) -> UEAElement:
    terms = [(s_tilde_coeff(ell, n, j), (ell - 2 * n + j, ell - j)) for j in range(1, n)]
    terms.append((ONE, (ell - n, ell - n)))
    return _poly(ell, terms)


def construct_family(cfg: AlgebraConfig, family: str, n: int = 1) -> UEAElement:
    check_admissible(cfg, family, n)
    ell = cfg.ell
    p = P_SYMBOL
    top = UEAElement.generator(ell, P(ell - 1))
    if family == "S_even":
        return _s_even(ell, n)
    if family == "S_odd":
        s2n = _s_even(ell, n)
        x = _poly(ell, [(p * p, (ell - 2 * n - 1,))])
        x = x - top * s2n * _frac(2 * (ell + 2 * n + 1), (2 * n + 1) * (ell + 1))
        x = x - _poly(ell, [(p * _frac((2 * n - 1) * (ell + 2 * n + 1), (2 * n + 1) * (ell + 1)),
                             (ell - 1, ell - 2 * n))])
        x = x - _poly(ell, [(b_coeff(ell, n, j), (ell - 2 * n + j, ell - j - 1)) for j in range(1, n)])
        return x
    if family == "T":
        c, d = t_coefficients(ell, n)
        inner = _poly(ell, [(ell + 2, (ell - 1, ell - 1)), (p * (-2 * (ell + 1)), (ell - 2,))])
        x = top * inner ** n
        terms = []
        for j in range(n):
            terms.append((c[j], (ell - 1,) * (2 * (n - j - 1)) + (ell - 2,) * j + (ell - 3,)))
        for j in range(1, n + 1):
            terms.append((d[j - 1], (ell - 1,) * (2 * n - 2 * j + 1) + (ell - 2,) * j))
        return x + _poly(ell, terms)
    if family == "S_tilde":
        return _s_tilde(ell, n)
    if family == "P_S_tilde":
        return top * _s_tilde(ell, n)
    return top  # P_top


def family_level(family: str, n: int) -> int:
    return {"S_even": 2 * n, "S_odd": 2 * n + 1, "T": 2 * n + 1, "S_tilde": 2 * n,
            "P_S_tilde": 2 * n + 1, "P_top": 1}[family]


def admissible_ns(cfg: AlgebraConfig, family: str, n_max: int) -> list[int]:
    out = []
    for n in range(1, n_max + 1):
        try:
            check_admissible(cfg, family, n)
        except InadmissibleFamilyError:
            continue
        out.append(n)
    return out


# -- verification --------------------------------------------------------------

def apply_power(pres: ModulePresentation, x: UEAElement, k: int) -> VermaVector:
    x = x.subs(delta=pres.weight.delta, p=pres.weight.p)
    v = pres.vacuum()
    for _ in range(k):
        v = act_uea(pres, x, v)
    return v


def verify_singular(pres: ModulePresentation, x: UEAElement, k: int = 1) -> dict:
    v = apply_power(pres, x, k)
    checks = {"nonzero": bool(v)}
    levels = v.levels()
    checks["homogeneous"] = len(levels) == 1
    N = min(levels) if levels else 0
    eig = pres.weight.delta + N
    checks["D_eigen"] = act(pres, D, v) == v.scale(eig)
    checks["P_ell_eigen"] = act(pres, P(pres.ell), v) == v.scale(pres.weight.p)
    for name, g in lowering_conditions(pres):
        checks[f"{name}_annihilates"] = not act(pres, g, v)
    return {"ok": all(checks.values()), "checks": checks, "level": N,
            "eigen_delta": str(eig), "vector": v}


def radical_check(pres: ModulePresentation, sv: SingularVector) -> dict:
    from .shapovalov import pairing

    N = sv.level
    basis = level_basis(sv.vector.pres, N)
    values = [pairing(sv.vector.pres, vector_from_label(sv.vector.pres, b), sv.vector) for b in basis]
    in_radical = all(not v for v in values)
    return {"level": N, "in_radical": in_radical, "pairings": [str(v) for v in values]}


def in_kernel_span(pres: ModulePresentation, v: VermaVector, mode="generic_p_nonzero") -> bool:
    mode = SolveMode.coerce(mode)
    N = v.level()
    basis, kernel = kernel_coordinates(pres, N, mode)
    return in_span(v.coordinates(basis), kernel)


def reduction_at_p0(cfg: AlgebraConfig, family: str, n: int) -> tuple[UEAElement, UEAElement]:
    """(family at p = 0, expected p = 0 family), to be compared up to a constant."""
    x = construct_family(cfg, family, n).subs(p=0)
    ell = cfg.ell
    if family == "S_even":
        target = construct_family(cfg, "S_tilde", n)
    elif family == "S_odd":
        target = construct_family(cfg, "P_S_tilde", n)
    elif family == "T":
        target = UEAElement.word(ell, *[P(ell - 1)] * (2 * n + 1))
    else:
        raise ValueError(f"no p -> 0 reduction for {family}")
    return x, target


def uea_constant_ratio(a: UEAElement, b: UEAElement):
    """Rational r with a = r*b, else None."""
    if set(a.terms) != set(b.terms) or not a.terms:
        return None
    r = None
    for w, ca in a.terms.items():
        cb = b.terms[w]
        mono, lead = cb.leading_term()
        if mono not in ca.terms:
            return None
        q = ca.terms[mono] / lead
        if ca != cb * q:
            return None
        if r is None:
            r = q
        elif q != r:
            return None
    return r
