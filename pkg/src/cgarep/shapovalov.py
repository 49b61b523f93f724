"""Contravariant form <x|y> = <u0| omega(X) Y |u0> and level Gram determinants."""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from .exact import ONE, ZERO, ParamPoly, PolyMatrix, Q, poly_det
from .liealg import AlgebraConfig, omega_generator
from .uea import UEAElement, omega_word
from .verma import (BasisLabel, ModulePresentation, VermaVector, act, level_basis,
                    vector_from_label)


def _omega_apply(pres: ModulePresentation, label: BasisLabel, y: VermaVector) -> VermaVector:
    """omega(word(label)) applied to y: the mirrored lowering word, rightmost factor first."""
    for g in label.word():
        y = act(pres, omega_generator(pres.cfg, g), y)
        if not y:
            break
    return y


def pairing(pres: ModulePresentation, x: VermaVector, y: VermaVector) -> ParamPoly:
    vac = pres.vacuum_label()
    total = ZERO
    for lab, c in x.terms.items():
        z = _omega_apply(pres, lab, y)
        total = total + c * z.coefficient(vac)
    return total


def vacuum_expectation(pres: ModulePresentation, x: UEAElement) -> ParamPoly:
    """<u0| x |u0> read off normal words: only words in D and P_ell survive."""
    if not pres.is_verma:
        raise ValueError("normal-order expectation values are only defined on the Verma presentation")
    ell = pres.ell
    total = ZERO
    for word, c in x.terms.items():
        val = c
        for g in word:
            if g.kind == "D":
                val = val * pres.weight.delta
            elif g.kind == "P" and g.index == ell:
                val = val * pres.weight.p
            else:
                val = ZERO
                break
        total = total + val
    return total


def pairing_by_normal_order(pres: ModulePresentation, a: BasisLabel, b: BasisLabel) -> ParamPoly:
    """Second route to <a|b>: normal-order omega(A) B in U(g) and take the vacuum value."""
    A = UEAElement.word(pres.ell, *a.word())
    B = UEAElement.word(pres.ell, *b.word())
    return vacuum_expectation(pres, omega_word(pres.cfg, A) * B)


@dataclass(frozen=True)
class Factored:
    sign: int
    content: object
    p_power: int
    delta_power: int
    residual: ParamPoly

    def expand(self) -> ParamPoly:
        if self.sign == 0:
            return ZERO
        return (ParamPoly.monomial(self.content * self.sign, self.delta_power, self.p_power)
                * self.residual)

    def to_json(self) -> dict:
        return {"sign": self.sign, "content": str(self.content), "p_power": self.p_power,
                "delta_power": self.delta_power, "residual": str(self.residual)}

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        parts = [("-" if self.sign < 0 else "") + str(self.content)]
        if self.delta_power:
            parts.append("d" if self.delta_power == 1 else f"d^{self.delta_power}")
        if self.p_power:
            parts.append("p" if self.p_power == 1 else f"p^{self.p_power}")
        if self.residual != ONE:
            parts.append(f"({self.residual})")
        return "*".join(parts)


def factor_det(det: ParamPoly) -> Factored:
    if not det:
        return Factored(0, Q(0), 0, 0, ZERO)
    content = det.content()
    a, b = det.min_p_exponent(), det.min_d_exponent()
    rest = det.shift(-b, -a) / content
    sign = 1 if rest.leading_coefficient() > 0 else -1
    return Factored(sign, content, a, b, rest * sign)


@dataclass
class GramReport:
    ell: int
    level: int
    basis: list[BasisLabel]
    matrix: PolyMatrix
    determinant: ParamPoly

    @property
    def factored(self) -> Factored:
        return factor_det(self.determinant)

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "ell": self.ell,
            "level": self.level,
            "basis": [str(b) for b in self.basis],
            "matrix": [[str(x) for x in row] for row in self.matrix.to_lists()],
            "det": str(self.determinant),
            "factored": self.factored.to_json(),
        }

    def to_text(self) -> str:
        lines = [f"ell={self.ell} level={self.level} dim={len(self.basis)}",
                 "basis: " + ", ".join(str(b) for b in self.basis)]
        for row in self.matrix.to_lists():
            lines.append("  [" + ", ".join(str(x) for x in row) + "]")
        lines.append(f"det = {self.determinant}")
        lines.append(f"factored = {self.factored}")
        return "\n".join(lines)


def gram_matrix(pres: ModulePresentation, N: int) -> tuple[list[BasisLabel], PolyMatrix]:
    basis = level_basis(pres, N)
    vecs = [vector_from_label(pres, b) for b in basis]
    vac = pres.vacuum_label()
    rows = []
    for a in basis:
        rows.append([_omega_apply(pres, a, v).coefficient(vac) for v in vecs])
    return basis, PolyMatrix(rows, cols=len(basis))


def gram(pres: ModulePresentation, N: int) -> GramReport:
    basis, m = gram_matrix(pres, N)
    det = poly_det(m) if basis else ONE
    return GramReport(pres.ell, N, basis, m, det)


# -- closed forms used for comparison ---------------------------------------

def ell1_det_abs(N: int) -> ParamPoly:
    """(prod_{m<=N} m!)^2 (2p)^{N(N+1)}."""
    c = prod(factorial(m) for m in range(N + 1)) ** 2 * 2 ** (N * (N + 1))
    return ParamPoly.monomial(c, 0, N * (N + 1))


def _abs_equal(a: ParamPoly, b: ParamPoly) -> bool:
    return a == b or a == -b


def verify_prop1(ell_max: int, N_max: int) -> list[dict]:
    rows = []
    for ell in range(1, ell_max + 1):
        pres = ModulePresentation.verma(AlgebraConfig(ell))
        for N in range(1, N_max + 1):
            det = gram(pres, N).determinant
            if ell == 1:
                expected = ell1_det_abs(N)
                ok = _abs_equal(det, expected)
            elif N == 1:
                expected = ParamPoly.monomial((ell + 1) ** 2, 0, 2)
                ok = _abs_equal(det, expected)
            else:
                expected = ZERO
                ok = det == ZERO
            rows.append({"ell": ell, "level": N, "det": str(det), "expected_abs": str(expected), "ok": ok})
    return rows


def ell1_pairing_check(N_max: int) -> list[dict]:
    """ell=1: <N-k,k | m,N-m> = 0 for k > m, with |k,m> = H^k P0^m."""
    pres = ModulePresentation.verma(AlgebraConfig(1))
    out = []
    for N in range(1, N_max + 1):
        for k in range(N + 1):
            x = vector_from_label(pres, BasisLabel(N - k, (k,)))
            for m in range(N + 1):
                y = vector_from_label(pres, BasisLabel(m, (N - m,)))
                val = pairing(pres, x, y)
                if k > m:
                    out.append({"N": N, "k": k, "m": m, "value": str(val), "ok": not val})
                elif k == m:
                    expected = ParamPoly.monomial(factorial(N - m) * factorial(m) * 2 ** N, 0, N)
                    out.append({"N": N, "k": k, "m": m, "value": str(val), "ok": val == expected})
    return out


def pure_p_row_check(ell_max: int, N_max: int) -> list[dict]:
    """<0,n | k,m> vanishes unless k = N, and then involves p only."""
    out = []
    for ell in range(2, ell_max + 1):
        pres = ModulePresentation.verma(AlgebraConfig(ell))
        for N in range(1, N_max + 1):
            basis = level_basis(pres, N)
            for a in basis:
                if a.k:
                    continue
                x = vector_from_label(pres, a)
                for b in basis:
                    val = pairing(pres, x, vector_from_label(pres, b))
                    if b.k != N:
                        ok = not val
                    else:
                        ok = val.min_d_exponent() == 0 and all(e[0] == 0 for e in val.terms)
                    out.append({"ell": ell, "N": N, "row": str(a), "col": str(b),
                                "value": str(val), "ok": ok})
    return out
