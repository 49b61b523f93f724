"""Iterated quotients of the Verma module down to an irreducible module.

Each stage scans levels from the bottom for singular vectors of its
presentation and consumes the first one it can turn into a rewrite rule:

* a single ``P_n`` term: ``P_n |u0> = 0``;
* a single ``H^K`` term once every raising P is gone: ``H^K |u0> = 0``;
* two terms ``P_{ell-a}`` and ``P_{ell-1}^a``: solve for ``P_{ell-a} |u0>``.

Vectors of any other shape are recorded as skipped and the scan moves on.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, prod

from .exact import ZERO, ParamPoly, Q
from .liealg import AlgebraConfig, P, bracket
from .shapovalov import gram
from .singular import SingularVector, find_singular, lowering_conditions
from .verma import (BasisLabel, ModulePresentation, StructuralError, VermaVector, Weight, act,
                    level_basis)


@dataclass
class TowerStage:
    index: int
    presentation: ModulePresentation
    found_singular: SingularVector | None = None
    level_of_singular: int | None = None
    kernel_dim: int = 0
    skipped: list[str] = field(default_factory=list)
    relation: str | None = None
    subsingular: bool | None = None


@dataclass
class TowerReport:
    cfg: AlgebraConfig
    weight: Weight
    mode: str
    max_level: int
    stages: list[TowerStage]

    @property
    def terminal(self) -> TowerStage:
        return self.stages[-1]

    @property
    def steps(self) -> int:
        return len(self.stages) - 1

    def sl2_dimension(self):
        dim = self.terminal.presentation.finite_dimension()
        return "infinite" if dim is None else dim

    def terminal_description(self) -> dict:
        pres = self.terminal.presentation
        out = {"basis_shape": pres.basis_shape(), "sl2_dimension": self.sl2_dimension(),
               "relations": pres.describe(),
               "evidence": f"no consumable singular vector at levels 1..{self.max_level}"}
        if not pres.free_indices():
            out["sl2_action"] = "C H^k|u0> = k(2*delta + k - 1) H^(k-1)|u0>, D H^k|u0> = (delta + k) H^k|u0>"
        return out

    def to_json(self) -> dict:
        stages = []
        for st in self.stages[:-1]:
            stages.append({
                "lambda": st.index,
                "relation": st.relation,
                "singular_level": st.level_of_singular,
                "singular_vector": str(st.found_singular.vector),
                "subsingular": st.subsingular,
                "kernel_dim": st.kernel_dim,
                "skipped": st.skipped,
            })
        return {"schema_version": 1, "ell": self.cfg.ell, "mode": self.mode,
                "delta": str(self.weight.delta), "p": str(self.weight.p),
                "stages": stages, "terminal": self.terminal_description()}

    def to_text(self) -> str:
        lines = [f"ell={self.cfg.ell} delta={self.weight.delta} p={self.weight.p} max_level={self.max_level}"]
        for st in self.stages[:-1]:
            tag = "subsingular" if st.subsingular else "singular in Verma"
            lines.append(f"stage {st.index}: level {st.level_of_singular} vector {st.found_singular.vector} "
                         f"[{tag}, kernel dim {st.kernel_dim}]")
            for s in st.skipped:
                lines.append(f"  skipped: {s}")
            lines.append(f"  quotient: {st.relation}")
        term = self.terminal_description()
        lines.append(f"terminal: basis {term['basis_shape']}, sl2 dimension {term['sl2_dimension']}")
        for s in self.terminal.skipped:
            lines.append(f"  skipped: {s}")
        for r in term["relations"]:
            lines.append(f"  {r}")
        lines.append(f"  {term['evidence']}")
        return "\n".join(lines)


def _consume(pres: ModulePresentation, sv: SingularVector) -> tuple[ModulePresentation, str]:
    """New presentation obtained by quotienting by the vector, or StructuralError."""
    ell = pres.ell
    items = sv.vector.sorted_items()
    labels = [lab for lab, _ in items]
    if len(items) == 1:
        lab = labels[0]
        if lab.k == 0 and sum(lab.m) == 1:
            i = lab.m.index(1) + 1
            new = pres.with_annihilated(ell - i)
            return new, f"P{ell - i}|u0> = 0"
        if not any(lab.m) and not pres.free_indices():
            new = pres.with_h_power(lab.k)
            return new, "H|u0> = 0" if lab.k == 1 else f"H^{lab.k}|u0> = 0"
    if len(items) == 2 and all(lab.k == 0 for lab in labels):
        single = [(lab, c) for lab, c in items if sum(lab.m) == 1]
        power = [(lab, c) for lab, c in items if sum(lab.m) != 1]
        if len(single) == 1 and len(power) == 1:
            (ls, cs), (lp, cp) = single[0], power[0]
            a = ls.m.index(1) + 1
            target = tuple([a] + [0] * (ell - 1))
            if a >= 2 and lp.m == target:
                coeff = (-cp).exact_div(cs) if not cs.is_monomial() else -cp / cs
                new = pres.with_relation(a, coeff)
                return new, f"P{ell - a}|u0> = ({coeff})*P{ell - 1}^{a}|u0>"
    raise StructuralError(f"singular vector {sv.vector} is not of a consumable two-term form")


def quotient_step(stage: TowerStage) -> TowerStage:
    if stage.found_singular is None:
        raise StructuralError("stage has no singular vector to quotient by")
    new, rel = _consume(stage.presentation, stage.found_singular)
    stage.relation = rel
    return TowerStage(stage.index + 1, new)


def lift_to_verma(pres: ModulePresentation, v: VermaVector) -> VermaVector:
    base = ModulePresentation.verma(pres.cfg, pres.weight)
    return VermaVector(base, dict(v.terms))


def is_singular_in_verma(pres: ModulePresentation, v: VermaVector) -> bool:
    w = lift_to_verma(pres, v)
    base = w.pres
    for _, g in lowering_conditions(base):
        if act(base, g, w):
            return False
    return act(base, P(base.ell), w) == w.scale(base.weight.p)


def _scan(stage: TowerStage, max_level: int) -> None:
    pres = stage.presentation
    for N in range(1, max_level + 1):
        if not level_basis(pres, N):
            continue
        found = find_singular(pres, N)
        for sv in found:
            try:
                _consume(pres, sv)
            except StructuralError:
                stage.skipped.append(f"level {N}: {sv.vector} (not consumable)")
                continue
            stage.found_singular = sv
            stage.level_of_singular = N
            stage.kernel_dim = len(found)
            return


def build_tower(cfg: AlgebraConfig, weight: Weight | None = None, mode: str = "generic_p_nonzero",
                max_level: int | None = None) -> TowerReport:
    if mode not in ("generic_p_nonzero", "p_zero"):
        raise ValueError(f"unknown tower mode {mode!r}")
    weight = weight or Weight.symbolic()
    if mode == "p_zero":
        weight = Weight(weight.delta, ZERO)
    elif weight.p_is_zero:
        raise ValueError("generic_p_nonzero mode needs p != 0")
    if max_level is None:
        max_level = cfg.ell + 3
    pres = ModulePresentation.verma(cfg, weight)
    stage = TowerStage(1 if mode == "generic_p_nonzero" else 0, pres)
    stages = [stage]
    # each step removes a P generator or truncates H, so this bound is never reached
    for _ in range(cfg.ell + 2):
        _scan(stage, max_level)
        if stage.found_singular is None:
            break
        stage.subsingular = not is_singular_in_verma(stage.presentation, stage.found_singular.vector)
        stage = quotient_step(stage)
        stages.append(stage)
        if stage.presentation.finite_dimension() is not None:
            _scan(stage, max_level)
            break
    return TowerReport(cfg, weight, mode, max_level, stages)


def quotient_shap_det(stage: TowerStage, N: int) -> ParamPoly:
    return gram(stage.presentation, N).determinant


def stage_det_abs(ell: int, N: int) -> ParamPoly:
    """(p(ell+1))^{N(N+1)} prod_{k=0}^N k!(N-k)!."""
    c = (ell + 1) ** (N * (N + 1)) * prod(factorial(k) * factorial(N - k) for k in range(N + 1))
    return ParamPoly.monomial(c, 0, N * (N + 1))


def stage_vector(pres: ModulePresentation, lam: int) -> VermaVector:
    """(lam+1)! p^lam (ell+1)^lam P_{ell-lam-1} - (ell+2)...(ell+lam+1) P_{ell-1}^{lam+1}."""
    ell = pres.ell
    m1 = [0] * ell
    m1[lam] = 1
    m2 = [0] * ell
    m2[0] = lam + 1
    c1 = ParamPoly.monomial(factorial(lam + 1) * (ell + 1) ** lam, 0, lam)
    c2 = ParamPoly.const(-prod(range(ell + 2, ell + lam + 2)))
    return VermaVector(pres, {BasisLabel(0, tuple(m1)): c1, BasisLabel(0, tuple(m2)): c2})


def stage_relation_coefficient(ell: int, a: int) -> ParamPoly:
    """(ell+2)...(ell+a) / (a! p^{a-1} (ell+1)^{a-1})."""
    num = prod(range(ell + 2, ell + a + 1))
    return ParamPoly.monomial(Q(num) / (factorial(a) * (ell + 1) ** (a - 1)), 0, -(a - 1))


def representation_check(pres: ModulePresentation, vectors: list[VermaVector] | None = None) -> dict:
    """[X, Y] v = X Y v - Y X v for all generator pairs on the given vectors."""
    cfg = pres.cfg
    gens = cfg.generators()
    vectors = vectors or [pres.vacuum()]
    failures = []
    for v in vectors:
        for i, x in enumerate(gens):
            for y in gens[i + 1:]:
                lhs = act(pres, bracket(cfg, x, y), v)
                rhs = act(pres, x, act(pres, y, v)) - act(pres, y, act(pres, x, v))
                if lhs != rhs:
                    failures.append(f"[{x},{y}] on {v}")
    return {"ok": not failures, "failures": failures}


def subsingular_census(cfg: AlgebraConfig, weight: Weight | None = None, mode: str = "generic_p_nonzero",
                       max_level: int | None = None) -> list[dict]:
    rep = build_tower(cfg, weight, mode, max_level)
    return [{"lambda": st.index, "level": st.level_of_singular, "vector": str(st.found_singular.vector),
             "subsingular": st.subsingular} for st in rep.stages[:-1]]
