"""Reproducibility suites shared by the ``verify`` command and the test-suite."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .diffop import pi_R_homomorphism_check, verify_prop6_prop7
from .exact import Q, ZERO, ParamPoly, proportional
from .liealg import (AlgebraConfig, Generator, bracket, degree, jacobi_check, omega,
                     spacetime_bracket_check)
from .shapovalov import gram, ell1_pairing_check, pure_p_row_check, verify_prop1
from .singular import (P_NONZERO_FAMILIES, P_ZERO_FAMILIES, admissible_ns, apply_power,
                       construct_family, find_singular, in_kernel_span, radical_check,
                       reduction_at_p0, uea_constant_ratio, verify_singular)
from .tower import (build_tower, stage_det_abs, stage_vector, quotient_shap_det,
                    representation_check)
from .uea import normal_order
from .verma import ModulePresentation, Weight, level_basis, vector_from_label

SUITES = ("prop1", "props345", "prop6", "prop7", "lemmas6", "structure", "all")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _abs_eq(a: ParamPoly, b: ParamPoly) -> bool:
    return a == b or a == -b


# -- determinants and pairings ---------------------------------------------------

def suite_determinants() -> list[Check]:
    out = []
    for row in verify_prop1(1, 5):
        out.append(Check(f"det ell=1 N={row['level']}", row["ok"], f"det={row['det']}"))
    for row in verify_prop1(4, 4):
        if row["ell"] >= 2:
            out.append(Check(f"det ell={row['ell']} N={row['level']}", row["ok"], f"det={row['det']}"))
    bad1 = [r for r in ell1_pairing_check(5) if not r["ok"]]
    out.append(Check("ell=1 triangular pairings N<=5", not bad1, f"{len(bad1)} failing pairings"))
    bad2 = [r for r in pure_p_row_check(4, 4) if not r["ok"]]
    out.append(Check("pure-P rows ell<=4 N<=4", not bad2, f"{len(bad2)} failing pairings"))
    return out


# -- singular vectors -------------------------------------------------------------

def suite_families(ells=range(2, 6), n_max: int = 2) -> list[Check]:
    out = []
    for ell in ells:
        cfg = AlgebraConfig(ell)
        verma = ModulePresentation.verma(cfg)
        for family in P_NONZERO_FAMILIES:
            for n in admissible_ns(cfg, family, n_max):
                x = construct_family(cfg, family, n)
                for k in (1, 2):
                    rep = verify_singular(verma, x, k)
                    out.append(Check(f"{family} ell={ell} n={n} k={k} singular", rep["ok"],
                                     f"level {rep['level']}"))
                v = apply_power(verma, x, 1)
                out.append(Check(f"{family} ell={ell} n={n} in solver kernel", in_kernel_span(verma, v)))
        p0 = verma.specialize(p=0)
        for family in P_ZERO_FAMILIES:
            ns = [1] if family == "P_top" else admissible_ns(cfg, family, n_max)
            for n in ns:
                x = construct_family(cfg, family, n)
                for k in (1, 2):
                    rep = verify_singular(p0, x, k)
                    out.append(Check(f"{family} ell={ell} n={n} k={k} singular (p=0)", rep["ok"]))
                v = apply_power(p0, x, 1)
                out.append(Check(f"{family} ell={ell} n={n} in solver kernel (p=0)",
                                 in_kernel_span(verma, v, "p_zero_generic_delta")))
        for family in P_NONZERO_FAMILIES:
            for n in admissible_ns(cfg, family, n_max):
                a, b = reduction_at_p0(cfg, family, n)
                r = uea_constant_ratio(a, b)
                out.append(Check(f"{family} ell={ell} n={n} p->0 reduction", r is not None, f"ratio {r}"))
    return out


# -- differential equations ------------------------------------------------------

def suite_pde(p_zero: bool, ells=(4, 5)) -> list[Check]:
    out = []
    for ell in ells:
        for row in verify_prop6_prop7(AlgebraConfig(ell), 2):
            if row["p_zero"] != p_zero:
                continue
            out.append(Check(f"{row['family']} ell={ell} n={row['n']} matches display", row["ok"],
                             f"ratio {row['ratio']}"))
    return out


# -- towers -----------------------------------------------------------------------

def suite_towers() -> list[Check]:
    out = []
    for ell in (2, 3, 4):
        cfg = AlgebraConfig(ell)
        rep = build_tower(cfg, max_level=ell + 3)
        out.append(Check(f"tower ell={ell} p!=0 has ell-1 steps", rep.steps == ell - 1, f"{rep.steps} steps"))
        for st in rep.stages[:-1]:
            lam = st.index
            ok = st.level_of_singular == lam + 1 and st.kernel_dim == 1 and not st.skipped
            expected = stage_vector(st.presentation, lam)
            basis = level_basis(st.presentation, lam + 1)
            ok = ok and proportional(st.found_singular.vector.coordinates(basis), expected.coordinates(basis))
            out.append(Check(f"tower ell={ell} stage {lam} vector at level {lam + 1}", ok,
                             str(st.found_singular.vector)))
            for N in range(1, lam + 1):
                none_below = not find_singular(st.presentation, N)
                out.append(Check(f"tower ell={ell} stage {lam} no singular at level {N}", none_below))
        for st in rep.stages:
            for N in range(1, min(st.index, 3) + 1):
                det = quotient_shap_det(st, N)
                out.append(Check(f"tower ell={ell} stage {st.index} det N={N}",
                                 _abs_eq(det, stage_det_abs(ell, N)), str(det)))
        term = rep.terminal
        empty = all(not find_singular(term.presentation, N) for N in range(1, ell + 4))
        out.append(Check(f"tower ell={ell} terminal has no singular vectors to level {ell + 3}", empty))
        out.append(Check(f"tower ell={ell} terminal basis", term.presentation.basis_shape() == f"H^k P{ell - 1}^m",
                         term.presentation.basis_shape()))
    for ell in (2, 3):
        cfg = AlgebraConfig(ell)
        for d in ("-1/2", "-1", "-3/2"):
            rep = build_tower(cfg, Weight(Q(d), ZERO), "p_zero", 8)
            last = rep.stages[-2]
            k = 1 - 2 * Q(d)
            ok = (last.level_of_singular == k and last.kernel_dim == 1
                  and rep.sl2_dimension() == 2 * abs(Q(d)) + 1)
            out.append(Check(f"tower ell={ell} p=0 delta={d} sl2 endgame", ok,
                             f"singular at level {last.level_of_singular}, dim {rep.sl2_dimension()}"))
        rep = build_tower(cfg, Weight(Q("1/3"), ZERO), "p_zero", 8)
        term = rep.terminal
        empty = all(not find_singular(term.presentation, N) for N in range(1, 9))
        out.append(Check(f"tower ell={ell} p=0 delta=1/3 no terminal singular to level 8",
                         empty and rep.sl2_dimension() == "infinite"))
        rep = build_tower(cfg, Weight(Q(0), ZERO), "p_zero", 8)
        out.append(Check(f"tower ell={ell} p=0 delta=0 trivial module", rep.sl2_dimension() == 1,
                         rep.terminal.presentation.basis_shape()))
    return out


# -- structural properties ----------------------------------------------------

def _random_word(rng: random.Random, cfg: AlgebraConfig, length: int) -> tuple[Generator, ...]:
    gens = cfg.generators()
    return tuple(rng.choice(gens) for _ in range(length))


def suite_structure(seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    out = []
    for ell in range(1, 7):
        cfg = AlgebraConfig(ell)
        out.append(Check(f"jacobi ell={ell}", all(jacobi_check(cfg).values())))
        out.append(Check(f"spacetime realization ell={ell}", all(spacetime_bracket_check(cfg).values())))
    for ell in range(1, 5):
        cfg = AlgebraConfig(ell)
        gens = cfg.generators()
        inv = all(omega(cfg, omega(cfg, g)).terms == {g: ParamPoly.const(1)} for g in gens)
        anti = all(omega(cfg, bracket(cfg, x, y)) == bracket(cfg, omega(cfg, y), omega(cfg, x))
                   for x in gens for y in gens)
        out.append(Check(f"omega anti-involution ell={ell}", inv and anti))
        add = all(not bracket(cfg, x, y) or all(degree(cfg, g) == degree(cfg, x) + degree(cfg, y)
                                                 for g in bracket(cfg, x, y).terms)
                  for x in gens for y in gens)
        out.append(Check(f"degree additivity ell={ell}", add))
        conf = True
        for _ in range(15):
            w = _random_word(rng, cfg, rng.randint(2, 5))
            conf &= normal_order(cfg, w, "left") == normal_order(cfg, w, "right")
        out.append(Check(f"normal-order confluence ell={ell}", conf))
        verma = ModulePresentation.verma(cfg)
        vecs = [vector_from_label(verma, b) for N in range(3) for b in level_basis(verma, N)]
        out.append(Check(f"representation property Verma ell={ell}", representation_check(verma, vecs)["ok"]))
        for mode, weight in (("generic_p_nonzero", None), ("p_zero", Weight(Q("-1"), ZERO))):
            for st in build_tower(cfg, weight, mode, ell + 2).stages:
                pres = st.presentation
                vecs = [vector_from_label(pres, b) for N in range(3) for b in level_basis(pres, N)]
                out.append(Check(f"representation property {mode} ell={ell} stage {st.index}",
                                 representation_check(pres, vecs)["ok"]))
        for N in range(0, 6):
            m = gram(verma, N).matrix
            out.append(Check(f"gram symmetry ell={ell} N={N}", m == m.transpose()))
        for N in range(1, 4):
            for mode in ("generic_p_nonzero", "p_zero_generic_delta"):
                for sv in find_singular(verma, N, mode):
                    out.append(Check(f"radical ell={ell} N={N} {mode} {sv}",
                                     radical_check(sv.vector.pres, sv)["in_radical"]))
    for ell in range(1, 6):
        out.append(Check(f"pi_R homomorphism ell={ell}", all(pi_R_homomorphism_check(AlgebraConfig(ell)).values())))
    return out


def run_suite(name: str, seed: int = 0) -> list[Check]:
    if name == "prop1":
        return suite_determinants()
    if name == "props345":
        return suite_families()
    if name == "prop6":
        return suite_pde(False)
    if name == "prop7":
        return suite_pde(True)
    if name == "lemmas6":
        return suite_towers()
    if name == "structure":
        return suite_structure(seed)
    if name == "all":
        out = []
        for s in SUITES[:-1]:
            out.extend(run_suite(s, seed))
        return out
    raise ValueError(f"unknown suite {name!r}")
