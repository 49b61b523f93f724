import pytest
import sympy
from hypothesis import given, strategies as st

from cgarep.exact import DELTA, ONE, P as P_SYMBOL, ZERO, ParamPoly, Q
from cgarep.liealg import C, D, H, AlgebraConfig, P
from cgarep.tower import representation_check
from cgarep.uea import normal_order
from cgarep.verma import (BasisLabel, ModulePresentation, StructuralError, VermaVector, Weight, act,
                          grading_shift, label_vector, level_basis, level_dimension_bruteforce,
                          vector_from_label)


def series_dimensions(ell: int, top: int) -> list[int]:
    """Coefficients of 1/((1-q)^2 prod_{i=2}^{ell} (1-q^i)) up to q^top."""
    q = sympy.Symbol("q")
    f = 1 / (1 - q) ** 2
    for i in range(2, ell + 1):
        f = f / (1 - q ** i)
    s = sympy.series(f, q, 0, top + 1).removeO()
    return [int(s.coeff(q, n)) for n in range(top + 1)]


def act_by_normal_order(pres: ModulePresentation, g, label: BasisLabel) -> VermaVector:
    """Normal-order g * word(label) in U(g) and let the lowest weight vector absorb the tail."""
    ell = pres.ell
    x = normal_order(pres.cfg, (g,) + label.word())
    out = {}
    for word, c in x.terms.items():
        k = 0
        m = [0] * ell
        coeff = c
        for gen in word:
            if gen == H:
                k += 1
            elif gen.kind == "P" and gen.index < ell:
                m[ell - gen.index - 1] += 1
            elif gen == D:
                coeff = coeff * pres.weight.delta
            elif gen.kind == "P" and gen.index == ell:
                coeff = coeff * pres.weight.p
            else:
                coeff = ZERO
                break
        if coeff:
            lab = BasisLabel(k, tuple(m))
            out[lab] = out.get(lab, ZERO) + coeff
    return VermaVector(pres, out)


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_level_dimensions(ell):
    dims = series_dimensions(ell, 7)
    pres = ModulePresentation.verma(AlgebraConfig(ell))
    for N, d in enumerate(dims):
        assert len(level_basis(pres, N)) == d == level_dimension_bruteforce(ell, N)


def test_level_two_basis_example():
    pres = ModulePresentation.verma(AlgebraConfig(2))
    assert set(level_basis(pres, 2)) == {BasisLabel(2, (0, 0)), BasisLabel(1, (1, 0)),
                                          BasisLabel(0, (2, 0)), BasisLabel(0, (0, 1))}


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_action_matches_normal_ordering(ell):
    cfg = AlgebraConfig(ell)
    pres = ModulePresentation.verma(cfg)
    for N in range(4):
        for lab in level_basis(pres, N):
            v = vector_from_label(pres, lab)
            for g in cfg.generators():
                assert act(pres, g, v) == act_by_normal_order(pres, g, lab), (g, lab)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_label_vector_matches_basis_vector(ell):
    pres = ModulePresentation.verma(AlgebraConfig(ell))
    for lab in level_basis(pres, 3):
        assert label_vector(pres, lab) == vector_from_label(pres, lab)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_representation_property_on_verma(ell):
    pres = ModulePresentation.verma(AlgebraConfig(ell))
    vecs = [vector_from_label(pres, b) for N in range(4) for b in level_basis(pres, N)]
    assert representation_check(pres, vecs)["ok"]


def test_representation_property_with_relations():
    ell = 3
    p = P_SYMBOL
    pres = ModulePresentation.verma(AlgebraConfig(ell)).with_relation(2, ParamPoly.monomial(Q("5/8"), 0, -1))
    vecs = [vector_from_label(pres, b) for N in range(4) for b in level_basis(pres, N)]
    assert representation_check(pres, vecs)["ok"]
    # an arbitrary coefficient breaks consistency: the relation must come from a singular vector
    bad = ModulePresentation.verma(AlgebraConfig(ell)).with_relation(2, p)
    vecs = [vector_from_label(bad, b) for N in range(4) for b in level_basis(bad, N)]
    assert not representation_check(bad, vecs)["ok"]


@given(st.integers(1, 3), st.integers(0, 4), st.data())
def test_grading(ell, N, data):
    cfg = AlgebraConfig(ell)
    pres = ModulePresentation.verma(cfg)
    basis = level_basis(pres, N)
    lab = data.draw(st.sampled_from(basis))
    g = data.draw(st.sampled_from(cfg.generators()))
    v = act(pres, g, vector_from_label(pres, lab))
    assert all(l.level == N + grading_shift(pres, g) for l in v.terms)
    assert act(pres, D, vector_from_label(pres, lab)) == vector_from_label(pres, lab).scale(DELTA + N)


@given(st.fractions(-3, 3, max_denominator=4), st.fractions(-3, 3, max_denominator=4))
def test_specialization_commutes_with_action(d0, p0):
    d0, p0 = Q(str(d0)), Q(str(p0))
    cfg = AlgebraConfig(2)
    pres = ModulePresentation.verma(cfg)
    specialized = pres.specialize(delta=d0, p=p0)
    for lab in level_basis(pres, 2):
        for g in (C, P(3), P(4), P(2)):
            a = act(pres, g, vector_from_label(pres, lab)).subs(delta=d0, p=p0)
            b = act(specialized, g, vector_from_label(specialized, lab))
            assert a.terms == b.terms


def test_simple_actions():
    pres = ModulePresentation.verma(AlgebraConfig(1))
    h = vector_from_label(pres, BasisLabel(1, (0,)))
    assert act(pres, C, h) == pres.vacuum().scale(DELTA * 2)
    assert act(pres, P(1), h) == h.scale(P_SYMBOL) + vector_from_label(pres, BasisLabel(0, (1,)))
    assert not act(pres, P(2), pres.vacuum())


def test_presentation_validation():
    cfg = AlgebraConfig(3)
    with pytest.raises(StructuralError):
        ModulePresentation.verma(cfg).with_h_power(2)
    with pytest.raises(StructuralError):
        ModulePresentation.verma(cfg).with_relation(2, ONE).with_relation(2, ONE)
    with pytest.raises(StructuralError):
        ModulePresentation.verma(cfg).with_annihilated(3)


def test_truncated_module_dimension():
    cfg = AlgebraConfig(2)
    pres = ModulePresentation.verma(cfg, Weight(Q(-1), 0)).with_annihilated(1).with_annihilated(0).with_h_power(3)
    assert pres.finite_dimension() == 3
    assert [len(level_basis(pres, N)) for N in range(5)] == [1, 1, 1, 0, 0]


def test_label_json_round_trip():
    lab = BasisLabel(2, (1, 0, 3))
    assert BasisLabel.from_json(lab.to_json()) == lab
    assert str(lab) == "H^2*P2*P0^3"
    assert lab.level == 2 + 1 + 9
