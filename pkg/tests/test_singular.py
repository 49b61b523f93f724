import pytest
from hypothesis import given, strategies as st

from cgarep.exact import ParamPoly, Q, ZERO, proportional
from cgarep.liealg import AlgebraConfig, H, P
from cgarep.shapovalov import gram
from cgarep.singular import (FAMILIES, InadmissibleFamilyError, SolveMode, a_coeff, admissible_ns, apply_power,
                             b_coeff, check_admissible, construct_family, family_level, find_singular,
                             in_kernel_span, radical_check, uea_constant_ratio, verify_singular)
from cgarep.uea import UEAElement
from cgarep.verma import BasisLabel, ModulePresentation, level_basis

p = ParamPoly.p()


def words(ell, *items):
    out = UEAElement(ell)
    for c, idx in items:
        out = out + UEAElement.word(ell, *[P(i) for i in idx], coeff=c)
    return out


def test_level_two_vector_at_ell_2():
    pres = ModulePresentation.verma(AlgebraConfig(2))
    found = find_singular(pres, 2)
    assert len(found) == 1
    basis = level_basis(pres, 2)
    expected = {BasisLabel(0, (0, 1)): p * 6, BasisLabel(0, (2, 0)): ParamPoly.const(-4)}
    coords = found[0].vector.coordinates(basis)
    assert proportional(coords, [expected.get(b, ZERO) for b in basis])
    assert str(found[0]) == "2*P1^2 - 3*p*P0"
    assert found[0].eigen_delta == ParamPoly.delta() + 2


def test_no_singular_vectors_at_level_one_generic():
    for ell in range(1, 5):
        assert not find_singular(ModulePresentation.verma(AlgebraConfig(ell)), 1)


def test_p_zero_level_one():
    pres = ModulePresentation.verma(AlgebraConfig(2))
    strict = find_singular(pres, 1, ("specialized", 0, 0))
    assert [str(s) for s in strict] == ["P1"]
    relaxed = find_singular(pres, 1, ("specialized", 0, 0), require_p_eigen=False)
    assert sorted(str(s) for s in relaxed) == ["H", "P1"]
    # H|u0> is not a P_ell eigenvector: P_2 H u0 = 2 P_1 u0
    assert not find_singular(pres, 1, ("specialized", 1, 0), require_p_eigen=False)[0].vector.terms.get(
        BasisLabel(1, (0, 0)))


def test_solve_mode_coercion():
    assert SolveMode.coerce("p_zero_generic_delta").conditions() == [p]
    with pytest.raises(ValueError):
        SolveMode("bogus")
    with pytest.raises(ValueError):
        SolveMode("specialized", delta=1)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_singular_vectors_span_gram_radical(ell):
    pres = ModulePresentation.verma(AlgebraConfig(ell))
    for N in range(1, 4):
        found = find_singular(pres, N)
        for sv in found:
            assert radical_check(pres, sv)["in_radical"]
        if found:
            assert gram(pres, N).determinant == ZERO


def test_hand_transcription_s_odd_n1():
    ell = 4
    # p^2 P_{l-3} - (l+3)/(l+1) p P_{l-2} P_{l-1} + (l+2)(l+3)/(3(l+1)^2) P_{l-1}^3
    hand = words(ell, (p * p, (ell - 3,)), (p * Q(-(ell + 3)) / (ell + 1), (ell - 1, ell - 2)),
                 (ParamPoly.const(Q((ell + 2) * (ell + 3)) / (3 * (ell + 1) ** 2)), (ell - 1,) * 3))
    got = construct_family(AlgebraConfig(ell), "S_odd", 1)
    assert got == hand


def test_hand_transcription_t_n1():
    ell = 5
    hand = words(ell, (ParamPoly.const(ell + 2), (ell - 1,) * 3),
                 (p * (-3 * (ell + 1)), (ell - 1, ell - 2)),
                 (p * p * Q(3 * (ell + 1) ** 2) / (ell + 3), (ell - 3,)))
    assert uea_constant_ratio(construct_family(AlgebraConfig(ell), "T", 1), hand) is not None


def test_coefficient_tables():
    # (-1)^j l! (l+2n)! / ((l+j)! (l+2n-j)!) at l=4, n=2, j=1
    assert a_coeff(4, 2, 1) == ParamPoly.const(Q(-24 * 40320) / (120 * 5040))
    # (-1)^j (2n-1-2j) l! (l+2n+1)! / ((2n+1) (l+j+1)! (l+2n-j)!) p at l=5, n=2, j=1
    assert b_coeff(5, 2, 1) == p * (Q(-120 * 3628800) / (5 * 5040 * 40320))
    assert b_coeff(5, 2, 1) == p * Q("-3/7")


def test_perturbed_vector_fails():
    ell = 3
    cfg = AlgebraConfig(ell)
    pres = ModulePresentation.verma(cfg)
    x = construct_family(cfg, "S_even", 1)
    bad = x + UEAElement.word(ell, P(ell - 1), P(ell - 1), coeff=Q("1/7"))
    rep = verify_singular(pres, bad)
    assert not rep["ok"]
    assert not rep["checks"]["C_annihilates"]
    assert rep["checks"]["D_eigen"]


@pytest.mark.parametrize("family", FAMILIES)
def test_degree_bookkeeping(family):
    cfg = AlgebraConfig(5)
    pres = ModulePresentation.verma(cfg)
    if family in ("S_tilde", "P_S_tilde", "P_top"):
        pres = pres.specialize(p=0)
    ns = [1] if family == "P_top" else admissible_ns(cfg, family, 2)
    for n in ns:
        x = construct_family(cfg, family, n)
        for k in (1, 2):
            v = apply_power(pres, x, k)
            assert v.levels() == {k * family_level(family, n)}


def test_admissibility():
    cfg = AlgebraConfig(3)
    with pytest.raises(InadmissibleFamilyError, match="ell - 2n >= 0"):
        check_admissible(cfg, "S_even", 2)
    with pytest.raises(InadmissibleFamilyError):
        check_admissible(AlgebraConfig(2), "T", 1)
    notes = check_admissible(cfg, "S_tilde", 2)
    assert notes and "boundary" in notes[0]
    assert verify_singular(ModulePresentation.verma(cfg).specialize(p=0),
                           construct_family(cfg, "S_tilde", 2))["ok"]
    with pytest.raises(ValueError):
        check_admissible(cfg, "nope", 1)


@given(st.integers(2, 4), st.fractions(-3, 3, max_denominator=5).filter(bool))
def test_kernel_is_closed_under_scaling(ell, c):
    pres = ModulePresentation.verma(AlgebraConfig(ell))
    for sv in find_singular(pres, 2):
        v = sv.vector.scale(Q(str(c)))
        assert in_kernel_span(pres, v)


def test_h_is_not_in_kernel():
    pres = ModulePresentation.verma(AlgebraConfig(2))
    v = apply_power(pres, UEAElement.generator(2, H), 1)
    assert not in_kernel_span(pres, v)
