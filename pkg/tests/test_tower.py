import json

import pytest

from cgarep.exact import ParamPoly, Q, ZERO
from cgarep.liealg import AlgebraConfig, C
from cgarep.tower import (build_tower, is_singular_in_verma, lift_to_verma, stage_det_abs, quotient_shap_det,
                          representation_check, stage_relation_coefficient, subsingular_census)
from cgarep.verma import ModulePresentation, StructuralError, Weight, act, level_basis, vector_from_label

p = ParamPoly.p()


def test_first_relation_matches_closed_form():
    # P_{l-2}|u0> = (l+2)/(2p(l+1)) P_{l-1}^2 |u0>
    for ell in (2, 3, 4):
        rep = build_tower(AlgebraConfig(ell))
        pres = rep.stages[1].presentation
        assert pres.relation_map()[2] == ParamPoly.monomial(Q(ell + 2) / (2 * (ell + 1)), 0, -1)
        assert stage_relation_coefficient(ell, 2) == pres.relation_map()[2]


def test_later_relations():
    rep = build_tower(AlgebraConfig(4))
    rel = rep.terminal.presentation.relation_map()
    for a in (2, 3, 4):
        assert rel[a] == stage_relation_coefficient(4, a)
    # (l+2)(l+3)/(3! p^2 (l+1)^2) at l=4
    assert rel[3] == ParamPoly.monomial(Q(42) / (6 * 25), 0, -2)


def test_subsingular_flags():
    census = subsingular_census(AlgebraConfig(4))
    assert [row["subsingular"] for row in census] == [False, True, True]
    rep = build_tower(AlgebraConfig(3))
    v = rep.stages[1].found_singular.vector
    assert not is_singular_in_verma(rep.stages[1].presentation, v)
    # in the Verma module the stage-2 vector fails C-annihilation
    verma = ModulePresentation.verma(AlgebraConfig(3))
    assert act(verma, C, lift_to_verma(rep.stages[1].presentation, v))


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_quotient_determinants(ell):
    rep = build_tower(AlgebraConfig(ell))
    for st in rep.stages:
        for N in range(1, st.index + 1):
            det = quotient_shap_det(st, N)
            assert det == stage_det_abs(ell, N) or det == -stage_det_abs(ell, N)


def test_stage_levels_one_dimensional_at_p_zero():
    # p = 0, generic delta: level N <= lam of stage lam is spanned by H^N
    rep = build_tower(AlgebraConfig(3), Weight(ParamPoly.delta(), ZERO), "p_zero", 6)
    for st in rep.stages[:-1]:
        for N in range(1, st.index + 1):
            assert [str(b) for b in level_basis(st.presentation, N)] == ["H" if N == 1 else f"H^{N}"]


@pytest.mark.parametrize("ell", [1, 2, 3])
@pytest.mark.parametrize("delta", ["-1/2", "-1", "-2", "0", "1/3"])
def test_representation_property_along_tower(ell, delta):
    rep = build_tower(AlgebraConfig(ell), Weight(Q(delta), ZERO), "p_zero", ell + 4)
    for st in rep.stages:
        pres = st.presentation
        vecs = [vector_from_label(pres, b) for N in range(4) for b in level_basis(pres, N)]
        assert representation_check(pres, vecs)["ok"]


def test_sl2_dimensions():
    for d, dim in (("-1/2", 2), ("-1", 3), ("-3/2", 4), ("-5/2", 6)):
        rep = build_tower(AlgebraConfig(2), Weight(Q(d), ZERO), "p_zero", 8)
        assert rep.sl2_dimension() == dim
    assert build_tower(AlgebraConfig(2), Weight(Q("1/3"), ZERO), "p_zero", 8).sl2_dimension() == "infinite"


def test_delta_zero_records_skipped_h():
    rep = build_tower(AlgebraConfig(2), Weight(ZERO, ZERO), "p_zero", 5)
    assert any("H" in s for st in rep.stages for s in st.skipped)
    assert rep.terminal.presentation.describe()[-1] == "H|u0> = 0"


def test_report_json_and_text():
    rep = build_tower(AlgebraConfig(3))
    js = rep.to_json()
    json.dumps(js)
    assert js["schema_version"] == 1
    assert [s["singular_level"] for s in js["stages"]] == [2, 3]
    assert js["terminal"]["basis_shape"] == "H^k P2^m"
    assert "terminal" in rep.to_text()


def test_bad_modes():
    with pytest.raises(ValueError):
        build_tower(AlgebraConfig(2), mode="sideways")
    with pytest.raises(ValueError):
        build_tower(AlgebraConfig(2), Weight(ParamPoly.delta(), ZERO), "generic_p_nonzero")


def test_inconsistent_presentation_is_rejected():
    pres = ModulePresentation.verma(AlgebraConfig(2)).with_annihilated(1)
    with pytest.raises(StructuralError):
        pres.with_relation(2, p)
