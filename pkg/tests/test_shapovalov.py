import pytest
from hypothesis import given, strategies as st

from cgarep.exact import DELTA, ONE, P as P_SYMBOL, ParamPoly
from cgarep.liealg import AlgebraConfig, omega_generator
from cgarep.shapovalov import (factor_det, gram, ell1_pairing_check, pure_p_row_check, pairing, pairing_by_normal_order,
                               ell1_det_abs, verify_prop1)
from cgarep.verma import ModulePresentation, act, level_basis, vector_from_label


def test_ell1_level1_matrix():
    rep = gram(ModulePresentation.verma(AlgebraConfig(1)), 1)
    assert [str(b) for b in rep.basis] == ["H", "P0"]
    two_p = P_SYMBOL * 2
    assert rep.matrix.to_lists() == [[DELTA * 2, two_p], [two_p, ParamPoly()]]
    assert rep.determinant == ParamPoly.monomial(-4, 0, 2)


def test_ell1_level2_determinant():
    det = gram(ModulePresentation.verma(AlgebraConfig(1)), 2).determinant
    assert det == ParamPoly.monomial(-256, 0, 6) or det == ParamPoly.monomial(256, 0, 6)
    assert ell1_det_abs(2) == ParamPoly.monomial(256, 0, 6)


def test_empty_level_has_unit_determinant():
    pres = ModulePresentation.verma(AlgebraConfig(2)).with_annihilated(1).with_annihilated(0).with_h_power(1)
    assert gram(pres, 1).determinant == ONE


@pytest.mark.parametrize("ell,N", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2)])
def test_two_routes_agree(ell, N):
    pres = ModulePresentation.verma(AlgebraConfig(ell))
    rep = gram(pres, N)
    for i, a in enumerate(rep.basis):
        for j, b in enumerate(rep.basis):
            assert pairing_by_normal_order(pres, a, b) == rep.matrix[i, j]


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_gram_symmetric(ell):
    pres = ModulePresentation.verma(AlgebraConfig(ell))
    for N in range(5):
        m = gram(pres, N).matrix
        assert m == m.transpose()


@given(st.integers(1, 3), st.integers(0, 3), st.data())
def test_contravariance(ell, N, data):
    cfg = AlgebraConfig(ell)
    pres = ModulePresentation.verma(cfg)
    g = data.draw(st.sampled_from(cfg.generators()))
    x = vector_from_label(pres, data.draw(st.sampled_from(level_basis(pres, N))))
    gx = act(pres, g, x)
    if not gx:
        return
    y_level = gx.level()
    ys = level_basis(pres, y_level)
    if not ys:
        return
    y = vector_from_label(pres, data.draw(st.sampled_from(ys)))
    assert pairing(pres, gx, y) == pairing(pres, x, act(pres, omega_generator(cfg, g), y))


def test_pairing_vanishing_patterns():
    assert all(r["ok"] for r in ell1_pairing_check(5))
    assert all(r["ok"] for r in pure_p_row_check(4, 4))


def test_determinant_rows():
    rows = verify_prop1(3, 3)
    assert all(r["ok"] for r in rows)
    assert len(rows) == 9


def test_factored_form():
    f = factor_det(ParamPoly.parse("-12*d*p^3 - 6*p^4"))
    assert (f.sign, f.p_power, f.delta_power) == (-1, 3, 0)
    assert f.expand() == ParamPoly.parse("-12*d*p^3 - 6*p^4")
    assert str(factor_det(ParamPoly())) == "0"


def test_report_serialization():
    rep = gram(ModulePresentation.verma(AlgebraConfig(1)), 1)
    js = rep.to_json()
    assert js["det"] == "-4*p^2"
    assert js["basis"] == ["H", "P0"]
    assert "det = -4*p^2" in rep.to_text()
