import pytest
from hypothesis import given, strategies as st

from cgarep.diffop import DiffOp
from cgarep.exact import ParamPoly
from cgarep.liealg import C, D, H, AlgebraConfig, ConfigError, P, spacetime_fields
from cgarep.uea import UEAElement, ad, is_normal, normal_order, omega_word, pnh_closed_form


def word_strategy(ell, max_len=5):
    return st.lists(st.sampled_from(AlgebraConfig(ell).generators()), min_size=0, max_size=max_len)


def realize(cfg, x: UEAElement) -> DiffOp:
    """Image of a U(g) element under the (t, x) vector-field realization."""
    fields = spacetime_fields(cfg)
    out = DiffOp.zero(("t", "x"))
    for w, c in x.terms.items():
        op = DiffOp.identity(("t", "x"))
        for g in w:
            op = op.compose(fields[g])
        out = out + op.scale(c)
    return out


def test_examples():
    cfg = AlgebraConfig(2)
    got = normal_order(cfg, (P(2), H, H))
    expected = (UEAElement.word(2, H, H, P(2)) + UEAElement.word(2, H, P(1), coeff=4)
                + UEAElement.word(2, P(0), coeff=2))
    assert got == expected
    assert normal_order(cfg, (D, H)) == UEAElement.word(2, H, D) + UEAElement.word(2, H)
    assert normal_order(cfg, (C, H)) == UEAElement.word(2, H, C) + UEAElement.word(2, D, coeff=2)


@pytest.mark.parametrize("ell", [1, 2, 3])
@given(data=st.data())
def test_confluence(ell, data):
    cfg = AlgebraConfig(ell)
    w = tuple(data.draw(word_strategy(ell)))
    left = normal_order(cfg, w, "left")
    assert left == normal_order(cfg, w, "right")
    assert all(is_normal(ell, v) for v in left.terms)


@pytest.mark.parametrize("ell", [1, 2])
@given(data=st.data())
def test_normal_order_preserved_by_realization(ell, data):
    # the realization is a homomorphism, so a word and its normal form have the same image
    cfg = AlgebraConfig(ell)
    w = tuple(data.draw(word_strategy(ell, 4)))
    assert realize(cfg, UEAElement(ell, {w: 1}, normalize=False)) == realize(cfg, normal_order(cfg, w))


@given(st.integers(1, 3), st.data())
def test_associativity(ell, data):
    x, y, z = (UEAElement(ell, {tuple(data.draw(word_strategy(ell, 3))): 1}) for _ in range(3))
    assert (x * y) * z == x * (y * z)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_pnh_closed_form(ell):
    cfg = AlgebraConfig(ell)
    for n in range(1, 2 * ell + 1):
        for k in range(0, 5):
            hk = UEAElement.word(ell, *[H] * k)
            assert ad(cfg, P(n), hk) == pnh_closed_form(cfg, n, k)


def test_pnh_rejects_bad_index():
    with pytest.raises(ConfigError):
        pnh_closed_form(AlgebraConfig(1), 3, 1)


@given(st.integers(1, 3), st.data())
def test_omega_word_reverses_products(ell, data):
    cfg = AlgebraConfig(ell)
    x = UEAElement(ell, {tuple(data.draw(word_strategy(ell, 3))): 1})
    y = UEAElement(ell, {tuple(data.draw(word_strategy(ell, 3))): 1})
    assert omega_word(cfg, x * y) == omega_word(cfg, y) * omega_word(cfg, x)
    assert omega_word(cfg, omega_word(cfg, x)) == x


def test_coefficients_are_param_polys():
    x = UEAElement.word(1, H, coeff=ParamPoly.p())
    assert str(x * x) == "p^2*H^2"
