import pytest
from hypothesis import given, strategies as st

from cgarep.exact import ParamPoly
from cgarep.liealg import (C, D, H, AlgebraConfig, ConfigError, Generator, LieElement, P, bracket, degree,
                           jacobi_check, lowering, omega, omega_generator, raising, spacetime_bracket_check,
                           structure_constants, triangular_part)


def table(ell: int, x: Generator, y: Generator) -> dict:
    """Brackets written out independently of the package, antisymmetrized."""
    def one_way(a, b):
        if (a, b) == (D, H):
            return {H: 1}
        if (a, b) == (D, C):
            return {C: -1}
        if (a, b) == (C, H):
            return {D: 2}
        if a == H and b.kind == "P":
            return {P(b.index - 1): -b.index} if b.index else {}
        if a == D and b.kind == "P":
            return {b: ell - b.index} if ell != b.index else {}
        if a == C and b.kind == "P":
            return {P(b.index + 1): 2 * ell - b.index} if b.index < 2 * ell else {}
        return None
    r = one_way(x, y)
    if r is not None:
        return r
    r = one_way(y, x)
    if r is not None:
        return {g: -c for g, c in r.items()}
    return {}


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_structure_constants_match_table(ell):
    cfg = AlgebraConfig(ell)
    for x in cfg.generators():
        for y in cfg.generators():
            got = {g: c for g, c in structure_constants(cfg, x, y).items() if c}
            assert got == table(ell, x, y), (x, y)


def test_bracket_examples():
    cfg = AlgebraConfig(2)
    assert bracket(cfg, C, H) == LieElement({D: ParamPoly.const(2)})
    assert bracket(cfg, H, P(3)) == LieElement({P(2): ParamPoly.const(-3)})
    assert bracket(cfg, C, P(4)) == LieElement({})
    assert bracket(cfg, D, P(2)) == LieElement({})


@pytest.mark.parametrize("ell", range(1, 7))
def test_jacobi(ell):
    assert all(jacobi_check(AlgebraConfig(ell)).values())


@pytest.mark.parametrize("ell", range(1, 7))
def test_spacetime_realization(ell):
    assert all(spacetime_bracket_check(AlgebraConfig(ell)).values())


@given(st.integers(1, 5), st.data())
def test_omega_is_anti_involution(ell, data):
    cfg = AlgebraConfig(ell)
    gens = cfg.generators()
    x = data.draw(st.sampled_from(gens))
    y = data.draw(st.sampled_from(gens))
    assert omega_generator(cfg, omega_generator(cfg, x)) == x
    assert omega(cfg, bracket(cfg, x, y)) == bracket(cfg, omega(cfg, y), omega(cfg, x))


@given(st.integers(1, 5), st.data())
def test_degree_is_additive(ell, data):
    cfg = AlgebraConfig(ell)
    x = data.draw(st.sampled_from(cfg.generators()))
    y = data.draw(st.sampled_from(cfg.generators()))
    for g in bracket(cfg, x, y).terms:
        assert degree(cfg, g) == degree(cfg, x) + degree(cfg, y)


def test_triangular_decomposition():
    cfg = AlgebraConfig(3)
    plus = [g for g in cfg.generators() if triangular_part(cfg, g) == "plus"]
    minus = [g for g in cfg.generators() if triangular_part(cfg, g) == "minus"]
    zero = [g for g in cfg.generators() if triangular_part(cfg, g) == "zero"]
    assert set(plus) == set(raising(cfg)) == {H, P(0), P(1), P(2)}
    assert set(minus) == set(lowering(cfg)) == {C, P(4), P(5), P(6)}
    assert set(zero) == {D, P(3)}
    assert omega_generator(cfg, P(1)) == P(5)


def test_bad_config():
    with pytest.raises(ConfigError):
        AlgebraConfig(0)
    with pytest.raises(ConfigError):
        degree(AlgebraConfig(1), P(3))


def test_generator_parse():
    assert Generator.parse("P12") == P(12)
    assert Generator.parse(" H ") == H
    with pytest.raises(ValueError):
        Generator.parse("Q1")
