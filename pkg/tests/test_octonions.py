"""Octonion table pins, alternativity, norm, involutions, derivations."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from exlie.linalg import LinearOperator
from exlie.octonions import (
    TABLE,
    Octonion,
    alternativity_failures,
    embed_c3,
    g2_derivation_basis,
    g2_derivations_and_torus,
    g2_involution,
    pinned_product_failures,
)
from exlie.scalars import Cyclo, Rat, ZERO, ONE

e = Octonion.unit


def test_pinned_products():
    assert pinned_product_failures(TABLE) == []
    assert e(1) * e(2) == e(3)
    assert e(1) * e(4) == e(5)
    assert e(1) * e(6) == e(7)
    assert e(2) * e(4) == e(6)


def test_alternativity_all_triples():
    assert alternativity_failures(TABLE) == []


def test_corrupted_table_breaks_alternativity():
    assert alternativity_failures(TABLE.corrupted()) != []


def test_left_right_alternative_laws():
    for a, b in itertools.product(range(8), range(8)):
        x, y = e(a), e(b)
        assert x * (x * y) == (x * x) * y
        assert (y * x) * x == y * (x * x)


def test_norm_identity_example():
    x = Octonion.from_rats([1, 0, 2, 0, 0, 3, 0, 0])
    n = x.norm()
    assert n == Cyclo(14)
    assert x * x.conj() == Octonion((n,) + (ZERO,) * 7)


def test_associator_example():
    assert (e(2) * e(4)) * e(4) == -e(2)
    assert e(2) * (e(4) * e(4)) == -e(2)


def oct_strategy():
    rat = st.integers(min_value=-5, max_value=5)
    return st.tuples(*([rat] * 8)).map(lambda t: Octonion.from_rats(t))


@settings(max_examples=100, deadline=None)
@given(oct_strategy(), oct_strategy())
def test_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@settings(max_examples=50, deadline=None)
@given(oct_strategy(), oct_strategy())
def test_conjugation_antihomomorphism(x, y):
    assert (x * y).conj() == y.conj() * x.conj()


def test_embed_c3():
    assert embed_c3((ONE, ZERO), (ZERO, ZERO), (ZERO, ZERO)) == e(2)
    assert embed_c3((ZERO, ONE), (ZERO, ZERO), (ZERO, ZERO)) == e(3)
    a, b = Cyclo(2), Cyclo(-5)
    assert embed_c3((ZERO, ZERO), (a, b), (ZERO, ZERO)) == e(4).scale(a) + e(5).scale(b)
    assert embed_c3((ZERO, ZERO), (ZERO, ZERO), (a, b)) == e(6).scale(a) + e(7).scale(b)


def _apply(op, x):
    return Octonion(op.apply(list(x.coords)))


def test_involutions_are_automorphisms():
    gam = g2_involution("gamma")
    gp = g2_involution("gamma_p")
    assert _apply(gam, e(4)) == -e(4)
    assert _apply(gp, e(2)) == -e(2)
    i8 = LinearOperator.identity(8)
    assert gam.compose(gam) == i8 and gp.compose(gp) == i8
    assert gam.compose(gp) == gp.compose(gam)
    for a, b in itertools.product(range(8), range(8)):
        for op in (gam, gp):
            assert _apply(op, e(a) * e(b)) == _apply(op, e(a)) * _apply(op, e(b))
    with pytest.raises(ValueError):
        g2_involution("sigma")


def test_derivation_dimension():
    assert len(g2_derivation_basis()) == 14


def test_derivations_kill_one_and_are_norm_skew():
    basis = g2_derivation_basis()
    units = [e(k) for k in range(8)]

    def polar(x, y):  # polarized norm form
        return ((x + y).norm() - x.norm() - y.norm()).scale(Rat(1, 2))

    for d in basis:
        assert _apply(d, e(0)).is_zero()
        for x in units:
            for y in units:
                assert polar(_apply(d, x), y) + polar(x, _apply(d, y)) == Cyclo(0)


def test_derivation_property_on_samples():
    basis = g2_derivation_basis()
    rng = random.Random(3)
    for _ in range(10):
        d = basis[rng.randrange(len(basis))]
        x = Octonion.from_rats([rng.randrange(-3, 4) for _ in range(8)])
        y = Octonion.from_rats([rng.randrange(-3, 4) for _ in range(8)])
        assert _apply(d, x * y) == _apply(d, x) * y + x * _apply(d, y)


def test_torus_dimension_and_abelian():
    g2, fixed = g2_derivations_and_torus()
    assert len(g2) == 14
    assert len(fixed) == 2
    for a in fixed:
        for b in fixed:
            assert a.commutator(b).is_zero()
