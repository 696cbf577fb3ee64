"""Jordan product, forms, cross product, split form, involutions on J^C."""

import itertools
import random

import pytest

from exlie.jordan import (
    E1,
    E2,
    E3,
    E_IDENT,
    J27,
    SplitElement,
    bilinear,
    cross,
    forms,
    gram_diagonal,
    hermitian,
    involution,
    jordan_basis,
    jordan_mul,
    op_cross,
    op_mul,
    split_iso,
    split_iso_inv,
    trace,
)
from exlie.linalg import LinearOperator, operator_of, rank
from exlie.octonions import Octonion
from exlie.scalars import Cyclo, Rat, ZERO, ONE, I

rng = random.Random(0)


def rnd(lo=-3, hi=4):
    return J27([Cyclo(Rat(rng.randrange(lo, hi))) for _ in range(27)])


def test_unit_and_idempotents():
    x = rnd()
    assert jordan_mul(E_IDENT, x) == x
    assert jordan_mul(E1, E1) == E1
    assert jordan_mul(E1, E2).is_zero()


def test_f_element_square():
    f1e2 = J27.f_element(1, Octonion.unit(2))
    assert jordan_mul(f1e2, f1e2) == E2 + E3


def test_forms_examples():
    f1e2 = J27.f_element(1, Octonion.unit(2))
    assert trace(E_IDENT) == Cyclo(3)
    assert bilinear(E1, E2) == ZERO
    assert bilinear(f1e2, f1e2) == Cyclo(2)
    t, b, h = forms(E_IDENT, E_IDENT)
    assert (t, b, h) == (Cyclo(3), Cyclo(3), Cyclo(3))


def test_commutativity_and_trace_associativity():
    basis = jordan_basis()
    for x, y in itertools.combinations(basis, 2):
        assert jordan_mul(x, y) == jordan_mul(y, x)
    for _ in range(40):
        x, y, z = rnd(), rnd(), rnd()
        assert bilinear(jordan_mul(x, y), z) == bilinear(x, jordan_mul(y, z))


def test_trace_associativity_all_basis_triples():
    basis = jordan_basis()
    prods = [[jordan_mul(x, y) for y in basis] for x in basis]
    for i in range(27):
        for j in range(27):
            for k in range(27):
                assert bilinear(prods[i][j], basis[k]) == bilinear(basis[i], prods[j][k])


def test_gram_rank_27():
    g = gram_diagonal()
    mat = [[g[i] if i == j else Rat(0) for j in range(27)] for i in range(27)]
    assert rank(mat) == 27
    assert all(x > 0 for x in g)


def test_cross_examples():
    assert cross(E_IDENT, E_IDENT) == E_IDENT
    assert cross(E1, E1).is_zero()
    x, y = rnd(), rnd()
    assert cross(x, y) == cross(y, x)


def test_cross_matches_formula():
    for _ in range(15):
        x, y = rnd(), rnd()
        half = Rat(1, 2)
        expected = (
            jordan_mul(x, y).scale(Cyclo(2))
            - y.scale(trace(x))
            - x.scale(trace(y))
            + E_IDENT.scale(trace(x) * trace(y) - bilinear(x, y))
        ).scale(Cyclo(half))
        assert cross(x, y) == expected


def test_operator_builders():
    a = rnd()
    x = rnd()
    assert J27(op_mul(a).apply(list(x.coords))) == jordan_mul(a, x)
    assert J27(op_cross(a).apply(list(x.coords))) == cross(a, x)


def test_split_round_trip():
    for b in jordan_basis():
        assert split_iso(split_iso_inv(b)) == b
    x = rnd()
    assert split_iso(split_iso_inv(x)) == x


def test_split_diag_and_column():
    s = split_iso_inv(J27.diag(Cyclo(1), Cyclo(2), Cyclo(3)))
    assert all(s.M[i][j].is_zero() for i in range(3) for j in range(3))
    # column 1 of M with entry (1,0,0) lands on e2 in the x1 slot
    from exlie.complexmat import CPair, CP_ZERO

    m = [[CP_ZERO] * 3 for _ in range(3)]
    m[0][0] = CPair(ONE, ZERO)
    x = SplitElement([[CP_ZERO] * 3 for _ in range(3)], m).to_jordan()
    assert x == J27.f_element(1, Octonion.unit(2))


def test_involution_signs():
    sig = involution("sigma")
    fixed = sum(1 for s in sig.signs if s > 0)
    assert (fixed, 27 - fixed) == (11, 16)
    # sigma negates the x3 slot
    f3 = J27.f_element(3, Octonion.unit(0))
    assert sig.apply(f3) == -f3
    # operator_of materialization agrees with the sign action
    basis = jordan_basis()
    op = operator_of(sig.apply, basis, lambda v: list(v.coords), "jordan27")
    assert op == sig.operator()


def test_involutions_square_and_commute():
    names = ("gamma", "gamma_p", "gamma1", "sigma", "sigma_p")
    ops = [involution(n).operator() for n in names]
    ident = LinearOperator.identity(27)
    for op in ops:
        assert op.compose(op) == ident
    for a, b in itertools.combinations(ops, 2):
        assert a.compose(b) == b.compose(a)
    with pytest.raises(ValueError):
        involution("lambda")


def test_tau_conjugate_linear_and_commutes():
    x = rnd()
    ix = x.scale(I)
    assert ix.tau() == -(x.tau().scale(I))
    for n in ("gamma", "gamma_p", "sigma", "sigma_p"):
        m = involution(n)
        assert m.apply(x.tau()) == m.apply(x).tau()


def test_hermitian_positive_on_real_basis():
    for b in jordan_basis():
        assert hermitian(b, b) in (Cyclo(1), Cyclo(2))
    x = rnd()
    y = rnd()
    assert hermitian(y, x) == hermitian(x, y).tau()


def test_hermitian_of_complexified():
    r = rnd()
    x = r.scale(I)
    assert hermitian(x, x) == bilinear(r, r)
