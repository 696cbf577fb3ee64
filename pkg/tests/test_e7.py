"""Freudenthal space, e7 quadruples, bracket, involutions, Theorem-level checks."""

import random

import pytest

from exlie.e7 import (
    E7Element,
    PDIM,
    PVector,
    conj_quadruple,
    conj_quadruple_by_probes,
    cross_pq,
    e7_apply,
    e7_basis,
    e7_bracket,
    e7_materialize,
    e7_rank,
    hermitian_form,
    is_e7_algebra,
    is_e7_group,
    lambda_pmap,
    lambda_twist_failures,
    p_involution,
    skew_form,
    theorem_43,
    vee,
    PMap,
)
from exlie.jordan import E1, E2, E3, E_IDENT, J27, gram_diagonal
from exlie.linalg import LinearOperator
from exlie.octonions import Octonion
from exlie.scalars import Cyclo, Rat, ZERO, ONE, I

rng = random.Random(0)


def rj(lo=-2, hi=3):
    return J27([Cyclo(Rat(rng.randrange(lo, hi))) for _ in range(27)])


def rp():
    return PVector(rj(), rj(), Cyclo(Rat(rng.randrange(-2, 3))), Cyclo(Rat(rng.randrange(-2, 3))))


def re7():
    from exlie.f4e6 import e6_basis

    ops = e6_basis()
    acc = LinearOperator.zero(27, "jordan27")
    for k in rng.sample(range(78), 5):
        acc = acc + ops[k].scale(Cyclo(Rat(rng.randrange(-2, 3))))
    return E7Element(acc, rj(), rj(), Cyclo(Rat(rng.randrange(-2, 3)), 0, 0, Rat(rng.randrange(-2, 3))))


def test_action_formula_probes():
    a = J27.f_element(1, Octonion.unit(2))
    zero_phi = LinearOperator.zero(27, "jordan27")
    out = e7_apply(E7Element(zero_phi, a, J27.zero(), ZERO), PVector.basis(55))
    assert out.x == a and out.y.is_zero() and out.xi.is_zero() and out.eta.is_zero()
    out = e7_apply(E7Element(zero_phi, J27.zero(), a, ZERO), PVector.basis(54))
    assert out.y == a and out.x.is_zero()
    phi = LinearOperator.diagonal([2] * 27, "jordan27")
    out = e7_apply(E7Element.from_phi(phi), PVector(E1, J27.zero(), ZERO, ZERO))
    assert out.x == E1.scale(Cyclo(2)) and out.y.is_zero()


def test_vee_examples():
    v = vee(E_IDENT, E_IDENT)
    assert J27(v.apply(list(E_IDENT.coords))).is_zero()
    assert J27(vee(E1, E2).apply(list(E3.coords))).is_zero()
    g = gram_diagonal()
    x, y = rj(), rj()
    assert vee(x, y).transpose_wrt(g) == vee(y, x)


def test_cross_pq_examples():
    p0 = PVector(J27.zero(), J27.zero(), ONE, ZERO)
    assert cross_pq(p0, p0).is_zero()
    p, q = rp(), rp()
    assert (cross_pq(p, q) - cross_pq(q, p)).is_zero()


def test_p_forms():
    p0 = PVector(J27.zero(), J27.zero(), ONE, ZERO)
    p1 = PVector(J27.zero(), J27.zero(), ZERO, ONE)
    assert skew_form(p0, p1) == ONE
    pe = PVector(E_IDENT, J27.zero(), I, ZERO)
    assert hermitian_form(pe, pe) == Cyclo(4)
    p, q = rp(), rp()
    assert skew_form(p, q) == -skew_form(q, p)
    assert hermitian_form(q, p) == hermitian_form(p, q).tau()


def test_involutions():
    iota = p_involution("iota")
    p = rp()
    assert iota.apply(iota.apply(p)) == -p
    for n in ("gamma", "gamma_p", "gamma1", "sigma", "sigma_p"):
        m = p_involution(n)
        assert m.apply(m.apply(p)) == p
    names = ("gamma", "gamma_p", "sigma", "sigma_p", "iota")
    for a in names:
        for b in names:
            ma, mb = p_involution(a), p_involution(b)
            assert ma.apply(mb.apply(p)) == mb.apply(ma.apply(p))
    with pytest.raises(ValueError):
        p_involution("mu")


def test_sigma_column_scaling():
    # sigma leaves column 1 of M alone and negates columns 2, 3
    m = p_involution("sigma")
    f1 = J27.f_element(1, Octonion.unit(2))
    f2 = J27.f_element(2, Octonion.unit(4))
    p = PVector(f1 + f2, J27.zero(), ZERO, ZERO)
    out = m.apply(p)
    assert out.x == f1 - f2


def test_lambda_map():
    lam = lambda_pmap()
    p = rp()
    assert lam.apply(lam.apply(p)) == -p
    assert lam.inv_apply(lam.apply(p)) == p


def test_bracket_matches_operator_commutator():
    for _ in range(3):
        f, g = re7(), re7()
        quad = e7_bracket(f, g)
        op = e7_materialize(f).compose(e7_materialize(g)) - e7_materialize(g).compose(e7_materialize(f))
        assert op == e7_materialize(quad)


def test_conj_closed_forms_match_probes():
    el = re7()
    for name in ("gamma", "gamma_p", "gamma1", "sigma", "sigma_p", "iota"):
        m = p_involution(name)
        assert (conj_quadruple(m, el) - conj_quadruple_by_probes(m, el)).is_zero()
    lam = lambda_pmap()
    assert (conj_quadruple(lam, el) - conj_quadruple_by_probes(lam, el)).is_zero()


def test_basis_rank_and_compact():
    basis = e7_basis()
    assert len(basis) == 133
    assert e7_rank() == 133
    assert all(el.is_compact() for el in basis)


def test_membership_subset():
    basis = e7_basis()
    pairs = [(i, j) for i in range(0, PDIM, 7) for j in range(i, PDIM, 9)]
    for idx in (0, 60, 80, 110, 132):
        assert is_e7_algebra(basis[idx], pairs=pairs)


def test_membership_negative():
    bad = E7Element(LinearOperator.diagonal([1] + [0] * 26, "jordan27"),
                    J27.zero(), J27.zero(), ZERO)
    assert not is_e7_algebra(bad)


def test_group_membership_subset():
    pairs = [(i, j) for i in range(0, PDIM, 6) for j in range(i, PDIM, 8)]
    for n in ("gamma", "sigma", "iota"):
        assert is_e7_group(p_involution(n), pairs=pairs)
    bad = PMap(
        "bad",
        lambda p: PVector(p.x, p.y, p.xi.scale(Rat(2)), p.eta),
        lambda p: PVector(p.x, p.y, p.xi.scale(Rat(1, 2)), p.eta),
    )
    assert not is_e7_group(bad, pairs=pairs)


def test_lambda_twist_on_subset():
    basis = e7_basis()
    assert lambda_twist_failures(basis[:20] + basis[75:85] + basis[130:]) == []


def test_theorem_43():
    fixed, abelian, self_centralizing = theorem_43()
    assert len(fixed) == 7
    assert abelian and self_centralizing
