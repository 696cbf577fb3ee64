"""Membership predicates, exact f4/e6 bases, the unitary maps, torus theorems."""

import pytest

from exlie.f4e6 import (
    UnitarySample,
    closure_failures,
    e6_basis,
    e6_rank,
    f4_basis,
    f4_membership_failures,
    fixed_subalgebra,
    involution_operators,
    is_e6_algebra,
    is_e6_group,
    is_f4_algebra,
    is_f4_group,
    phi4,
    phi6,
    scalar_matrix,
    span_rref,
    theorem_23,
    theorem_33,
    trace_zero_basis,
    verify_lemma_22,
    verify_lemma_32,
)
from exlie.jordan import E_IDENT, involution, op_mul
from exlie.linalg import LinearOperator
from exlie.scalars import Cyclo, Rat, ZERO, ONE, I, OMEGA

I27 = LinearOperator.identity(27)


def p_unit():
    return (Cyclo(3) + I.scale(Rat(4))).scale(Rat(1, 5))


def rot_345():
    return (
        (Cyclo(Rat(3, 5)), Cyclo(Rat(4, 5)), ZERO),
        (Cyclo(Rat(-4, 5)), Cyclo(Rat(3, 5)), ZERO),
        (ZERO, ZERO, ONE),
    )


def test_is_f4_group_basics():
    assert is_f4_group(I27)
    assert is_f4_group(involution("sigma").operator())
    neg_e1 = [1] * 27
    neg_e1[0] = -1
    assert not is_f4_group(LinearOperator.diagonal(neg_e1, "jordan27"))


def test_five_involutions_in_f4():
    for n in ("gamma", "gamma_p", "gamma1", "sigma", "sigma_p"):
        assert is_f4_group(involution(n).operator())


def test_f4_basis_is_52_verified_derivations():
    basis = f4_basis()
    assert len(basis) == 52
    assert f4_membership_failures() == []
    assert is_f4_algebra(basis[0])


def test_f4_closed_under_bracket():
    assert closure_failures(list(f4_basis())) == []


def test_unitary_sample_validation():
    bad = UnitarySample(Cyclo(2), ONE, scalar_matrix(ONE))
    with pytest.raises(ValueError):
        bad.validate()
    bad2 = UnitarySample(ONE, ONE, scalar_matrix(Cyclo(2)))
    with pytest.raises(ValueError):
        phi4(bad2)
    UnitarySample(p_unit(), ONE, rot_345()).validate()


def test_phi4_identity_and_kernel():
    assert phi4(UnitarySample(ONE, ONE, scalar_matrix(ONE))) == I27
    assert phi4(UnitarySample(OMEGA, OMEGA, scalar_matrix(OMEGA))) == I27
    sq = UnitarySample(OMEGA * OMEGA, OMEGA * OMEGA, scalar_matrix(OMEGA * OMEGA))
    assert phi4(sq) == I27


def test_phi4_lands_in_f4_and_commutes():
    p = p_unit()
    op = phi4(UnitarySample(p, p.tau(), rot_345()))
    assert is_f4_group(op)
    for n in ("gamma", "gamma_p"):
        g = involution(n).operator()
        assert op.compose(g) == g.compose(op)


def test_phi4_gamma1_component():
    p = p_unit()
    s = UnitarySample(p, p.tau(), rot_345())
    assert phi4(s, "gamma1") == phi4(s).compose(involution("gamma1").operator())
    with pytest.raises(ValueError):
        phi4(s, "gamma2")


def test_lemma_22():
    ok, details = verify_lemma_22()
    assert ok, details


def test_lemma_32():
    ok, details = verify_lemma_32()
    assert ok, details


def test_phi6_identity_kernel_restriction():
    assert phi6(UnitarySample(ONE, ONE, scalar_matrix(ONE), scalar_matrix(ONE))) == I27
    assert phi6(UnitarySample(OMEGA, OMEGA, scalar_matrix(OMEGA), scalar_matrix(OMEGA))) == I27
    p = p_unit()
    a = rot_345()
    assert phi6(UnitarySample(p, p.tau(), a, a)) == phi4(UnitarySample(p, p.tau(), a))


def test_phi6_in_e6():
    p = p_unit()
    perm = ((ZERO, ONE, ZERO), (ZERO, ZERO, ONE), (ONE, ZERO, ZERO))
    dia = ((p, ZERO, ZERO), (ZERO, p.tau(), ZERO), (ZERO, ZERO, ONE))
    assert is_e6_group(phi6(UnitarySample(p, p.tau(), dia, perm)))


def test_e6_membership():
    ops = e6_basis()
    assert len(ops) == 78 and e6_rank() == 78
    assert is_e6_algebra(ops[0]) and is_e6_algebra(ops[77])
    assert not is_e6_algebra(op_mul(E_IDENT).scale(I))
    assert is_e6_group(involution("gamma").operator())


def test_e6_contains_f4_and_closed():
    sr = span_rref(e6_basis())
    assert all(sr.contains(op.flatten_q()) for op in f4_basis())
    assert closure_failures(list(e6_basis())) == []


def test_trace_zero_basis():
    tz = trace_zero_basis()
    assert len(tz) == 26
    from exlie.jordan import trace

    assert all(trace(a).is_zero() for a in tz)


def test_fixed_subalgebra_no_constraints():
    res = fixed_subalgebra(list(f4_basis()), [])
    assert res.dimension == 52


def test_fixed_subalgebra_rejects_non_normalizing():
    # multiplication by E1 is not in f4, and conjugating by a non-f4 diagonal
    # pushes the algebra off its own span
    bad = LinearOperator.diagonal([1] + [-1] * 26, "jordan27")
    with pytest.raises(ValueError):
        fixed_subalgebra(list(f4_basis()), [bad], ["bad_map"])


def test_theorem_23():
    res = theorem_23()
    assert res.dimension == 4
    assert res.abelian and res.self_centralizing


def test_theorem_33():
    res = theorem_33()
    assert res.dimension == 6
    assert res.abelian and res.self_centralizing


def test_torus_elements_fixed_pointwise():
    res = theorem_23()
    syms = involution_operators(("gamma", "gamma_p", "sigma", "sigma_p"))
    for t in res.basis:
        for s in syms:
            assert s.compose(t).compose(s) == t
