"""The e8 bracket, compact basis, maps, Jacobi, and the fixed-subalgebra report."""

import random

import pytest

from exlie.e7 import E7Element, PVector
from exlie.e8 import (
    E8Element,
    contains_in_span,
    e8_basis,
    e8_bracket,
    e8_map,
    e8_rank_modp,
    fixed_subalgebra_e8,
    involution_identities,
    jacobi_defect,
    jacobi_deterministic_failures,
    jacobi_scan,
    jacobi_triples,
    pair_count,
    pair_scan,
    sl2_identities,
    span_closure_failures,
    tau_automorphism_spot,
    compact_combination_closure,
)
from exlie.jordan import J27
from exlie.scalars import Cyclo, ZERO, ONE


def test_scalar_bracket_examples():
    r1 = E8Element.scalars(ONE, ZERO, ZERO)
    u1 = E8Element.scalars(ZERO, ONE, ZERO)
    v1 = E8Element.scalars(ZERO, ZERO, ONE)
    assert e8_bracket(r1, u1) == u1.scale(Cyclo(2))
    assert e8_bracket(u1, v1) == r1
    assert e8_bracket(r1, v1) == v1.scale(Cyclo(-2))
    assert sl2_identities()


def test_bracket_antisymmetric_on_random_combination():
    rng = random.Random(1)
    basis = e8_basis()
    a = E8Element.zero()
    for idx in rng.sample(range(248), 6):
        a = a + basis[idx].scale(Cyclo(rng.randrange(-2, 3)))
    assert e8_bracket(a, a).is_zero()


def test_basis_count_rank_compact():
    basis = e8_basis()
    assert len(basis) == 248
    assert e8_rank_modp() == 248
    assert all(el.is_compact() for el in basis)


def test_sigma_fixes_xi_unit():
    # the scalar components of a P-sector element are untouched by sigma
    xi_unit = PVector(J27.zero(), J27.zero(), ONE, ZERO)
    el = E8Element(E7Element.zero(), xi_unit, PVector.zero(), ZERO, ZERO, ZERO)
    assert e8_map("sigma").apply(el) == el


def test_map_identities():
    assert involution_identities(sample_count=4)
    assert tau_automorphism_spot(sample_count=4)


def test_lambda_tilde_squares_to_identity():
    lam = e8_map("lambda_tilde")
    basis = e8_basis()
    for el in basis[:8] + basis[130:140] + basis[-3:]:
        assert lam.apply(lam.apply(el)) == el


def test_pair_scan_slice():
    res = pair_scan(0, 400)
    assert res["pairs"] == 400
    assert res["antisym_fail"] == [] and res["compact_fail"] == [] and res["auto_fail"] == []
    assert pair_count() == 248 * 247 // 2


def test_jacobi_deterministic_set():
    assert jacobi_deterministic_failures() == []


def test_jacobi_seeded_sample():
    triples = jacobi_triples(150, 0)
    assert triples == jacobi_triples(150, 0)  # deterministic for a fixed seed
    assert jacobi_scan(triples) == []


def test_jacobi_defect_mixed_sectors():
    basis = e8_basis()
    assert jacobi_defect(basis[0], basis[140], basis[246]).is_zero()
    assert jacobi_defect(basis[100], basis[190], basis[245]).is_zero()


def test_compact_combination_closure():
    assert compact_combination_closure(sample_count=4)


def test_fixed_sigma_sigmap():
    dim, fixed = fixed_subalgebra_e8(("sigma", "sigma_p"))
    dim2, _ = fixed_subalgebra_e8(("sigma", "sigma_p"), order_seed=1)
    assert dim == dim2 == 56
    assert span_closure_failures(fixed) == []


def test_fixed_contains_f4_torus():
    from exlie.f4e6 import theorem_23

    _, fixed = fixed_subalgebra_e8(("sigma", "sigma_p"))
    for t in theorem_23().basis:
        el8 = E8Element.from_phi(E7Element.from_phi(t))
        assert e8_map("sigma").apply(el8) == el8
        assert e8_map("sigma_p").apply(el8) == el8
        assert contains_in_span(fixed, el8)


def test_unknown_map_rejected():
    with pytest.raises(ValueError):
        e8_map("upsilon3")
