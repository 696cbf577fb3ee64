"""Exact elimination, flattening, operators, and the mod-p bound engine."""

import random

from exlie.linalg import (
    LinearOperator,
    ModpRREF,
    SparseRREF,
    coefficient_kernel,
    flatten_field,
    flatten_field_system,
    is_probable_prime,
    kernel_basis,
    mult_matrix,
    prime_after,
    rank,
)
from exlie.scalars import Cyclo, Rat, ZERO, ONE, I


def Q(*vals):
    return [Rat(v) for v in vals]


def test_kernel_examples():
    assert kernel_basis([Q(1, 1), Q(1, 1)]) == [[Rat(-1), Rat(1)]]
    ident = [Q(1, 0, 0), Q(0, 1, 0), Q(0, 0, 1)]
    assert kernel_basis(ident) == []
    zero = [Q(0, 0, 0, 0, 0), Q(0, 0, 0, 0, 0)]
    basis = kernel_basis(zero)
    assert len(basis) == 5
    for i, v in enumerate(basis):
        assert v[i] == 1 and sum(1 for x in v if x) == 1


def test_rank_examples():
    assert rank([Q(1, 0), Q(0, 1)]) == 2
    assert rank([Q(1, 2), Q(2, 4)]) == 1


def test_rank_plus_kernel_is_cols():
    rng = random.Random(7)
    for _ in range(20):
        rows = [[Rat(rng.randrange(-3, 4)) for _ in range(6)] for _ in range(4)]
        assert rank(rows) + len(kernel_basis(rows)) == 6


def test_kernel_vectors_annihilate():
    rng = random.Random(8)
    rows = [[Rat(rng.randrange(-3, 4)) for _ in range(7)] for _ in range(5)]
    for v in kernel_basis(rows):
        for r in rows:
            assert sum((a * b for a, b in zip(r, v)), Rat(0)) == 0


def test_determinism():
    rng = random.Random(9)
    rows = [[Rat(rng.randrange(-2, 3)) for _ in range(8)] for _ in range(6)]
    assert kernel_basis(rows) == kernel_basis([list(r) for r in rows])


def test_flatten_coordinate_row():
    assert flatten_field([[I]]) == [[Rat(0), Rat(0), Rat(0), Rat(1)]]


def test_flatten_system_identity_rank():
    ident = [[ONE, ZERO], [ZERO, ONE]]
    assert rank(flatten_field_system(ident)) == 8


def test_flatten_tau_matrix_rank():
    # tau as a Q-linear map on K has full rank 4
    from exlie.scalars import Cyclo

    cols = []
    for k in range(4):
        coords = [0] * 4
        coords[k] = 1
        cols.append(Cyclo(*coords).tau().coords())
    tau_mat = [[cols[j][i] for j in range(4)] for i in range(4)]
    assert rank(tau_mat) == 4


def test_mult_matrix_consistency():
    x = Cyclo(Rat(1, 2), Rat(-3), Rat(2, 5), Rat(7))
    y = Cyclo(Rat(4), Rat(1, 3), Rat(-2), Rat(5, 6))
    m = mult_matrix(x)
    prod = [sum((m[i][j] * y.coords()[j] for j in range(4)), Rat(0)) for i in range(4)]
    assert tuple(prod) == (x * y).coords()


def test_sparse_rref_matches_dense():
    rng = random.Random(10)
    rows = [[Rat(rng.randrange(-2, 3)) for _ in range(9)] for _ in range(7)]
    sr = SparseRREF(9)
    for r in rows:
        sr.add_row({i: v for i, v in enumerate(r) if v})
    assert sr.rank == rank(rows)
    assert sorted(map(tuple, sr.kernel())) == sorted(map(tuple, kernel_basis(rows)))


def test_sparse_rref_membership():
    sr = SparseRREF(4)
    sr.add_row({0: Rat(1), 1: Rat(2)})
    sr.add_row({2: Rat(1)})
    assert sr.contains({0: Rat(2), 1: Rat(4), 2: Rat(-7)})
    assert not sr.contains({3: Rat(1)})


def test_coefficient_kernel():
    # c0 * v + c1 * (-v) = 0 forces c0 = c1; second group pins nothing else
    v = {0: Rat(1), 3: Rat(2)}
    w = {0: Rat(-1), 3: Rat(-2)}
    ker = coefficient_kernel([[v], [w]])
    assert len(ker) == 1 and ker[0][0] == ker[0][1] != 0


def test_primes():
    assert is_probable_prime(1048573)
    assert not is_probable_prime(1048575)
    assert prime_after(1048573) > 1048573


def test_modp_rank_bounds_exact_rank():
    rng = random.Random(11)
    for _ in range(10):
        rows = [[rng.randrange(-4, 5) for _ in range(10)] for _ in range(6)]
        eng = ModpRREF(10)
        eng.feed_sparse([{i: v for i, v in enumerate(r) if v} for r in rows])
        exact = rank([[Rat(v) for v in r] for r in rows])
        assert eng.rank == exact  # random small ints: no unlucky cancellation mod ~2^20


def test_modp_kernel_dim_is_upper_bound():
    # a matrix that drops rank mod small primes keeps rank over Q
    eng = ModpRREF(2, prime=1048573)
    eng.feed_sparse([{0: Rat(1048573), 1: Rat(1)}])
    assert eng.kernel_dim() >= len(kernel_basis([[Rat(1048573), Rat(1)]]))


def test_operator_roundtrip():
    op = LinearOperator.from_columns([[ZERO, ONE], [ONE, ZERO]])
    assert op.apply([ONE, ZERO]) == [ZERO, ONE]
    assert op.compose(op) == LinearOperator.identity(2)
    assert op.flatten_q() == {4 * 1: Rat(1), 4 * 2: Rat(1)}


def test_operator_transpose_is_adjoint():
    rng = random.Random(12)
    gram = [Rat(1), Rat(2), Rat(3)]
    cols = [[Cyclo(rng.randrange(-3, 4)) for _ in range(3)] for _ in range(3)]
    op = LinearOperator.from_columns(cols)
    top = op.transpose_wrt(gram)

    def form(u, v):
        return sum(((a * b).scale(g) for a, b, g in zip(u, v, gram)), ZERO)

    basis = [[ONE if i == j else ZERO for i in range(3)] for j in range(3)]
    for u in basis:
        for v in basis:
            assert form(top.apply(u), v) == form(u, op.apply(v))
    assert top.transpose_wrt(gram) == op
