"""Membership predicates and exact bases for f4 and e6, plus the unitary maps.

Dimension claims are certified from two independent sides: a constructive
side (multiplication-operator commutators for f4, i times trace-zero
multiplications for the e6 complement) whose members are verified against
the exact linearized membership identities, and a mod-p kernel of the full
defining linear system, which is a rigorous upper bound since rank mod p
never exceeds rank over Q.  Lower bound = exhibited independent verified
elements, upper bound = mod-p kernel dimension; equality pins the answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexmat import (
    CPair,
    cmat_adjoint,
    cmat_diag,
    cmat_from_scalars,
    cmat_mul,
    cmat_tau,
)
from .jordan import (
    DIM,
    J27,
    SplitElement,
    cross,
    gram_diagonal,
    hermitian,
    involution,
    jordan_basis,
    op_mul,
)
from .linalg import (
    LinearOperator,
    ModpRREF,
    SparseRREF,
    coefficient_kernel,
    DEFAULT_PRIME,
)
from .scalars import Cyclo, Rat, ZERO, ONE, HALF, I

_R0 = Rat(0)
_BASIS = jordan_basis()
_PAIRS = [(i, j) for i in range(DIM) for j in range(i, DIM)]


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def _columns(op: LinearOperator):
    return [J27(op.apply(list(b.coords))) for b in _BASIS]


def is_f4_group(op: LinearOperator, first_failure=False):
    """alpha(X x Y) = alpha X x alpha Y on all basis pairs (real-linear alpha)."""
    cols = _columns(op)
    for i, j in _PAIRS:
        w = cross(_BASIS[i], _BASIS[j])
        lhs = J27(op.apply(list(w.coords)))
        if lhs != cross(cols[i], cols[j]):
            return (False, (i, j)) if first_failure else False
    return (True, None) if first_failure else True


def is_e6_group(op: LinearOperator) -> bool:
    """alpha X x alpha Y = tau alpha tau (X x Y) and <alpha X, alpha Y> = <X, Y>."""
    cols = _columns(op)
    twisted = op.tau_conj()
    for i, j in _PAIRS:
        w = cross(_BASIS[i], _BASIS[j])
        if cross(cols[i], cols[j]) != J27(twisted.apply(list(w.coords))):
            return False
        if hermitian(cols[i], cols[j]) != hermitian(_BASIS[i], _BASIS[j]):
            return False
    return True


def is_f4_algebra(op: LinearOperator) -> bool:
    """Linearized membership: d(X x Y) = dX x Y + X x dY on all basis pairs."""
    cols = _columns(op)
    for i, j in _PAIRS:
        w = cross(_BASIS[i], _BASIS[j])
        lhs = J27(op.apply(list(w.coords)))
        if lhs != cross(cols[i], _BASIS[j]) + cross(_BASIS[i], cols[j]):
            return False
    return True


def is_e6_algebra(op: LinearOperator) -> bool:
    """Linearized membership: phi X x Y + X x phi Y = tau phi tau (X x Y),
    <phi X, Y> + <X, phi Y> = 0, on all basis pairs."""
    cols = _columns(op)
    twisted = op.tau_conj()
    for i, j in _PAIRS:
        w = cross(_BASIS[i], _BASIS[j])
        lhs = cross(cols[i], _BASIS[j]) + cross(_BASIS[i], cols[j])
        if lhs != J27(twisted.apply(list(w.coords))):
            return False
    for i in range(DIM):
        for j in range(DIM):
            if hermitian(cols[i], _BASIS[j]) + hermitian(_BASIS[i], cols[j]):
                return False
    return True


# ---------------------------------------------------------------------------
# Defining linear systems (mod-p upper bounds)
# ---------------------------------------------------------------------------

def _cross_tensor_rows(sign_on_image: int):
    """Rows of d(B_i x B_j)*sign = dB_i x B_j + B_i x dB_j over 729 unknowns.

    Unknown u_{r,c} (entry (r,c) of d) sits at position 27*c + r.
    sign_on_image=+1 gives the derivation system (f4 / real part of e6),
    -1 the anti-derivation system (imaginary part of e6).
    """
    from .jordan import _cross_tensor  # structure tensor, rational

    ct = _cross_tensor()
    rows = []
    for i, j in _PAIRS:
        w = dict(ct[i].get(j, ()))
        for t in range(DIM):
            row = {}

            def bump(pos, val):
                nv = row.get(pos, _R0) + val
                if nv:
                    row[pos] = nv
                else:
                    row.pop(pos, None)

            for k, q in w.items():
                bump(27 * k + t, Rat(sign_on_image) * q)
            for m in range(DIM):
                ent = ct[m].get(j, ())
                for k, q in ent:
                    if k == t:
                        bump(27 * i + m, -q)
                ent = ct[i].get(m, ())
                for k, q in ent:
                    if k == t:
                        bump(27 * j + m, -q)
            if row:
                rows.append(row)
    return rows


def _symmetry_rows():
    """(QX, Y) = (X, QY) on basis pairs: g_j u_{j,i} - g_i u_{i,j} = 0."""
    g = gram_diagonal()
    rows = []
    for i in range(DIM):
        for j in range(i + 1, DIM):
            rows.append({27 * i + j: g[j], 27 * j + i: -g[i]})
    return rows


@lru_cache(maxsize=4)
def f4_kernel_dim_bound(prime: int = DEFAULT_PRIME) -> int:
    """Mod-p kernel dimension of the full derivation system (>= exact dim)."""
    eng = ModpRREF(729, prime)
    eng.feed_sparse(_cross_tensor_rows(+1))
    return eng.kernel_dim()


@lru_cache(maxsize=4)
def e6_complement_dim_bound(prime: int = DEFAULT_PRIME) -> int:
    """Mod-p kernel dim of the anti-derivation + symmetric-form system."""
    eng = ModpRREF(729, prime)
    eng.feed_sparse(_cross_tensor_rows(-1))
    eng.feed_sparse(_symmetry_rows())
    return eng.kernel_dim()


# ---------------------------------------------------------------------------
# Exact bases
# ---------------------------------------------------------------------------

_F4_BASIS = None
_E6_BASIS = None


def seed_f4_basis(ops) -> None:
    """Install a precomputed (e.g. cache-loaded) f4 basis; callers must verify."""
    global _F4_BASIS
    _F4_BASIS = list(ops)


def seed_e6_basis(ops) -> None:
    global _E6_BASIS
    _E6_BASIS = list(ops)


def f4_basis():
    """52 independent exact derivations of (J, x), from [L_X, L_Y] commutators.

    Deterministic greedy selection over lexicographic basis pairs, mod-p
    independence to drive the scan, exact independence certified by exact
    elimination, and every selected operator verified against the exact
    linearized membership identity.
    """
    global _F4_BASIS
    if _F4_BASIS is not None:
        return _F4_BASIS
    eng = ModpRREF(4 * 729, DEFAULT_PRIME)
    exact = SparseRREF(4 * 729)
    selected = []
    l_ops = [op_mul(b) for b in _BASIS]
    for i in range(DIM):
        for j in range(i + 1, DIM):
            cand = l_ops[i].commutator(l_ops[j])
            if cand.is_zero():
                continue
            flat = cand.flatten_q()
            before = eng.rank
            eng.feed_sparse([flat])
            if eng.rank > before:
                if exact.add_row(flat) is None:
                    raise ArithmeticError("mod-p independent but exactly dependent")
                selected.append(cand)
                if len(selected) == 52:
                    _F4_BASIS = selected
                    return selected
    raise ArithmeticError(f"only {len(selected)} independent derivations found")


def f4_membership_failures(ops=None):
    """Exact linearized-membership verification; returns failing indices."""
    ops = f4_basis() if ops is None else ops
    return [k for k, op in enumerate(ops) if not is_f4_algebra(op)]


@lru_cache(maxsize=1)
def trace_zero_basis():
    """26 real trace-zero elements of J in deterministic order."""
    out = [J27.basis(0) - J27.basis(1), J27.basis(1) - J27.basis(2)]
    out.extend(J27.basis(i) for i in range(3, 27))
    return out


def e6_basis():
    """78 exact operators: the f4 basis plus i * (trace-zero multiplications)."""
    global _E6_BASIS
    if _E6_BASIS is None:
        ops = list(f4_basis())
        ops.extend(op_mul(a).scale(I) for a in trace_zero_basis())
        _E6_BASIS = ops
    return _E6_BASIS


def e6_rank() -> int:
    """Exact rank of the 78 operators (must be 78)."""
    sr = SparseRREF(4 * 729)
    for op in e6_basis():
        sr.add_row(op.flatten_q())
    return sr.rank


def span_rref(ops) -> SparseRREF:
    sr = SparseRREF(4 * 729)
    for op in ops:
        sr.add_row(op.flatten_q())
    return sr


def closure_failures(ops):
    """Pairs whose commutator leaves the exact span; empty iff closed."""
    sr = span_rref(ops)
    bad = []
    for a in range(len(ops)):
        for b in range(a + 1, len(ops)):
            br = ops[a].commutator(ops[b])
            if not sr.contains(br.flatten_q()):
                bad.append((a, b))
    return bad


# ---------------------------------------------------------------------------
# Unitary samples and the maps phi4 / phi6
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnitarySample:
    """Exact U(1) scalars and SU(3) matrices over the e1-complex plane.

    Scalars are K-elements under the identification e1 <-> i; a scalar u is
    unitary iff u * tau(u) = 1, a matrix A iff A * tau(A)^T = E and det A = 1.
    """

    p: Cyclo
    q: Cyclo
    a: tuple
    b: tuple = None

    def validate(self):
        for name, u in (("p", self.p), ("q", self.q)):
            if u * u.tau() != ONE:
                raise ValueError(f"sample scalar {name} is not unitary")
        for name, m in (("a", self.a), ("b", self.b)):
            if m is None:
                continue
            mt = [[m[j][i].tau() for j in range(3)] for i in range(3)]
            prod = [[sum((m[i][k] * mt[k][j] for k in range(3)), ZERO) for j in range(3)] for i in range(3)]
            ident = [[ONE if i == j else ZERO for j in range(3)] for i in range(3)]
            if prod != ident:
                raise ValueError(f"sample matrix {name} is not unitary")
            det = (
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            )
            if det != ONE:
                raise ValueError(f"sample matrix {name} has determinant != 1")
        return self


def scalar_matrix(s: Cyclo):
    """s * E as a K-scalar 3x3 matrix."""
    return tuple(tuple(s if i == j else ZERO for j in range(3)) for i in range(3))


def diag_matrix(d0: Cyclo, d1: Cyclo, d2: Cyclo):
    return ((d0, ZERO, ZERO), (ZERO, d1, ZERO), (ZERO, ZERO, d2))


def _dpq(p: Cyclo, q: Cyclo):
    """D(p, q) = diag(p, q, conj(pq)) as a CPair matrix."""
    third = (p * q).tau()
    return cmat_diag(CPair.from_scalar(p), CPair.from_scalar(q), CPair.from_scalar(third))


def phi4(sample: UnitarySample, component: str = "1") -> LinearOperator:
    """phi4((p, q, A), component)(X + M) = A X A* + D(p, q) M A*.

    component "gamma1" first conjugates the split coordinates (X, M bars).
    """
    sample.validate()
    a_c = cmat_from_scalars(sample.a)
    a_star = cmat_adjoint(a_c)
    d = _dpq(sample.p, sample.q)

    def act(v: J27) -> J27:
        s = SplitElement.from_jordan(v)
        x2 = cmat_mul(cmat_mul(a_c, s.X), a_star)
        m2 = cmat_mul(cmat_mul(d, s.M), a_star)
        return SplitElement(x2, m2).to_jordan()

    cols = [act(b) for b in _BASIS]
    op = LinearOperator.from_columns([list(c.coords) for c in cols], "jordan27")
    if component == "gamma1":
        op = op.compose(involution("gamma1").operator())
    elif component != "1":
        raise ValueError(f"unknown component {component!r}")
    return op


def h_matrix(a_c, b_c):
    """h(A, B) = (A + B)/2 + i (A - B)/2 e1 as a complexified CPair matrix."""
    ihalf = I * HALF
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            pa, pb = a_c[i][j], b_c[i][j]
            re = (pa.re + pb.re) * HALF - (pa.im - pb.im) * ihalf
            im = (pa.im + pb.im) * HALF + (pa.re - pb.re) * ihalf
            row.append(CPair(re, im))
        out.append(row)
    return out


def phi6(sample: UnitarySample, component: str = "1") -> LinearOperator:
    """phi6((p, q, A, B), component)(X + M) = h X h* + D(p, q) M tau(h*)."""
    sample.validate()
    if sample.b is None:
        raise ValueError("phi6 requires a second SU(3) matrix")
    a_c = cmat_from_scalars(sample.a)
    b_c = cmat_from_scalars(sample.b)
    h = h_matrix(a_c, b_c)
    h_star = cmat_adjoint(h)
    h_star_tau = cmat_tau(h_star)
    d = _dpq(sample.p, sample.q)

    def act(v: J27) -> J27:
        s = SplitElement.from_jordan(v)
        x2 = cmat_mul(cmat_mul(h, s.X), h_star)
        m2 = cmat_mul(cmat_mul(d, s.M), h_star_tau)
        return SplitElement(x2, m2).to_jordan()

    cols = [act(b) for b in _BASIS]
    op = LinearOperator.from_columns([list(c.coords) for c in cols], "jordan27")
    if component == "gamma1":
        op = op.compose(involution("gamma1").operator())
    elif component != "1":
        raise ValueError(f"unknown component {component!r}")
    return op


E_1M1 = diag_matrix(ONE, -ONE, -ONE)   # diag(1, -1, -1)
E_M11 = diag_matrix(-ONE, -ONE, ONE)   # diag(-1, -1, 1)


def verify_lemma_22():
    """sigma = phi4((1,1,E_{1,-1}),1) and sigma' = phi4((1,1,E_{-1,1}),1).

    Returns (ok, details); on failure details names the first differing
    basis image.
    """
    results = []
    for name, mat in (("sigma", E_1M1), ("sigma_p", E_M11)):
        target = involution(name).operator()
        built = phi4(UnitarySample(ONE, ONE, mat))
        diff = built - target
        if diff.is_zero():
            results.append((name, None))
        else:
            j = min(diff.cols)
            results.append((name, f"first differing basis image at index {j}"))
    ok = all(d is None for _, d in results)
    return ok, results


def verify_lemma_32():
    """sigma = phi6((1,1,E_{1,-1},E_{1,-1}),1) and the sigma' analogue."""
    results = []
    for name, mat in (("sigma", E_1M1), ("sigma_p", E_M11)):
        target = involution(name).operator()
        built = phi6(UnitarySample(ONE, ONE, mat, mat))
        diff = built - target
        if diff.is_zero():
            results.append((name, None))
        else:
            j = min(diff.cols)
            results.append((name, f"first differing basis image at index {j}"))
    ok = all(d is None for _, d in results)
    return ok, results


# ---------------------------------------------------------------------------
# Fixed subalgebras (centralizers of involution sets)
# ---------------------------------------------------------------------------

@dataclass
class FixedSubalgebra:
    dimension: int
    basis: list
    abelian: bool
    self_centralizing: bool


def fixed_subalgebra(algebra_basis, symmetries, names=None) -> FixedSubalgebra:
    """Exact fixed-point subalgebra {L : s L s^-1 = L for all s}.

    symmetries are involutive LinearOperators (s^-1 = s); raises if one of
    them fails to normalize the algebra span, naming the offender.
    """
    names = names or [f"symmetry#{k}" for k in range(len(symmetries))]
    span = span_rref(algebra_basis)
    conj_diffs = []
    for b in algebra_basis:
        diffs = []
        for s, nm in zip(symmetries, names):
            conj = s.compose(b).compose(s)
            if not span.contains(conj.flatten_q()):
                raise ValueError(f"{nm} does not normalize the algebra")
            diffs.append((conj - b).flatten_q())
        conj_diffs.append(diffs)
    coeffs = coefficient_kernel(conj_diffs)
    fixed = []
    for vec in coeffs:
        acc = LinearOperator.zero(algebra_basis[0].dim, algebra_basis[0].basis_name)
        for c, b in zip(vec, algebra_basis):
            if c:
                acc = acc + b.scale(Cyclo(c))
        fixed.append(acc)
    abelian = all(
        fixed[a].commutator(fixed[b]).is_zero()
        for a in range(len(fixed))
        for b in range(a + 1, len(fixed))
    )
    cent_groups = [
        [b.commutator(t).flatten_q() for t in fixed] for b in algebra_basis
    ]
    centralizer = coefficient_kernel(cent_groups)
    self_centralizing = len(centralizer) == len(fixed)
    return FixedSubalgebra(len(fixed), fixed, abelian, self_centralizing)


def involution_operators(names):
    return [involution(n).operator() for n in names]


def theorem_23() -> FixedSubalgebra:
    """Fixed subalgebra of f4 under gamma, gamma', sigma, sigma'; expected T^4."""
    syms = involution_operators(("gamma", "gamma_p", "sigma", "sigma_p"))
    return fixed_subalgebra(list(f4_basis()), syms, ["gamma", "gamma_p", "sigma", "sigma_p"])


def theorem_33() -> FixedSubalgebra:
    """Fixed subalgebra of e6 under the same four maps; expected T^6."""
    syms = involution_operators(("gamma", "gamma_p", "sigma", "sigma_p"))
    return fixed_subalgebra(list(e6_basis()), syms, ["gamma", "gamma_p", "sigma", "sigma_p"])
