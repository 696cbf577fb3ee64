"""The 56-dimensional Freudenthal space P^C, e7 elements and their calculus.

An e7 element is a quadruple Phi(phi, A, B, nu) acting on P = (X, Y, xi, eta)
by

    ( phi X - nu/3 X + 2 B x Y + eta A,
      2 A x X - t(phi) Y + nu/3 Y + xi B,
      (A, Y) + nu xi,
      (B, X) - nu eta )

with t(phi) the adjoint w.r.t. the trace form.  The bracket of two
quadruples is the closed form obtained by probing the operator commutator
at (0,0,0,1), (0,0,1,0) and the X-column; tests cross-validate it against
honest operator commutators on P^C.  The cross operation P x Q and the
pairings {P,Q}, <P,Q> follow the standard normalizations; the package-wide
validation for all of these conventions is the e8 Jacobi suite.
"""

from __future__ import annotations

from functools import lru_cache

from .jordan import (
    DIM,
    J27,
    bilinear,
    cross,
    gram_diagonal,
    hermitian,
    involution,
    jordan_basis,
    jordan_mul,
    op_mul,
    op_cross,
)
from .linalg import LinearOperator, SparseRREF, coefficient_kernel
from .scalars import Cyclo, Rat, ZERO, ONE, I

_BASIS = jordan_basis()
_GRAM = None


def _gram():
    global _GRAM
    if _GRAM is None:
        _GRAM = gram_diagonal()
    return _GRAM


_THIRD = Rat(1, 3)
_TWO_THIRDS = Rat(2, 3)
_QUARTER = Rat(1, 4)
_EIGHTH = Rat(1, 8)
_HALFQ = Rat(1, 2)
_MINUS_I = Cyclo(0, 0, 0, -1)

PDIM = 56  # X (27) + Y (27) + xi + eta


class PVector:
    """Element of P^C = J^C + J^C + C + C."""

    __slots__ = ("x", "y", "xi", "eta")

    def __init__(self, x: J27, y: J27, xi: Cyclo, eta: Cyclo):
        self.x = x
        self.y = y
        self.xi = xi
        self.eta = eta

    @staticmethod
    def zero() -> "PVector":
        return _P_ZERO

    @staticmethod
    def basis(k: int) -> "PVector":
        """Basis order: X-part 0..26, Y-part 27..53, xi = 54, eta = 55."""
        if k < 27:
            return PVector(J27.basis(k), J27.zero(), ZERO, ZERO)
        if k < 54:
            return PVector(J27.zero(), J27.basis(k - 27), ZERO, ZERO)
        if k == 54:
            return PVector(J27.zero(), J27.zero(), ONE, ZERO)
        if k == 55:
            return PVector(J27.zero(), J27.zero(), ZERO, ONE)
        raise IndexError(k)

    def __add__(self, o):
        return PVector(self.x + o.x, self.y + o.y, self.xi + o.xi, self.eta + o.eta)

    def __sub__(self, o):
        return PVector(self.x - o.x, self.y - o.y, self.xi - o.xi, self.eta - o.eta)

    def __neg__(self):
        return PVector(-self.x, -self.y, -self.xi, -self.eta)

    def scale(self, s: Cyclo) -> "PVector":
        return PVector(self.x.scale(s), self.y.scale(s), self.xi * s, self.eta * s)

    def tau(self) -> "PVector":
        return PVector(self.x.tau(), self.y.tau(), self.xi.tau(), self.eta.tau())

    def __eq__(self, o):
        if not isinstance(o, PVector):
            return NotImplemented
        return self.x == o.x and self.y == o.y and self.xi == o.xi and self.eta == o.eta

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero() and self.xi.is_zero() and self.eta.is_zero()

    def coords(self):
        return list(self.x.coords) + list(self.y.coords) + [self.xi, self.eta]

    def flatten(self, offset: int = 0) -> dict:
        out = {}
        for t, v in enumerate(self.coords()):
            if not v.is_zero():
                out[offset + t] = v
        return out

    def __repr__(self):
        return f"PVector(x={self.x!r}, y={self.y!r}, xi={self.xi!r}, eta={self.eta!r})"


_P_ZERO = PVector(J27.zero(), J27.zero(), ZERO, ZERO)


def p_basis():
    return [PVector.basis(k) for k in range(PDIM)]


# ---------------------------------------------------------------------------
# Pairings and the cross operation
# ---------------------------------------------------------------------------

def skew_form(p: PVector, q: PVector) -> Cyclo:
    """{P, Q} = (X, W) - (Z, Y) + xi omega - zeta eta (skew)."""
    return bilinear(p.x, q.y) - bilinear(q.x, p.y) + p.xi * q.eta - q.xi * p.eta


def hermitian_form(p: PVector, q: PVector) -> Cyclo:
    """<P, Q> = <X, Z> + <Y, W> + tau(xi) zeta + tau(eta) omega."""
    acc = hermitian(p.x, q.x) + hermitian(p.y, q.y)
    if not (p.xi.is_zero() or q.xi.is_zero()):
        acc = acc + p.xi.tau() * q.xi
    if not (p.eta.is_zero() or q.eta.is_zero()):
        acc = acc + p.eta.tau() * q.eta
    return acc


def p_forms(p: PVector, q: PVector):
    return skew_form(p, q), hermitian_form(p, q)


class E7Element:
    """Quadruple Phi(phi, A, B, nu); the operator on P^C is derived on demand."""

    __slots__ = ("phi", "a", "b", "nu")

    def __init__(self, phi: LinearOperator, a: J27, b: J27, nu: Cyclo):
        self.phi = phi
        self.a = a
        self.b = b
        self.nu = nu

    @staticmethod
    def zero() -> "E7Element":
        return E7Element(LinearOperator.zero(DIM, "jordan27"), J27.zero(), J27.zero(), ZERO)

    @staticmethod
    def from_phi(phi: LinearOperator) -> "E7Element":
        return E7Element(phi, J27.zero(), J27.zero(), ZERO)

    def __add__(self, o):
        return E7Element(self.phi + o.phi, self.a + o.a, self.b + o.b, self.nu + o.nu)

    def __sub__(self, o):
        return E7Element(self.phi - o.phi, self.a - o.a, self.b - o.b, self.nu - o.nu)

    def __neg__(self):
        return self.scale(Cyclo(-1))

    def scale(self, s: Cyclo) -> "E7Element":
        return E7Element(self.phi.scale(s), self.a.scale(s), self.b.scale(s), self.nu * s)

    def __eq__(self, o):
        if not isinstance(o, E7Element):
            return NotImplemented
        return self.nu == o.nu and self.a == o.a and self.b == o.b and self.phi == o.phi

    def is_zero(self) -> bool:
        return self.nu.is_zero() and self.a.is_zero() and self.b.is_zero() and self.phi.is_zero()

    def tau(self) -> "E7Element":
        """tau Phi tau = Phi(tau phi tau, tau A, tau B, tau nu)."""
        return E7Element(self.phi.tau_conj(), self.a.tau(), self.b.tau(), self.nu.tau())

    def is_compact(self) -> bool:
        """Linear compact-form conditions: B = -tau A, nu in iR, phi = -tau t(phi) tau."""
        if self.b != -self.a.tau():
            return False
        if self.nu.tau() != -self.nu:
            return False
        tphi = self.phi.transpose_wrt(_gram())
        return self.phi == -tphi.tau_conj()

    def flatten(self, offset: int = 0) -> dict:
        """Sparse K-coordinate dict: phi (729), A (27), B (27), nu (1)."""
        out = {}
        for i, j, v in self.phi.entries():
            out[offset + 27 * j + i] = v
        base = offset + 729
        for t, v in enumerate(self.a.coords):
            if not v.is_zero():
                out[base + t] = v
        base += 27
        for t, v in enumerate(self.b.coords):
            if not v.is_zero():
                out[base + t] = v
        if not self.nu.is_zero():
            out[base + 27] = self.nu
        return out

    def __repr__(self):
        return f"E7Element(phi_nnz={self.phi.nnz()}, a={self.a!r}, b={self.b!r}, nu={self.nu!r})"


E7_FLAT_LEN = 729 + 27 + 27 + 1


def e7_apply(el: E7Element, p: PVector) -> PVector:
    """The quadruple action on P^C."""
    phi, a, b, nu = el.phi, el.a, el.b, el.nu
    x, y, xi, eta = p.x, p.y, p.xi, p.eta
    x2 = J27(phi.apply(list(x.coords)))
    if not nu.is_zero():
        x2 = x2 - x.scale(nu.scale(_THIRD))
    if not b.is_zero() and not y.is_zero():
        x2 = x2 + cross(b, y).scale(Cyclo(2))
    if not eta.is_zero() and not a.is_zero():
        x2 = x2 + a.scale(eta)
    tphi = phi.transpose_wrt(_gram())
    y2 = -J27(tphi.apply(list(y.coords)))
    if not nu.is_zero():
        y2 = y2 + y.scale(nu.scale(_THIRD))
    if not a.is_zero() and not x.is_zero():
        y2 = y2 + cross(a, x).scale(Cyclo(2))
    if not xi.is_zero() and not b.is_zero():
        y2 = y2 + b.scale(xi)
    xi2 = bilinear(a, y) + nu * xi
    eta2 = bilinear(b, x) - nu * eta
    return PVector(x2, y2, xi2, eta2)


def e7_materialize(el: E7Element) -> LinearOperator:
    """The honest 56x56 matrix of the action (tests and probes only)."""
    cols = [e7_apply(el, PVector.basis(k)).coords() for k in range(PDIM)]
    return LinearOperator.from_columns(cols, "pvector56")


@lru_cache(maxsize=2048)
def _op_mul_c(el: J27) -> LinearOperator:
    return op_mul(el)


@lru_cache(maxsize=2048)
def _op_cross_c(el: J27) -> LinearOperator:
    return op_cross(el)


def vee(x: J27, y: J27) -> LinearOperator:
    """X v Y = [L_X, L_Y] + L_{X o Y - (X, Y) E / 3}."""
    lx, ly = _op_mul_c(x), _op_mul_c(y)
    mid = jordan_mul(x, y) - _E_SCALED(bilinear(x, y))
    return lx.commutator(ly) + op_mul(mid)


def _E_SCALED(s: Cyclo) -> J27:
    t = s.scale(_THIRD)
    return J27((t, t, t) + (ZERO,) * 24)


def cross_pq(p: PVector, q: PVector) -> E7Element:
    """P x Q, symmetric in P and Q, valued in e7 quadruples."""
    x, y, xi, eta = p.x, p.y, p.xi, p.eta
    z, w, zeta, omg = q.x, q.y, q.xi, q.eta
    phi = (vee(x, w) + vee(z, y)).scale(Cyclo(Rat(-1, 2)))
    a = (cross(y, w).scale(Cyclo(2)) - z.scale(xi) - x.scale(zeta)).scale(Cyclo(-_QUARTER))
    b = (cross(x, z).scale(Cyclo(2)) - w.scale(eta) - y.scale(omg)).scale(Cyclo(_QUARTER))
    nu = (bilinear(x, w) + bilinear(z, y) - (xi * omg + zeta * eta).scale(Rat(3))).scale(_EIGHTH)
    return E7Element(phi, a, b, nu)


def e7_bracket(f: E7Element, g: E7Element) -> E7Element:
    """[Phi_1, Phi_2] as a quadruple (closed form of the probe decomposition)."""
    phi1, a1, b1, n1 = f.phi, f.a, f.b, f.nu
    phi2, a2, b2, n2 = g.phi, g.a, g.b, g.nu
    nu = bilinear(a1, b2) - bilinear(a2, b1)
    a = (
        J27(phi1.apply(list(a2.coords)))
        - J27(phi2.apply(list(a1.coords)))
        + a2.scale(n1.scale(_TWO_THIRDS))
        - a1.scale(n2.scale(_TWO_THIRDS))
    )
    tphi1 = phi1.transpose_wrt(_gram())
    tphi2 = phi2.transpose_wrt(_gram())
    b = (
        J27(tphi2.apply(list(b1.coords)))
        - J27(tphi1.apply(list(b2.coords)))
        - b2.scale(n1.scale(_TWO_THIRDS))
        + b1.scale(n2.scale(_TWO_THIRDS))
    )
    phi = phi1.commutator(phi2)
    if not (b1.is_zero() or a2.is_zero()):
        phi = phi + _op_cross_c(b1).compose(_op_cross_c(a2)).scale(Cyclo(4))
    if not (b2.is_zero() or a1.is_zero()):
        phi = phi - _op_cross_c(b2).compose(_op_cross_c(a1)).scale(Cyclo(4))
    if not (a1.is_zero() or b2.is_zero()):
        phi = phi + _rank_one(a1, b2)
    if not (a2.is_zero() or b1.is_zero()):
        phi = phi - _rank_one(a2, b1)
    if not nu.is_zero():
        third = nu.scale(_THIRD)
        ident = {j: {j: third} for j in range(DIM)}
        phi = phi + LinearOperator(DIM, ident, "jordan27")
    return E7Element(phi, a, b, nu)


def _rank_one(a: J27, b: J27) -> LinearOperator:
    """The operator X -> (B, X) A."""
    g = _gram()
    cols = {}
    a_entries = {i: v for i, v in enumerate(a.coords) if not v.is_zero()}
    for j, bj in enumerate(b.coords):
        if bj.is_zero():
            continue
        w = bj.scale(g[j])
        cols[j] = {i: v * w for i, v in a_entries.items()}
    return LinearOperator(DIM, cols, "jordan27")


# ---------------------------------------------------------------------------
# The lifted involutions and lambda on P^C
# ---------------------------------------------------------------------------

class PMap:
    """Named invertible componentwise transformation of P^C."""

    __slots__ = ("name", "apply", "inv_apply")

    def __init__(self, name, apply_fn, inv_fn):
        self.name = name
        self.apply = apply_fn
        self.inv_apply = inv_fn

    def __repr__(self):
        return f"PMap({self.name!r})"


def _jordan_pmap(name: str) -> PMap:
    jm = involution(name)

    def fwd(p: PVector) -> PVector:
        return PVector(jm.apply(p.x), jm.apply(p.y), p.xi, p.eta)

    return PMap(name, fwd, fwd)


def _iota_pmap() -> PMap:
    def fwd(p: PVector) -> PVector:
        return PVector(p.x.scale(_MINUS_I), p.y.scale(I), p.xi * _MINUS_I, p.eta * I)

    def inv(p: PVector) -> PVector:
        return PVector(p.x.scale(I), p.y.scale(_MINUS_I), p.xi * I, p.eta * _MINUS_I)

    return PMap("iota", fwd, inv)


def lambda_pmap() -> PMap:
    def fwd(p: PVector) -> PVector:
        return PVector(p.y, -p.x, p.eta, -p.xi)

    def inv(p: PVector) -> PVector:
        return PVector(-p.y, p.x, -p.eta, p.xi)

    return PMap("lambda", fwd, inv)


_P_INVOLUTIONS = ("gamma", "gamma_p", "gamma1", "sigma", "sigma_p", "iota")


def p_involution(name: str) -> PMap:
    if name == "iota":
        return _iota_pmap()
    if name in ("gamma", "gamma_p", "gamma1", "sigma", "sigma_p"):
        return _jordan_pmap(name)
    raise ValueError(f"unknown involution {name!r}; expected one of {_P_INVOLUTIONS}")


def conj_quadruple(m: PMap, el: E7Element) -> E7Element:
    """alpha Phi alpha^-1 for the named maps, in closed form.

    gamma-type maps conjugate componentwise; iota flips the signs of A and B;
    lambda sends (phi, A, B, nu) to (-t(phi), -B, -A, -nu).  Tests validate
    each closed form against the operator route.
    """
    if m.name in ("gamma", "gamma_p", "gamma1", "sigma", "sigma_p"):
        jm = involution(m.name)
        s = jm.operator()
        return E7Element(
            s.compose(el.phi).compose(s), jm.apply(el.a), jm.apply(el.b), el.nu
        )
    if m.name == "iota":
        return E7Element(el.phi, -el.a, -el.b, el.nu)
    if m.name == "lambda":
        tphi = el.phi.transpose_wrt(_gram())
        return E7Element(-tphi, -el.b, -el.a, -el.nu)
    raise ValueError(f"no closed conjugation for {m.name!r}")


def conj_quadruple_by_probes(m: PMap, el: E7Element) -> E7Element:
    """alpha Phi alpha^-1 recovered from the operator action (reference path)."""
    def conj_apply(p: PVector) -> PVector:
        return m.apply(e7_apply(el, m.inv_apply(p)))

    img_eta = conj_apply(PVector.basis(55))   # = (A', 0, 0, -nu')
    img_xi = conj_apply(PVector.basis(54))    # = (0, B', nu', 0)
    a2 = img_eta.x
    nu2 = img_xi.xi
    b2 = img_xi.y
    cols = []
    for j in range(DIM):
        img = conj_apply(PVector.basis(j))
        col = img.x + J27.basis(j).scale(nu2.scale(_THIRD))
        cols.append(list(col.coords))
    phi2 = LinearOperator.from_columns(cols, "jordan27")
    return E7Element(phi2, a2, b2, nu2)


# ---------------------------------------------------------------------------
# Membership predicates
# ---------------------------------------------------------------------------

_PAIRS56 = [(i, j) for i in range(PDIM) for j in range(i, PDIM)]


@lru_cache(maxsize=2048)
def _pair_cross(i: int, j: int) -> E7Element:
    """Cached P_i x P_j over the 56-basis (identical across membership checks)."""
    return cross_pq(PVector.basis(i), PVector.basis(j))


def quadruple_space_basis():
    """The 784 one-entry quadruples spanning all (phi, A, B, nu)."""
    out = []
    zero_phi = LinearOperator.zero(DIM, "jordan27")
    for c in range(DIM):
        for r in range(DIM):
            out.append(E7Element(LinearOperator(DIM, {c: {r: ONE}}, "jordan27"),
                                 J27.zero(), J27.zero(), ZERO))
    for bj in _BASIS:
        out.append(E7Element(zero_phi, bj, J27.zero(), ZERO))
    for bj in _BASIS:
        out.append(E7Element(zero_phi, J27.zero(), bj, ZERO))
    out.append(E7Element(zero_phi, J27.zero(), J27.zero(), ONE))
    return out


def conj_certification_failures(name: str):
    """Certify the closed conjugation formula against the raw action.

    Both sides of alpha o act(Phi) o alpha^-1 = act(conj_quadruple(alpha, Phi))
    are linear in Phi, so equality on the 784 one-entry quadruples proves the
    identity for every quadruple.  Returns the failing quadruple indices.
    """
    m = lambda_pmap() if name == "lambda" else p_involution(name)
    bad = []
    pb = p_basis()
    for idx, el in enumerate(quadruple_space_basis()):
        expected = conj_quadruple(m, el)
        for k, p in enumerate(pb):
            if m.apply(e7_apply(el, m.inv_apply(p))) != e7_apply(expected, p):
                bad.append(idx)
                break
    return bad


def is_e7_group(m: PMap, pairs=None) -> bool:
    """alpha(P x Q)alpha^-1 = alpha P x alpha Q and <alpha P, alpha Q> = <P, Q>.

    The left side uses the closed conjugation formula, which the suite
    certifies separately against the raw action over the whole quadruple
    space (conj_certification_failures).
    """
    pb = p_basis()
    imgs = [m.apply(p) for p in pb]
    pairs = _PAIRS56 if pairs is None else pairs
    if m.name not in ("gamma", "gamma_p", "gamma1", "sigma", "sigma_p", "iota", "lambda"):
        return is_e7_group_by_action(m, pairs)
    for i, j in pairs:
        if hermitian_form(imgs[i], imgs[j]) != hermitian_form(pb[i], pb[j]):
            return False
        lhs = conj_quadruple(m, _pair_cross(i, j))
        rhs = cross_pq(imgs[i], imgs[j])
        if not (lhs - rhs).is_zero():
            return False
    return True


def is_e7_group_by_action(m: PMap, pairs) -> bool:
    """Reference form of the group predicate on explicit pairs (no closed forms)."""
    pb = p_basis()
    imgs = [m.apply(p) for p in pb]
    for i, j in pairs:
        if hermitian_form(imgs[i], imgs[j]) != hermitian_form(pb[i], pb[j]):
            return False
        w1 = cross_pq(pb[i], pb[j])
        w2 = cross_pq(imgs[i], imgs[j])
        for k in range(PDIM):
            if m.apply(e7_apply(w1, m.inv_apply(pb[k]))) != e7_apply(w2, pb[k]):
                return False
    return True


def is_e7_algebra(el: E7Element, pairs=None) -> bool:
    """[Phi, P x Q] = (Phi P) x Q + P x (Phi Q) and skewness of <,>."""
    pb = p_basis()
    imgs = [e7_apply(el, p) for p in pb]
    pairs = _PAIRS56 if pairs is None else pairs
    for i, j in pairs:
        lhs = e7_bracket(el, _pair_cross(i, j))
        rhs = cross_pq(imgs[i], pb[j]) + cross_pq(pb[i], imgs[j])
        if not (lhs - rhs).is_zero():
            return False
    for i in range(PDIM):
        for j in range(PDIM):
            if hermitian_form(imgs[i], pb[j]) + hermitian_form(pb[i], imgs[j]):
                return False
    return True


# ---------------------------------------------------------------------------
# The compact e7 basis and Theorem-level computations
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def e7_basis():
    """133 compact elements: e6 lifts (78), A-pairs (54), the nu generator (1)."""
    from .f4e6 import e6_basis

    out = [E7Element.from_phi(phi) for phi in e6_basis()]
    zero_phi = LinearOperator.zero(DIM, "jordan27")
    for bj in _BASIS:
        out.append(E7Element(zero_phi, bj, -bj, ZERO))
    for bj in _BASIS:
        a = bj.scale(I)
        out.append(E7Element(zero_phi, a, a, ZERO))  # -tau(iB) = iB
    out.append(E7Element(zero_phi, J27.zero(), J27.zero(), I))
    return out


def e7_rank(basis=None) -> int:
    """Exact rank of the flattened basis (must be 133)."""
    basis = e7_basis() if basis is None else basis
    sr = SparseRREF(4 * E7_FLAT_LEN)
    for el in basis:
        row = {}
        for pos, v in el.flatten().items():
            base = 4 * pos
            for t, qv in enumerate(v.coords()):
                if qv:
                    row[base + t] = qv
        sr.add_row(row)
    return sr.rank


def lambda_twist_failures(basis=None):
    """Indices where lambda Phi lambda^-1 != Phi(-t(phi), -B, -A, -nu) as operators."""
    basis = e7_basis() if basis is None else basis
    lam = lambda_pmap()
    bad = []
    for idx, el in enumerate(basis):
        expected = conj_quadruple(lam, el)
        for k in range(PDIM):
            p = PVector.basis(k)
            lhs = lam.apply(e7_apply(el, lam.inv_apply(p)))
            if lhs != e7_apply(expected, p):
                bad.append(idx)
                break
    return bad


def fixed_subalgebra_e7(basis, map_names):
    """Exact fixed subalgebra of e7 under Ad of the named P^C maps."""
    maps = [p_involution(n) for n in map_names]
    groups = []
    for el in basis:
        diffs = []
        for m in maps:
            diffs.append(_flatten_q_e7(conj_quadruple(m, el) - el))
        groups.append(diffs)
    coeffs = coefficient_kernel(groups)
    fixed = []
    for vec in coeffs:
        acc = E7Element.zero()
        for c, el in zip(vec, basis):
            if c:
                acc = acc + el.scale(Cyclo(c))
        fixed.append(acc)
    abelian = all(
        e7_bracket(fixed[a], fixed[b]).is_zero()
        for a in range(len(fixed))
        for b in range(a + 1, len(fixed))
    )
    cent_groups = [
        [_flatten_q_e7(e7_bracket(el, t)) for t in fixed] for el in basis
    ]
    self_centralizing = len(coefficient_kernel(cent_groups)) == len(fixed)
    return fixed, abelian, self_centralizing


def _flatten_q_e7(el: E7Element) -> dict:
    out = {}
    for pos, v in el.flatten().items():
        base = 4 * pos
        for t, qv in enumerate(v.coords()):
            if qv:
                out[base + t] = qv
    return out


def theorem_43():
    """Fixed subalgebra of e7 under gamma, gamma', sigma, sigma', iota; expected T^7."""
    return fixed_subalgebra_e7(e7_basis(), ("gamma", "gamma_p", "sigma", "sigma_p", "iota"))
