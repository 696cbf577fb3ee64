"""The explicit e8^C bracket over e7^C + P^C + P^C + C + C + C, and its compact form.

The bracket of (Phi_1, P_1, Q_1, r_1, u_1, v_1) and (Phi_2, P_2, Q_2, r_2,
u_2, v_2) has components

    Phi = [Phi_1, Phi_2] + P_1 x Q_2 - P_2 x Q_1
    P   = Phi_1 P_2 - Phi_2 P_1 + r_1 P_2 - r_2 P_1 + u_1 Q_2 - u_2 Q_1
    Q   = Phi_1 Q_2 - Phi_2 Q_1 - r_1 Q_2 + r_2 Q_1 + v_1 P_2 - v_2 P_1
    r   = -{P_1, Q_2}/8 + {P_2, Q_1}/8 + u_1 v_2 - u_2 v_1
    u   =  {P_1, P_2}/4 + 2 r_1 u_2 - 2 r_2 u_1
    v   = -{Q_1, Q_2}/4 - 2 r_1 v_2 + 2 r_2 v_1

The compact real form consists of the elements (Phi, P, -tau lambda P, r, u,
-tau u) with Phi compact, r in iR; it is exactly the fixed set of the
conjugate-linear involution tau lambda-tilde, hence a real 248-dimensional
subspace.  Closure of the basis brackets inside it is certified per bracket
by the exact linear compact conditions.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .e7 import (
    E7Element,
    PVector,
    PDIM,
    conj_quadruple,
    cross_pq,
    e7_apply,
    e7_basis,
    e7_bracket,
    lambda_pmap,
    p_involution,
    skew_form,
)
from .linalg import ModpRREF, SparseRREF, DEFAULT_PRIME, modp_flatten_cyclo
from .scalars import Cyclo, Rat, ZERO, ONE, I

_EIGHTH = Rat(1, 8)
_QUARTER = Rat(1, 4)
_LAM = lambda_pmap()

E8_FLAT_LEN = 784 + 56 + 56 + 3  # phi | P | Q | r, u, v


class E8Element:
    """(Phi, P, Q, r, u, v) with the compact predicate available."""

    __slots__ = ("phi", "p", "q", "r", "u", "v")

    def __init__(self, phi: E7Element, p: PVector, q: PVector, r: Cyclo, u: Cyclo, v: Cyclo):
        self.phi = phi
        self.p = p
        self.q = q
        self.r = r
        self.u = u
        self.v = v

    @staticmethod
    def zero() -> "E8Element":
        return E8Element(E7Element.zero(), PVector.zero(), PVector.zero(), ZERO, ZERO, ZERO)

    @staticmethod
    def from_phi(phi: E7Element) -> "E8Element":
        return E8Element(phi, PVector.zero(), PVector.zero(), ZERO, ZERO, ZERO)

    @staticmethod
    def compact_p(p: PVector) -> "E8Element":
        """(0, P, -tau lambda P, 0, 0, 0)."""
        return E8Element(E7Element.zero(), p, -(_LAM.apply(p).tau()), ZERO, ZERO, ZERO)

    @staticmethod
    def scalars(r: Cyclo, u: Cyclo, v: Cyclo) -> "E8Element":
        return E8Element(E7Element.zero(), PVector.zero(), PVector.zero(), r, u, v)

    def __add__(self, o):
        return E8Element(self.phi + o.phi, self.p + o.p, self.q + o.q,
                         self.r + o.r, self.u + o.u, self.v + o.v)

    def __sub__(self, o):
        return E8Element(self.phi - o.phi, self.p - o.p, self.q - o.q,
                         self.r - o.r, self.u - o.u, self.v - o.v)

    def __neg__(self):
        return self.scale(Cyclo(-1))

    def scale(self, s: Cyclo) -> "E8Element":
        return E8Element(self.phi.scale(s), self.p.scale(s), self.q.scale(s),
                         self.r * s, self.u * s, self.v * s)

    def __eq__(self, o):
        if not isinstance(o, E8Element):
            return NotImplemented
        return (self.r == o.r and self.u == o.u and self.v == o.v
                and self.p == o.p and self.q == o.q and self.phi == o.phi)

    def is_zero(self) -> bool:
        return (self.r.is_zero() and self.u.is_zero() and self.v.is_zero()
                and self.p.is_zero() and self.q.is_zero() and self.phi.is_zero())

    def tau(self) -> "E8Element":
        return E8Element(self.phi.tau(), self.p.tau(), self.q.tau(),
                         self.r.tau(), self.u.tau(), self.v.tau())

    def is_compact(self) -> bool:
        """Exact linear compact-form conditions (fixed set of tau lambda-tilde)."""
        if self.q != -(_LAM.apply(self.p).tau()):
            return False
        if self.r.tau() != -self.r:
            return False
        if self.v != -self.u.tau():
            return False
        return self.phi.is_compact()

    def flatten(self) -> dict:
        """Sparse K-coordinates: phi (784) | P (56) | Q (56) | r, u, v."""
        out = self.phi.flatten()
        out.update(self.p.flatten(784))
        out.update(self.q.flatten(784 + 56))
        base = 784 + 112
        for t, s in enumerate((self.r, self.u, self.v)):
            if not s.is_zero():
                out[base + t] = s
        return out

    def flatten_q(self) -> dict:
        out = {}
        for pos, val in self.flatten().items():
            base = 4 * pos
            a, b, c, d = val.coords()
            if a:
                out[base] = a
            if b:
                out[base + 1] = b
            if c:
                out[base + 2] = c
            if d:
                out[base + 3] = d
        return out

    def __repr__(self):
        return (f"E8Element(phi={self.phi!r}, p={self.p!r}, q={self.q!r}, "
                f"r={self.r!r}, u={self.u!r}, v={self.v!r})")


def e8_bracket(x: E8Element, y: E8Element) -> E8Element:
    """The displayed six-component bracket; bilinear and antisymmetric."""
    phi1, p1, q1, r1, u1, v1 = x.phi, x.p, x.q, x.r, x.u, x.v
    phi2, p2, q2, r2, u2, v2 = y.phi, y.p, y.q, y.r, y.u, y.v
    z1, z2 = phi1.is_zero(), phi2.is_zero()

    phi = E7Element.zero() if (z1 and z2) else e7_bracket(phi1, phi2)
    if not (p1.is_zero() or q2.is_zero()):
        phi = phi + cross_pq(p1, q2)
    if not (p2.is_zero() or q1.is_zero()):
        phi = phi - cross_pq(p2, q1)

    p = PVector.zero()
    if not (z1 or p2.is_zero()):
        p = p + e7_apply(phi1, p2)
    if not (z2 or p1.is_zero()):
        p = p - e7_apply(phi2, p1)
    if not (r1.is_zero() or p2.is_zero()):
        p = p + p2.scale(r1)
    if not (r2.is_zero() or p1.is_zero()):
        p = p - p1.scale(r2)
    if not (u1.is_zero() or q2.is_zero()):
        p = p + q2.scale(u1)
    if not (u2.is_zero() or q1.is_zero()):
        p = p - q1.scale(u2)

    q = PVector.zero()
    if not (z1 or q2.is_zero()):
        q = q + e7_apply(phi1, q2)
    if not (z2 or q1.is_zero()):
        q = q - e7_apply(phi2, q1)
    if not (r1.is_zero() or q2.is_zero()):
        q = q - q2.scale(r1)
    if not (r2.is_zero() or q1.is_zero()):
        q = q + q1.scale(r2)
    if not (v1.is_zero() or p2.is_zero()):
        q = q + p2.scale(v1)
    if not (v2.is_zero() or p1.is_zero()):
        q = q - p1.scale(v2)

    r = u1 * v2 - u2 * v1
    if not (p1.is_zero() or q2.is_zero()):
        r = r - skew_form(p1, q2).scale(_EIGHTH)
    if not (p2.is_zero() or q1.is_zero()):
        r = r + skew_form(p2, q1).scale(_EIGHTH)

    u = (r1 * u2 - r2 * u1).scale(Rat(2))
    if not (p1.is_zero() or p2.is_zero()):
        u = u + skew_form(p1, p2).scale(_QUARTER)

    v = (r2 * v1 - r1 * v2).scale(Rat(2))
    if not (q1.is_zero() or q2.is_zero()):
        v = v - skew_form(q1, q2).scale(_QUARTER)

    return E8Element(phi, p, q, r, u, v)


# ---------------------------------------------------------------------------
# The maps sigma, sigma', lambda-tilde, tau (and the componentwise lifts)
# ---------------------------------------------------------------------------

class E8Map:
    """Named transformation of e8^C; conjugate_linear marks tau."""

    __slots__ = ("name", "apply", "conjugate_linear")

    def __init__(self, name, apply_fn, conjugate_linear=False):
        self.name = name
        self.apply = apply_fn
        self.conjugate_linear = conjugate_linear

    def __repr__(self):
        return f"E8Map({self.name!r})"


def _componentwise(name: str) -> E8Map:
    m = p_involution(name)

    def fwd(x: E8Element) -> E8Element:
        return E8Element(conj_quadruple(m, x.phi), m.apply(x.p), m.apply(x.q),
                         x.r, x.u, x.v)

    return E8Map(name, fwd)


def _lambda_tilde() -> E8Map:
    def fwd(x: E8Element) -> E8Element:
        return E8Element(conj_quadruple(_LAM, x.phi), _LAM.apply(x.q),
                         -(_LAM.apply(x.p)), -x.r, -x.v, -x.u)

    return E8Map("lambda_tilde", fwd)


_E8_MAP_NAMES = ("sigma", "sigma_p", "lambda_tilde", "tau", "gamma", "gamma_p", "iota_ad")


def e8_map(name: str) -> E8Map:
    if name in ("sigma", "sigma_p", "gamma", "gamma_p"):
        return _componentwise(name)
    if name == "iota_ad":
        m = _componentwise("iota")
        return E8Map("iota_ad", m.apply)
    if name == "lambda_tilde":
        return _lambda_tilde()
    if name == "tau":
        return E8Map("tau", lambda x: x.tau(), conjugate_linear=True)
    raise ValueError(f"unknown map {name!r}; expected one of {_E8_MAP_NAMES}")


# ---------------------------------------------------------------------------
# The compact basis
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def e8_basis():
    """248 elements: e7 lifts (133), compact P-pairs (112), compact scalars (3)."""
    out = [E8Element.from_phi(phi) for phi in e7_basis()]
    for k in range(PDIM):
        out.append(E8Element.compact_p(PVector.basis(k)))
    for k in range(PDIM):
        out.append(E8Element.compact_p(PVector.basis(k).scale(I)))
    out.append(E8Element.scalars(I, ZERO, ZERO))
    out.append(E8Element.scalars(ZERO, ONE, -ONE))          # v = -tau(1)
    out.append(E8Element.scalars(ZERO, I, I))               # v = -tau(i) = i
    return out


def e8_rank_modp(basis=None, prime: int = DEFAULT_PRIME) -> int:
    """Mod-p rank of the flattened basis; a rigorous lower bound for the rank."""
    basis = e8_basis() if basis is None else basis
    eng = ModpRREF(4 * E8_FLAT_LEN, prime)
    eng.feed_sparse([modp_flatten_cyclo(el.flatten(), prime) for el in basis])
    return eng.rank


# ---------------------------------------------------------------------------
# Pair scan: antisymmetry, compact closure, automorphism checks
# ---------------------------------------------------------------------------

_AUTO_MAP_NAMES = ("sigma", "sigma_p", "lambda_tilde")


@lru_cache(maxsize=8)
def _map_images(name: str):
    m = e8_map(name)
    return [m.apply(el) for el in e8_basis()]


def pair_scan(start: int, end: int, check_maps=True):
    """Scan basis pairs [start, end) in the flattened (i < j) enumeration.

    For each pair: antisymmetry [R_i, R_j] + [R_j, R_i] = 0, the exact linear
    compact conditions on the bracket, and s[R_i, R_j] = [s R_i, s R_j] for
    sigma, sigma', lambda-tilde.  Returns counts and first failures.
    """
    basis = e8_basis()
    n = len(basis)
    maps = {nm: e8_map(nm) for nm in _AUTO_MAP_NAMES} if check_maps else {}
    images = {nm: _map_images(nm) for nm in maps}
    res = {
        "pairs": 0,
        "antisym_fail": [],
        "compact_fail": [],
        "auto_fail": [],
    }
    idx = -1
    for i in range(n):
        for j in range(i + 1, n):
            idx += 1
            if idx < start:
                continue
            if idx >= end:
                return res
            res["pairs"] += 1
            br = e8_bracket(basis[i], basis[j])
            if not (br + e8_bracket(basis[j], basis[i])).is_zero():
                if len(res["antisym_fail"]) < 5:
                    res["antisym_fail"].append((i, j))
            if not br.is_compact():
                if len(res["compact_fail"]) < 5:
                    res["compact_fail"].append((i, j))
            for nm, m in maps.items():
                if m.apply(br) != e8_bracket(images[nm][i], images[nm][j]):
                    if len(res["auto_fail"]) < 5:
                        res["auto_fail"].append((nm, i, j))
    return res


def pair_count() -> int:
    n = len(e8_basis())
    return n * (n - 1) // 2


def merge_scan(results):
    out = {"pairs": 0, "antisym_fail": [], "compact_fail": [], "auto_fail": []}
    for r in results:
        out["pairs"] += r["pairs"]
        for key in ("antisym_fail", "compact_fail", "auto_fail"):
            out[key].extend(r[key])
    return out


# ---------------------------------------------------------------------------
# Jacobi
# ---------------------------------------------------------------------------

def jacobi_defect(a: E8Element, b: E8Element, c: E8Element) -> E8Element:
    return (
        e8_bracket(e8_bracket(a, b), c)
        + e8_bracket(e8_bracket(b, c), a)
        + e8_bracket(e8_bracket(c, a), b)
    )


def sector_representatives():
    """Basis indices covering every sector pairing of the bracket formulas,
    plus pure (non-compact) sector elements exercising each formula alone."""
    reps = [0, 60, 80, 110, 132, 133, 160, 187, 188, 189, 216, 243, 244, 245, 246, 247]
    pure = [
        E8Element.from_phi(e7_basis()[5]),
        E8Element(E7Element.zero(), PVector.basis(3), PVector.zero(), ZERO, ZERO, ZERO),
        E8Element(E7Element.zero(), PVector.zero(), PVector.basis(40), ZERO, ZERO, ZERO),
        E8Element.scalars(ONE, ZERO, ZERO),
        E8Element.scalars(ZERO, ONE, ZERO),
        E8Element.scalars(ZERO, ZERO, ONE),
    ]
    return reps, pure


def jacobi_deterministic_failures():
    """Jacobi on the fixed sector-covering set; returns failing triples."""
    basis = e8_basis()
    reps, pure = sector_representatives()
    elems = [basis[i] for i in reps] + pure
    labels = [f"basis[{i}]" for i in reps] + [f"pure[{k}]" for k in range(len(pure))]
    bad = []
    n = len(elems)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if not jacobi_defect(elems[i], elems[j], elems[k]).is_zero():
                    bad.append((labels[i], labels[j], labels[k]))
    return bad


def jacobi_triples(samples: int, seed: int):
    """Deterministic seeded triples of distinct basis indices."""
    rng = random.Random(seed)
    n = len(e8_basis())
    out = []
    for _ in range(samples):
        i = rng.randrange(n)
        j = rng.randrange(n)
        k = rng.randrange(n)
        out.append((i, j, k))
    return out


def jacobi_scan(triples):
    """Exact Jacobi over explicit index triples; returns first failures."""
    basis = e8_basis()
    bad = []
    for (i, j, k) in triples:
        if not jacobi_defect(basis[i], basis[j], basis[k]).is_zero():
            bad.append((i, j, k))
            if len(bad) >= 5:
                break
    return bad


def exhaustive_triples():
    n = len(e8_basis())
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                yield (i, j, k)


# ---------------------------------------------------------------------------
# Scalar sl2 and map identities
# ---------------------------------------------------------------------------

def sl2_identities() -> bool:
    """[r, u] = 2u, [u, v] = r, [r, v] = -2v for the pure scalar units."""
    ru = E8Element.scalars(ONE, ZERO, ZERO)
    uu = E8Element.scalars(ZERO, ONE, ZERO)
    vv = E8Element.scalars(ZERO, ZERO, ONE)
    return (
        e8_bracket(ru, uu) == uu.scale(Cyclo(2))
        and e8_bracket(uu, vv) == ru
        and e8_bracket(ru, vv) == vv.scale(Cyclo(-2))
    )


def involution_identities(sample_count: int = 12, seed: int = 3) -> bool:
    """sigma^2 = sigma'^2 = lambda-tilde^2 = id and tau lambda-tilde = lambda-tilde tau
    on basis elements and seeded random combinations."""
    basis = e8_basis()
    rng = random.Random(seed)
    sigma = e8_map("sigma")
    sigma_p = e8_map("sigma_p")
    lam = e8_map("lambda_tilde")
    tau = e8_map("tau")
    samples = list(basis[:4])
    for _ in range(sample_count):
        acc = E8Element.zero()
        for idx in rng.sample(range(len(basis)), 5):
            acc = acc + basis[idx].scale(Cyclo(rng.randrange(-2, 3)))
        samples.append(acc)
    for s in samples:
        if sigma.apply(sigma.apply(s)) != s:
            return False
        if sigma_p.apply(sigma_p.apply(s)) != s:
            return False
        if lam.apply(lam.apply(s)) != s:
            return False
        if tau.apply(lam.apply(s)) != lam.apply(tau.apply(s)):
            return False
    return True


def tau_automorphism_spot(sample_count: int = 10, seed: int = 4) -> bool:
    """tau[R1, R2] = [tau R1, tau R2] on seeded random pairs."""
    basis = e8_basis()
    rng = random.Random(seed)
    tau = e8_map("tau")
    for _ in range(sample_count):
        a = basis[rng.randrange(len(basis))]
        b = basis[rng.randrange(len(basis))]
        if tau.apply(e8_bracket(a, b)) != e8_bracket(tau.apply(a), tau.apply(b)):
            return False
    return True


def compact_combination_closure(sample_count: int = 10, seed: int = 5) -> bool:
    """Real combinations and brackets of compact elements remain compact."""
    basis = e8_basis()
    rng = random.Random(seed)
    for _ in range(sample_count):
        a = E8Element.zero()
        b = E8Element.zero()
        for idx in rng.sample(range(len(basis)), 4):
            a = a + basis[idx].scale(Cyclo(rng.randrange(-3, 4)))
        for idx in rng.sample(range(len(basis)), 4):
            b = b + basis[idx].scale(Cyclo(rng.randrange(-3, 4)))
        if not (a.is_compact() and b.is_compact()):
            return False
        if not e8_bracket(a, b).is_compact():
            return False
    return True


# ---------------------------------------------------------------------------
# Fixed subalgebras
# ---------------------------------------------------------------------------

def fixed_subalgebra_e8(map_names, order_seed=None):
    """Exact fixed space of the named maps inside the compact basis span.

    Returns (dimension, fixed_elements).  order_seed permutes the basis
    before solving; the dimension must be order-independent.
    """
    from .linalg import coefficient_kernel

    basis = list(e8_basis())
    if order_seed is not None:
        rng = random.Random(order_seed)
        rng.shuffle(basis)
    maps = [e8_map(nm) for nm in map_names]
    groups = []
    for el in basis:
        groups.append([(m.apply(el) - el).flatten_q() for m in maps])
    coeffs = coefficient_kernel(groups)
    fixed = []
    for vec in coeffs:
        acc = E8Element.zero()
        for c, el in zip(vec, basis):
            if c:
                acc = acc + el.scale(Cyclo(c))
        fixed.append(acc)
    return len(fixed), fixed


def span_closure_failures(elements):
    """Pairs of elements whose bracket leaves the exact span of elements."""
    sr = SparseRREF(4 * E8_FLAT_LEN)
    for el in elements:
        sr.add_row(el.flatten_q())
    bad = []
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if not sr.contains(e8_bracket(elements[i], elements[j]).flatten_q()):
                bad.append((i, j))
    return bad


def contains_in_span(elements, candidate: E8Element) -> bool:
    sr = SparseRREF(4 * E8_FLAT_LEN)
    for el in elements:
        sr.add_row(el.flatten_q())
    return sr.contains(candidate.flatten_q())
