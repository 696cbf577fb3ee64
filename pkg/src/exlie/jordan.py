"""The exceptional Jordan algebra J (27-dim), its complexification and split form.

Elements are stored as 27 K-coordinates over the fixed basis

    E1, E2, E3, F1(e0..e7), F2(e0..e7), F3(e0..e7)

where F_i(a) puts the octonion a into off-diagonal slot i of the Hermitian
matrix with first row (xi1, x3, conj(x2)).  The Jordan product, trace forms
and the Freudenthal cross product are precomputed structure tensors over
this basis; diagonal involutions are sign vectors.
"""

from __future__ import annotations

from functools import lru_cache

from .complexmat import CPair, cmat_zero
from .linalg import LinearOperator
from .octonions import Octonion, oct_mul
from .scalars import Cyclo, Rat, ZERO, ONE, HALF

DIM = 27
_R0 = Rat(0)
_R1 = Rat(1)

# slot i (1-based) off-diagonal positions in the Hermitian matrix, 0-indexed
_SLOT_POS = {1: (1, 2), 2: (2, 0), 3: (0, 1)}


def basis_index(slot: int, k: int) -> int:
    """Index of F_slot(e_k) in the 27-basis."""
    return 3 + 8 * (slot - 1) + k


class J27:
    """Element of J (or J^C) as 27 K-coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(coords)

    @staticmethod
    def zero() -> "J27":
        return _J_ZERO

    @staticmethod
    def basis(i: int) -> "J27":
        return _J_BASIS[i]

    @staticmethod
    def diag(x1: Cyclo, x2: Cyclo, x3: Cyclo) -> "J27":
        return J27((x1, x2, x3) + (ZERO,) * 24)

    @staticmethod
    def f_element(slot: int, a: Octonion) -> "J27":
        coords = [ZERO] * 27
        base = 3 + 8 * (slot - 1)
        for k, v in enumerate(a.coords):
            coords[base + k] = v
        return J27(coords)

    def __add__(self, o):
        sc, oc = self.coords, o.coords
        return J27(tuple(
            a if b.is_zero() else (b if a.is_zero() else a + b)
            for a, b in zip(sc, oc)
        ))

    def __sub__(self, o):
        sc, oc = self.coords, o.coords
        return J27(tuple(a if b.is_zero() else a - b for a, b in zip(sc, oc)))

    def __neg__(self):
        return J27(tuple(a if a.is_zero() else -a for a in self.coords))

    def scale(self, s: Cyclo) -> "J27":
        if s.is_zero():
            return _J_ZERO
        return J27(tuple(ZERO if a.is_zero() else a * s for a in self.coords))

    def __eq__(self, o):
        if not isinstance(o, J27):
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def tau(self) -> "J27":
        return J27(tuple(c if c.is_zero() else c.tau() for c in self.coords))

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coords)

    def __repr__(self):
        nz = {i: c for i, c in enumerate(self.coords) if not c.is_zero()}
        return f"J27({nz})"


_J_ZERO = J27((ZERO,) * 27)
_J_BASIS = [J27(tuple(ONE if t == i else ZERO for t in range(27))) for i in range(27)]

E1 = _J_BASIS[0]
E2 = _J_BASIS[1]
E3 = _J_BASIS[2]
E_IDENT = E1 + E2 + E3


def jordan_basis():
    """The 27 basis elements in their fixed order."""
    return list(_J_BASIS)


# ---------------------------------------------------------------------------
# Structure tensors (built once from symbolic Hermitian matrix products)
# ---------------------------------------------------------------------------

def _basis_matrix(idx: int):
    """Basis element as a sparse Hermitian 3x3 octonion matrix {(r,c): Octonion}."""
    if idx < 3:
        return {(idx, idx): Octonion.unit(0)}
    slot, k = divmod(idx - 3, 8)
    r, c = _SLOT_POS[slot + 1]
    u = Octonion.unit(k)
    return {(r, c): u, (c, r): u.conj()}


def _mat_mul(a, b):
    out = {}
    for (r, m), x in a.items():
        for (m2, c), y in b.items():
            if m2 != m:
                continue
            p = oct_mul(x, y)
            if (r, c) in out:
                out[(r, c)] = out[(r, c)] + p
            else:
                out[(r, c)] = p
    return out


def _mat_to_coords(mat):
    """Read a Hermitian octonion matrix back into 27 coordinates."""
    coords = [ZERO] * 27
    for i in range(3):
        d = mat.get((i, i))
        if d is not None:
            assert all(v.is_zero() for v in d.coords[1:]), "non-scalar diagonal"
            coords[i] = d.coords[0]
    for slot, (r, c) in _SLOT_POS.items():
        x = mat.get((r, c))
        if x is not None:
            base = 3 + 8 * (slot - 1)
            for k, v in enumerate(x.coords):
                coords[base + k] = v
    return coords


@lru_cache(maxsize=1)
def _mul_tensor():
    """T[i][j] = tuple of (k, Rat): coordinates of B_i o B_j."""
    tensor = [dict() for _ in range(27)]
    for i in range(27):
        mi = _basis_matrix(i)
        for j in range(i, 27):
            mj = _basis_matrix(j)
            prod = _mat_mul(mi, mj)
            if i != j:
                for key, v in _mat_mul(mj, mi).items():
                    prod[key] = prod.get(key) + v if key in prod else v
                coords = [c * HALF for c in _mat_to_coords(prod)]
            else:
                coords = _mat_to_coords(prod)
            entry = []
            for k, c in enumerate(coords):
                if not c.is_zero():
                    assert c.is_rational(), "irrational structure constant"
                    entry.append((k, c.a))
            if entry:
                tensor[i][j] = tuple(entry)
                tensor[j][i] = tuple(entry)
    return tensor


@lru_cache(maxsize=1)
def _gram_diag():
    """Diagonal of the trace form (B_i, B_j) = tr(B_i o B_j); must be diagonal."""
    t = _mul_tensor()
    diag = [None] * 27
    for i in range(27):
        for j in range(27):
            entry = t[i].get(j, ())
            val = _R0
            for k, q in entry:
                if k < 3:
                    val += q
            if i == j:
                diag[i] = val
            else:
                assert not val, "trace form is not diagonal on this basis"
    return diag


def jordan_mul(x: J27, y: J27) -> J27:
    """Commutative Jordan product X o Y = (XY + YX)/2; E is the unit."""
    t = _mul_tensor()
    acc = [ZERO] * 27
    xc, yc = x.coords, y.coords
    for i in range(27):
        xi = xc[i]
        if xi.is_zero():
            continue
        for j, entry in t[i].items():
            yj = yc[j]
            if yj.is_zero():
                continue
            s = xi * yj
            for k, q in entry:
                acc[k] = acc[k] + s.scale(q)
    return J27(acc)


def trace(x: J27) -> Cyclo:
    c = x.coords
    return c[0] + c[1] + c[2]


def bilinear(x: J27, y: J27) -> Cyclo:
    """(X, Y) = tr(X o Y); diagonal in the fixed basis."""
    g = _gram_diag()
    acc = ZERO
    for xi, yi, gi in zip(x.coords, y.coords, g):
        if xi.is_zero() or yi.is_zero():
            continue
        acc = acc + (xi * yi).scale(gi)
    return acc


def hermitian(x: J27, y: J27) -> Cyclo:
    """<X, Y> = (tau X, Y)."""
    g = _gram_diag()
    acc = ZERO
    for xi, yi, gi in zip(x.coords, y.coords, g):
        if xi.is_zero() or yi.is_zero():
            continue
        acc = acc + (xi.tau() * yi).scale(gi)
    return acc


def forms(x: J27, y: J27):
    """(tr X, (X, Y), <X, Y>) per the module contract."""
    return trace(x), bilinear(x, y), hermitian(x, y)


def gram_diagonal():
    return list(_gram_diag())


@lru_cache(maxsize=1)
def _cross_tensor():
    """CT[i][j] = tuple of (k, Rat): coordinates of B_i x B_j."""
    t = _mul_tensor()
    g = _gram_diag()
    tensor = [dict() for _ in range(27)]
    for i in range(27):
        tri = _R1 if i < 3 else _R0
        for j in range(i, 27):
            trj = _R1 if j < 3 else _R0
            coords = [_R0] * 27
            for k, q in t[i].get(j, ()):
                coords[k] += q  # 2 * (1/2) * X o Y
            if tri:
                coords[j] -= Rat(1, 2) * tri
            if trj:
                coords[i] -= Rat(1, 2) * trj
            pairing = g[i] if i == j else _R0
            const = (tri * trj - pairing) * Rat(1, 2)
            if const:
                for d in range(3):
                    coords[d] += const
            entry = tuple((k, q) for k, q in enumerate(coords) if q)
            if entry:
                tensor[i][j] = entry
                if i != j:
                    tensor[j][i] = entry
    return tensor


def cross(x: J27, y: J27) -> J27:
    """Freudenthal cross product, symmetric:

    X x Y = (2 X o Y - tr(X) Y - tr(Y) X + (tr(X) tr(Y) - (X, Y)) E) / 2.
    """
    ct = _cross_tensor()
    acc = [ZERO] * 27
    xc, yc = x.coords, y.coords
    for i in range(27):
        xi = xc[i]
        if xi.is_zero():
            continue
        for j, entry in ct[i].items():
            yj = yc[j]
            if yj.is_zero():
                continue
            s = xi * yj
            for k, q in entry:
                acc[k] = acc[k] + s.scale(q)
    return J27(acc)


def op_mul(a: J27) -> LinearOperator:
    """The multiplication operator X -> A o X as a sparse matrix."""
    t = _mul_tensor()
    cols = {}
    for i, ai in enumerate(a.coords):
        if ai.is_zero():
            continue
        for j, entry in t[i].items():
            col = cols.setdefault(j, {})
            for k, q in entry:
                nv = col.get(k, ZERO) + ai.scale(q)
                if nv.is_zero():
                    col.pop(k, None)
                else:
                    col[k] = nv
    return LinearOperator(27, {j: c for j, c in cols.items() if c}, "jordan27")


def op_cross(a: J27) -> LinearOperator:
    """The operator X -> A x X as a sparse matrix."""
    ct = _cross_tensor()
    cols = {}
    for i, ai in enumerate(a.coords):
        if ai.is_zero():
            continue
        for j, entry in ct[i].items():
            col = cols.setdefault(j, {})
            for k, q in entry:
                nv = col.get(k, ZERO) + ai.scale(q)
                if nv.is_zero():
                    col.pop(k, None)
                else:
                    col[k] = nv
    return LinearOperator(27, {j: c for j, c in cols.items() if c}, "jordan27")


# ---------------------------------------------------------------------------
# Split form J_C (+) M(3, C) and the five involutions
# ---------------------------------------------------------------------------

class SplitElement:
    """(X, M): X Hermitian 3x3 over span{1, e1}, M a full 3x3 complex matrix.

    Columns m1, m2, m3 of M are the C^3 parts of the octonion slots x1, x2, x3.
    """

    __slots__ = ("X", "M")

    def __init__(self, X, M):
        self.X = X
        self.M = M

    @staticmethod
    def from_jordan(v: J27) -> "SplitElement":
        X = cmat_zero()
        M = cmat_zero()
        c = v.coords
        for d in range(3):
            X[d][d] = CPair(c[d], ZERO)
        for slot in (1, 2, 3):
            base = 3 + 8 * (slot - 1)
            a = CPair(c[base], c[base + 1])
            r, cc = _SLOT_POS[slot]
            X[r][cc] = a
            X[cc][r] = a.conj()
            for row in range(3):
                M[row][slot - 1] = CPair(c[base + 2 + 2 * row], c[base + 3 + 2 * row])
        return SplitElement(X, M)

    def to_jordan(self) -> J27:
        coords = [ZERO] * 27
        for d in range(3):
            coords[d] = self.X[d][d].re + self.X[d][d].im  # im must vanish
        for slot in (1, 2, 3):
            base = 3 + 8 * (slot - 1)
            r, cc = _SLOT_POS[slot]
            a = self.X[r][cc]
            coords[base] = a.re
            coords[base + 1] = a.im
            for row in range(3):
                n = self.M[row][slot - 1]
                coords[base + 2 + 2 * row] = n.re
                coords[base + 3 + 2 * row] = n.im
        return J27(coords)


def split_iso(s: SplitElement) -> J27:
    return s.to_jordan()


def split_iso_inv(v: J27) -> SplitElement:
    return SplitElement.from_jordan(v)


def _sign_vector(name: str):
    signs = [1] * 27
    if name in ("gamma", "gamma_p", "gamma1"):
        neg = {"gamma": (4, 5, 6, 7), "gamma_p": (2, 3, 6, 7), "gamma1": (1, 3, 5, 7)}[name]
        for slot in (1, 2, 3):
            base = 3 + 8 * (slot - 1)
            for k in neg:
                signs[base + k] = -1
    elif name == "sigma":
        for idx in range(basis_index(2, 0), basis_index(3, 7) + 1):
            signs[idx] = -1
    elif name == "sigma_p":
        for idx in range(basis_index(1, 0), basis_index(2, 7) + 1):
            signs[idx] = -1
    else:
        raise ValueError(f"unknown involution {name!r}")
    return tuple(signs)


class JordanMap:
    """One of gamma, gamma_p, gamma1, sigma, sigma_p (diagonal signs) or tau."""

    __slots__ = ("name", "signs", "conjugate_linear")

    def __init__(self, name: str):
        self.name = name
        if name == "tau":
            self.signs = None
            self.conjugate_linear = True
        else:
            self.signs = _sign_vector(name)
            self.conjugate_linear = False

    def apply(self, v: J27) -> J27:
        if self.conjugate_linear:
            return v.tau()
        return J27(tuple(-c if s < 0 else c for s, c in zip(self.signs, v.coords)))

    def operator(self) -> LinearOperator:
        if self.conjugate_linear:
            raise ValueError("tau is conjugate-linear; it has no K-linear matrix")
        return LinearOperator.diagonal(self.signs, "jordan27")

    def __repr__(self):
        return f"JordanMap({self.name!r})"


_INVOLUTION_NAMES = ("gamma", "gamma_p", "gamma1", "sigma", "sigma_p", "tau")


def involution(name: str) -> JordanMap:
    if name not in _INVOLUTION_NAMES:
        raise ValueError(f"unknown involution {name!r}; expected one of {_INVOLUTION_NAMES}")
    return JordanMap(name)
