"""The octonion algebra O over K, with a pinned multiplication table.

The table is produced by Cayley-Dickson doubling of the quaternions with the
basis assignment chosen so that the products e1*e2 = e3, e1*e4 = e5,
e1*e6 = e7 and e2*e4 = e6 hold on the nose; those four constraints are what
the rest of the tower relies on.  The doubling construction fixes every
remaining sign; the invariant suite (alternativity on all basis triples,
norm multiplicativity, automorphism checks) is the normative validation.
"""

from __future__ import annotations

from .linalg import LinearOperator, SparseRREF, coefficient_kernel
from .scalars import Cyclo, Rat, ZERO, ONE

_R0 = Rat(0)
_R1 = Rat(1)

# quaternion units 1, i, j, k as (sign, index) products
_QUAT = [[(1, 0), (1, 1), (1, 2), (1, 3)],
         [(1, 1), (-1, 0), (1, 3), (-1, 2)],
         [(1, 2), (-1, 3), (-1, 0), (1, 1)],
         [(1, 3), (1, 2), (-1, 1), (-1, 0)]]


def _quat_mul(a, b):
    return _QUAT[a][b]


def _quat_conj(a):
    return (1 if a == 0 else -1, a)


def _cd_unit_product(i, j):
    """Product of Cayley-Dickson basis units u_i u_j, i, j in 0..7.

    u_t = (q_t, 0) for t < 4 and (0, q_{t-4}) for t >= 4, with
    (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
    """
    if i < 4 and j < 4:
        s, k = _quat_mul(i, j)
        return s, k
    if i < 4 and j >= 4:
        s, k = _quat_mul(j - 4, i)  # d a with d = q_{j-4}, a = q_i
        return s, k + 4
    if i >= 4 and j < 4:
        sc, kc = _quat_conj(j)
        s, k = _quat_mul(i - 4, kc)  # b conj(c)
        return s * sc, k + 4
    sc, kc = _quat_conj(j - 4)
    s, k = _quat_mul(kc, i - 4)  # -conj(d) b
    return -s * sc, k


class MulTable:
    """Signed products e_i e_j = +/- e_k for the 8 basis units (e_0 = 1)."""

    def __init__(self, entries=None):
        if entries is None:
            # basis e_t = sign_t * u_t; e_7 = -u_7 makes e1*e6 = e7 hold
            signs = [1, 1, 1, 1, 1, 1, 1, -1]
            entries = []
            for i in range(8):
                row = []
                for j in range(8):
                    s, k = _cd_unit_product(i, j)
                    row.append((signs[i] * signs[j] * s * signs[k], k))
                entries.append(row)
        self.entries = entries

    def product(self, i: int, j: int):
        return self.entries[i][j]

    def signed_triples(self):
        """The 7x7 imaginary part of the table, for reports: (i, j, sign, k)."""
        out = []
        for i in range(1, 8):
            for j in range(1, 8):
                s, k = self.entries[i][j]
                out.append((i, j, s, k))
        return out

    def render(self) -> str:
        lines = []
        for i in range(1, 8):
            cells = []
            for j in range(1, 8):
                s, k = self.entries[i][j]
                cells.append(f"{'-' if s < 0 else '+'}e{k}")
            lines.append(f"e{i}: " + " ".join(cells))
        return "\n".join(lines)

    def corrupted(self, i: int = 2, j: int = 5) -> "MulTable":
        """Copy with one sign flipped; used by the negative-path contract."""
        entries = [list(r) for r in self.entries]
        s, k = entries[i][j]
        entries[i][j] = (-s, k)
        return MulTable(entries)


TABLE = MulTable()


def _associator_coord(table, a, b, c):
    """(e_a e_b) e_c - e_a (e_b e_c) as (sign, k) pairs to cancel; returns dict."""
    out = {}
    s1, k1 = table.product(a, b)
    s2, k2 = table.product(k1, c)
    out[k2] = out.get(k2, 0) + s1 * s2
    s3, k3 = table.product(b, c)
    s4, k4 = table.product(a, k3)
    out[k4] = out.get(k4, 0) - s3 * s4
    return {k: v for k, v in out.items() if v}


def alternativity_failures(table: MulTable):
    """Triples where the associator fails to be alternating; empty iff alternative."""
    bad = []
    for a in range(8):
        for b in range(8):
            for c in range(8):
                d1 = _associator_coord(table, a, b, c)
                d2 = _associator_coord(table, b, a, c)
                d3 = _associator_coord(table, a, c, b)
                for k in set(d1) | set(d2):
                    if d1.get(k, 0) + d2.get(k, 0):
                        bad.append((a, b, c, "swap12"))
                        break
                else:
                    for k in set(d1) | set(d3):
                        if d1.get(k, 0) + d3.get(k, 0):
                            bad.append((a, b, c, "swap23"))
                            break
    return bad


def pinned_product_failures(table: MulTable):
    """The four pinned constraints; empty iff all hold."""
    want = [(1, 2, 1, 3), (1, 4, 1, 5), (1, 6, 1, 7), (2, 4, 1, 6)]
    bad = []
    for i, j, s, k in want:
        if table.product(i, j) != (s, k):
            bad.append((i, j, table.product(i, j)))
    return bad


class Octonion:
    """Element of O (or its complexification) with 8 K-coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(coords)

    @staticmethod
    def zero() -> "Octonion":
        return _OCT_ZERO

    @staticmethod
    def unit(k: int) -> "Octonion":
        return _OCT_UNITS[k]

    @staticmethod
    def from_rats(vals) -> "Octonion":
        return Octonion(tuple(Cyclo(v) for v in vals))

    def __add__(self, other):
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Octonion(tuple(-a for a in self.coords))

    def scale(self, s: Cyclo) -> "Octonion":
        return Octonion(tuple(a * s for a in self.coords))

    def __mul__(self, other):
        return oct_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def conj(self) -> "Octonion":
        c = self.coords
        return Octonion((c[0],) + tuple(-x for x in c[1:]))

    def norm(self) -> Cyclo:
        n = ZERO
        for c in self.coords:
            if not c.is_zero():
                n = n + c * c
        return n

    def tau(self) -> "Octonion":
        return Octonion(tuple(c.tau() for c in self.coords))

    def __repr__(self):
        return "Octonion(" + ", ".join(repr(c) for c in self.coords) + ")"


_OCT_ZERO = Octonion((ZERO,) * 8)
_OCT_UNITS = [Octonion(tuple(ONE if t == k else ZERO for t in range(8))) for k in range(8)]


def oct_mul(x: Octonion, y: Octonion, table: MulTable = TABLE) -> Octonion:
    """Bilinear product per the table."""
    acc = [ZERO] * 8
    yc = y.coords
    for a, xa in enumerate(x.coords):
        if xa.is_zero():
            continue
        row = table.entries[a]
        for b in range(8):
            yb = yc[b]
            if yb.is_zero():
                continue
            s, k = row[b]
            p = xa * yb
            acc[k] = acc[k] - p if s < 0 else acc[k] + p
    return Octonion(acc)


def embed_c3(n1, n2, n3) -> Octonion:
    """C^3 -> O: (a + b e1) at slot s lands on the pair (e_{2s}, e_{2s+1}).

    Each argument is a pair (a, b) of K-scalars meaning a + b*e1.
    """
    coords = [ZERO, ZERO]
    for a, b in (n1, n2, n3):
        coords.append(a)
        coords.append(b)
    return Octonion(coords)


_G2_SIGNS = {
    "gamma": [1, 1, 1, 1, -1, -1, -1, -1],
    "gamma_p": [1, 1, -1, -1, 1, 1, -1, -1],
    "gamma1": [1, -1, 1, -1, 1, -1, 1, -1],
}


def g2_involution(name: str) -> LinearOperator:
    """gamma / gamma_p as diagonal sign operators on O (gamma1 also exposed)."""
    try:
        signs = _G2_SIGNS[name]
    except KeyError:
        raise ValueError(f"unknown involution {name!r}; expected one of {sorted(_G2_SIGNS)}")
    return LinearOperator.diagonal(signs, basis_name="octonion")


def derivation_system(table: MulTable = TABLE):
    """Sparse rational rows (dicts) over 64 unknowns for der(O).

    Unknown u_{i,j} = coefficient of e_i in d(e_j), at position 8*j + i;
    one row per (a, b, t): coordinate t of d(e_a e_b) - d(e_a) e_b - e_a d(e_b).
    """
    rows = []
    for a in range(8):
        for b in range(8):
            s_ab, k_ab = table.product(a, b)
            for t in range(8):
                row = {}

                def bump(pos, val):
                    nv = row.get(pos, _R0) + val
                    if nv:
                        row[pos] = nv
                    else:
                        row.pop(pos, None)

                # d(e_a e_b) coordinate t: s_ab * u_{t, k_ab}
                bump(8 * k_ab + t, Rat(s_ab))
                # minus d(e_a) e_b: sum_m u_{m,a} (e_m e_b)_t
                for m in range(8):
                    s, k = table.product(m, b)
                    if k == t:
                        bump(8 * a + m, Rat(-s))
                # minus e_a d(e_b): sum_m u_{m,b} (e_a e_m)_t
                for m in range(8):
                    s, k = table.product(a, m)
                    if k == t:
                        bump(8 * b + m, Rat(-s))
                if row:
                    rows.append(row)
    return rows


def g2_derivation_basis(table: MulTable = TABLE):
    """Exact basis of der(O) as LinearOperators; dimension 14."""
    sr = SparseRREF(64)
    for row in derivation_system(table):
        sr.add_row(row)
    ops = []
    for vec in sr.kernel():
        cols = {}
        for pos, v in enumerate(vec):
            if v:
                j, i = divmod(pos, 8)
                cols.setdefault(j, {})[i] = Cyclo(v)
        ops.append(LinearOperator(8, cols, basis_name="octonion"))
    return ops


def g2_derivations_and_torus(table: MulTable = TABLE):
    """der(O) basis and the basis fixed under conjugation by gamma and gamma_p."""
    g2 = g2_derivation_basis(table)
    gamma = g2_involution("gamma")
    gamma_p = g2_involution("gamma_p")
    groups = []
    for op in g2:
        groups.append([
            (s.compose(op).compose(s) - op).flatten_q() for s in (gamma, gamma_p)
        ])
    coeff_kernel = coefficient_kernel(groups)
    fixed = []
    for coeffs in coeff_kernel:
        acc = LinearOperator.zero(8, "octonion")
        for c, op in zip(coeffs, g2):
            if c:
                acc = acc + op.scale(Cyclo(c))
        fixed.append(acc)
    return g2, fixed
