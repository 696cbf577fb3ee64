"""Deterministic exact dense/sparse linear algebra over Q and over K = Q(zeta12).

Everything that decides a dimension is exact rational elimination with a
fixed pivot rule (first nonzero column, first usable row), so repeated runs
produce identical bases.  A mod-p engine (numpy) is used only where its
output is a rigorous bound on its own: rank mod p never exceeds rank over Q,
so mod-p independence certifies exact independence and mod-p kernel
dimensions are upper bounds for exact kernel dimensions.  Shipped bases are
always verified by exact identities afterwards.
"""

from __future__ import annotations

import numpy as np

from .scalars import Cyclo, Rat, ZERO, ONE

_R0 = Rat(0)
_R1 = Rat(1)


# ---------------------------------------------------------------------------
# Dense exact elimination over Q
# ---------------------------------------------------------------------------

def rref(rows):
    """Reduced row echelon form of a list-of-lists rational matrix.

    Returns (reduced_rows, pivot_cols).  Input is not modified.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = _R1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row_r = m[r]
                m[i] = [x - f * y for x, y in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    """Exact rank by elimination."""
    return len(rref(rows)[1])


def kernel_basis(rows, ncols=None):
    """Deterministic reduced basis of the null space.

    One vector per free column, normalized with entry 1 in its free position;
    empty list iff the kernel is trivial.
    """
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [_R0] * ncols
        v[fc] = _R1
        for ri, pc in enumerate(pivots):
            v[pc] = -red[ri][fc]
        basis.append(v)
    return basis


def mat_vec(rows, v):
    return [sum((x * y for x, y in zip(r, v)), _R0) for r in rows]


# ---------------------------------------------------------------------------
# Sparse incremental exact RREF (rows are dicts col -> Rat)
# ---------------------------------------------------------------------------

class SparseRREF:
    """Incrementally maintained reduced row echelon form over Q.

    Rows are sparse dicts.  Used for kernels of constraint systems whose
    unknown count is modest (coefficient spaces of Lie algebra bases) and for
    exact span-membership tests.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows = {}  # pivot col -> dict row, normalized, fully reduced

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce_vector(self, row: dict) -> dict:
        """Return row reduced against the current basis (row is consumed)."""
        for c in sorted(row):
            if c in self.rows and row.get(c):
                f = row[c]
                for cc, vv in self.rows[c].items():
                    nv = row.get(cc, _R0) - f * vv
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
        return {c: v for c, v in row.items() if v}

    def add_row(self, row: dict):
        """Insert one constraint row; returns its pivot column or None."""
        row = self.reduce_vector(dict(row))
        if not row:
            return None
        p = min(row)
        inv = _R1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        # keep existing rows reduced against the new pivot
        for q, r in self.rows.items():
            if p in r:
                f = r[p]
                for cc, vv in row.items():
                    nv = r.get(cc, _R0) - f * vv
                    if nv:
                        r[cc] = nv
                    else:
                        r.pop(cc, None)
        self.rows[p] = row
        return p

    def contains(self, row: dict) -> bool:
        """Exact span membership."""
        return not self.reduce_vector(dict(row))

    def kernel(self):
        """Kernel of the accumulated row space, same conventions as kernel_basis."""
        pivots = sorted(self.rows)
        free = [c for c in range(self.ncols) if c not in self.rows]
        basis = []
        for fc in free:
            v = [_R0] * self.ncols
            v[fc] = _R1
            for pc in pivots:
                coeff = self.rows[pc].get(fc)
                if coeff:
                    v[pc] = -coeff
            basis.append(v)
        return basis


def coefficient_kernel(column_groups):
    """Exact kernel of sum_j c_j * v_{j,t} = 0, simultaneously over all t.

    column_groups[j] is the list of sparse Q-vectors (dicts pos -> Rat)
    attached to unknown j; vectors sharing an index t live in one coordinate
    space.  Returns kernel vectors over the unknowns, deterministically.
    """
    n = len(column_groups)
    rows = {}
    for j, vecs in enumerate(column_groups):
        for t, vec in enumerate(vecs):
            for pos, val in vec.items():
                if val:
                    rows.setdefault((t, pos), {})[j] = val
    sr = SparseRREF(n)
    for key in sorted(rows):
        sr.add_row(rows[key])
    return sr.kernel()


# ---------------------------------------------------------------------------
# K -> Q flattening
# ---------------------------------------------------------------------------

def flatten_field(m):
    """Expand each K entry of a matrix into its 4 rational coordinates.

    An r x c matrix over K becomes r x 4c over Q (coordinate expansion).
    """
    out = []
    for row in m:
        qrow = []
        for s in row:
            qrow.extend(s.coords())
        out.append(qrow)
    return out


def mult_matrix(s: Cyclo):
    """4x4 rational matrix of multiplication by s on the basis 1, z, z^2, z^3."""
    cols = []
    x = s
    for _ in range(4):
        cols.append(x.coords())
        a, b, c, d = x.coords()
        x = Cyclo(-d, a, b + d, c)  # multiply by z
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def flatten_field_system(m):
    """Expand a K-linear system into a Q-linear system.

    Each K entry becomes its 4x4 multiplication matrix, so K-linear unknowns
    become 4 rational unknowns each: r x c over K -> 4r x 4c over Q.
    """
    if not m:
        return []
    rows_out = [[] for _ in range(4 * len(m))]
    for i, row in enumerate(m):
        blocks = [mult_matrix(s) for s in row]
        for t in range(4):
            target = rows_out[4 * i + t]
            for blk in blocks:
                target.extend(blk[t])
    return rows_out


# ---------------------------------------------------------------------------
# Linear operators over K (sparse, column-major)
# ---------------------------------------------------------------------------

class LinearOperator:
    """Square K-matrix acting on coordinates of a named basis.

    Stored column-major and sparse: cols[j][i] is the coefficient of basis
    vector i in the image of basis vector j.
    """

    __slots__ = ("dim", "cols", "basis_name")

    def __init__(self, dim: int, cols=None, basis_name: str = ""):
        self.dim = dim
        self.cols = cols if cols is not None else {}
        self.basis_name = basis_name

    # -- constructors --------------------------------------------------------

    @staticmethod
    def identity(dim: int, basis_name: str = "") -> "LinearOperator":
        return LinearOperator(dim, {j: {j: ONE} for j in range(dim)}, basis_name)

    @staticmethod
    def zero(dim: int, basis_name: str = "") -> "LinearOperator":
        return LinearOperator(dim, {}, basis_name)

    @staticmethod
    def from_columns(columns, basis_name: str = "") -> "LinearOperator":
        """columns[j] is the coordinate list of the image of basis vector j."""
        dim = len(columns)
        cols = {}
        for j, col in enumerate(columns):
            d = {i: v for i, v in enumerate(col) if not v.is_zero()}
            if d:
                cols[j] = d
        return LinearOperator(dim, cols, basis_name)

    @staticmethod
    def diagonal(signs, basis_name: str = "") -> "LinearOperator":
        """Operator with K-scalar (or int) diagonal."""
        cols = {}
        for j, s in enumerate(signs):
            v = s if isinstance(s, Cyclo) else Cyclo(s)
            if not v.is_zero():
                cols[j] = {j: v}
        return LinearOperator(len(signs), cols, basis_name)

    # -- structure ------------------------------------------------------------

    def entry(self, i: int, j: int) -> Cyclo:
        return self.cols.get(j, {}).get(i, ZERO)

    def entries(self):
        for j, col in self.cols.items():
            for i, v in col.items():
                yield i, j, v

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols.values())

    def is_zero(self) -> bool:
        return not self.cols

    def __eq__(self, other):
        if not isinstance(other, LinearOperator):
            return NotImplemented
        if self.dim != other.dim:
            return False
        return (self - other).is_zero()

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        cols = {}
        for j in set(self.cols) | set(other.cols):
            col = dict(self.cols.get(j, {}))
            for i, v in other.cols.get(j, {}).items():
                nv = col.get(i, ZERO) + v
                if nv.is_zero():
                    col.pop(i, None)
                else:
                    col[i] = nv
            if col:
                cols[j] = col
        return LinearOperator(self.dim, cols, self.basis_name)

    def __sub__(self, other):
        return self + other.scale(Cyclo(-1))

    def __neg__(self):
        return self.scale(Cyclo(-1))

    def scale(self, s: Cyclo) -> "LinearOperator":
        if s.is_zero():
            return LinearOperator(self.dim, {}, self.basis_name)
        cols = {j: {i: v * s for i, v in col.items()} for j, col in self.cols.items()}
        return LinearOperator(self.dim, cols, self.basis_name)

    def apply(self, vec):
        """Apply to a dense coordinate list, returning a dense list."""
        out = [ZERO] * self.dim
        for j, xj in enumerate(vec):
            if xj.is_zero():
                continue
            col = self.cols.get(j)
            if not col:
                continue
            for i, a in col.items():
                out[i] = out[i] + a * xj
        return out

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        """self o other (matrix product self @ other)."""
        cols = {}
        for j, bcol in other.cols.items():
            acc = {}
            for k, b in bcol.items():
                acol = self.cols.get(k)
                if not acol:
                    continue
                for i, a in acol.items():
                    nv = acc.get(i, ZERO) + a * b
                    if nv.is_zero():
                        acc.pop(i, None)
                    else:
                        acc[i] = nv
            if acc:
                cols[j] = acc
        return LinearOperator(self.dim, cols, self.basis_name)

    def commutator(self, other: "LinearOperator") -> "LinearOperator":
        return self.compose(other) - other.compose(self)

    def transpose_wrt(self, gram) -> "LinearOperator":
        """Adjoint w.r.t. a diagonal rational form: (tM)[i][j] = M[j][i] g[j]/g[i]."""
        cols = {}
        for j, col in self.cols.items():
            for i, v in col.items():
                # entry (i, j) of M lands at (j, i) of tM with weight g[i]/g[j]
                nv = v if gram[j] == gram[i] else v.scale(gram[i] / gram[j])
                cols.setdefault(i, {})[j] = nv
        return LinearOperator(self.dim, cols, self.basis_name)

    def tau_conj(self) -> "LinearOperator":
        """Entrywise tau (conjugation of the complexification unit)."""
        cols = {
            j: {i: v.tau() for i, v in col.items()}
            for j, col in self.cols.items()
        }
        return LinearOperator(self.dim, cols, self.basis_name)

    def flatten_q(self) -> dict:
        """Sparse Q-coordinate vector of the operator (position -> Rat).

        Position layout: entry (i, j) occupies 4*(j*dim + i) .. +3.
        """
        out = {}
        for j, col in self.cols.items():
            for i, v in col.items():
                base = 4 * (j * self.dim + i)
                a, b, c, d = v.coords()
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
        return f"LinearOperator(dim={self.dim}, nnz={self.nnz()}, basis={self.basis_name!r})"


def operator_of(action, basis, coords_of, basis_name: str = "") -> LinearOperator:
    """Materialize a linear action as a matrix: columns are images of basis vectors."""
    columns = [coords_of(action(b)) for b in basis]
    return LinearOperator.from_columns(columns, basis_name)


# ---------------------------------------------------------------------------
# Mod-p engine (numpy); used for rigorous bounds only
# ---------------------------------------------------------------------------

DEFAULT_PRIME = 1048573  # < 2^20 so float64 BLAS products stay exact


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.2e9 (bases 2, 3, 5, 7)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_after(n: int) -> int:
    n += 1
    while not is_probable_prime(n):
        n += 1
    return n


class ModpRREF:
    """Fully reduced row echelon form mod p with BLAS-backed chunk reduction.

    Values live in [0, p); p is small enough that chunk @ basis products are
    exact in float64.
    """

    def __init__(self, ncols: int, prime: int = DEFAULT_PRIME):
        self.n = ncols
        self.p = prime
        self.mat = np.zeros((0, ncols), dtype=np.int64)
        self.pivcols = []
        assert ncols * (prime - 1) ** 2 < 2**53, "prime too large for exact float64 matmul"

    @property
    def rank(self) -> int:
        return len(self.pivcols)

    def kernel_dim(self) -> int:
        return self.n - self.rank

    def _reduce_block(self, block):
        p = self.p
        block = np.mod(block, p)
        if self.pivcols and block.any():
            proj = block[:, self.pivcols].astype(np.float64)
            delta = proj @ self.mat.astype(np.float64)
            block = np.mod(block - delta.astype(np.int64), p)
        return block

    def _insert_row(self, row):
        p = self.p
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        inv = pow(int(row[c]), p - 2, p)
        row = row * inv % p
        if len(self.pivcols):
            col = self.mat[:, c]
            if col.any():
                self.mat = np.mod(self.mat - np.outer(col, row), p)
        self.mat = np.vstack([self.mat, row[None, :]])
        self.pivcols.append(c)
        return True

    def feed_dense(self, block):
        """Feed a 2D int array of rows (reduced already by caller mod p or not)."""
        block = self._reduce_block(np.asarray(block, dtype=np.int64))
        for r in range(block.shape[0]):
            row = block[r]
            if not row.any():
                continue
            # rows inserted earlier in this same block may hit this row
            row = self._reduce_single(row)
            if row is not None:
                self._insert_row(row)

    def _reduce_single(self, row):
        """Fully reduce one row against every current pivot."""
        p = self.p
        row = np.mod(row, p)
        if self.pivcols:
            piv = np.asarray(self.pivcols)
            while True:
                coeffs = row[piv]
                if not coeffs.any():
                    break
                # k * p^2 < 2^53 keeps the int64 dot products exact
                row = np.mod(row - coeffs @ self.mat, p)
        return row if row.any() else None

    def feed_sparse(self, rows, chunk=2048):
        """Feed an iterable of sparse dict rows {col: int or Rat}."""
        buf = np.zeros((chunk, self.n), dtype=np.int64)
        fill = 0
        p = self.p
        for row in rows:
            if fill == chunk:
                self.feed_dense(buf)
                buf = np.zeros((chunk, self.n), dtype=np.int64)
                fill = 0
            for c, v in row.items():
                buf[fill, c] = _modp_value(v, p)
            fill += 1
        if fill:
            self.feed_dense(buf[:fill])


def _modp_value(v, p: int) -> int:
    """Image of a rational (or int) in GF(p); raises if the denominator vanishes."""
    if isinstance(v, int):
        return v % p
    num = int(v.numerator)
    den = int(v.denominator)
    d = den % p
    if d == 0:
        raise ZeroDivisionError("denominator divisible by the working prime")
    return num % p * pow(d, p - 2, p) % p


def modp_flatten_cyclo(row_of_cyclo, p: int) -> dict:
    """Sparse mod-p image of a K-coordinate dict {pos: Cyclo} -> {qpos: int}."""
    out = {}
    for pos, v in row_of_cyclo.items():
        base = 4 * pos
        for t, q in enumerate(v.coords()):
            if q:
                out[base + t] = _modp_value(q, p)
    return out
