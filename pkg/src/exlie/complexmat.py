"""Arithmetic over C = span{1, e1} inside O, and 3x3 matrices over it.

A CPair (a, b) means a + b*e1 with a, b in K; the complexified split form
uses the same pairs with arbitrary K components.  Conjugation here negates
e1 and is unrelated to tau (which conjugates the complexification unit i).

Samples for the unitary groups are passed around as plain K-scalars via the
identification e1 <-> i (both square to -1 and K = Q(sqrt3)(i) is exactly
the rational e1-complex plane), so omega lands on the honest K-element.
"""

from __future__ import annotations

from .scalars import Cyclo, ZERO, ONE, I


class CPair:
    """a + b*e1 with a, b in K."""

    __slots__ = ("re", "im")

    def __init__(self, re: Cyclo, im: Cyclo = ZERO):
        self.re = re
        self.im = im

    @staticmethod
    def from_scalar(s: Cyclo) -> "CPair":
        """Interpret a K-scalar as an e1-complex number via e1 <-> i."""
        return CPair(s.real_part(), s.imag_part())

    def to_scalar(self) -> Cyclo:
        """Inverse identification; only faithful when re, im are tau-real."""
        return self.re + self.im * I

    def __add__(self, o):
        return CPair(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return CPair(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return CPair(-self.re, -self.im)

    def __mul__(self, o):
        return CPair(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def scale(self, s: Cyclo) -> "CPair":
        return CPair(self.re * s, self.im * s)

    def conj(self) -> "CPair":
        """e1-conjugation (K-linear)."""
        return CPair(self.re, -self.im)

    def tau(self) -> "CPair":
        return CPair(self.re.tau(), self.im.tau())

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __eq__(self, o):
        if not isinstance(o, CPair):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __repr__(self):
        return f"CPair({self.re!r}, {self.im!r})"


CP_ZERO = CPair(ZERO, ZERO)
CP_ONE = CPair(ONE, ZERO)


def cmat(rows) -> list:
    return [list(r) for r in rows]


def cmat_zero() -> list:
    return [[CP_ZERO] * 3 for _ in range(3)]


def cmat_identity() -> list:
    return [[CP_ONE if i == j else CP_ZERO for j in range(3)] for i in range(3)]


def cmat_diag(d0: CPair, d1: CPair, d2: CPair) -> list:
    m = cmat_zero()
    m[0][0], m[1][1], m[2][2] = d0, d1, d2
    return m


def cmat_from_scalars(rows) -> list:
    """3x3 of K-scalars -> 3x3 of CPairs via e1 <-> i."""
    return [[CPair.from_scalar(s) for s in row] for row in rows]


def cmat_add(a, b) -> list:
    return [[a[i][j] + b[i][j] for j in range(3)] for i in range(3)]


def cmat_sub(a, b) -> list:
    return [[a[i][j] - b[i][j] for j in range(3)] for i in range(3)]


def cmat_scale(a, s: Cyclo) -> list:
    return [[a[i][j].scale(s) for j in range(3)] for i in range(3)]


def cmat_mul(a, b) -> list:
    out = cmat_zero()
    for i in range(3):
        for j in range(3):
            acc = CP_ZERO
            for k in range(3):
                x = a[i][k]
                y = b[k][j]
                if x.is_zero() or y.is_zero():
                    continue
                acc = acc + x * y
            out[i][j] = acc
    return out


def cmat_adjoint(a) -> list:
    """Conjugate transpose w.r.t. e1-conjugation."""
    return [[a[j][i].conj() for j in range(3)] for i in range(3)]


def cmat_tau(a) -> list:
    return [[a[i][j].tau() for j in range(3)] for i in range(3)]


def cmat_det(a) -> CPair:
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def cmat_eq(a, b) -> bool:
    return all(a[i][j] == b[i][j] for i in range(3) for j in range(3))
