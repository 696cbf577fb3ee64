"""Exact arithmetic in Q and in the cyclotomic field K = Q(z), z = exp(i*pi/6).

K has minimal polynomial x^4 - x^2 + 1 and degree 4 over Q.  It contains
simultaneously the complexification unit i = z^3, the real surd sqrt(3)
= 2z - z^3 and the primitive cube root omega = z^2 - 1, so every scalar
appearing anywhere in the tower is exactly representable.  "Real" always
means fixed under the conjugation tau : z -> z^-1.

Values are immutable; rationals are kept normalized (positive denominator,
reduced) by the underlying rational type.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rat

_R0 = Rat(0)
_R1 = Rat(1)


class Cyclo:
    """Element a + b*z + c*z^2 + d*z^3 of K, reduced modulo z^4 = z^2 - 1."""

    __slots__ = ("a", "b", "c", "d", "_hash")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = a if type(a) is type(_R0) else Rat(a)
        self.b = b if type(b) is type(_R0) else Rat(b)
        self.c = c if type(c) is type(_R0) else Rat(c)
        self.d = d if type(d) is type(_R0) else Rat(d)
        self._hash = None

    @staticmethod
    def _raw(a, b, c, d) -> "Cyclo":
        """Internal constructor; trusts that the coordinates are rationals."""
        self = Cyclo.__new__(Cyclo)
        self.a = a
        self.b = b
        self.c = c
        self.d = d
        self._hash = None
        return self

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rat(q) -> "Cyclo":
        return Cyclo(q, 0, 0, 0)

    # -- structure ---------------------------------------------------------

    def coords(self):
        return (self.a, self.b, self.c, self.d)

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def __eq__(self, other):
        if not isinstance(other, Cyclo):
            return NotImplemented
        return (
            self.a == other.a
            and self.b == other.b
            and self.c == other.c
            and self.d == other.d
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.a, self.b, self.c, self.d))
        return h

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not (other.a or other.b or other.c or other.d):
            return self
        if not (self.a or self.b or self.c or self.d):
            return other
        return Cyclo._raw(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        if not (other.a or other.b or other.c or other.d):
            return self
        return Cyclo._raw(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Cyclo._raw(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        a0, a1, a2, a3 = self.a, self.b, self.c, self.d
        b0, b1, b2, b3 = other.a, other.b, other.c, other.d
        if not (a1 or a2 or a3):
            if not a0:
                return ZERO
            return Cyclo._raw(a0 * b0, a0 * b1, a0 * b2, a0 * b3)
        if not (b1 or b2 or b3):
            if not b0:
                return ZERO
            return Cyclo._raw(a0 * b0, a1 * b0, a2 * b0, a3 * b0)
        # convolution, then reduce z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a0 * b2 + a1 * b1 + a2 * b0
        c3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        c4 = a1 * b3 + a2 * b2 + a3 * b1
        c5 = a2 * b3 + a3 * b2
        c6 = a3 * b3
        return Cyclo._raw(c0 - c4 - c6, c1 - c5, c2 + c4, c3 + c5)

    def scale(self, q) -> "Cyclo":
        """Multiply by a plain rational."""
        if not q:
            return ZERO
        return Cyclo._raw(self.a * q, self.b * q, self.c * q, self.d * q)

    def inverse(self) -> "Cyclo":
        """Field inverse via extended Euclid in Q[x] mod x^4 - x^2 + 1."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta12)")
        if self.is_rational():
            return Cyclo(_R1 / self.a, 0, 0, 0)
        # Run xgcd(minpoly, self-as-poly); the gcd is a nonzero constant.
        m = [Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)]  # x^4 - x^2 + 1, low->high
        f = [self.a, self.b, self.c, self.d]
        r0, r1 = m, list(f)
        s0, s1 = [_R0], [_R1]
        while True:
            r1 = _poly_trim(r1)
            if len(r1) == 1:
                break
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        inv_c = _R1 / r1[0]
        coeffs = [x * inv_c for x in s1]
        coeffs = _poly_reduce(coeffs)
        while len(coeffs) < 4:
            coeffs.append(_R0)
        return Cyclo(*coeffs[:4])

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- conjugation and reality -------------------------------------------

    def tau(self) -> "Cyclo":
        """Complex conjugation z -> z^-1; fixes Q(sqrt 3), negates i."""
        if not (self.b or self.c or self.d):
            return self
        return Cyclo._raw(self.a + self.c, self.b, -self.c, -self.b - self.d)

    def is_real(self) -> bool:
        return (not self.c) and self.b == -2 * self.d

    def real_part(self) -> "Cyclo":
        """(s + tau s)/2, an element of Q(sqrt 3)."""
        h = Rat(1, 2)
        return Cyclo(self.a + self.c * h, self.b, 0, -self.b * h)

    def imag_part(self) -> "Cyclo":
        """(s - tau s)/(2i), an element of Q(sqrt 3); s = re + i*im."""
        return (self - self.tau()) * _MINUS_I_HALF

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form "a + b·z + c·z^2 + d·z^3" with reduced rationals."""
        return f"{self.a} + {self.b}·z + {self.c}·z^2 + {self.d}·z^3"

    def __repr__(self):
        if self.is_rational():
            return f"Cyclo({self.a})"
        return f"Cyclo({self.a}, {self.b}, {self.c}, {self.d})"


# -- polynomial helpers over Rat (low-degree, dense lists, low->high) -------

def _poly_trim(p):
    while len(p) > 1 and not p[-1]:
        p = p[:-1]
    return p


def _poly_sub(p, q):
    n = max(len(p), len(q))
    p = p + [_R0] * (n - len(p))
    q = q + [_R0] * (n - len(q))
    return _poly_trim([x - y for x, y in zip(p, q)])


def _poly_mul(p, q):
    out = [_R0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if not x:
            continue
        for j, y in enumerate(q):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(num, den):
    num = list(num)
    den = _poly_trim(den)
    q = [_R0] * max(1, len(num) - len(den) + 1)
    inv_lead = _R1 / den[-1]
    for i in range(len(num) - len(den), -1, -1):
        coef = num[i + len(den) - 1] * inv_lead
        if coef:
            q[i] = coef
            for j, d in enumerate(den):
                num[i + j] -= coef * d
    return _poly_trim(q), _poly_trim(num[: len(den) - 1] or [_R0])


def _poly_reduce(p):
    """Reduce a polynomial in z modulo z^4 = z^2 - 1."""
    p = list(p)
    for i in range(len(p) - 1, 3, -1):
        c = p[i]
        if c:
            p[i - 2] += c
            p[i - 4] -= c
        p[i] = _R0
    return _poly_trim(p)


# -- designated constants ----------------------------------------------------

ZERO = Cyclo(0)
ONE = Cyclo(1)
TWO = Cyclo(2)
HALF = Cyclo(Rat(1, 2))
I = Cyclo(0, 0, 0, 1)            # z^3
SQRT3 = Cyclo(0, 2, 0, -1)       # 2z - z^3
OMEGA = Cyclo(-1, 0, 1, 0)       # z^2 - 1, primitive cube root of unity
_MINUS_I_HALF = Cyclo(0, 0, 0, Rat(-1, 2))

_CONSTANTS = {"one": ONE, "i": I, "sqrt3": SQRT3, "omega": OMEGA}


def constant(name: str) -> Cyclo:
    """Return a designated element: one, i, sqrt3 or omega."""
    try:
        return _CONSTANTS[name]
    except KeyError:
        raise ValueError(f"unknown constant {name!r}; expected one of {sorted(_CONSTANTS)}")


def field_arith(a: Cyclo, b: Cyclo, op: str) -> Cyclo:
    """Exact field operation; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta12)")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def tau_conj(a: Cyclo) -> Cyclo:
    return a.tau()


def is_real(a: Cyclo) -> bool:
    return a.is_real()


def rat_str(q) -> str:
    """Canonical rational rendering used in cache files."""
    return str(q)


def rat_parse(s: str):
    return Rat(s)
