"""Field arithmetic in Q(zeta12): constants, conjugation, axioms."""

import cmath

import pytest
from hypothesis import given, settings, strategies as st

from exlie.scalars import (
    Cyclo,
    Rat,
    ZERO,
    ONE,
    I,
    SQRT3,
    OMEGA,
    constant,
    field_arith,
    is_real,
    tau_conj,
)

# independent numeric oracle: embed K into C via z = exp(i pi / 6)
_Z = cmath.exp(1j * cmath.pi / 6)


def embed(x: Cyclo) -> complex:
    a, b, c, d = (float(q) for q in x.coords())
    return a + b * _Z + c * _Z**2 + d * _Z**3


def rationals():
    return st.fractions(min_value=-9, max_value=9, max_denominator=12).map(
        lambda f: Rat(f.numerator, f.denominator)
    )


def cyclos():
    return st.tuples(rationals(), rationals(), rationals(), rationals()).map(
        lambda t: Cyclo(*t)
    )


def test_defining_properties():
    assert I * I == -ONE
    assert SQRT3 * SQRT3 == Cyclo(3)
    assert OMEGA**3 == ONE and OMEGA != ONE
    assert OMEGA * OMEGA + OMEGA + ONE == ZERO


def test_constants_match_numeric_oracle():
    assert abs(embed(SQRT3) - 1.7320508075688772) < 1e-12
    assert abs(embed(I) - 1j) < 1e-12
    assert abs(embed(OMEGA) - cmath.exp(2j * cmath.pi / 3)) < 1e-12


def test_constant_lookup():
    assert constant("one") == ONE
    assert constant("i") == I
    assert constant("sqrt3") == SQRT3
    assert constant("omega") == OMEGA
    with pytest.raises(ValueError):
        constant("pi")


def test_sqrt3_coordinates():
    # 2z - z^3 in coordinates, verified by squaring and numerically
    assert SQRT3.coords() == (Rat(0), Rat(2), Rat(0), Rat(-1))


def test_tau_basics():
    assert tau_conj(I) == -I
    assert tau_conj(SQRT3) == SQRT3
    assert tau_conj(OMEGA) == OMEGA * OMEGA
    for base in (ONE, I, SQRT3, OMEGA):
        assert tau_conj(tau_conj(base)) == base


def test_reality():
    assert is_real(SQRT3)
    assert not is_real(I)
    assert not is_real(OMEGA)
    x = Cyclo(Rat(2, 3)) + SQRT3.scale(Rat(5, 7))
    assert is_real(x)
    assert x.real_part() == x and x.imag_part() == ZERO


def test_real_imag_split():
    x = Cyclo(1) + I.scale(Rat(3)) + SQRT3
    assert x.real_part() + x.imag_part() * I == x
    assert x.real_part().is_real() and x.imag_part().is_real()


def test_field_arith_and_div_by_zero():
    a = Cyclo(1, 2, 3, 4)
    b = Cyclo(Rat(1, 2), 0, -1, 5)
    assert field_arith(a, b, "add") == a + b
    assert field_arith(a, b, "sub") == a - b
    assert field_arith(a, b, "mul") == a * b
    assert field_arith(field_arith(a, b, "div"), b, "mul") == a
    with pytest.raises(ZeroDivisionError):
        field_arith(a, ZERO, "div")
    with pytest.raises(ValueError):
        field_arith(a, b, "pow")


def test_conjugate_pair_example():
    half = Rat(1, 2)
    x = (ONE + I).scale(half)
    assert x * (ONE - I) == ONE


@settings(max_examples=150, deadline=None)
@given(cyclos(), cyclos(), cyclos())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


@settings(max_examples=100, deadline=None)
@given(cyclos())
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == ONE


@settings(max_examples=100, deadline=None)
@given(cyclos(), cyclos())
def test_tau_is_automorphism(a, b):
    assert tau_conj(a * b) == tau_conj(a) * tau_conj(b)
    assert tau_conj(a + b) == tau_conj(a) + tau_conj(b)


def test_tau_squared_on_basis():
    for k in range(4):
        coords = [0] * 4
        coords[k] = 1
        x = Cyclo(*coords)
        assert tau_conj(tau_conj(x)) == x


@settings(max_examples=60, deadline=None)
@given(cyclos())
def test_numeric_shadow_of_multiplication(a):
    # the numeric embedding is a ring homomorphism up to float error
    b = Cyclo(Rat(1, 3), Rat(-2), Rat(5, 2), Rat(7))
    assert abs(embed(a * b) - embed(a) * embed(b)) < 1e-6


def test_render():
    x = Cyclo(Rat(3, 7), Rat(-2, 5), Rat(1, 3), Rat(4, 9))
    assert x.render() == "3/7 + -2/5·z + 1/3·z^2 + 4/9·z^3"
