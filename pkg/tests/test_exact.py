from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from smallk.exact import I, Gaussian, fmt, mat_inverse, parse_rationals
from smallk.poly import Poly

fr = st.fractions(-10, 10, max_denominator=7)
gauss = st.builds(Gaussian, fr, fr)


def test_parse_and_format():
    assert parse_rationals("3/2, 1/2 ,-1") == (F(3, 2), F(1, 2), F(-1))
    assert fmt(F(3, 2)) == "3/2" and fmt(F(4)) == "4"
    with pytest.raises(ValueError):
        parse_rationals("a,b")


def test_gaussian_basics():
    assert I * I == -1
    assert (1 + I) * (1 - I) == 2
    assert (2 + 3 * I).norm() == 13
    assert complex(F(1, 2) + I) == complex(0.5, 1)
    assert (1 + I) ** 4 == -4
    with pytest.raises(ZeroDivisionError):
        Gaussian(1) / Gaussian(0)


@given(gauss, gauss, gauss)
def test_gaussian_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


def test_mat_inverse():
    m = [[2, 1], [1, 1]]
    assert mat_inverse(m) == [[1, -1], [-1, 2]]
    with pytest.raises(ZeroDivisionError):
        mat_inverse([[1, 2], [2, 4]])


def test_poly():
    v = ("x", "y")
    x, y = Poly.var(v, "x"), Poly.var(v, "y")
    p = (x + y) ** 2 - x * x - y * y
    assert p == x * y + x * y
    assert p.degree == 2
    assert p.coeff((1, 1)) == 2
    assert p.evaluate({"x": 3, "y": F(1, 2)}) == 3
    assert p.substitute({"x": Poly.var(("t",), "t"), "y": Poly.const(("t",), 1)}, ("t",)) == Poly.linear(("t",), {"t": 2})
