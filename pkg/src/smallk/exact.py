"""Exact scalars: rational parsing/formatting and Gaussian rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def q(x) -> Fraction:
    """Coerce ``x`` (int, Fraction, or a string such as ``"5/2"``) to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact input")
    return Fraction(x)


def qvec(xs: Iterable) -> tuple[Fraction, ...]:
    return tuple(q(x) for x in xs)


def parse_rationals(text: str) -> tuple[Fraction, ...]:
    """Parse ``"1/2,3/2,-1"`` into a tuple of Fractions."""
    text = text.strip()
    if not text:
        return ()
    return tuple(Fraction(part.strip()) for part in text.split(","))


def fmt(x: Fraction) -> str:
    """Canonical string for a rational: ``"p/q"`` or ``"p"``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class Gaussian:
    """Complex number ``re + i*im`` with rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", q(self.re))
        object.__setattr__(self, "im", q(self.im))

    @classmethod
    def coerce(cls, x) -> "Gaussian":
        if isinstance(x, Gaussian):
            return x
        return cls(q(x), Fraction(0))

    def __add__(self, other):
        o = Gaussian.coerce(other)
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-Gaussian.coerce(other))

    def __rsub__(self, other):
        return Gaussian.coerce(other) - self

    def __mul__(self, other):
        o = Gaussian.coerce(other)
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = Gaussian.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        p = self * o.conjugate()
        return Gaussian(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        return Gaussian.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return Gaussian(1) / (self ** (-k))
        out, base = Gaussian(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"Gaussian({fmt(self.re)}, {fmt(self.im)})"


I = Gaussian(0, 1)


def mat_inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse of a square matrix by Gauss-Jordan elimination."""
    n = len(m)
    a = [[q(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]
