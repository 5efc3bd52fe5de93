"""Sparse multivariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .exact import fmt, q


class Poly:
    """Polynomial in a fixed tuple of variable names; terms map exponent tuples to Fractions."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.vars = tuple(variables)
        self.terms = {e: q(c) for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, variables, c) -> "Poly":
        return cls(variables, {(0,) * len(variables): q(c)})

    @classmethod
    def var(cls, variables, name: str) -> "Poly":
        i = tuple(variables).index(name)
        e = tuple(int(j == i) for j in range(len(variables)))
        return cls(variables, {e: Fraction(1)})

    @classmethod
    def linear(cls, variables, coeffs: Mapping[str, object], c=0) -> "Poly":
        p = cls.const(variables, c)
        for name, a in coeffs.items():
            p = p + cls.var(variables, name) * cls.const(variables, a)
        return p

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError("polynomials over different variables")
            return other
        return Poly.const(self.vars, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(self.vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.vars, other)
        return isinstance(other, Poly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def evaluate(self, values: Mapping[str, object]):
        total = 0
        for e, c in self.terms.items():
            term = c
            for name, k in zip(self.vars, e):
                if k:
                    term = term * values[name] ** k
            total = total + term
        return total

    def substitute(self, images: Mapping[str, "Poly"], variables: Sequence[str]) -> "Poly":
        """Replace each variable by a polynomial over ``variables``."""
        out = Poly(variables)
        one = Poly.const(variables, 1)
        for e, c in self.terms.items():
            term = one * c
            for name, k in zip(self.vars, e):
                if k:
                    term = term * images[name] ** k
            out = out + term
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k)
            parts.append(f"{fmt(c)}*{mono}" if mono else fmt(c))
        return " + ".join(parts)
