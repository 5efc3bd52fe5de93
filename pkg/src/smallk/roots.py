"""Root systems of the simple Lie algebras in Bourbaki epsilon coordinates.

All data is exact (``Fraction``).  The inner product is the ambient dot product
rescaled so that long roots have squared length 2; every pairing used
downstream is of the form ``2(v, phi)/(phi, phi)`` so the scale cancels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import DomainError
from .exact import dot, fmt, mat_inverse, q, qvec

SERIES = ("A", "B", "C", "D", "E", "F", "G")
LONG, SHORT = "Long", "Short"
EPS, FUND = "eps", "fund"

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise DomainError(f"unknown series {self.series!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise DomainError(f"rank must be a positive integer, got {self.rank!r}")

    def validate(self) -> "LieType":
        s, n = self.series, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[s]
        if not ok:
            raise DomainError(f"invalid rank {n} for series {s}")
        return self

    @property
    def small_k_supported(self) -> bool:
        return self.series != "C"

    @property
    def simply_laced(self) -> bool:
        return self.series in "ADE"

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "LieType":
        """``parse("E8")``, ``parse("B", 3)`` or ``parse("B3")``."""
        text = text.strip().upper()
        series, digits = text[0], text[1:]
        if digits:
            r = int(digits)
            if rank is not None and rank != r:
                raise DomainError(f"type {text} conflicts with rank {rank}")
            rank = r
        if rank is None:
            raise DomainError(f"rank missing for series {series}")
        return cls(series, int(rank))

    def __str__(self):
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class Weight:
    coords: tuple[Fraction, ...]
    basis: str = EPS

    def __post_init__(self):
        object.__setattr__(self, "coords", qvec(self.coords))
        if self.basis not in (EPS, FUND):
            raise ValueError(f"unknown basis {self.basis!r}")

    def __len__(self):
        return len(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        _same_basis(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis)

    def __sub__(self, other: "Weight") -> "Weight":
        _same_basis(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.basis)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords), self.basis)

    def scale(self, c) -> "Weight":
        c = q(c)
        return Weight(tuple(c * a for a in self.coords), self.basis)

    def __str__(self):
        return "(" + ", ".join(fmt(c) for c in self.coords) + ")"


def _same_basis(a: Weight, b: Weight):
    if a.basis != b.basis or len(a) != len(b):
        raise ValueError("weights live in different spaces")


@dataclass(frozen=True)
class Root:
    coords: tuple[Fraction, ...]
    length_class: str
    coeffs: tuple[int, ...] = field(default=(), compare=False)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def as_weight(self) -> Weight:
        return Weight(self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords), self.length_class, tuple(-c for c in self.coeffs))

    def __str__(self):
        return "(" + ", ".join(fmt(c) for c in self.coords) + ")"


def _unit(n: int, i: int, c=1) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


def _simple_roots(series: str, rank: int) -> list[list[Fraction]]:
    n = rank
    if series == "A":
        return [[Fraction(int(k == i) - int(k == i + 1)) for k in range(n + 1)] for i in range(n)]
    if series in "BCD":
        out = [[Fraction(int(k == i) - int(k == i + 1)) for k in range(n)] for i in range(n - 1)]
        if series == "B":
            out.append(_unit(n, n - 1))
        elif series == "C":
            out.append(_unit(n, n - 1, 2))
        elif n == 1:
            raise DomainError("D1 has no roots")
        else:
            last = [Fraction(0)] * n
            last[n - 2] = last[n - 1] = Fraction(1)
            out.append(last)
        return out
    if series == "G":
        return [[Fraction(1), Fraction(-1), Fraction(0)], [Fraction(-2), Fraction(1), Fraction(1)]]
    if series == "F":
        h = _HALF
        return [
            [Fraction(0), Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(0), Fraction(0), Fraction(1), Fraction(-1)],
            [Fraction(0), Fraction(0), Fraction(0), Fraction(1)],
            [h, -h, -h, -h],
        ]
    if series == "E":
        h = _HALF
        e8 = [[h, -h, -h, -h, -h, -h, -h, h]]
        e8.append([Fraction(1), Fraction(1)] + [Fraction(0)] * 6)
        for i in range(6):
            v = [Fraction(0)] * 8
            v[i], v[i + 1] = Fraction(-1), Fraction(1)
            e8.append(v)
        return e8[:rank]
    raise DomainError(f"unknown series {series!r}")


def _positive_root_coeffs(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates via root-string closure.

    ``cartan[i][j] = <alpha_i, alpha_j^vee>``.  For a root b and simple a_j,
    ``b + a_j`` is a root iff ``q - <b, a_j^vee> > 0`` where q is the length of
    the a_j-string below b.
    """
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    level = list(simple)
    while level:
        nxt = []
        for b in level:
            for j in range(r):
                pair = sum(b[i] * cartan[i][j] for i in range(r))
                qq = 0
                down = list(b)
                while True:
                    down[j] -= 1
                    if tuple(down) in found:
                        qq += 1
                    else:
                        break
                if qq - pair > 0:
                    up = list(b)
                    up[j] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        level = nxt
    return sorted(found, key=lambda c: (sum(c), tuple(-x for x in c)))


class RootSystem:
    """Exact root-system data for one reduced root system.

    Use :func:`build` for the simple types; :func:`classical` also admits the
    small-rank classical systems (``B1``, ``D2``) needed by the spin branching
    chain.
    """

    def __init__(self, lie_type: LieType, simple: Sequence[Sequence[Fraction]]):
        self.lie_type = lie_type
        self.ambient_dim = len(simple[0])
        raw = [tuple(q(c) for c in v) for v in simple]
        longest = max(dot(v, v) for v in raw)
        self.scale = Fraction(2) / longest
        self.rank = len(raw)
        self.cartan_matrix = tuple(
            tuple(int(2 * dot(raw[i], raw[j]) / dot(raw[j], raw[j])) for j in range(self.rank))
            for i in range(self.rank)
        )
        coeffs = _positive_root_coeffs(self.cartan_matrix)
        roots = []
        for c in coeffs:
            v = tuple(sum((ci * raw[i][k] for i, ci in enumerate(c)), Fraction(0)) for k in range(self.ambient_dim))
            roots.append(Root(v, self._length_class(v, longest), c))
        self.positive_roots = tuple(roots)
        self.simple_roots = tuple(rt for rt in roots if rt.height == 1)
        half = tuple(sum((rt.coords[k] for rt in roots), Fraction(0)) / 2 for k in range(self.ambient_dim))
        self.rho = Weight(half)
        self._coroots: dict = {}

    def _length_class(self, v, longest) -> str:
        if self.lie_type.simply_laced:
            return LONG
        return LONG if dot(v, v) == longest else SHORT

    def __repr__(self):
        return f"RootSystem({self.lie_type})"

    # -- inner products -------------------------------------------------
    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        return self.scale * dot(u, v)

    def pairing(self, nu: Weight | Sequence, phi: Root | Sequence) -> Fraction:
        """``2(nu, phi)/(phi, phi)``, exact."""
        nu_c = nu.coords if isinstance(nu, Weight) else qvec(nu)
        if isinstance(nu, Weight) and nu.basis != EPS:
            nu_c = self.from_fundamental(nu).coords
        phi_c = phi.coords if isinstance(phi, Root) else qvec(phi)
        if len(nu_c) != self.ambient_dim or len(phi_c) != self.ambient_dim:
            raise ValueError(
                f"dimension mismatch: expected {self.ambient_dim} coordinates, got {len(nu_c)} and {len(phi_c)}"
            )
        cor = self._coroots.get(phi_c)
        if cor is None:
            n = dot(phi_c, phi_c)
            cor = self._coroots[phi_c] = tuple(2 * c / n for c in phi_c)
        return dot(nu_c, cor)

    # -- reflections ----------------------------------------------------
    def simple_reflection(self, phi: Root, w: Weight) -> Weight:
        """Reflect ``w`` in the hyperplane orthogonal to ``phi``."""
        c = self.pairing(w, phi)
        coords = w.coords if w.basis == EPS else self.from_fundamental(w).coords
        return Weight(tuple(a - c * b for a, b in zip(coords, phi.coords)))

    def weyl_orbit(self, w: Weight) -> frozenset[Weight]:
        """Orbit of ``w`` under the Weyl group, by closure under simple reflections."""
        if w.basis != EPS:
            w = self.from_fundamental(w)
        seen = {w.coords}
        stack = [w.coords]
        while stack:
            v = stack.pop()
            for a in self.simple_roots:
                c = 2 * dot(v, a.coords) / dot(a.coords, a.coords)
                if c == 0:
                    continue
                u = tuple(x - c * y for x, y in zip(v, a.coords))
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return frozenset(Weight(v) for v in seen)

    def in_closed_langlands_chamber(self, nu_real: Weight) -> bool:
        return all(self.pairing(nu_real, a) >= 0 for a in self.simple_roots)

    def is_dominant(self, w: Weight) -> bool:
        return self.in_closed_langlands_chamber(w)

    # -- bases ----------------------------------------------------------
    @cached_property
    def fundamental_weights(self) -> tuple[Weight, ...]:
        inv = mat_inverse(self.cartan_matrix)
        out = []
        for i in range(self.rank):
            v = [Fraction(0)] * self.ambient_dim
            for k, a in enumerate(self.simple_roots):
                for d in range(self.ambient_dim):
                    v[d] += inv[i][k] * a.coords[d]
            out.append(Weight(tuple(v)))
        return tuple(out)

    def to_fundamental(self, w: Weight) -> Weight:
        if w.basis == FUND:
            return w
        return Weight(tuple(self.pairing(w, a) for a in self.simple_roots), FUND)

    def from_fundamental(self, w: Weight) -> Weight:
        if w.basis == EPS:
            return w
        if len(w) != self.rank:
            raise ValueError(f"expected {self.rank} fundamental coordinates, got {len(w)}")
        v = [Fraction(0)] * self.ambient_dim
        for c, om in zip(w.coords, self.fundamental_weights):
            for d in range(self.ambient_dim):
                v[d] += c * om.coords[d]
        return Weight(tuple(v))

    def root_index(self, phi: Root) -> int:
        return self._root_index[phi.coords]

    @cached_property
    def _root_index(self) -> dict:
        return {rt.coords: i for i, rt in enumerate(self.positive_roots)}

    def find_root(self, coeffs: Sequence[int]) -> Root:
        coeffs = tuple(int(c) for c in coeffs)
        for rt in self.positive_roots:
            if rt.coeffs == coeffs:
                return rt
        raise DomainError(f"{coeffs} is not a positive root of {self.lie_type}")

    @property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=lambda r: r.height)

    # -- Dynkin-label data (integer basis used by the character kernels) --
    @cached_property
    def simple_labels(self) -> tuple[tuple[int, ...], ...]:
        """Simple roots written in fundamental-weight coordinates."""
        return self.cartan_matrix

    @cached_property
    def positive_labels(self) -> tuple[tuple[int, ...], ...]:
        r = self.rank
        return tuple(
            tuple(sum(rt.coeffs[i] * self.cartan_matrix[i][j] for i in range(r)) for j in range(r))
            for rt in self.positive_roots
        )

    @cached_property
    def label_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """``(omega_i, omega_j)`` in the normalised inner product."""
        om = self.fundamental_weights
        return tuple(tuple(self.inner(a.coords, b.coords) for b in om) for a in om)

    def to_dominant_labels(self, labels: Sequence[int]) -> tuple[tuple[int, ...], int]:
        """Reflect Dynkin labels into the dominant chamber; returns (labels, length parity)."""
        v = list(labels)
        parity = 0
        simple = self.simple_labels
        while True:
            i = next((k for k, x in enumerate(v) if x < 0), None)
            if i is None:
                return tuple(v), parity
            c = v[i]
            a = simple[i]
            for j in range(len(v)):
                v[j] -= c * a[j]
            parity ^= 1

    def orbit_labels(self, dominant: Sequence[int]) -> list[tuple[int, ...]]:
        """All Weyl conjugates of a dominant weight, in Dynkin labels."""
        start = tuple(dominant)
        seen = {start}
        stack = [start]
        simple = self.simple_labels
        while stack:
            v = stack.pop()
            for i, c in enumerate(v):
                if c > 0:
                    a = simple[i]
                    u = tuple(x - c * y for x, y in zip(v, a))
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
        return sorted(seen, reverse=True)

    def stabilizer_order(self, dominant: Sequence[int]) -> int:
        """Order of the stabiliser of a dominant weight.

        Uses the product ``prod (ht(b) + 1) / ht(b)`` over positive roots
        supported on the simple roots that fix the weight.
        """
        zero = {i for i, c in enumerate(dominant) if c == 0}
        out = Fraction(1)
        for rt in self.positive_roots:
            if all(c == 0 or i in zero for i, c in enumerate(rt.coeffs)):
                out *= Fraction(rt.height + 1, rt.height)
        assert out.denominator == 1
        return int(out)

    @cached_property
    def weyl_group_order(self) -> int:
        return self.stabilizer_order((0,) * self.rank)

    def orbit_size(self, dominant: Sequence[int]) -> int:
        return self.weyl_group_order // self.stabilizer_order(dominant)

    def to_dict(self) -> dict:
        return {
            "type": str(self.lie_type),
            "simple_roots": [[fmt(c) for c in a.coords] for a in self.simple_roots],
            "positive_roots": [
                {"coords": [fmt(c) for c in rt.coords], "simple": list(rt.coeffs), "length": rt.length_class}
                for rt in self.positive_roots
            ],
            "rho": [fmt(c) for c in self.rho.coords],
            "cartan_matrix": [list(row) for row in self.cartan_matrix],
        }


@lru_cache(maxsize=None)
def _cached(series: str, rank: int) -> RootSystem:
    return RootSystem(LieType(series, rank), _simple_roots(series, rank))


def build(lie_type: LieType | str, rank: int | None = None) -> RootSystem:
    """Root system of a simple Lie algebra (rank validated per series)."""
    if not isinstance(lie_type, LieType):
        lie_type = LieType.parse(lie_type, rank)
    lie_type.validate()
    return _cached(lie_type.series, lie_type.rank)


def classical(series: str, rank: int) -> RootSystem:
    """Classical root system without the simple-type rank restrictions.

    Admits ``B1`` (= Spin(3)) and the reducible ``D2`` (= Spin(4)).
    """
    if series not in "ABCD":
        raise DomainError(f"{series} is not a classical series")
    return _cached(series, rank)
