"""Rank-one determinant factors.

``Q(Z^l) = prod_{j<l} (h + 2j - t)`` and ``Q(Zbar^l) = prod_{j<l} (h + 2j + t)``
in the commuting symbols h, t, and their specialisations to linear factors in
the coroot coordinate ``nu' = 2(nu, phi)/(phi, phi)`` with rho shift included.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DomainError
from .exact import q
from .poly import Poly
from .roots import Root, RootSystem

PLUS_T, MINUS_T = "PlusT", "MinusT"
PLUS_R, MINUS_R, TRIVIAL = "PlusR", "MinusR", "Trivial"
SHIFTED, UNSHIFTED = "shifted", "unshifted"
HT = ("h", "t")
NU = ("nu",)


def _sign(sign: str) -> int:
    # Z^l carries -t, Zbar^l carries +t
    if sign == PLUS_T:
        return 1
    if sign == MINUS_T:
        return -1
    raise DomainError(f"unknown sign {sign!r}")


@dataclass(frozen=True)
class BivariateQ:
    degree_l: int
    sign: str
    poly: Poly

    def factors(self) -> list[tuple[int, int]]:
        """Linear factors as ``(2j, +-1)`` meaning ``h + 2j +- t``."""
        s = _sign(self.sign)
        return [(2 * j, s) for j in range(self.degree_l)]

    def __eq__(self, other):
        return isinstance(other, BivariateQ) and (self.degree_l, self.sign, self.poly) == (
            other.degree_l,
            other.sign,
            other.poly,
        )

    def __hash__(self):
        return hash((self.degree_l, self.sign))


def _stirling1(n: int) -> list[int]:
    """Unsigned Stirling numbers c(n, k), k = 0..n: coefficients of x(x+1)...(x+n-1)."""
    row = [1]
    for m in range(n):
        nxt = [0] * (len(row) + 1)
        for k, c in enumerate(row):
            nxt[k] += m * c
            nxt[k + 1] += c
        row = nxt
    return row


def q_closed_form(l: int, sign: str) -> BivariateQ:
    """Expand ``prod_{j<l} (h +- t + 2j)`` coefficientwise.

    Writing ``x = h +- t``, the product is ``sum_k 2^(l-k) c(l, k) x^k`` with
    unsigned Stirling numbers c; each ``x^k`` is expanded binomially.
    """
    if l < 0:
        raise DomainError("degree must be nonnegative")
    s = _sign(sign)
    st = _stirling1(l)
    terms = {}
    for k in range(l + 1):
        base = st[k] * 2 ** (l - k)
        if not base:
            continue
        for b in range(k + 1):
            terms[(k - b, b)] = Fraction(base * comb(k, b) * s**b)
    return BivariateQ(l, sign, Poly(HT, terms))


@lru_cache(maxsize=None)
def _q_terms(l: int, s: int) -> tuple[tuple[tuple[int, int], int], ...]:
    if l == 0:
        return (((0, 0), 1),)
    c = 2 * (l - 1)
    out: dict = {}
    for (a, b), v in _q_terms(l - 1, s):
        out[(a + 1, b)] = out.get((a + 1, b), 0) + v
        out[(a, b + 1)] = out.get((a, b + 1), 0) + s * v
        if c:
            out[(a, b)] = out.get((a, b), 0) + c * v
    return tuple(sorted((e, v) for e, v in out.items() if v))


def q_recursive(l: int, sign: str) -> BivariateQ:
    """``Q_l = (h + 2(l-1) +- t) Q_{l-1}`` starting from ``Q_0 = 1``."""
    if l < 0:
        raise DomainError("degree must be nonnegative")
    s = _sign(sign)
    for k in range(l):  # fill the cache bottom-up to keep the recursion shallow
        _q_terms(k, s)
    return BivariateQ(l, sign, Poly(HT, dict(_q_terms(l, s))))


@dataclass(frozen=True)
class RankOneFactor:
    """``prod_{j<l} (nu' + 2j + 1 + s r)`` with ``s`` = +1, -1 or 0 (Trivial)."""

    degree_l: int
    branch: str
    r: Fraction = Fraction(0)

    def __post_init__(self):
        if self.degree_l < 0:
            raise DomainError("degree must be nonnegative")
        if self.branch not in (PLUS_R, MINUS_R, TRIVIAL):
            raise DomainError(f"unknown branch {self.branch!r}")
        object.__setattr__(self, "r", q(self.r))
        if self.r < 0:
            raise DomainError("r must be nonnegative")

    @property
    def shifts(self) -> tuple[Fraction, ...]:
        off = {PLUS_R: self.r, MINUS_R: -self.r, TRIVIAL: Fraction(0)}[self.branch]
        return tuple(2 * j + 1 + off for j in range(self.degree_l))

    @property
    def degree(self) -> int:
        return self.degree_l

    def expand(self) -> Poly:
        p = Poly.const(NU, 1)
        for c in self.shifts:
            p = p * Poly.linear(NU, {"nu": 1}, c)
        return p

    def evaluate(self, x):
        out = 1
        for c in self.shifts:
            out = out * (x + c)
        return out


def p_factor(l: int, r, branch: str) -> RankOneFactor:
    if branch == TRIVIAL:
        r = 0
    return RankOneFactor(l, branch, r)


def specialize(bq: BivariateQ, r) -> Poly:
    """Substitute ``h -> nu + 1`` (rho shift) and ``t -> r`` in a BivariateQ."""
    images = {"h": Poly.linear(NU, {"nu": 1}, 1), "t": Poly.const(NU, r)}
    return bq.poly.substitute(images, NU)


def rho_offset(rs: RootSystem, phi: Root) -> Fraction:
    """``<rho_phi - rho, phi^vee>`` with ``rho_phi = phi/2``."""
    return 1 - rs.pairing(rs.rho, phi)


def translate_factor(shifts, phi: Root, rs: RootSystem | None = None, mode: str = SHIFTED) -> tuple[Fraction, ...]:
    """Move a factor list in the coroot coordinate of ``phi`` by ``rho_phi - rho``.

    In the shifted convention (default) the translation is already absorbed
    and the shifts are returned unchanged.
    """
    shifts = tuple(q(c) for c in shifts)
    if mode == SHIFTED:
        return shifts
    if mode != UNSHIFTED:
        raise DomainError(f"unknown mode {mode!r}")
    if rs is None:
        raise DomainError("the unshifted mode needs the root system")
    off = rho_offset(rs, phi)
    return tuple(c + off for c in shifts)
