"""The determinant p_xi(nu) as a product of linear forms over positive roots.

A factor ``(root index i, shift c)`` denotes ``2(nu, phi_i)/(phi_i, phi_i) + c``
in the rho-shifted convention.  For covers of SL(n, R) the factor lists come
from branching xi down to Spin(3) and the q-lists below.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DomainError, NotGenuine
from .exact import Gaussian, fmt, q, qvec
from .poly import Poly
from .reps import Irrep, branch_to_spin3, weyl_dim
from .roots import Root, RootSystem, Weight, build, LieType
from .small_k import SmallKType

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class FactoredPolynomial:
    root_system: RootSystem
    factors: tuple[tuple[int, Fraction, int], ...]
    scalar: Fraction = Fraction(1)

    def __post_init__(self):
        merged = Counter()
        for i, c, m in self.factors:
            if m <= 0:
                raise ValueError("factor multiplicities must be positive")
            merged[(i, q(c))] += m
        object.__setattr__(self, "factors", tuple((i, c, m) for (i, c), m in sorted(merged.items())))
        object.__setattr__(self, "scalar", q(self.scalar))
        if self.scalar == 0:
            raise ValueError("scalar must be nonzero")

    @property
    def degree(self) -> int:
        return sum(m for _, _, m in self.factors)

    def root(self, i: int) -> Root:
        return self.root_system.positive_roots[i]

    def per_root(self) -> dict[int, Counter]:
        """Shift multiset attached to each positive root index (all roots present)."""
        out = {i: Counter() for i in range(len(self.root_system.positive_roots))}
        for i, c, m in self.factors:
            out[i][c] += m
        return out

    def root_polynomial(self, i: int) -> "FactoredPolynomial":
        return FactoredPolynomial(self.root_system, tuple(f for f in self.factors if f[0] == i))

    def divides(self, other: "FactoredPolynomial") -> bool:
        mine = Counter({(i, c): m for i, c, m in self.factors})
        theirs = Counter({(i, c): m for i, c, m in other.factors})
        return all(theirs[k] >= m for k, m in mine.items())

    def coroot_values(self, nu: Sequence) -> list:
        rs = self.root_system
        nu = [Gaussian.coerce(x) for x in nu]
        if len(nu) != rs.ambient_dim:
            raise ValueError(f"expected {rs.ambient_dim} coordinates, got {len(nu)}")
        out = []
        for rt in rs.positive_roots:
            norm = sum((c * c for c in rt.coords), Fraction(0))
            v = Gaussian()
            for x, c in zip(nu, rt.coords):
                if c:
                    v = v + x * (2 * c / norm)
            out.append(v)
        return out

    def evaluate(self, nu: Sequence):
        """Exact value at ``nu`` (epsilon coordinates, rational or Gaussian rational)."""
        vals = self.coroot_values(nu)
        out = Gaussian(self.scalar)
        for i, c, m in self.factors:
            out = out * (vals[i] + c) ** m
        return out.re if out.im == 0 else out

    def vanishing_factors(self, nu: Sequence) -> list[tuple[int, Fraction]]:
        vals = self.coroot_values(nu)
        return [(i, c) for i, c, _ in self.factors if vals[i] + c == 0]

    def expand(self) -> Poly:
        rs = self.root_system
        names = tuple(f"x{k + 1}" for k in range(rs.ambient_dim))
        p = Poly.const(names, self.scalar)
        for i, c, m in self.factors:
            rt = rs.positive_roots[i]
            norm = sum((x * x for x in rt.coords), Fraction(0))
            lin = Poly.linear(names, {n: 2 * x / norm for n, x in zip(names, rt.coords) if x}, c)
            p = p * lin**m
        return p

    def to_dict(self) -> dict:
        rs = self.root_system
        return {
            "scalar": fmt(self.scalar),
            "factors": [
                {"root": list(rs.positive_roots[i].coeffs), "shift": fmt(c), "mult": m} for i, c, m in self.factors
            ],
        }


def q_factors(m: int) -> list[Fraction]:
    """Shifts of ``q_nu(m)``: linear factors ``nu + c``, for odd m."""
    if m <= 0 or m % 2 == 0:
        raise DomainError(f"q(m) needs an odd positive m, got {m}")
    out = []
    top = (m - 1) // 4 if (m - 1) % 4 == 0 else (m - 3) // 4
    for l in range(top + 1):
        for j in range(l):
            out += [2 * j + HALF, 2 * j + Fraction(3, 2)]
    if (m - 3) % 4 == 0:
        out += [2 * k + HALF for k in range(top + 1)]
    return sorted(out)


def n_xi(xi: Irrep, tau: SmallKType) -> int:
    """Multiplicity of tau restricted to 0M inside xi: ``dim xi / dim tau``."""
    d = weyl_dim(xi)
    if d % tau.dim:
        raise NotGenuine(f"dim {xi} = {d} is not divisible by dim tau = {tau.dim}")
    return d // tau.dim


def spin_tau_weight(n: int, xi: Sequence) -> Weight:
    """The (half-)spin weight of Spin(n) whose central character matches xi."""
    k = n // 2
    tau = [HALF] * k
    if n % 2 == 0:
        diff = sum(qvec(xi), Fraction(0)) - Fraction(k, 2)
        if diff.denominator != 1:
            raise NotGenuine(f"{xi} is not a spinor weight")
        if diff % 2:
            tau[-1] = -HALF
    return Weight(tuple(tau))


def type_a_data(n: int, xi_weight) -> tuple[Irrep, Irrep, list[int]]:
    """Validate a genuine Spin(n) weight; return (xi, tau, {j_k})."""
    if n < 3:
        raise DomainError(f"SL({n}, R)~ needs n >= 3")
    coords = xi_weight.coords if isinstance(xi_weight, Weight) else qvec(xi_weight)
    xi = Irrep("Spin", n, Weight(coords))
    if not xi.genuine:
        raise NotGenuine(f"{xi} is not genuine (integer coordinates)")
    tau = Irrep("Spin", n, spin_tau_weight(n, coords))
    return xi, tau, branch_to_spin3(xi)


def type_a_root_system(n: int) -> RootSystem:
    return build(LieType("A", n - 1))


def pxi_type_a(n: int, xi_weight) -> FactoredPolynomial:
    """p_xi for the cover of SL(n, R): per root, ``(prod_k q(j_k))^(2/dim tau)``."""
    xi, tau, js = type_a_data(n, xi_weight)
    rs = type_a_root_system(n)
    dim_tau = weyl_dim(tau)
    counts = Counter()
    for j in js:
        counts.update(q_factors(j))
    per_root = []
    for c, cnt in counts.items():
        m = Fraction(2 * cnt, dim_tau)
        if m.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {m} for shift {c} in p_xi({xi})")
        per_root.append((c, int(m)))
    factors = tuple((i, c, m) for i in range(len(rs.positive_roots)) for c, m in per_root)
    return FactoredPolynomial(rs, factors)


def assemble_product(rs: RootSystem, per_root_factors: Mapping[Root, Sequence]) -> FactoredPolynomial:
    """Merge per-root factor lists (shifts, or ``(shift, mult)`` pairs) into one polynomial."""
    factors = []
    for rt, shifts in per_root_factors.items():
        try:
            i = rs.root_index(rt)
        except KeyError:
            raise DomainError(f"{rt} is not a positive root of {rs.lie_type}") from None
        for s in shifts:
            c, m = s if isinstance(s, tuple) else (s, 1)
            factors.append((i, q(c), int(m)))
    return FactoredPolynomial(rs, tuple(factors))


def evaluate(p: FactoredPolynomial, nu: Sequence):
    return p.evaluate(nu)
