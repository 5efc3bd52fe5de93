"""Cyclicity, unitary irreducibility, Langlands parameters and intertwining determinants."""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import ChamberError, DomainError, PoleError
from .exact import Gaussian, dot, fmt, q, qvec
from .pxi import FactoredPolynomial, pxi_type_a, q_factors, type_a_data, type_a_root_system
from .reps import weyl_dim
from .roots import SHORT, LieType, Root, RootSystem, Weight, build
from .small_k import SmallKType, classify

HALF = Fraction(1, 2)
EXCEPTIONAL = {("B", "s∘p1"), ("G", "C2∘p2")}


@dataclass(frozen=True)
class NuParameter:
    real_part: Weight
    imag_part: Weight

    def __post_init__(self):
        for name in ("real_part", "imag_part"):
            w = getattr(self, name)
            if not isinstance(w, Weight):
                object.__setattr__(self, name, Weight(qvec(w)))
        if len(self.real_part) != len(self.imag_part):
            raise ValueError("real and imaginary parts have different lengths")

    @classmethod
    def real(cls, coords) -> "NuParameter":
        coords = qvec(coords)
        return cls(Weight(coords), Weight((Fraction(0),) * len(coords)))

    def coroot(self, rs: RootSystem, phi: Root) -> Gaussian:
        return Gaussian(rs.pairing(self.real_part, phi), rs.pairing(self.imag_part, phi))

    def check(self, rs: RootSystem):
        if len(self.real_part) != rs.ambient_dim:
            raise ValueError(f"nu needs {rs.ambient_dim} coordinates for {rs.lie_type}, got {len(self.real_part)}")


@dataclass(frozen=True)
class CyclicityVerdict:
    cyclic: bool
    violated_roots: tuple[tuple[Root, str], ...] = ()

    def to_dict(self) -> dict:
        return {
            "cyclic": self.cyclic,
            "violated_roots": [{"root": list(r.coeffs), "condition": c} for r, c in self.violated_roots],
        }


def _resolve(lie_type: LieType, tau: SmallKType) -> RootSystem:
    types = classify(lie_type)
    if tau not in types:
        raise DomainError(f"{tau.label} is not a small K type of {lie_type}")
    return build(lie_type)


def _case(lie_type: LieType, tau: SmallKType) -> str | None:
    key = (lie_type.series, tau.label)
    return key if key in EXCEPTIONAL else None


def cyclicity(lie_type: LieType, tau: SmallKType, nu: NuParameter) -> CyclicityVerdict:
    """Is the tau-isotypic part cyclic at nu (Re nu in the closed Langlands chamber)?"""
    rs = _resolve(lie_type, tau)
    nu.check(rs)
    if not rs.in_closed_langlands_chamber(nu.real_part):
        raise ChamberError(f"Re nu = {nu.real_part} is outside the closed Langlands chamber")
    case = _case(lie_type, tau)
    if case is None:
        return CyclicityVerdict(True)
    target = Fraction(0) if case[0] == "B" else HALF
    cond = "2(nu,a)/(a,a) = 0" if case[0] == "B" else "2(nu,a)/(a,a) = 1/2"
    bad = tuple(
        (rt, cond) for rt in rs.positive_roots if rt.length_class == SHORT and nu.coroot(rs, rt) == target
    )
    return CyclicityVerdict(not bad, bad)


def unitary_irreducible(lie_type: LieType, tau: SmallKType, nu: NuParameter) -> tuple[bool, list[Root]]:
    """Irreducibility of the unitary principal series (Re nu = 0 exactly); returns (flag, witnesses)."""
    rs = _resolve(lie_type, tau)
    nu.check(rs)
    if any(c != 0 for c in nu.real_part.coords):
        raise DomainError("unitary principal series needs Re nu = 0 exactly")
    if _case(lie_type, tau) != ("B", "s∘p1"):
        return True, []
    witnesses = [rt for rt in rs.positive_roots if rt.length_class == SHORT and nu.coroot(rs, rt) == 0]
    return not witnesses, witnesses


@dataclass(frozen=True)
class LanglandsData:
    tempered: bool
    F: tuple[Root, ...]
    varsigma: NuParameter
    mu: NuParameter
    discrete_series: bool = False
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        def vec(w):
            return [fmt(c) for c in w.coords]

        return {
            "tempered": self.tempered,
            "F": [list(r.coeffs) for r in self.F],
            "varsigma": {"re": vec(self.varsigma.real_part), "im": vec(self.varsigma.imag_part)},
            "mu": {"re": vec(self.mu.real_part), "im": vec(self.mu.imag_part)},
            "discrete_series": self.discrete_series,
            "notes": list(self.notes),
        }


def _project(vectors: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Orthogonal projection of v onto span(vectors) (exact Gram-Schmidt)."""
    basis = []
    for u in vectors:
        w = list(u)
        for b in basis:
            c = dot(w, b) / dot(b, b)
            w = [x - c * y for x, y in zip(w, b)]
        if any(w):
            basis.append(w)
    out = [Fraction(0)] * len(v)
    for b in basis:
        c = dot(v, b) / dot(b, b)
        out = [x + c * y for x, y in zip(out, b)]
    return tuple(out)


def langlands_parameters(lie_type: LieType, tau: SmallKType, nu: NuParameter) -> LanglandsData:
    """Split nu = varsigma + mu along F = {simple a : Re(nu, a) = 0}."""
    rs = _resolve(lie_type, tau)
    nu.check(rs)
    if not rs.in_closed_langlands_chamber(nu.real_part):
        raise ChamberError(f"Re nu = {nu.real_part} is outside the closed Langlands chamber")
    F = tuple(a for a in rs.simple_roots if rs.pairing(nu.real_part, a) == 0)
    span = [a.coords for a in F]
    vs = NuParameter(Weight(_project(span, nu.real_part.coords)), Weight(_project(span, nu.imag_part.coords)))
    mu = NuParameter(nu.real_part - vs.real_part, nu.imag_part - vs.imag_part)
    notes = []
    if _case(lie_type, tau):
        notes.append("exceptional small K type: parameters need not determine a unique module")
    return LanglandsData(len(F) == rs.rank, F, vs, mu, False, tuple(notes))


# -- intertwining determinants -------------------------------------------------


@dataclass(frozen=True)
class GammaQuotient:
    """``Gamma(a.x + b) / Gamma(c.x + d)`` in the coroot coordinate x of one root."""

    root: int
    num: tuple[int, Fraction]
    den: tuple[int, Fraction]
    mult: int = 1


@dataclass(frozen=True)
class GammaRatioProduct:
    root_system: RootSystem
    factors: tuple[GammaQuotient, ...]
    exponent: Fraction

    def reduce(self) -> "RationalFunction":
        """Apply Gamma(x+1) = x Gamma(x) to each quotient."""
        rf = RationalFunction(self.root_system)
        for g in self.factors:
            (a, b), (c, d) = g.num, g.den
            if a != c:
                raise DomainError("Gamma quotient with different nu coefficients")
            shift = b - d
            if shift.denominator != 1:
                raise DomainError("Gamma quotient arguments differ by a non-integer")
            k = int(shift)
            if k >= 0:
                for i in range(k):
                    rf.mul_linear(g.root, c, d + i, g.mult)
            else:
                for i in range(-k):
                    rf.mul_linear(g.root, a, b + i, -g.mult)
        return rf.power(self.exponent)


class RationalFunction:
    """Product of powers of linear forms ``a x_root + b`` (a = +-1) times a rational scalar."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.scalar = Fraction(1)
        self.powers: Counter = Counter()

    def mul_linear(self, root: int, a: int, b, k: int):
        b = q(b)
        if a == 0:
            self.scalar *= b**k
            return
        if a < 0:
            # a x + b = -( -a x - b ) ; keep the x coefficient positive
            a, b = -a, -b
            if k % 2:
                self.scalar = -self.scalar
        if a != 1:
            self.scalar *= Fraction(a) ** k
            b = b / a
        self.powers[(root, b)] += k
        if self.powers[(root, b)] == 0:
            del self.powers[(root, b)]

    def power(self, e) -> "RationalFunction":
        e = q(e)
        if e.denominator != 1:
            raise DomainError("non-integral exponent")
        out = RationalFunction(self.rs)
        out.scalar = self.scalar ** int(e)
        out.powers = Counter({k: v * int(e) for k, v in self.powers.items() if v})
        return out

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.scalar == other.scalar
            and +self.powers == +other.powers
            and -self.powers == -other.powers
        )

    def evaluate(self, coroot_values: Sequence):
        out = Gaussian(self.scalar)
        num, den = Gaussian(1), Gaussian(1)
        for (i, b), k in self.powers.items():
            v = Gaussian.coerce(coroot_values[i]) + b
            if k > 0:
                num = num * v**k
            else:
                den = den * v ** (-k)
        return out * num / den


def ratio_function(p: FactoredPolynomial, exponent) -> RationalFunction:
    """``(p(-nu)/p(nu))^exponent`` as a RationalFunction."""
    rf = RationalFunction(p.root_system)
    for i, c, m in p.factors:
        rf.mul_linear(i, -1, c, m)
        rf.mul_linear(i, 1, c, -m)
    return rf.power(exponent)


def gamma_factors(m: int) -> list[tuple[tuple[int, Fraction], tuple[int, Fraction]]]:
    """Gamma quotients of Gamma_nu(m), each a pair of affine arguments ``(coeff, const)``."""
    if m <= 0 or m % 2 == 0:
        raise DomainError(f"Gamma_nu(m) needs an odd positive m, got {m}")
    out = []
    top = (m - 1) // 4 if (m - 1) % 4 == 0 else (m - 3) // 4
    for l in range(top + 1):
        for j in range(l):
            out.append(((1, -2 * j + HALF), (1, -2 * j - Fraction(3, 2))))
            out.append(((1, 2 * j + HALF), (1, 2 * j + Fraction(5, 2))))
    if (m - 3) % 4 == 0:
        for k in range(top + 1):
            out.append(((-1, 2 * k + Fraction(3, 2)), (-1, 2 * k + HALF)))
            out.append(((1, 2 * k + HALF), (1, 2 * k + Fraction(3, 2))))
    return out


def intertwining_det(n: int, xi_weight) -> GammaRatioProduct:
    """det A(nu) on the xi-isotypic component for the cover of SL(n, R)."""
    xi, tau, js = type_a_data(n, xi_weight)
    rs = type_a_root_system(n)
    counts = Counter()
    for j in js:
        counts.update(gamma_factors(j))
    factors = tuple(
        GammaQuotient(i, num, den, k) for i in range(len(rs.positive_roots)) for (num, den), k in sorted(counts.items())
    )
    exponent = Fraction(2 * weyl_dim(xi), weyl_dim(tau))
    return GammaRatioProduct(rs, factors, exponent)


def check_intertwining_identity(n: int, xi_weight) -> bool:
    """Symbolic Gamma reduction equals (p(-nu)/p(nu))^dim xi."""
    g = intertwining_det(n, xi_weight)
    xi, _, _ = type_a_data(n, xi_weight)
    p = pxi_type_a(n, xi_weight)
    return g.reduce() == ratio_function(p, weyl_dim(xi))


POLE_TOL = 1e-8


def _coroot_floats(rs: RootSystem, nu: Sequence[complex]) -> list[complex]:
    if len(nu) != rs.ambient_dim:
        raise ValueError(f"expected {rs.ambient_dim} coordinates, got {len(nu)}")
    out = []
    for rt in rs.positive_roots:
        norm = float(dot(rt.coords, rt.coords))
        out.append(sum(2 * float(c) / norm * complex(x) for c, x in zip(rt.coords, nu)))
    return out


def _near_pole(z: complex) -> bool:
    r = round(z.real)
    return r <= 0 and abs(z - r) < POLE_TOL


def numeric_gamma_log(g: GammaRatioProduct, nu: Sequence[complex]) -> complex:
    """Logarithm of the Gamma product (some branch), summed through log-gamma; refuses near poles."""
    from scipy.special import loggamma

    vals = _coroot_floats(g.root_system, nu)
    total = 0j
    for f in g.factors:
        x = vals[f.root]
        a = f.num[0] * x + float(f.num[1])
        b = f.den[0] * x + float(f.den[1])
        for arg, side in ((a, "numerator"), (b, "denominator")):
            if _near_pole(arg):
                raise PoleError(f"{side} argument {arg} is within {POLE_TOL} of a pole of Gamma")
        total += f.mult * (complex(loggamma(a)) - complex(loggamma(b)))
    return float(g.exponent) * total


def numeric_gamma_eval(g: GammaRatioProduct, nu: Sequence[complex]) -> complex:
    """Evaluate the Gamma product through log-gamma; OverflowError if it leaves the double range."""
    return cmath.exp(numeric_gamma_log(g, nu))


def gamma_quotient(a: complex, b: complex) -> complex:
    """``Gamma(a)/Gamma(b)`` by log-gamma."""
    from scipy.special import loggamma

    for arg in (a, b):
        if _near_pole(complex(arg)):
            raise PoleError(f"argument {arg} is within {POLE_TOL} of a pole of Gamma")
    return cmath.exp(complex(loggamma(a)) - complex(loggamma(b)))


def _exact_factor_values(n: int, xi_weight, nu: Sequence[complex]):
    xi, _, _ = type_a_data(n, xi_weight)
    p = pxi_type_a(n, xi_weight)
    gx = [Gaussian(Fraction(complex(z).real), Fraction(complex(z).imag)) for z in nu]
    vals = p.coroot_values(gx)
    return weyl_dim(xi), [(vals[i], c, m) for i, c, m in p.factors]


def exact_ratio_value(n: int, xi_weight, nu: Sequence[complex]) -> complex:
    """``(p(-nu)/p(nu))^dim xi`` with the inner ratio computed exactly from binary-exact inputs."""
    dim, factors = _exact_factor_values(n, xi_weight, nu)
    r = Gaussian(1)
    for x, c, m in factors:
        r = r * ((c - x) / (c + x)) ** m
    return complex(r) ** dim


def exact_ratio_log(n: int, xi_weight, nu: Sequence[complex]) -> complex:
    """Logarithm (some branch) of ``(p(-nu)/p(nu))^dim xi``, factor by factor from exact values."""
    dim, factors = _exact_factor_values(n, xi_weight, nu)
    total = 0j
    for x, c, m in factors:
        total += m * (cmath.log(complex(c - x)) - cmath.log(complex(c + x)))
    return dim * total


def log_relative_error(a: complex, b: complex) -> float:
    """``|e^a / e^b - 1|`` for two logarithms, insensitive to the branch."""
    d = a - b
    d = complex(d.real, math.remainder(d.imag, 2 * math.pi))
    return abs(cmath.exp(d) - 1)


# -- cross-checks against the rank-one shift families ---------------------------


def rank_one_zero_loci(lie_type: LieType, tau: SmallKType) -> dict[str, set[Fraction]]:
    """Coroot values c >= 0 at which some rank-one factor ``c + 2j + 1 +- r`` vanishes.

    Only the shifts reachable in the closed chamber (shift <= 0) matter.
    """
    from .rank_one import MINUS_R, PLUS_R, p_factor
    from .small_k import dominant_t_weight

    rs = build(lie_type)
    out = {}
    for cls in sorted({rt.length_class for rt in rs.positive_roots}):
        rt = next(r for r in rs.positive_roots if r.length_class == cls)
        r = dominant_t_weight(tau, rt)
        zeros = set()
        for l in range(0, 4):
            for branch in (PLUS_R, MINUS_R):
                for s in p_factor(l, r, branch).shifts:
                    if s <= 0:
                        zeros.add(-s)
        out[cls] = zeros
    return out
