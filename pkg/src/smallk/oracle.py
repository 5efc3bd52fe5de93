"""Brute-force rank-one checks with the order-8 group 0M inside SU(2).

SU(2) irreps are modelled on homogeneous polynomials of degree p in x, y;
the monomial ``x^a y^(p-a)`` has torus weight ``(2a - p)/2``.  Everything is
exact over the Gaussian rationals.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DomainError
from .exact import Gaussian, I
from .pxi import q_factors
from .rank_one import MINUS_R, PLUS_R, p_factor
from .reps import Irrep, tensor_decompose
from .roots import Weight

HALF = Fraction(1, 2)
ZERO, ONE = Gaussian(0), Gaussian(1)

Matrix = tuple[tuple[Gaussian, ...], ...]


def _m(a, b, c, d) -> Matrix:
    return ((Gaussian.coerce(a), Gaussian.coerce(b)), (Gaussian.coerce(c), Gaussian.coerce(d)))


def matmul(x: Matrix, y: Matrix) -> Matrix:
    n, k, m = len(x), len(y), len(y[0])
    return tuple(tuple(sum((x[i][t] * y[t][j] for t in range(k)), ZERO) for j in range(m)) for i in range(n))


def _neg(x: Matrix) -> Matrix:
    return tuple(tuple(-c for c in row) for row in x)


IDENTITY = _m(1, 0, 0, 1)
_GENS = (_m(I, 0, 0, -I), _m(0, 1, -1, 0), _m(0, I, I, 0))
ZERO_M = tuple(g for base in (IDENTITY,) + _GENS for g in (base, _neg(base)))
TORUS_H = _m(1, 0, 0, -1)


def q8_report() -> dict:
    """Closure, order and element orders of the 8 matrices."""
    elems = set(ZERO_M)
    closed = all(matmul(a, b) in elems for a in ZERO_M for b in ZERO_M)
    orders = Counter()
    for g in ZERO_M:
        k, x = 1, g
        while x != IDENTITY:
            x = matmul(x, g)
            k += 1
        orders[k] += 1
    # Q8: one element of order 1, one of order 2, six of order 4
    return {"order": len(elems), "closed": closed, "element_orders": dict(orders), "is_q8": dict(orders) == {1: 1, 2: 1, 4: 6}}


def conjugation_signs() -> list[int]:
    """For each g: the sign s with ``g H g^-1 = s H`` (H the torus generator)."""
    out = []
    for g in ZERO_M:
        ginv = _inverse2(g)
        c = matmul(matmul(g, TORUS_H), ginv)
        if c == TORUS_H:
            out.append(1)
        elif c == _neg(TORUS_H):
            out.append(-1)
        else:
            raise AssertionError("conjugation does not preserve the torus")
    return out


def _inverse2(g: Matrix) -> Matrix:
    (a, b), (c, d) = g
    det = a * d - b * c
    return ((d / det, -b / det), (-c / det, a / det))


# -- symmetric power models ----------------------------------------------------


def _linear_power(alpha: Gaussian, beta: Gaussian, k: int) -> list[Gaussian]:
    """Coefficients of x^a y^(k-a) in (alpha x + beta y)^k, indexed by a."""
    out = [ZERO] * (k + 1)
    if not alpha:
        out[0] = beta**k
        return out
    if not beta:
        out[k] = alpha**k
        return out
    apow, bpow = [ONE], [ONE]
    for _ in range(k):
        apow.append(apow[-1] * alpha)
        bpow.append(bpow[-1] * beta)
    return [apow[a] * bpow[k - a] * comb(k, a) for a in range(k + 1)]


@dataclass(frozen=True)
class Su2Model:
    """V_{p/2} on polynomials of degree p; g acts by ``x -> g00 x + g10 y``, ``y -> g01 x + g11 y``."""

    p: int

    def __post_init__(self):
        if self.p < 0:
            raise DomainError("p must be nonnegative")

    @property
    def dim(self) -> int:
        return self.p + 1

    def weight(self, a: int) -> Fraction:
        return Fraction(2 * a - self.p, 2)

    def matrix(self, g: Matrix) -> tuple[tuple[Gaussian, ...], ...]:
        """Column a is the image of ``x^a y^(p-a)``."""
        return _model_matrix(self.p, g)

    def trace(self, g: Matrix) -> Gaussian:
        m = self.matrix(g)
        return sum((m[i][i] for i in range(self.dim)), ZERO)


@lru_cache(maxsize=None)
def _model_matrix(p: int, g: Matrix) -> tuple[tuple[Gaussian, ...], ...]:
    # substitute with the transpose so that g -> matrix(g) is a left action
    (g00, g10), (g01, g11) = g
    cols = []
    for a in range(p + 1):
        xs = _linear_power(g00, g01, a)
        ys = _linear_power(g10, g11, p - a)
        col = [ZERO] * (p + 1)
        for i, u in enumerate(xs):
            if not u:
                continue
            for j, v in enumerate(ys):
                if v:
                    col[i + j] = col[i + j] + u * v
        cols.append(col)
    return tuple(tuple(cols[a][b] for a in range(p + 1)) for b in range(p + 1))


def _rank(rows: list[list[Gaussian]]) -> int:
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncol = len(rows[0])
    rank = 0
    for col in range(ncol):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / pv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def fixed_dim_rowreduce(model: Su2Model, basis: list[int] | None = None) -> int:
    """Dimension of the 0M-fixed vectors (inside ``span(basis)`` if given) by row reduction."""
    idx = list(range(model.dim)) if basis is None else basis
    rows = []
    for g in _GENS:
        m = model.matrix(g)
        for i in range(model.dim):
            rows.append([m[i][j] - (ONE if i == j else ZERO) for j in idx])
    return len(idx) - _rank(rows)


def fixed_dim_character(model: Su2Model) -> int:
    """Dimension of the 0M-fixed vectors by averaging the character."""
    avg = sum((model.trace(g) for g in ZERO_M), ZERO) / 8
    if avg.im != 0 or avg.re.denominator != 1:
        raise ArithmeticError(f"character average {avg} is not an integer")
    return int(avg.re)


def _weight_pairs(model: Su2Model):
    """Torus-weight blocks span{v_m, v_-m}, m >= 0, as lists of basis indices."""
    p = model.p
    for a in range(p, (p - 1) // 2, -1):
        b = p - a
        yield model.weight(a), ([a] if a == b else [a, b])


@dataclass(frozen=True)
class InvariantData:
    p: int
    l: int
    weights: tuple[Fraction, ...]
    l_character: int
    l_blocks: int


@lru_cache(maxsize=None)
def invariants_dim(p: int) -> InvariantData:
    """0M-invariants in V_{p/2} (p even) and their dominant torus weights."""
    if p < 0 or p % 2:
        raise DomainError(f"invariants_dim needs an even p >= 0, got {p}")
    model = Su2Model(p)
    l = fixed_dim_rowreduce(model)
    lc = fixed_dim_character(model)
    weights = []
    for m, block in _weight_pairs(model):
        k = fixed_dim_rowreduce(model, block)
        weights.extend([m] * k)
    return InvariantData(p, l, tuple(sorted(weights)), lc, len(weights))


def _is_q8_irreducible(model: Su2Model, block: list[int]) -> bool:
    """Is span(block) 0M-stable and irreducible (character norm 1)?"""
    others = [i for i in range(model.dim) if i not in block]
    norm = Fraction(0)
    for g in ZERO_M:
        m = model.matrix(g)
        if any(m[i][j] for i in others for j in block):
            return False
        chi = sum((m[i][i] for i in block), ZERO)
        norm += chi.norm()
    return norm / 8 == 1


def genuine_weight_list(p: int) -> list[Fraction]:
    """Dominant torus weights of the 2-dimensional genuine constituents of V_{p/2} (p odd)."""
    return list(_genuine_weights(p))


@lru_cache(maxsize=None)
def _genuine_weights(p: int) -> tuple[Fraction, ...]:
    if p < 0 or p % 2 == 0:
        raise DomainError(f"genuine_weight_list needs an odd p, got {p}")
    model = Su2Model(p)
    out = []
    for m, block in _weight_pairs(model):
        if len(block) == 2 and _is_q8_irreducible(model, block):
            out.append(m)
    return tuple(sorted(out))


def gamma_candidates(p: int) -> list[int]:
    """Integer spins q (as p_gamma = 2q) with V_{p/2} inside V_q (x) V_{1/2}."""
    target = Irrep("SU", 2, Weight((Fraction(p, 2),)))
    half = Irrep("SU", 2, Weight((HALF,)))
    out = []
    for q2 in range(0, p + 3, 2):
        gamma = Irrep("SU", 2, Weight((Fraction(q2, 2),)))
        if tensor_decompose(gamma, half).multiplicity(target):
            out.append(q2)
    return out


@dataclass
class ComparisonEntry:
    p: int
    xi_weights: list[Fraction]
    gamma_weights: list[Fraction]
    pairs: list[tuple[Fraction, Fraction]]
    unmatched: list[Fraction] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.unmatched and len(self.pairs) == len(self.xi_weights) == len(self.gamma_weights)


@dataclass
class Report:
    name: str
    entries: list

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list:
        return [e for e in self.entries if not e.ok]


def match_weights(xi_weights, gamma_weights) -> tuple[list, list]:
    """Greedy bijection with ``gamma = xi -+ 1/2``, preferring ``xi - 1/2``."""
    pool = Counter(gamma_weights)
    pairs, unmatched = [], []
    for d in sorted(xi_weights):
        for cand in (d - HALF, d + HALF):
            if pool[cand] > 0:
                pool[cand] -= 1
                pairs.append((d, cand))
                break
        else:
            unmatched.append(d)
    return pairs, unmatched


def verify_weight_comparison(p_max: int) -> Report:
    if p_max < 1 or p_max % 2 == 0:
        raise DomainError("p_max must be odd and positive")
    entries = []
    for p in range(1, p_max + 1, 2):
        xi = genuine_weight_list(p)
        gam = sorted(w for q2 in gamma_candidates(p) for w in invariants_dim(q2).weights)
        pairs, unmatched = match_weights(xi, gam)
        entries.append(ComparisonEntry(p, xi, gam, pairs, unmatched))
    return Report("weight_comparison", entries)


@dataclass
class MultiplicityEntry:
    p: int
    n_xi: int
    gammas: list[int]
    l_values: list[int]

    @property
    def ok(self) -> bool:
        return self.n_xi == sum(self.l_values) == (self.p + 1) // 2


def verify_multiplicity_identity(p_max: int) -> Report:
    if p_max < 1 or p_max % 2 == 0:
        raise DomainError("p_max must be odd and positive")
    entries = []
    for p in range(1, p_max + 1, 2):
        gs = gamma_candidates(p)
        entries.append(MultiplicityEntry(p, len(genuine_weight_list(p)), gs, [invariants_dim(g).l for g in gs]))
    return Report("multiplicity_identity", entries)


@dataclass
class StructureEntry:
    p: int
    ok: bool
    detail: str = ""


def verify_structure(p_max: int) -> Report:
    """Group law, +-1 torus conjugation, two-way invariant counts and paired weights."""
    entries = []
    rep = q8_report()
    signs = conjugation_signs()
    entries.append(StructureEntry(0, rep["is_q8"] and rep["closed"] and set(signs) == {1, -1}, str(rep)))
    for p in range(0, p_max + 2, 2):
        d = invariants_dim(p)
        q = p // 2
        expected = q // 2 + 1 if q % 2 == 0 else (q - 1) // 2
        ok = d.l == d.l_character == d.l_blocks == expected and all(w % 2 == 0 for w in d.weights)
        entries.append(StructureEntry(p, ok, f"l={d.l} weights={[str(w) for w in d.weights]}"))
    return Report("structure", entries)


def rank_one_assembly(p: int) -> list[Fraction]:
    """Shifts of the rank-one factors for xi = p/2 assembled from the oracle weights.

    A dominant weight ``2l + 1/2`` contributes ``p_factor(l, 1/2, PlusR)`` and
    ``2l - 1/2`` contributes ``p_factor(l, 1/2, MinusR)``.
    """
    out = []
    for d in genuine_weight_list(p):
        up = d - HALF
        if up % 2 == 0:
            out.extend(p_factor(int(up / 2), HALF, PLUS_R).shifts)
        else:
            out.extend(p_factor(int((d + HALF) / 2), HALF, MINUS_R).shifts)
    return sorted(out)


def run_suite(p_max: int) -> list[Report]:
    return [verify_weight_comparison(p_max), verify_multiplicity_identity(p_max), verify_structure(p_max)]


def _check_assembly(p: int) -> bool:
    return rank_one_assembly(p) == q_factors(p)
