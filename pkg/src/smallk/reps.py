"""Finite-dimensional representations of the compact groups that occur as K.

Highest weights are kept in epsilon coordinates (``Spin(n)``: ``n // 2``
coordinates; ``SU(n)``: ``n`` coordinates, or one coordinate ``a`` for SU(2)
meaning ``(a, -a)``; ``Sp(n)``: ``n`` coordinates).  Characters are computed
in Dynkin labels with the kernel from :mod:`smallk.kernels`.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod
from typing import Sequence

from . import kernels
from .errors import CapExceeded, DomainError, NotGenuine
from .exact import fmt, qvec
from .roots import FUND, RootSystem, Weight, classical

DEFAULT_CAP = 100_000
GROUPS = ("Spin", "Pin", "SU", "Sp")


def default_cap() -> int:
    """Dimension cap, overridable with the ``PXI_DIM_CAP`` environment variable."""
    raw = os.environ.get("PXI_DIM_CAP")
    if raw is None:
        return DEFAULT_CAP
    cap = int(raw)
    if cap <= 0:
        raise ValueError("PXI_DIM_CAP must be positive")
    return cap


def group_root_system(group: str, n: int) -> RootSystem:
    if group in ("Spin", "Pin"):
        if n < 3:
            raise DomainError(f"{group}({n}) is not supported (n >= 3 required)")
        return classical("B" if n % 2 else "D", n // 2)
    if group == "SU":
        if n < 2:
            raise DomainError("SU(n) needs n >= 2")
        return classical("A", n - 1)
    if group == "Sp":
        if n < 1:
            raise DomainError("Sp(n) needs n >= 1")
        return classical("C", n) if n >= 2 else classical("A", 1)
    raise DomainError(f"unknown group {group!r}")


@dataclass(frozen=True)
class Irrep:
    group: str
    n: int
    highest_weight: Weight
    pin_epsilon: int | None = None

    def __post_init__(self):
        if self.group not in GROUPS:
            raise DomainError(f"unknown group {self.group!r}")
        hw = self.highest_weight
        if not isinstance(hw, Weight):
            hw = Weight(qvec(hw))
        if self.group == "SU" and self.n == 2 and len(hw) == 1 and hw.basis != FUND:
            hw = Weight((hw.coords[0], -hw.coords[0]))
        object.__setattr__(self, "highest_weight", hw)
        rs = self.root_system
        if hw.basis == FUND:
            hw = rs.from_fundamental(hw)
            object.__setattr__(self, "highest_weight", hw)
        if len(hw) != rs.ambient_dim:
            raise DomainError(f"{self.name} weights have {rs.ambient_dim} coordinates, got {len(hw)}")
        labels = rs.to_fundamental(hw).coords
        if any(c.denominator != 1 for c in labels):
            raise DomainError(f"{hw} is not an integral weight of {self.name}")
        if any(c < 0 for c in labels):
            raise DomainError(f"{hw} is not dominant for {self.name}")
        if self.group == "Pin":
            _check_pin(self)
        elif self.pin_epsilon is not None:
            raise DomainError("pin_epsilon only applies to Pin(n)")

    @property
    def root_system(self) -> RootSystem:
        return group_root_system(self.group, self.n)

    @property
    def name(self) -> str:
        return f"{self.group}({self.n})"

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.root_system.to_fundamental(self.highest_weight).coords)

    @property
    def genuine(self) -> bool:
        """Spin/Pin irrep on which -1 acts nontrivially (half-integer coordinates)."""
        return self.group in ("Spin", "Pin") and self.highest_weight.coords[0].denominator == 2

    @property
    def dim(self) -> int:
        return weyl_dim(self)

    def __str__(self):
        s = f"{self.name}{self.highest_weight}"
        if self.pin_epsilon is not None:
            s += "+" if self.pin_epsilon > 0 else "-"
        return s


def spin(n: int, coords: Sequence) -> Irrep:
    return Irrep("Spin", n, Weight(qvec(coords)))


def _check_pin(rep: Irrep):
    n, eps = rep.n, rep.pin_epsilon
    if eps not in (None, 1, -1):
        raise DomainError("pin_epsilon must be +1, -1 or absent")
    if n % 2:
        if eps is None:
            raise DomainError(f"Pin({n}) irreps need an epsilon sign")
        return
    if rep.highest_weight.coords[-1] != 0:
        if eps is not None:
            raise DomainError(f"Pin({n}) irreps with nonzero last coordinate carry no epsilon")
    elif eps is None:
        raise DomainError(f"Pin({n}) irreps with zero last coordinate need an epsilon sign")


@dataclass(frozen=True)
class BranchingList:
    constituents: tuple[tuple[Irrep, int], ...]

    @classmethod
    def from_counter(cls, c: Counter) -> "BranchingList":
        items = sorted(c.items(), key=lambda kv: tuple(-x for x in kv[0].highest_weight.coords))
        return cls(tuple((rep, m) for rep, m in items if m))

    @property
    def total_dim(self) -> int:
        return sum(m * weyl_dim(rep) for rep, m in self.constituents)

    def multiplicity(self, rep: Irrep) -> int:
        return sum(m for r, m in self.constituents if r == rep)

    def __len__(self):
        return len(self.constituents)

    def to_dict(self) -> list:
        return [{"weight": [fmt(c) for c in r.highest_weight.coords], "mult": m} for r, m in self.constituents]


# -- dimensions ---------------------------------------------------------------


def weyl_dim(irrep: Irrep) -> int:
    """Weyl dimension formula ``prod (lambda + rho, b^vee) / (rho, b^vee)``."""
    return _weyl_dim(irrep.group if irrep.group != "Pin" else "Spin", irrep.n, irrep.labels)


@lru_cache(maxsize=4096)
def _weyl_dim(group: str, n: int, labels: tuple[int, ...]) -> int:
    rs = group_root_system(group, n)
    lam = rs.from_fundamental(Weight(labels, FUND))
    lr = Weight(tuple(a + b for a, b in zip(lam.coords, rs.rho.coords)))
    out = Fraction(1)
    for b in rs.positive_roots:
        out *= rs.pairing(lr, b) / rs.pairing(rs.rho, b)
    assert out.denominator == 1
    return int(out)


def spin_dim_closed_form(n: int, coords: Sequence) -> int:
    """Dimension of the Spin(n) irrep with highest weight ``coords``.

    Uses the product over ``i < j`` of ``(x_i^2 - x_j^2) / (r_i^2 - r_j^2)``
    with ``x = xi + rho``, times ``prod x_i / r_i`` when n is odd.
    """
    k = n // 2
    xi = qvec(coords)
    if len(xi) != k:
        raise DomainError(f"Spin({n}) weights have {k} coordinates")
    if n % 2:
        rho = [Fraction(2 * (k - i) - 1, 2) for i in range(k)]
    else:
        rho = [Fraction(k - 1 - i) for i in range(k)]
    x = [a + b for a, b in zip(xi, rho)]
    out = Fraction(1)
    for i in range(k):
        for j in range(i + 1, k):
            out *= (x[i] ** 2 - x[j] ** 2) / (rho[i] ** 2 - rho[j] ** 2)
    if n % 2:
        for i in range(k):
            out *= x[i] / rho[i]
    assert out.denominator == 1
    return int(out)


# -- characters ---------------------------------------------------------------


def _dominant_weights(rs: RootSystem, top: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Dominant weights below ``top``, sorted by depth (subtract positive roots, stay dominant)."""
    depth = {top: 0}
    frontier = [top]
    pos = list(zip(rs.positive_labels, (r.height for r in rs.positive_roots)))
    while frontier:
        nxt = []
        for mu in frontier:
            d = depth[mu]
            for a, h in pos:
                nu = tuple(x - y for x, y in zip(mu, a))
                if min(nu) >= 0 and nu not in depth:
                    depth[nu] = d + h
                    nxt.append(nu)
        frontier = nxt
    return sorted(depth, key=lambda w: (depth[w], tuple(-x for x in w)))


@lru_cache(maxsize=512)
def dominant_character(group: str, n: int, labels: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Multiplicities of the dominant weights of an irrep, keyed by Dynkin labels."""
    rs = group_root_system(group, n)
    doms = _dominant_weights(rs, labels)
    gram = rs.label_gram
    den = lcm(*(x.denominator for row in gram for x in row))
    gram_int = [[int(x * den) for x in row] for row in gram]
    mults = kernels.freudenthal_dominant(rs.rank, rs.cartan_matrix, rs.positive_labels, gram_int, doms)
    return {d: m for d, m in zip(doms, mults) if m}


def character_labels(irrep: Irrep, cap: int | None = None) -> dict[tuple[int, ...], int]:
    """Full weight diagram in Dynkin labels."""
    _check_cap(weyl_dim(irrep), cap)
    rs = irrep.root_system
    group = "Spin" if irrep.group == "Pin" else irrep.group
    out = {}
    for d, m in dominant_character(group, irrep.n, irrep.labels).items():
        for w in rs.orbit_labels(d):
            out[w] = m
    return out


def freudenthal_multiplicities(irrep: Irrep, cap: int | None = None) -> dict[Weight, int]:
    """Weight diagram of ``irrep`` in epsilon coordinates."""
    rs = irrep.root_system
    return {rs.from_fundamental(Weight(w, FUND)): m for w, m in character_labels(irrep, cap).items()}


def _check_cap(dim: int, cap: int | None):
    cap = default_cap() if cap is None else cap
    if dim > cap:
        raise CapExceeded(f"dimension {dim} exceeds cap {cap}")


# -- tensor products ----------------------------------------------------------


def tensor_decompose(a: Irrep, b: Irrep, cap: int | None = None) -> BranchingList:
    """Decompose ``a (x) b`` with Klimyk's formula."""
    if (a.group, a.n) != (b.group, b.n) or a.group == "Pin":
        raise DomainError(f"cannot tensor {a.name} with {b.name}")
    _check_cap(weyl_dim(a) * weyl_dim(b), cap)
    rs = a.root_system
    if weyl_dim(b) > weyl_dim(a):
        a, b = b, a
    lam = a.labels
    out = Counter()
    for mu, m in character_labels(b, cap).items():
        v = tuple(x + y + 1 for x, y in zip(lam, mu))
        w, parity = rs.to_dominant_labels(v)
        if 0 in w:
            continue
        hw = tuple(x - 1 for x in w)
        out[hw] += -m if parity else m
    counter = Counter()
    for hw, m in out.items():
        if m < 0:
            raise ArithmeticError(f"negative multiplicity {m} for {hw}")
        if m:
            counter[Irrep(a.group, a.n, Weight(hw, FUND))] = m
    return BranchingList.from_counter(counter)


# -- branching ----------------------------------------------------------------


def _interlace(lo: Fraction, hi: Fraction | None, top: Fraction):
    """Values x with x - top integral and lo <= x <= hi."""
    start = lo + ((top - lo) % 1)
    x = start
    while hi is None or x <= hi:
        yield x
        x += 1


def _branch_step(n: int, lam: tuple[Fraction, ...]) -> list[tuple[Fraction, ...]]:
    """Spin(n) -> Spin(n-1) interlacing patterns."""
    k = n // 2
    ranges = []
    if n % 2:
        # B_k -> D_k : l1 >= m1 >= l2 >= ... >= lk >= |mk|
        for i in range(k - 1):
            ranges.append(list(_interlace(lam[i + 1], lam[i], lam[i])))
        ranges.append(list(_interlace(-lam[k - 1], lam[k - 1], lam[k - 1])))
    else:
        # D_k -> B_{k-1} : l1 >= m1 >= ... >= m_{k-1} >= |lk|
        for i in range(k - 2):
            ranges.append(list(_interlace(lam[i + 1], lam[i], lam[i])))
        ranges.append(list(_interlace(abs(lam[k - 1]), lam[k - 2], lam[k - 2])))
    return [tuple(p) for p in itertools.product(*ranges)]


def branch_chain(irrep: Irrep) -> Counter:
    """Iterated interlacing branching down to Spin(3); keys are 1-tuples."""
    if irrep.group != "Spin":
        raise DomainError("branching is defined for Spin(n)")
    level = Counter({irrep.highest_weight.coords: 1})
    for n in range(irrep.n, 3, -1):
        nxt = Counter()
        for lam, m in level.items():
            for mu in _branch_step(n, lam):
                nxt[mu] += m
        level = nxt
    return level


def branch_to_spin3(irrep: Irrep) -> list[int]:
    """Sorted multiset ``{j_k}`` of Spin(3) highest weights ``j_k / 2`` in ``irrep``."""
    if irrep.group != "Spin" or irrep.n < 3:
        raise DomainError("branch_to_spin3 needs a Spin(n) irrep with n >= 3")
    if not irrep.genuine:
        raise NotGenuine(f"{irrep} has integer coordinates and is not genuine")
    out = []
    for (x,), m in branch_chain(irrep).items():
        out.extend([int(2 * x)] * m)
    return sorted(out)


def branch_to_spin3_character(irrep: Irrep, cap: int | None = None) -> list[int]:
    """Independent route: restrict the weight diagram to the Spin(3) torus and decompose."""
    counts = Counter()
    for w, m in freudenthal_multiplicities(irrep, cap).items():
        counts[w.coords[0]] += m
    out = []
    for x in sorted(counts):
        if x < 0:
            continue
        c = counts[x] - counts.get(x + 1, 0)
        if c < 0:
            raise ArithmeticError("inconsistent Spin(3) character")
        out.extend([int(2 * x)] * c)
    return sorted(out)


def pin_restrict(pin_irrep: Irrep) -> BranchingList:
    """Restriction of a Pin(n) irrep to Spin(n)."""
    if pin_irrep.group != "Pin":
        raise DomainError("pin_restrict needs a Pin(n) irrep")
    hw = pin_irrep.highest_weight.coords
    base = Irrep("Spin", pin_irrep.n, Weight(hw))
    if pin_irrep.n % 2 or hw[-1] == 0:
        return BranchingList(((base, 1),))
    other = Irrep("Spin", pin_irrep.n, Weight(hw[:-1] + (-hw[-1],)))
    return BranchingList.from_counter(Counter({base: 1, other: 1}))


def central_parity(coords: Sequence) -> int:
    """``sum(coords)`` modulo 2 for a Spin(2k) weight, as 0 or 1 (times 1/2 units).

    The central element acts on V_lambda by ``exp(i pi sum lambda)``; two
    weights with the same parity share the central character.
    """
    s = sum(qvec(coords), Fraction(0))
    return int((2 * s) % 4)
