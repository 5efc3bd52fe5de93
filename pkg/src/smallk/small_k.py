"""Genuine small K types of split group covers, with their t-weight data."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, UnsupportedType
from .roots import LONG, LieType, Root, Weight
from .reps import Irrep

HALF = Fraction(1, 2)
LABELS = ("s", "s∘p1", "s∘p2", "C8", "C8*", "C16", "C2∘p1", "C2∘p2")
COVERS = ("MetalinearGL", "PinPin")


@dataclass(frozen=True)
class SmallKType:
    lie_type: LieType | None
    label: str
    k_group: str
    dim: int
    t_long: Fraction = HALF
    t_short: Fraction | None = None
    # the K factor on which tau acts nontrivially, as an irrep
    factor: Irrep | None = field(default=None, compare=False)
    # size m of the embedded SL(m) whose 0M fixes the Clifford dimension
    clifford_m: int = 0
    cover: str | None = None
    notes: tuple[str, ...] = ()

    @property
    def name(self) -> str:
        return f"{self.lie_type or self.cover}:{self.label}"

    def to_dict(self) -> dict:
        return {
            "type": str(self.lie_type) if self.lie_type else self.cover,
            "label": self.label,
            "K": self.k_group,
            "dim": self.dim,
            "t_long": str(self.t_long),
            "t_short": None if self.t_short is None else str(self.t_short),
            "notes": list(self.notes),
        }


def clifford_dim(m: int) -> int:
    """Dimension of a genuine irreducible module of the 0M of SL(m, R)~."""
    return 2 ** ((m - 1) // 2)


def _spin_weight(n: int, sign: int = 1) -> Weight:
    k = n // 2
    coords = [HALF] * k
    if sign < 0:
        coords[-1] = -HALF
    return Weight(tuple(coords))


def _unit(n: int, i: int = 0, c=1) -> Weight:
    return Weight(tuple(Fraction(c) if j == i else Fraction(0) for j in range(n)))


def classify(lie_type: LieType) -> list[SmallKType]:
    """All genuine small K types for the split simply connected cover of ``lie_type``."""
    return list(_classify(lie_type))


@lru_cache(maxsize=None)
def _classify(lie_type: LieType) -> list[SmallKType]:
    lie_type.validate()
    s, n = lie_type.series, lie_type.rank
    if s == "C":
        raise UnsupportedType(
            f"type {lie_type}: small K types are 1 dimensional (characters of SO(2)), outside scope"
        )
    if s == "A":
        if n < 2:
            raise DomainError("small K types are classified for A_n with n >= 2")
        f = Irrep("Spin", n + 1, _spin_weight(n + 1))
        return [SmallKType(lie_type, "s", f"Spin({n + 1})", f.dim, factor=f, clifford_m=n + 1)]
    if s == "B":
        if n < 3:
            raise DomainError("small K types are classified for B_n with n >= 3")
        k = f"Spin({n + 1})×Spin({n})"
        out = []
        if n % 2:
            f1 = Irrep("Spin", n + 1, _spin_weight(n + 1))
            out.append(SmallKType(lie_type, "s∘p1", k, f1.dim, HALF, Fraction(1), f1, n))
        f2 = Irrep("Spin", n, _spin_weight(n))
        out.append(SmallKType(lie_type, "s∘p2", k, f2.dim, HALF, Fraction(0), f2, n))
        return out
    if s == "D":
        notes = ("A3≅D3 alias",) if n == 3 else ()
        f = Irrep("Spin", n, _spin_weight(n))
        k = f"Spin({n})×Spin({n})"
        return [SmallKType(lie_type, lab, k, f.dim, factor=f, clifford_m=n, notes=notes) for lab in ("s∘p1", "s∘p2")]
    if s == "E":
        if n == 6:
            f = Irrep("Sp", 4, _unit(4))
            return [SmallKType(lie_type, "C8", "Sp(4)", f.dim, factor=f, clifford_m=7)]
        if n == 7:
            f = Irrep("SU", 8, _unit(8))
            g = Irrep("SU", 8, _unit(8, 7, -1))
            return [
                SmallKType(lie_type, "C8", "SU(8)", f.dim, factor=f, clifford_m=8),
                SmallKType(lie_type, "C8*", "SU(8)", g.dim, factor=g, clifford_m=8),
            ]
        f = Irrep("Spin", 16, _unit(8))
        return [SmallKType(lie_type, "C16", "Spin(16)", f.dim, factor=f, clifford_m=9)]
    if s == "F":
        f = Irrep("SU", 2, Weight((HALF,)))
        return [SmallKType(lie_type, "C2∘p2", "Sp(3)×SU(2)", f.dim, HALF, Fraction(0), f, 4)]
    f = Irrep("SU", 2, Weight((HALF,)))
    k = "SU(2)×SU(2)"
    return [
        SmallKType(lie_type, "C2∘p1", k, f.dim, HALF, HALF, f, 3),
        SmallKType(lie_type, "C2∘p2", k, f.dim, HALF, Fraction(3, 2), f, 3),
    ]


def classify_cover(kind: str, n: int) -> list[SmallKType]:
    """Small K types of the metalinear group GL(n)~ or of Pin(n,n)~ (n >= 3)."""
    if kind not in COVERS:
        raise DomainError(f"unknown cover {kind!r}; expected one of {COVERS}")
    if n < 3:
        raise DomainError(f"{kind}({n}) needs n >= 3")
    eps = None if n % 2 == 0 else 1
    f = Irrep("Pin", n, _spin_weight(n), eps)
    dim = 2 ** (n // 2)
    if kind == "MetalinearGL":
        return [SmallKType(None, "s", f"Pin({n})", dim, factor=f, clifford_m=n + 1, cover=f"MetalinearGL({n})")]
    cover = f"PinPin({n},{n})"
    k = f"Pin({n})×Pin({n})"
    return [SmallKType(None, lab, k, dim, factor=f, clifford_m=n + 1, cover=cover) for lab in ("s∘p1", "s∘p2")]


def dominant_t_weight(tau: SmallKType, phi: Root) -> Fraction:
    """Dominant t_phi weight on V_tau: 1/2 for long roots, the table value for short ones."""
    if phi.length_class == LONG:
        return tau.t_long
    if tau.t_short is None:
        raise DomainError(f"{tau.name} has no short roots")
    return tau.t_short


def _norm_label(text: str) -> str:
    return re.sub(r"[^a-z0-9*]", "", text.lower().replace("∘", ""))


def find(lie_type: LieType, label: str) -> SmallKType:
    """Look up a small K type by label; ascii spellings such as ``s.p1`` or ``C2p2`` are accepted."""
    key = _norm_label(label)
    types = classify(lie_type)
    for tau in types:
        if _norm_label(tau.label) == key:
            return tau
    raise DomainError(f"{lie_type} has no small K type {label!r}; choose from {[t.label for t in types]}")
