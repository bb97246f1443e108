"""Exact intersection theory on the blow-up lattice of the plane at nine points.

A divisor class is written in the geometric basis L0, L1, ..., L9 as

    d * L0  -  m1 * L1  -  ...  -  m9 * L9

where L0 is the pullback of a line and L1..L9 are the exceptional classes.
The intersection form has signature (1, 9): L0.L0 = 1, Li.Li = -1 and mixed
products vanish.  Effective curves carry non-negative multiplicities m_i in
this convention, while the exceptional class E_j itself is (0; ..., m_j=-1,
...).  All arithmetic is arbitrary-precision integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import index
from typing import Sequence


@dataclass(frozen=True)
class NumericalClass:
    """A divisor class (d; m1, ..., m9) in the blow-up basis."""

    d: int
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        # operator.index keeps the lattice exact: true integers only
        object.__setattr__(self, "m", tuple(index(x) for x in self.m))
        object.__setattr__(self, "d", index(self.d))
        if len(self.m) != 9:
            raise ValueError(f"multiplicity vector must have length 9, got {len(self.m)}")

    @classmethod
    def from_list(cls, coords: Sequence[int]) -> "NumericalClass":
        """Build a class from the 10-entry JSON form [d, m1, ..., m9]."""
        coords = list(coords)
        if len(coords) != 10:
            raise ValueError(f"expected 10 coordinates [d, m1..m9], got {len(coords)}")
        return cls(coords[0], tuple(coords[1:]))

    def to_list(self) -> list[int]:
        """Serialize as the 10-entry list [d, m1, ..., m9]."""
        return [self.d, *self.m]

    def __add__(self, other: "NumericalClass") -> "NumericalClass":
        return NumericalClass(self.d + other.d, tuple(a + b for a, b in zip(self.m, other.m)))

    def __sub__(self, other: "NumericalClass") -> "NumericalClass":
        return NumericalClass(self.d - other.d, tuple(a - b for a, b in zip(self.m, other.m)))

    def __neg__(self) -> "NumericalClass":
        return NumericalClass(-self.d, tuple(-a for a in self.m))

    def __rmul__(self, scalar: int) -> "NumericalClass":
        return NumericalClass(scalar * self.d, tuple(scalar * a for a in self.m))

    def __repr__(self) -> str:
        return f"({self.d}; {', '.join(str(x) for x in self.m)})"


def exceptional(j: int) -> NumericalClass:
    """The exceptional class E_j above the j-th point, 1-based."""
    if not 1 <= j <= 9:
        raise ValueError(f"point index must be in 1..9, got {j}")
    m = [0] * 9
    m[j - 1] = -1
    return NumericalClass(0, tuple(m))


#: Pullback of a plane line.
LINE = NumericalClass(1, (0,) * 9)

#: Canonical class K = (-3; -1, ..., -1); K.K = 0.
CANONICAL = NumericalClass(-3, (-1,) * 9)

#: Fibre class of the elliptic fibration, F = -K = (3; 1, ..., 1).
FIBRE = -CANONICAL


def intersect(a: NumericalClass, b: NumericalClass) -> int:
    """Intersection number a.b = d_a*d_b - sum_i m_i(a)*m_i(b)."""
    return a.d * b.d - sum(x * y for x, y in zip(a.m, b.m))


def arithmetic_genus(a: NumericalClass) -> int:
    """Arithmetic genus (a.a + a.K)/2 + 1.

    For an effective class this is the familiar plane-curve bound
    (d-1)(d-2)/2 - sum m_i(m_i - 1)/2.
    """
    total = intersect(a, a) + intersect(a, CANONICAL)
    assert total % 2 == 0, f"adjunction parity violated for {a}"
    return total // 2 + 1


def degree_to_base(a: NumericalClass) -> int:
    """Degree of the induced map to the base of the fibration, a.F = 3d - sum m_i."""
    return intersect(a, FIBRE)


def mw_rank_bound(s: int) -> int:
    """Upper bound s - 1 for the geometric Mordell-Weil rank of a surface
    induced by a cubic pencil with s distinct base points."""
    if not 1 <= s <= 9:
        raise ValueError(f"a cubic pencil has 1..9 distinct base points, got {s}")
    return s - 1


def unirationality_check(pic_rank_over_k: int) -> bool:
    """Whether a Picard rank over the ground field guarantees unirationality.

    The threshold is rank >= 5: contracting down to a minimal model then
    leaves degree at least three, and such surfaces with a rational point
    are unirational.
    """
    if not 1 <= pic_rank_over_k <= 10:
        raise ValueError(f"Picard rank of a rational elliptic surface is in 1..10, got {pic_rank_over_k}")
    return pic_rank_over_k >= 5
