"""Mordell-Weil height pairing and bounded section-class enumeration.

The pairing of two sections P, Q is

    <P, Q> = chi + (P.O) + (Q.O) - (P.Q) - sum_v contr_v(P, Q)

with one local correction per reducible fibre.  The correction is read off
the inverse of the intersection matrix A_v of the non-identity fibre
components; -A_v is the Cartan matrix of the Dynkin type attached to the
fibre symbol:

    I_n : A_{n-1}   III : A_1   IV : A_2
    I_n*: D_{n+4}   IV* : E_6   III*: E_7   II* : E_8

Component indexing (0 is always the component met by the zero section):

* I_n      -- components 1..n-1 along the cycle, so consecutive indices meet.
* III, IV  -- non-identity components numbered 1 (and 2 for IV).
* I_n*     -- 1 is the reduced component at the near end, 2..n+2 walk the
              multiplicity-two spine, n+3 and n+4 are the far-end reduced
              components.
* IV*, III*, II* -- Bourbaki numbering of E_6, E_7, E_8.

Any consistent convention gives the same multiset of correction values; the
one above is frozen so that certificates and serialized inputs replay.
All values are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, Sequence

from .base_change import KodairaFibre
from .picard_lattice import NumericalClass, intersect

def dynkin_type(symbol: str) -> tuple[str, int]:
    """Dynkin letter and rank attached to a Kodaira symbol.

    Rank 0 (types I0, I1, II) means the fibre has no non-identity component.
    """
    fibre = KodairaFibre(symbol)
    n = fibre.index
    if n is not None:
        return ("D", n + 4) if not fibre.reduced else ("A", max(n - 1, 0))
    return {"II": ("A", 0), "III": ("A", 1), "IV": ("A", 2),
            "IV*": ("E", 6), "III*": ("E", 7), "II*": ("E", 8)}[fibre.symbol]


def _dynkin_edges(letter: str, rank: int) -> list[tuple[int, int]]:
    if letter == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if letter == "D":
        if rank < 4:
            raise ValueError(f"D_{rank} not supported, need rank >= 4")
        return [(i, i + 1) for i in range(1, rank - 2)] + [(rank - 2, rank - 1), (rank - 2, rank)]
    if letter == "E":
        if rank not in (6, 7, 8):
            raise ValueError(f"E_{rank} does not exist")
        chain = [(1, 3), (3, 4), (4, 5), (5, 6)] + [(i, i + 1) for i in range(6, rank)]
        return chain + [(2, 4)]
    raise ValueError(f"unknown Dynkin letter {letter!r}")


@lru_cache(maxsize=None)
def cartan_matrix(letter: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of the given simply-laced Dynkin type (possibly 0x0)."""
    rows = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for a, b in _dynkin_edges(letter, rank):
        rows[a - 1][b - 1] = -1
        rows[b - 1][a - 1] = -1
    return tuple(tuple(row) for row in rows)


def invert_exact(matrix: Sequence[Sequence[int | Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    """Inverse of a square matrix by Gauss-Jordan elimination over the rationals."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        aug[col] = [x / pivot for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@lru_cache(maxsize=None)
def _cartan_inverse(letter: str, rank: int) -> tuple[tuple[Fraction, ...], ...]:
    return invert_exact(cartan_matrix(letter, rank))


@dataclass(frozen=True)
class ReducibleFibreData:
    """A fibre symbol together with its non-identity component intersection matrix."""

    symbol: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbol", KodairaFibre(self.symbol).symbol)

    @property
    def component_count(self) -> int:
        return KodairaFibre(self.symbol).components

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """A_v itself: the negated Cartan matrix, negative definite."""
        letter, rank = dynkin_type(self.symbol)
        return tuple(tuple(-x for x in row) for row in cartan_matrix(letter, rank))


def contribution(fibre: ReducibleFibreData | KodairaFibre | str, i: int, j: int) -> Fraction:
    """Local correction contr_v(P, Q) for sections meeting components i and j.

    Zero when either section meets the identity component, otherwise the
    (i, j) entry of -A_v^{-1}, i.e. of the inverse Cartan matrix.
    """
    symbol = fibre.symbol if hasattr(fibre, "symbol") else str(fibre)
    data = ReducibleFibreData(symbol)
    top = data.component_count - 1
    for idx in (i, j):
        if not 0 <= idx <= top:
            raise ValueError(f"component index {idx} out of range 0..{top} for {data.symbol}")
    if i == 0 or j == 0:
        return Fraction(0)
    letter, rank = dynkin_type(data.symbol)
    return _cartan_inverse(letter, rank)[i - 1][j - 1]


@dataclass(frozen=True)
class SectionIntersections:
    """Intersection data determining the pairing of two sections P and Q.

    `p_zero`, `q_zero` and `p_q` are (P.O), (Q.O) and (P.Q); for the pairing
    of a section with itself pass p_q = (P.P) = -chi.  `components` lists,
    for each reducible fibre in order, the component indices met by P and Q.
    """

    p_zero: int
    q_zero: int
    p_q: int
    components: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple((int(a), int(b)) for a, b in self.components))


def height_pairing(data: SectionIntersections, chi: int,
                   fibres: Sequence[ReducibleFibreData | KodairaFibre | str] = ()) -> Fraction:
    """Evaluate the height pairing for the given intersection data.

    `fibres` lists the reducible fibres; `data.components` must supply one
    (i, j) pair per entry.
    """
    if chi < 1:
        raise ValueError(f"Euler characteristic chi must be positive, got {chi}")
    if len(data.components) != len(fibres):
        raise ValueError(
            f"component data for {len(data.components)} fibres but {len(fibres)} fibres given")
    local = sum((contribution(f, i, j) for f, (i, j) in zip(fibres, data.components)), Fraction(0))
    return Fraction(chi + data.p_zero + data.q_zero - data.p_q) - local


def enumerate_section_classes(
    constraints: Sequence[tuple[NumericalClass, int]] | None = None,
    d_max: int = 2,
) -> list[NumericalClass]:
    """All section classes (c.c = -1, c.F = 1) with |d| <= d_max, in lex order.

    A class (d; m) is a section class iff sum m_i^2 = d^2 + 1 and
    sum m_i = 3d - 1; its arithmetic genus is then automatically zero.
    Optional constraints are pairs (class, value) filtering on prescribed
    intersection numbers.
    """
    if d_max < 0:
        raise ValueError(f"d_max must be non-negative, got {d_max}")
    found: list[NumericalClass] = []
    for d in range(-d_max, d_max + 1):
        square_budget = d * d + 1
        linear_target = 3 * d - 1
        for m in _vectors_with_budget(9, square_budget, linear_target):
            found.append(NumericalClass(d, m))
    if constraints:
        pinned = [(cls, int(value)) for cls, value in constraints]
        found = [c for c in found if all(intersect(c, cls) == value for cls, value in pinned)]
    return found


def _vectors_with_budget(length: int, square_sum: int, linear_sum: int) -> Iterable[tuple[int, ...]]:
    # Integer vectors with prescribed sum of squares and sum, ascending lex order.
    if length == 0:
        if square_sum == 0 and linear_sum == 0:
            yield ()
        return
    # Cauchy-Schwarz feasibility cut for the remaining coordinates.
    if linear_sum * linear_sum > square_sum * length:
        return
    bound = isqrt(square_sum)
    for x in range(-bound, bound + 1):
        for rest in _vectors_with_budget(length - 1, square_sum - x * x, linear_sum - x):
            yield (x, *rest)


def multiplication_pullback_degree(n: int) -> int:
    """Degree n^2 of the preimage of a section under multiplication by n."""
    if n < 1:
        raise ValueError(f"multiplication degree needs n >= 1, got {n}")
    return n * n


@dataclass(frozen=True)
class KummerInputs:
    """Degree and field constants bounding division of a new section.

    `h` is the degree of the curve over the base, `f1` the Kummer constant
    (h >= f1 * m bounds the division index m), and `c_e`, `alpha` the torsion
    degree-growth constants (c_e * m1^alpha <= h bounds the torsion order m1).
    """

    h: int
    f1: Fraction
    c_e: Fraction
    alpha: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "h", int(self.h))
        for name in ("f1", "c_e", "alpha"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.h < 1:
            raise ValueError(f"curve degree h must be positive, got {self.h}")
        for name in ("f1", "c_e", "alpha"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive, got {getattr(self, name)}")


def _floor_root(value: Fraction, exponent: Fraction) -> int:
    """Largest integer t >= 0 with t**exponent <= value, by integer search."""
    if value < 1:
        return 0
    p, q = exponent.numerator, exponent.denominator
    rhs = value ** q
    t = 1
    while Fraction((t + 1) ** p) <= rhs:
        t += 1
    return t


def kummer_bound(inputs: KummerInputs) -> int:
    """Bound n0 on the multiplication index: floor(h/f1) * floor((h/c_e)^(1/alpha)).

    The first factor bounds the division index m, the second the order m1 of
    the torsion defect; any section dividing a new one satisfies n <= m*m1.
    """
    division_bound = Fraction(inputs.h) / inputs.f1
    m_max = division_bound.numerator // division_bound.denominator
    torsion_max = _floor_root(Fraction(inputs.h) / inputs.c_e, inputs.alpha)
    return m_max * torsion_max
