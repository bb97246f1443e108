"""Quadratic Cremona transformations and greedy reduction of numerical classes.

A quadratic Cremona transformation centred at three distinct points is not an
automorphism of the surface, but it acts on the blow-up lattice, fixing the
canonical and fibre classes.  Repeatedly transforming at the three largest
multiplicities drives the degree down; landing on a line class certifies that
the original class is represented by a connected curve (for base points in
general position).  The certificate is purely numerical: it cannot detect
special point positions, and a failed reduction proves nothing.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .picard_lattice import NumericalClass

DEFAULT_MAX_STEPS = 64

_MAX_STEPS_ENV = "PENCILFORGE_MAX_STEPS"


def _max_steps_default() -> int:
    raw = os.environ.get(_MAX_STEPS_ENV)
    if raw is None:
        return DEFAULT_MAX_STEPS
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{_MAX_STEPS_ENV} must be an integer, got {raw!r}") from exc
    if value < 0:
        raise ValueError(f"{_MAX_STEPS_ENV} must be non-negative, got {value}")
    return value


@dataclass(frozen=True)
class CremonaStep:
    """One transformation: `after == quadratic_transform(before,*indices)`."""

    indices: tuple[int, int, int]
    before: NumericalClass
    after: NumericalClass

    def to_json(self) -> dict:
        return {
            "indices": list(self.indices),
            "before": self.before.to_list(),
            "after": self.after.to_list(),
        }


@dataclass(frozen=True)
class ReductionCertificate:
    """Replayable chain of Cremona steps ending at `terminal`.

    `success` is true when the terminal class is a line class (d == 1); for
    every pencil class arising from the standard constructions the terminal
    is then exactly a line through one point, (1; e_i).
    """

    chain: tuple[CremonaStep, ...]
    terminal: NumericalClass
    success: bool

    def to_json_list(self) -> list[dict]:
        return [step.to_json() for step in self.chain]


def quadratic_transform(a: NumericalClass, i: int, j: int, k: int) -> NumericalClass:
    """Apply the quadratic transformation centred at points i, j, k (1-based).

    d' = 2d - mi - mj - mk, and each of the three chosen multiplicities m_i
    becomes d minus the other two; remaining entries are untouched.  The map
    is an involution and preserves all intersection numbers.
    """
    if len({i, j, k}) != 3:
        raise ValueError(f"Cremona centre needs three distinct indices, got {(i, j, k)}")
    for t in (i, j, k):
        if not 1 <= t <= 9:
            raise ValueError(f"point indices must be in 1..9, got {t}")
    d = a.d
    mi, mj, mk = a.m[i - 1], a.m[j - 1], a.m[k - 1]
    m = list(a.m)
    m[i - 1] = d - mj - mk
    m[j - 1] = d - mi - mk
    m[k - 1] = d - mi - mj
    return NumericalClass(2 * d - mi - mj - mk, tuple(m))


def _top_three(a: NumericalClass) -> tuple[int, int, int]:
    # Largest multiplicities first; ties broken towards lower point index.
    order = sorted(range(9), key=lambda t: (-a.m[t], t))[:3]
    i, j, k = sorted(t + 1 for t in order)
    return i, j, k


def reduce_to_line(a: NumericalClass, max_steps: int | None = None) -> ReductionCertificate:
    """Greedy Cremona reduction of `a` towards a line class.

    Transforms at the three largest multiplicities (ties towards lower
    indices) while that strictly decreases the degree d.  Succeeds when a
    class with d == 1 is reached; fails when d stops decreasing first or the
    step budget runs out.
    """
    if max_steps is None:
        max_steps = _max_steps_default()
    if max_steps < 0:
        raise ValueError(f"max_steps must be non-negative, got {max_steps}")

    chain: list[CremonaStep] = []
    current = a
    for _ in range(max_steps):
        if current.d == 1:
            return ReductionCertificate(tuple(chain), current, True)
        indices = _top_three(current)
        drop = sum(current.m[t - 1] for t in indices)
        if drop <= current.d:
            # Degree would not strictly decrease; the greedy strategy is stuck.
            return ReductionCertificate(tuple(chain), current, False)
        nxt = quadratic_transform(current, *indices)
        chain.append(CremonaStep(indices, current, nxt))
        current = nxt
    return ReductionCertificate(tuple(chain), current, current.d == 1)


def is_connected_class(a: NumericalClass, max_steps: int | None = None) -> bool:
    """Numerical connectedness certificate: true iff greedy reduction succeeds.

    Sufficient, not necessary, and blind to non-general point positions.
    """
    return reduce_to_line(a, max_steps).success
