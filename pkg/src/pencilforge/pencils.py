"""Construction, verification and search of genus-zero pencils of degree two.

A candidate linear system is described by a `PencilSpec`: the ambient model
("plane" for the projective plane, "dp1".."dp8" for a minimal del Pezzo
surface of that degree), a level n (plane curve degree, or anticanonical
multiple for del Pezzo models), one multiplicity per blown-up point, and a
count of extra linear conditions (tangencies to the fibres at base points,
used by the conic constructions and not expressible as point multiplicities).

A spec is a usable pencil member when the system is at least a pencil
(dimension bound >= 2), its members are rational (genus bound <= 0) and the
induced map to the base of the elliptic fibration has degree exactly two.
`construct_pencils` returns the standard pair (L1, L2) for each supported
model/orbit configuration, `search_pencils` finds all candidates by
exhaustive integer search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .picard_lattice import NumericalClass

PLANE = "plane"

_CUBIC_PATTERNS = {(1, 4, 4), (3, 3, 3), (5, 2, 2), (7, 1, 1)}

# level and (rational-point, other-point) multiplicities of the standard
# pencil pair on low-degree del Pezzo models
_DEL_PEZZO_PAIRS = {
    8: ((8, 13, 7), (22, 13, 23)),
    5: ((2, 4, 1), (10, 4, 11)),
    4: ((1, 2, 0), (7, 2, 8)),
}


def model_degree(model: str) -> int | None:
    """Degree of a del Pezzo model string, or None for the plane."""
    if model == PLANE:
        return None
    if model.startswith("dp"):
        try:
            degree = int(model[2:])
        except ValueError:
            degree = -1
        if 1 <= degree <= 8:
            return degree
    raise ValueError(f"model must be 'plane' or 'dp1'..'dp8', got {model!r}")


@dataclass(frozen=True)
class OrbitStructure:
    """Galois orbit sizes of the blown-up points, one orbit designated rational.

    The designated orbit (the contracted zero section) must have size one;
    other orbits of size one may coexist with it.
    """

    sizes: tuple[int, ...]
    rational_index: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if not self.sizes:
            raise ValueError("orbit structure needs at least one orbit")
        if any(s < 1 for s in self.sizes):
            raise ValueError(f"orbit sizes must be positive, got {self.sizes}")
        if not 0 <= self.rational_index < len(self.sizes):
            raise ValueError(f"rational orbit index {self.rational_index} out of range")
        if self.sizes[self.rational_index] != 1:
            raise ValueError("the designated rational orbit must have size one")

    @property
    def total_points(self) -> int:
        return sum(self.sizes)

    def point_range(self, orbit: int) -> range:
        """Positions of an orbit's points; orbits are laid out consecutively."""
        start = sum(self.sizes[:orbit])
        return range(start, start + self.sizes[orbit])

    def to_json(self) -> dict:
        return {"orbit_sizes": list(self.sizes), "rational_orbit_index": self.rational_index}


@dataclass(frozen=True)
class PencilSpec:
    """A candidate linear system on a minimal model."""

    model: str
    level: int
    mults: tuple[int, ...]
    extra_conditions: int = 0

    def __post_init__(self) -> None:
        degree = model_degree(self.model)
        object.__setattr__(self, "mults", tuple(int(x) for x in self.mults))
        if self.level < 1:
            raise ValueError(f"level must be at least 1, got {self.level}")
        if any(x < 0 for x in self.mults):
            raise ValueError(f"multiplicities must be non-negative, got {self.mults}")
        if self.extra_conditions < 0:
            raise ValueError(f"extra_conditions must be non-negative, got {self.extra_conditions}")
        if degree is None:
            if len(self.mults) > 9:
                raise ValueError(f"the plane model has at most 9 blown-up points, got {len(self.mults)}")
        elif len(self.mults) != degree:
            raise ValueError(
                f"a degree-{degree} del Pezzo model has {degree} blown-up points, got {len(self.mults)}")

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "level": self.level,
            "mults": list(self.mults),
            "extra_conditions": self.extra_conditions,
        }

    @classmethod
    def from_json(cls, payload: dict) -> "PencilSpec":
        return cls(
            payload["model"],
            int(payload["level"]),
            tuple(payload["mults"]),
            int(payload.get("extra_conditions", 0)),
        )


@dataclass(frozen=True)
class PencilReport:
    """Verification numbers for a spec and the combined validity verdict."""

    dim_lower_bound: int
    genus_upper_bound: int
    degree_to_base: int
    is_valid_pair_member: bool


@dataclass(frozen=True)
class Unsupported:
    """A model/orbit configuration the constructions do not cover."""

    reason: str


@dataclass(frozen=True)
class DegreeSixReduction:
    """Rewrite instruction for a degree-six model: blow up one orbit."""

    target_degree: int
    blow_up_orbit: int


def dim_lower_bound(spec: PencilSpec) -> int:
    """Lower bound for the linear-system dimension (as a space of sections).

    A value of at least 2 guarantees a pencil.  May be negative; the sign is
    the decision criterion, so no clamping.
    """
    n = spec.level
    degree = model_degree(spec.model)
    if degree is None:
        base = (n + 1) * (n + 2) // 2
        conditions = sum(x * (x + 1) // 2 for x in spec.mults)
    else:
        base = degree * (n * n + n) // 2 + 1
        conditions = sum((x * x + x) // 2 for x in spec.mults)
    return base - conditions - spec.extra_conditions


def genus_upper_bound(spec: PencilSpec) -> int:
    """Upper bound for the genus of a member of the system."""
    n = spec.level
    degree = model_degree(spec.model)
    if degree is None:
        return (n - 1) * (n - 2) // 2 - sum(x * (x - 1) // 2 for x in spec.mults)
    return degree * (n * n - n) // 2 + 1 - sum((x * x - x) // 2 for x in spec.mults)


def degree_to_base_spec(spec: PencilSpec) -> int:
    """Degree of the map to the base induced on a member of the system.

    Each extra condition is a tangency to the fibres at a base point and
    absorbs one intersection, hence the final subtraction.
    """
    n = spec.level
    degree = model_degree(spec.model)
    raw = 3 * n if degree is None else n * degree
    return raw - sum(spec.mults) - spec.extra_conditions


def verify(spec: PencilSpec) -> PencilReport:
    """Evaluate the three pencil criteria for a spec."""
    dim = dim_lower_bound(spec)
    genus = genus_upper_bound(spec)
    deg = degree_to_base_spec(spec)
    return PencilReport(dim, genus, deg, dim >= 2 and genus <= 0 and deg == 2)


def to_numerical_class(spec: PencilSpec) -> NumericalClass:
    """Blow-up lattice class of a spec in the nine-point basis of the plane.

    Plane specs give (n; mults) directly.  A degree-d del Pezzo model is the
    plane blown up at 9-d points, and a section of the n-th anticanonical
    power with the given multiplicities has class (3n; n, ..., n, mults),
    with the 9-d plane points listed first.  Tangency conditions are
    invisible to the flat class, so for specs with extra conditions the
    lattice degree-to-base overshoots by that count.
    """
    degree = model_degree(spec.model)
    if degree is None:
        padded = spec.mults + (0,) * (9 - len(spec.mults))
        return NumericalClass(spec.level, padded)
    n = spec.level
    return NumericalClass(3 * n, (n,) * (9 - degree) + spec.mults)


def _mult_vector(orbits: OrbitStructure, assignments: dict[int, int]) -> tuple[int, ...]:
    mults = [0] * orbits.total_points
    for orbit, value in assignments.items():
        for pos in orbits.point_range(orbit):
            mults[pos] = value
    return tuple(mults)


def _point_vector(orbits: OrbitStructure, positions: Iterable[int]) -> tuple[int, ...]:
    mults = [0] * orbits.total_points
    for pos in positions:
        mults[pos] = 1
    return tuple(mults)


def reduce_orbit_config(orbits: OrbitStructure) -> DegreeSixReduction | Unsupported:
    """Rewrite a degree-six orbit configuration to degree five or four.

    A second rational point is blown up (target degree five); failing that, a
    (1, 2, 3) split blows up the two-point orbit (target degree four).  A
    five-point orbit admits no rewrite.
    """
    if orbits.total_points != 6:
        raise ValueError(f"degree-six rewrite expects 6 points, got {orbits.total_points}")
    others = [(i, s) for i, s in enumerate(orbits.sizes) if i != orbits.rational_index]
    for i, s in others:
        if s == 1:
            return DegreeSixReduction(5, i)
    if sorted(s for _, s in others) == [2, 3]:
        two_orbit = next(i for i, s in others if s == 2)
        return DegreeSixReduction(4, two_orbit)
    return Unsupported("degree six with a five-point orbit admits no conic pencil pair")


def _drop_orbit(orbits: OrbitStructure, orbit: int) -> OrbitStructure:
    sizes = tuple(s for i, s in enumerate(orbits.sizes) if i != orbit)
    rational = orbits.rational_index - (1 if orbit < orbits.rational_index else 0)
    return OrbitStructure(sizes, rational)


def construct_pencils(
    model: str,
    orbits: OrbitStructure,
    cubic_pattern: tuple[int, int, int] | None = None,
) -> tuple[PencilSpec, PencilSpec] | Unsupported:
    """The standard pencil pair (L1, L2) for a model and orbit configuration.

    Plane configurations dispatch on the size of the smallest orbit other
    than the rational point; the two-conjugate-point case with no further
    orbits additionally needs `cubic_pattern`, the base-point multiplicity
    pattern (m1, m2, m3) of a cubic pencil inducing the surface, one of
    (1,4,4), (3,3,3), (5,2,2), (7,1,1).  Degree-six del Pezzo configurations
    are first rewritten via `reduce_orbit_config`.  Configurations the
    constructions exclude yield `Unsupported`.
    """
    degree = model_degree(model)
    if degree is None:
        if orbits.total_points > 9:
            raise ValueError(f"plane configurations have at most 9 points, got {orbits.total_points}")
        return _construct_plane(orbits, cubic_pattern)
    if orbits.total_points != degree:
        raise ValueError(
            f"degree-{degree} model expects {degree} points, got {orbits.total_points}")
    if degree in (1, 2, 3):
        return Unsupported(f"minimal models of degree {degree} carry no conic pencil pair")
    if degree == 7:
        return Unsupported("there are no minimal rational surfaces of degree seven")
    if degree == 6:
        rewrite = reduce_orbit_config(orbits)
        if isinstance(rewrite, Unsupported):
            return rewrite
        return construct_pencils(f"dp{rewrite.target_degree}", _drop_orbit(orbits, rewrite.blow_up_orbit))

    (level1, rat1, oth1), (level2, rat2, oth2) = _DEL_PEZZO_PAIRS[degree]
    assign1 = {i: (rat1 if i == orbits.rational_index else oth1) for i in range(len(orbits.sizes))}
    assign2 = {i: (rat2 if i == orbits.rational_index else oth2) for i in range(len(orbits.sizes))}
    first = PencilSpec(model, level1, _mult_vector(orbits, assign1))
    second = PencilSpec(model, level2, _mult_vector(orbits, assign2))
    return first, second


def _construct_plane(
    orbits: OrbitStructure,
    cubic_pattern: tuple[int, int, int] | None,
) -> tuple[PencilSpec, PencilSpec] | Unsupported:
    rational_pos = orbits.point_range(orbits.rational_index)[0]
    first = PencilSpec(PLANE, 1, _point_vector(orbits, [rational_pos]))

    others = [(i, s) for i, s in enumerate(orbits.sizes) if i != orbits.rational_index]
    if not others:
        return Unsupported("no orbit besides the contracted zero section")
    smallest_index, smallest = min(others, key=lambda pair: (pair[1], pair[0]))
    orbit_pts = orbits.point_range(smallest_index)

    if smallest == 1:
        second = PencilSpec(PLANE, 1, _point_vector(orbits, [orbit_pts[0]]))
    elif smallest == 2:
        extras = [(i, s) for i, s in others if i != smallest_index]
        if not extras:
            second = _tangent_conics(orbits, smallest_index, rational_pos, cubic_pattern)
            if isinstance(second, Unsupported):
                return second
        else:
            extra_index, extra = min(extras, key=lambda pair: (pair[1], pair[0]))
            extra_pts = orbits.point_range(extra_index)
            if extra in (2, 4):
                # conics through four points: the 2-orbit plus an extra
                # 2-orbit, or an extra 4-orbit on its own
                pts = list(orbit_pts) + list(extra_pts) if extra == 2 else list(extra_pts)
                second = PencilSpec(PLANE, 2, _point_vector(orbits, pts))
            elif extra == 3:
                second = PencilSpec(PLANE, 2, _point_vector(orbits, [rational_pos, *extra_pts]))
            elif extra == 5:
                second = _singular_cubics(orbits, rational_pos, extra_pts)
            elif extra == 6:
                second = _singular_quintics(orbits, rational_pos, extra_pts)
            else:
                return Unsupported(f"no construction for a two-point orbit next to a {extra}-point orbit")
    elif smallest == 3:
        second = PencilSpec(PLANE, 2, _point_vector(orbits, [rational_pos, *orbit_pts]))
    elif smallest == 4:
        second = PencilSpec(PLANE, 2, _point_vector(orbits, orbit_pts))
    elif smallest == 5:
        second = _singular_cubics(orbits, rational_pos, orbit_pts)
    elif smallest == 6:
        second = _singular_quintics(orbits, rational_pos, orbit_pts)
    elif smallest == 7:
        # quartics triple at the rational point, through the seven
        mults = _mult_vector(orbits, {orbits.rational_index: 3, smallest_index: 1})
        second = PencilSpec(PLANE, 4, mults)
    else:
        # degree 17, sextuple at the eight conjugate points, through p1
        mults = _mult_vector(orbits, {orbits.rational_index: 1, smallest_index: 6})
        second = PencilSpec(PLANE, 17, mults)
    return first, second


def _tangent_conics(
    orbits: OrbitStructure,
    two_orbit: int,
    rational_pos: int,
    cubic_pattern: tuple[int, int, int] | None,
) -> PencilSpec | Unsupported:
    if cubic_pattern is None:
        raise ValueError(
            "a plane configuration with a single two-point orbit needs cubic_pattern, "
            "one of (1,4,4), (3,3,3), (5,2,2), (7,1,1)")
    pattern = tuple(int(x) for x in cubic_pattern)
    if pattern not in _CUBIC_PATTERNS:
        raise ValueError(f"cubic_pattern must be one of {sorted(_CUBIC_PATTERNS)}, got {pattern}")
    pts = orbits.point_range(two_orbit)
    if pattern == (1, 4, 4):
        # conics through the conjugate pair, tangent to the common fibre
        # tangents there
        return PencilSpec(PLANE, 2, _point_vector(orbits, pts), extra_conditions=2)
    # conics through all three points, tangent to the common tangent at the
    # rational one
    return PencilSpec(PLANE, 2, _point_vector(orbits, [rational_pos, *pts]), extra_conditions=1)


def _singular_cubics(orbits: OrbitStructure, rational_pos: int, pts: Sequence[int]) -> PencilSpec:
    mults = [0] * orbits.total_points
    mults[rational_pos] = 2
    for p in pts:
        mults[p] = 1
    return PencilSpec(PLANE, 3, tuple(mults))


def _singular_quintics(orbits: OrbitStructure, rational_pos: int, pts: Sequence[int]) -> PencilSpec:
    mults = [0] * orbits.total_points
    mults[rational_pos] = 1
    for p in pts:
        mults[p] = 2
    return PencilSpec(PLANE, 5, tuple(mults))


def search_pencils(model: str, orbits: OrbitStructure, n_max: int) -> list[PencilSpec]:
    """All pencil candidates with level <= n_max, orbit-constant multiplicities.

    Multiplicities range over 0..n_max+1, constant on each Galois orbit
    (invariance of the system forces that), with no extra conditions.  A
    spec is kept when dim_lower_bound >= 2, genus_upper_bound <= 0 and
    degree_to_base_spec == 2.  Output is sorted by (level, mults).
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    degree = model_degree(model)
    if degree is not None and orbits.total_points != degree:
        raise ValueError(
            f"degree-{degree} model expects {degree} points, got {orbits.total_points}")
    if degree is None and not 1 <= orbits.total_points <= 9:
        raise ValueError(f"plane configurations have 1..9 points, got {orbits.total_points}")

    weights = orbits.sizes
    cap = n_max + 1
    results = []
    for level in range(1, n_max + 1):
        # degree_to_base == 2 pins the weighted multiplicity sum
        target = (3 * level if degree is None else level * degree) - 2
        if target < 0:
            continue
        for per_orbit in _weighted_assignments(weights, target, cap):
            mults = _mult_vector(orbits, dict(enumerate(per_orbit)))
            spec = PencilSpec(model, level, mults)
            if dim_lower_bound(spec) >= 2 and genus_upper_bound(spec) <= 0:
                results.append(spec)
    results.sort(key=lambda s: (s.level, s.mults))
    return results


def _weighted_assignments(weights: Sequence[int], target: int, cap: int) -> Iterable[tuple[int, ...]]:
    # non-negative solutions of sum w_i * x_i == target with x_i <= cap
    if not weights:
        if target == 0:
            yield ()
        return
    head, tail = weights[0], weights[1:]
    tail_max = cap * sum(tail)
    for x in range(0, min(cap, target // head) + 1):
        rest = target - head * x
        if rest > tail_max:
            continue
        for others in _weighted_assignments(tail, rest, cap):
            yield (x, *others)
