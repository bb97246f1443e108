import random
from fractions import Fraction

import pytest

from pencilforge.heights import (
    KummerInputs,
    ReducibleFibreData,
    SectionIntersections,
    cartan_matrix,
    contribution,
    dynkin_type,
    enumerate_section_classes,
    height_pairing,
    invert_exact,
    kummer_bound,
    multiplication_pullback_degree,
)
from pencilforge.picard_lattice import (
    FIBRE,
    NumericalClass,
    arithmetic_genus,
    degree_to_base,
    exceptional,
    intersect,
)

# ---------------------------------------------------------------------------
# independent linear algebra: cofactor determinant and adjugate inverse

def det(M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * M[0][j] * det(minor)
    return total


def adjugate_inverse(M):
    n = len(M)
    d = det(M)
    assert d != 0
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [r[:i] + r[i + 1:] for k, r in enumerate(M) if k != j]
            row.append(Fraction((-1) ** (i + j) * det(minor), d))
        out.append(row)
    return out


def fibre_component_matrix(symbol):
    """Intersection matrix of non-identity components, built from the fibre
    geometry: components have self-intersection -2 and the listed adjacencies.
    Node order matches the documented indexing convention."""
    if symbol.startswith("I") and symbol not in ("II", "III", "IV", "II*", "III*", "IV*"):
        star = symbol.endswith("*")
        n = int(symbol.rstrip("*")[1:])
        if not star:
            # cycle of n nodes; drop the identity, keep the chain 1..n-1
            size = n - 1
            edges = [(i, i + 1) for i in range(1, size)]
            if n == 2:
                edges = []  # two components meeting twice: single leftover node
        else:
            # near leg (1), spine 2..n+2, far legs n+3 and n+4
            size = n + 4
            edges = [(1, 2)] + [(i, i + 1) for i in range(2, n + 2)] + [(n + 2, n + 3), (n + 2, n + 4)]
    elif symbol == "III":
        size, edges = 1, []
    elif symbol == "IV":
        size, edges = 2, [(1, 2)]
    else:
        # Bourbaki diagrams for E6, E7, E8
        size = {"IV*": 6, "III*": 7, "II*": 8}[symbol]
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        if size >= 7:
            edges.append((6, 7))
        if size == 8:
            edges.append((7, 8))
    M = [[-2 if i == j else 0 for j in range(size)] for i in range(size)]
    for a, b in edges:
        M[a - 1][b - 1] = 1
        M[b - 1][a - 1] = 1
    return M


# I_2 intersects twice along the cycle but the identity absorbs both points,
# so the single leftover component still has plain self-intersection -2.
ORACLE_SYMBOLS = (
    [f"I{n}" for n in range(2, 11)]
    + ["III", "IV"]
    + [f"I{n}*" for n in range(0, 6)]
    + ["IV*", "III*", "II*"]
)


@pytest.mark.parametrize("symbol", ORACLE_SYMBOLS)
def test_contributions_match_fresh_matrix_inversion(symbol):
    A = fibre_component_matrix(symbol)
    inverse = adjugate_inverse(A)
    size = len(A)
    data = ReducibleFibreData(symbol)
    assert data.component_count == size + 1
    for i in range(size + 1):
        assert contribution(data, 0, i) == 0
        assert contribution(data, i, 0) == 0
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            assert contribution(data, i, j) == -inverse[i - 1][j - 1]


@pytest.mark.parametrize("symbol,expected_det", [
    ("I5", 5), ("I9", 9), ("III", 2), ("IV", 3),
    ("I0*", 4), ("I3*", 4), ("IV*", 3), ("III*", 2), ("II*", 1),
])
def test_cartan_determinants(symbol, expected_det):
    # known determinants pin the Dynkin diagram shape
    letter, rank = dynkin_type(symbol)
    assert det([list(r) for r in cartan_matrix(letter, rank)]) == expected_det


def test_contribution_examples():
    assert contribution("I2", 1, 1) == Fraction(1, 2)
    assert contribution("I0*", 1, 1) == 1  # a reduced outer component
    assert contribution("I0*", 3, 3) == 1
    assert contribution("II*", 0, 5) == 0
    with pytest.raises(ValueError):
        contribution("I2", 1, 2)
    with pytest.raises(ValueError):
        contribution("IV", -1, 0)


def test_shipped_matrix_is_negative_cartan():
    data = ReducibleFibreData("IV")
    assert data.matrix == ((-2, 1), (1, -2))
    assert invert_exact(data.matrix) == (
        (Fraction(-2, 3), Fraction(-1, 3)),
        (Fraction(-1, 3), Fraction(-2, 3)),
    )


def test_invert_exact_rejects_singular():
    with pytest.raises(ValueError):
        invert_exact(((1, 1), (1, 1)))


def test_zero_section_height_vanishes():
    data = SectionIntersections(-1, -1, -1)
    assert height_pairing(data, chi=1) == 0


def test_disjoint_section_height_is_two():
    data = SectionIntersections(0, 0, -1)
    assert height_pairing(data, chi=1) == 2


def test_height_with_one_i2_correction():
    data = SectionIntersections(0, 0, -1, ((1, 1),))
    assert height_pairing(data, chi=1, fibres=["I2"]) == Fraction(3, 2)


def test_height_pairing_symmetry():
    rng = random.Random(41)
    symbols = ["I2", "I3", "I5", "IV", "I0*", "I1*", "IV*", "III*", "II*"]
    for _ in range(400):
        fibres = [rng.choice(symbols) for _ in range(rng.randint(0, 3))]
        comps, swapped = [], []
        for symbol in fibres:
            top = ReducibleFibreData(symbol).component_count - 1
            i, j = rng.randint(0, top), rng.randint(0, top)
            comps.append((i, j))
            swapped.append((j, i))
        po, qo, pq = rng.randint(0, 5), rng.randint(0, 5), rng.randint(-2, 5)
        chi = rng.randint(1, 3)
        lhs = height_pairing(SectionIntersections(po, qo, pq, tuple(comps)), chi, fibres)
        rhs = height_pairing(SectionIntersections(qo, po, pq, tuple(swapped)), chi, fibres)
        assert lhs == rhs


def test_height_pairing_validates_inputs():
    with pytest.raises(ValueError):
        height_pairing(SectionIntersections(0, 0, -1), chi=0)
    with pytest.raises(ValueError):
        height_pairing(SectionIntersections(0, 0, -1, ((1, 1),)), chi=1, fibres=[])


def test_enumerate_exceptional_classes_only_at_d_zero():
    classes = enumerate_section_classes(d_max=0)
    assert classes == [exceptional(j) for j in range(1, 10)]


def test_enumerate_d_max_two_census():
    classes = enumerate_section_classes(d_max=2)
    assert len(classes) == 171
    by_degree = {}
    for c in classes:
        assert intersect(c, c) == -1
        assert degree_to_base(c) == 1
        assert arithmetic_genus(c) == 0
        by_degree[c.d] = by_degree.get(c.d, 0) + 1
    assert by_degree == {0: 9, 1: 36, 2: 126}
    assert classes == sorted(classes, key=lambda c: (c.d, c.m))


def test_enumerate_constraints_pin_a_class():
    constraints = [(exceptional(1), -1)] + [(exceptional(j), 0) for j in range(2, 10)]
    assert enumerate_section_classes(constraints, d_max=2) == [exceptional(1)]


def test_constrained_enumeration_is_a_subset():
    everything = enumerate_section_classes(d_max=2)
    lines_meeting_e1 = enumerate_section_classes([(exceptional(1), 1)], d_max=2)
    assert set(lines_meeting_e1) <= set(everything)
    assert len(lines_meeting_e1) < len(everything)


def test_multiplication_pullback_degree():
    assert multiplication_pullback_degree(1) == 1
    assert multiplication_pullback_degree(2) == 4
    assert multiplication_pullback_degree(5) == 25
    values = [multiplication_pullback_degree(n) for n in range(1, 101)]
    assert values == sorted(set(values))
    with pytest.raises(ValueError):
        multiplication_pullback_degree(0)


def test_kummer_bound_examples():
    assert kummer_bound(KummerInputs(1, 1, 1, 1)) == 1
    assert kummer_bound(KummerInputs(2, 1, 1, 1)) == 4
    assert kummer_bound(KummerInputs(2, 1, 1, 2)) == 2


def test_kummer_bound_fractional_constants():
    # h/f1 = 9/2 -> 4; (h/c_e)^(1/alpha) = sqrt(6) -> 2
    assert kummer_bound(KummerInputs(3, Fraction(2, 3), Fraction(1, 2), 2)) == 8


def test_kummer_bound_monotone_in_h():
    inputs = [KummerInputs(h, Fraction(3, 2), Fraction(1, 2), Fraction(3, 2)) for h in range(1, 30)]
    bounds = [kummer_bound(i) for i in inputs]
    assert bounds == sorted(bounds)


def test_kummer_inputs_validation():
    with pytest.raises(ValueError):
        KummerInputs(0, 1, 1, 1)
    with pytest.raises(ValueError):
        KummerInputs(1, 0, 1, 1)
    with pytest.raises(ValueError):
        KummerInputs(1, 1, 1, Fraction(-1, 2))
    parsed = KummerInputs(2, "1/2", "3", 1)
    assert parsed.f1 == Fraction(1, 2) and parsed.c_e == 3
