import random

import pytest

from pencilforge.cremona import (
    is_connected_class,
    quadratic_transform,
    reduce_to_line,
)
from pencilforge.picard_lattice import (
    CANONICAL,
    FIBRE,
    NumericalClass,
    arithmetic_genus,
    degree_to_base,
    intersect,
)

GOLDEN_START = NumericalClass(6, (2, 2, 2, 2, 4, 1, 1, 1, 1))

# the worked chain for the degree-five conic class
GOLDEN_CHAIN = [
    ((1, 2, 5), NumericalClass(4, (0, 0, 2, 2, 2, 1, 1, 1, 1))),
    ((3, 4, 5), NumericalClass(2, (0, 0, 0, 0, 0, 1, 1, 1, 1))),
    ((6, 7, 8), NumericalClass(1, (0, 0, 0, 0, 0, 0, 0, 0, 1))),
]


def random_class(rng, bound=9):
    return NumericalClass(rng.randint(-bound, bound),
                          tuple(rng.randint(-bound, bound) for _ in range(9)))


def random_triple(rng):
    return tuple(sorted(rng.sample(range(1, 10), 3)))


def test_golden_transform_steps():
    current = GOLDEN_START
    for indices, expected in GOLDEN_CHAIN:
        current = quadratic_transform(current, *indices)
        assert current == expected


def test_transform_rejects_bad_indices():
    with pytest.raises(ValueError):
        quadratic_transform(GOLDEN_START, 1, 1, 2)
    with pytest.raises(ValueError):
        quadratic_transform(GOLDEN_START, 0, 1, 2)
    with pytest.raises(ValueError):
        quadratic_transform(GOLDEN_START, 7, 8, 10)


def test_transform_is_an_involution():
    rng = random.Random(5)
    for _ in range(500):
        a = random_class(rng)
        i, j, k = random_triple(rng)
        assert quadratic_transform(quadratic_transform(a, i, j, k), i, j, k) == a


def test_transform_preserves_intersections_genus_degree():
    rng = random.Random(7)
    for _ in range(500):
        a, b = random_class(rng), random_class(rng)
        i, j, k = random_triple(rng)
        ta = quadratic_transform(a, i, j, k)
        tb = quadratic_transform(b, i, j, k)
        assert intersect(ta, tb) == intersect(a, b)
        assert arithmetic_genus(ta) == arithmetic_genus(a)
        assert degree_to_base(ta) == degree_to_base(a)


def test_transform_fixes_canonical_and_fibre():
    rng = random.Random(9)
    for _ in range(50):
        i, j, k = random_triple(rng)
        assert quadratic_transform(CANONICAL, i, j, k) == CANONICAL
        assert quadratic_transform(FIBRE, i, j, k) == FIBRE


def test_golden_chain_certificate():
    cert = reduce_to_line(GOLDEN_START)
    assert cert.success
    assert len(cert.chain) == 3
    assert [s.indices for s in cert.chain] == [ix for ix, _ in GOLDEN_CHAIN]
    assert [s.after for s in cert.chain] == [cls for _, cls in GOLDEN_CHAIN]
    assert cert.terminal == NumericalClass(1, (0, 0, 0, 0, 0, 0, 0, 0, 1))


def test_certificates_replay():
    rng = random.Random(13)
    classes = [GOLDEN_START] + [random_class(rng, bound=5) for _ in range(100)]
    for a in classes:
        cert = reduce_to_line(a)
        current = a
        for step in cert.chain:
            assert step.before == current
            assert quadratic_transform(current, *step.indices) == step.after
            current = step.after
        assert cert.terminal == current
        if cert.success:
            assert cert.terminal.d == 1


def test_already_terminal_class():
    line = NumericalClass(1, (1, 0, 0, 0, 0, 0, 0, 0, 0))
    cert = reduce_to_line(line)
    assert cert.success and cert.chain == () and cert.terminal == line


def test_conic_through_five_points_reduces_in_one_step():
    # the section class (2; 1,1,1,1,1) lands on a line class after one step
    cert = reduce_to_line(NumericalClass(2, (1, 1, 1, 1, 1, 0, 0, 0, 0)))
    assert cert.success
    assert len(cert.chain) == 1
    assert cert.chain[0].indices == (1, 2, 3)
    assert cert.terminal.d == 1


def test_connectedness_examples():
    assert is_connected_class(GOLDEN_START)
    assert is_connected_class(NumericalClass(1, (1, 0, 0, 0, 0, 0, 0, 0, 0)))


def test_adding_a_fibre_defeats_the_greedy_certificate():
    # appending a fibre raises the arithmetic genus to two, and Cremona
    # transformations preserve genus while line classes have genus <= 0, so
    # no reduction to a line can exist: the certificate must fail
    summed = GOLDEN_START + FIBRE
    assert summed == NumericalClass(9, (3, 3, 3, 3, 5, 2, 2, 2, 2))
    assert arithmetic_genus(summed) == 2
    cert = reduce_to_line(summed)
    assert not cert.success
    assert not is_connected_class(summed)
    # the greedy walk sticks where no triple of multiplicities exceeds d
    assert cert.terminal == NumericalClass(4, (1, 1, 1, 1, 1, 1, 1, 1, 2))


def test_max_steps_budget():
    cert = reduce_to_line(GOLDEN_START, max_steps=2)
    assert not cert.success and len(cert.chain) == 2
    cert = reduce_to_line(GOLDEN_START, max_steps=3)
    assert cert.success
    with pytest.raises(ValueError):
        reduce_to_line(GOLDEN_START, max_steps=-1)


def test_max_steps_env_override(monkeypatch):
    monkeypatch.setenv("PENCILFORGE_MAX_STEPS", "2")
    assert not reduce_to_line(GOLDEN_START).success
    monkeypatch.setenv("PENCILFORGE_MAX_STEPS", "sixty")
    with pytest.raises(ValueError):
        reduce_to_line(GOLDEN_START)


def test_divergent_class_terminates_by_budget():
    # top multiplicities never exceed d once it goes negative, or the degree
    # plummets without passing through one; either way the reducer halts
    cert = reduce_to_line(NumericalClass(2, (2, 2, 2, 0, 0, 0, 0, 0, 0)))
    assert not cert.success
