import random

import pytest

from pencilforge.picard_lattice import (
    CANONICAL,
    FIBRE,
    LINE,
    NumericalClass,
    arithmetic_genus,
    degree_to_base,
    exceptional,
    intersect,
    mw_rank_bound,
    unirationality_check,
)


def random_class(rng, bound=9):
    return NumericalClass(rng.randint(-bound, bound),
                          tuple(rng.randint(-bound, bound) for _ in range(9)))


def test_two_lines_meet_once():
    a = NumericalClass(1, (1, 0, 0, 0, 0, 0, 0, 0, 0))
    b = NumericalClass(1, (0, 1, 0, 0, 0, 0, 0, 0, 0))
    assert intersect(a, b) == 1


def test_canonical_class_squares_to_zero():
    assert intersect(CANONICAL, CANONICAL) == 0
    assert intersect(FIBRE, FIBRE) == 0
    assert FIBRE == -CANONICAL


def test_degree_five_conic_class_meets_fibre_twice():
    c = NumericalClass(6, (2, 2, 2, 2, 4, 1, 1, 1, 1))
    assert intersect(c, FIBRE) == 2


def test_genus_of_line_and_cubic():
    assert arithmetic_genus(NumericalClass(1, (1, 0, 0, 0, 0, 0, 0, 0, 0))) == 0
    assert arithmetic_genus(NumericalClass(3, (1,) * 9)) == 1


def test_genus_of_degree_five_conic_class():
    assert arithmetic_genus(NumericalClass(6, (2, 2, 2, 2, 4, 1, 1, 1, 1))) == 0


def test_degree_to_base_examples():
    assert degree_to_base(NumericalClass(1, (1, 0, 0, 0, 0, 0, 0, 0, 0))) == 2
    for j in range(1, 10):
        assert degree_to_base(exceptional(j)) == 1
    assert degree_to_base(NumericalClass(17, (1, 6, 6, 6, 6, 6, 6, 6, 6))) == 2


def test_intersect_symmetric_and_bilinear():
    rng = random.Random(11)
    for _ in range(300):
        a, b, c = (random_class(rng) for _ in range(3))
        assert intersect(a, b) == intersect(b, a)
        assert intersect(a + b, c) == intersect(a, c) + intersect(b, c)
        s = rng.randint(-4, 4)
        assert intersect(s * a, b) == s * intersect(a, b)


def test_genus_of_minus_one_degree_one_classes():
    # any class with a.a = -1 and a.K = -1 has genus zero
    rng = random.Random(23)
    seen = 0
    for _ in range(5000):
        a = random_class(rng, bound=3)
        if intersect(a, a) == -1 and intersect(a, CANONICAL) == -1:
            assert arithmetic_genus(a) == 0
            seen += 1
    assert seen > 0


def test_degree_to_base_is_additive():
    rng = random.Random(37)
    for _ in range(200):
        a, b = random_class(rng), random_class(rng)
        assert degree_to_base(a + b) == degree_to_base(a) + degree_to_base(b)


def test_exceptional_classes():
    e1 = exceptional(1)
    assert e1.to_list() == [0, -1, 0, 0, 0, 0, 0, 0, 0, 0]
    assert intersect(e1, e1) == -1
    with pytest.raises(ValueError):
        exceptional(0)
    with pytest.raises(ValueError):
        exceptional(10)


def test_class_arithmetic_and_serialization():
    a = NumericalClass(2, (1, 1, 1, 1, 1, 0, 0, 0, 0))
    assert NumericalClass.from_list(a.to_list()) == a
    assert (a - a).to_list() == [0] * 10
    assert (2 * a).d == 4
    assert (-a).m[0] == -1
    with pytest.raises(ValueError):
        NumericalClass(1, (0, 0))
    with pytest.raises(ValueError):
        NumericalClass.from_list([1, 2, 3])


def test_mw_rank_bound():
    assert mw_rank_bound(9) == 8
    assert mw_rank_bound(1) == 0
    assert mw_rank_bound(4) == 3
    for bad in (0, 10, -3):
        with pytest.raises(ValueError):
            mw_rank_bound(bad)


def test_unirationality_threshold():
    assert unirationality_check(5) is True
    assert unirationality_check(4) is False
    assert unirationality_check(10) is True
    for bad in (0, 11):
        with pytest.raises(ValueError):
            unirationality_check(bad)
