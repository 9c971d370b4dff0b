import random

import pytest
from hypothesis import given, strategies as st

from irratio.squareclass import (
    SquareClass,
    b_class,
    class_of_coordinate_ratio,
    monomial_class,
    multiply,
    product,
    reduce_along,
    t_class,
    trivial,
    valuation_parity,
)


def random_class(rng, n):
    exps = [rng.randint(0, 1) for _ in range(n + 1)]
    exps[0] = sum(exps[1:]) % 2
    return SquareClass(n, tuple(exps), rng.randint(0, 1), rng.randint(0, 1))


@st.composite
def classes(draw, n=4):
    bits = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    return SquareClass(n, (sum(bits) % 2, *bits), draw(st.integers(0, 1)), draw(st.integers(0, 1)))


def test_group_axioms_random_trials():
    rng = random.Random(7)
    for _ in range(10_000):
        n = rng.randint(1, 6)
        a, b, c = (random_class(rng, n) for _ in range(3))
        e = trivial(n)
        assert a * e == a
        assert a * a == e
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


@given(classes(), classes())
def test_reduce_along_is_a_homomorphism(a, b):
    for i in range(1, a.n + 1):
        if valuation_parity(a, i) or valuation_parity(b, i):
            continue
        assert reduce_along(a * b, i) == reduce_along(a, i) * reduce_along(b, i)


def test_coordinate_ratio_examples():
    assert class_of_coordinate_ratio(1, 0, 2).label() == "x0*x1"
    assert class_of_coordinate_ratio(2, 1, 3).exps == (0, 1, 1, 0)
    with pytest.raises(IndexError):
        class_of_coordinate_ratio(3, 0, 2)
    with pytest.raises(ValueError):
        class_of_coordinate_ratio(1, 1, 2)


def test_odd_weight_is_rejected():
    with pytest.raises(ValueError):
        SquareClass(2, (1, 0, 0))
    with pytest.raises(ValueError):
        SquareClass(2, (2, 0, 0))


def test_monomial_class_uses_x0_shift():
    assert monomial_class(2, (0, 1, 0), x0_shift=1) == class_of_coordinate_ratio(1, 0, 2)
    assert monomial_class(2, (0, 2, 2), x0_shift=4).is_trivial


def test_labels_round_trip():
    rng = random.Random(3)
    for _ in range(500):
        n = rng.randint(1, 5)
        a = random_class(rng, n)
        assert SquareClass.from_label(n, a.label()) == a
        assert SquareClass.from_dict(a.to_dict()) == a
    with pytest.raises(ValueError):
        SquareClass.from_label(2, "x7")


def test_reduction_deletes_the_coordinate_and_kills_b():
    a = product([b_class(3), t_class(3), class_of_coordinate_ratio(1, 2, 3)], 3)
    r = reduce_along(a, 3)
    assert r == SquareClass(2, (0, 1, 1), 0, 1)
    with pytest.raises(ValueError):
        reduce_along(a, 1)
    with pytest.raises(ValueError):
        reduce_along(b_class(3), 2, b_square_mod_coords=False)
    with pytest.raises(IndexError):
        valuation_parity(a, 0)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        multiply(trivial(2), trivial(3))
