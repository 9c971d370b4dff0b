import pytest

from irratio.bounds import (
    BoundsRow,
    bounds_table,
    decompose_dimension,
    dimension_range,
    format_table,
    log_bound_check,
    min_degree,
)

TABLE = [(4, 4), (9, 5), (18, 6), (35, 7), (68, 8), (133, 9), (262, 10), (519, 11), (1032, 12)]


def test_golden_table():
    rows = bounds_table(1032)
    assert [(r.dim_max, r.deg_min) for r in rows] == TABLE
    assert [r.n for r in rows] == list(range(2, 11))


def test_truncation():
    assert bounds_table(4) == [BoundsRow(4, 4, 2)]
    assert bounds_table(3) == [BoundsRow(3, 4, 2)]
    assert bounds_table(10)[-1] == BoundsRow(10, 6, 4)
    with pytest.raises(ValueError):
        bounds_table(2)


@pytest.mark.parametrize("N,expected", [(3, (2, 1)), (9, (3, 6)), (1032, (10, 1022)), (10, (4, 6))])
def test_decompose_examples(N, expected):
    assert decompose_dimension(N) == expected


@pytest.mark.parametrize("N,deg", [(4, 4), (5, 5), (19, 7), (1048576, 22)])
def test_min_degree_examples(N, deg):
    assert min_degree(N) == deg


def test_tiling_and_monotonicity():
    prev_hi = 2
    for n in range(2, 21):
        lo, hi = dimension_range(n)
        assert lo == prev_hi + 1
        prev_hi = hi
    last = 0
    for N in range(3, 10**6 + 1, 997):
        n, r = decompose_dimension(N)
        lo, hi = dimension_range(n)
        assert lo <= N <= hi and r >= 1 and n + r == N
        assert min_degree(N) >= last
        last = min_degree(N)


def test_log_bound():
    for N in range(3, 5000):
        lb = log_bound_check(N)
        assert lb.holds
        assert lb.bound == (N - 1).bit_length() + 2
    assert log_bound_check(8).tight and log_bound_check(8).real_holds
    assert not log_bound_check(3).real_holds
    assert log_bound_check(1048576).bound == 22


def test_errors():
    for fn in (decompose_dimension, min_degree, log_bound_check):
        with pytest.raises(ValueError):
            fn(2)


def test_format_table():
    text = format_table(bounds_table(9))
    assert text.splitlines()[0].split("|")[1].strip() == "<= 4"
    assert ">= 5" in text.splitlines()[1]
