"""Dimension/degree numerology for very general hypersurfaces.

A dimension N >= 3 is written N = n + r with 2^(n-1) - 2 <= r <= 2^n - 2
(and r >= 1); degree d >= n + 2 then suffices for stable irrationality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True)
class BoundsRow:
    dim_max: int
    deg_min: int
    n: int


def dimension_range(n: int) -> tuple[int, int]:
    """Dimensions N handled by a given n: [n + max(1, 2^(n-1) - 2), n + 2^n - 2]."""
    if n < 2:
        raise ValueError("n >= 2")
    return n + max(1, 2 ** (n - 1) - 2), n + 2**n - 2


def decompose_dimension(N: int) -> tuple[int, int]:
    """The unique (n, r) with N = n + r in range."""
    if N < 3:
        raise ValueError("N >= 3 required")
    n = 2
    while dimension_range(n)[1] < N:
        n += 1
    lo, hi = dimension_range(n)
    assert lo <= N <= hi, (N, n)
    return n, N - n


def min_degree(N: int) -> int:
    return decompose_dimension(N)[0] + 2


def bounds_table(max_dim: int) -> list[BoundsRow]:
    """One row per n up to the first range reaching ``max_dim``; the last
    row's dimension is clipped to ``max_dim``."""
    if max_dim < 3:
        raise ValueError("max_dim >= 3 required")
    rows = []
    n = 2
    while True:
        hi = dimension_range(n)[1]
        rows.append(BoundsRow(min(hi, max_dim), n + 2, n))
        if hi >= max_dim:
            return rows
        n += 1


class LogBound(NamedTuple):
    bound: int        # ceil(log2 N) + 2
    tight: bool       # min_degree(N) == bound
    holds: bool       # min_degree(N) <= bound
    real_holds: bool  # n <= log2 N read over the reals


def log_bound_check(N: int) -> LogBound:
    """Compare min_degree(N) with the logarithmic bound.

    Degrees are integers, so ``d >= log2(N) + 2`` means ``d >= ceil(log2 N) + 2``;
    that integer form always holds.  The real-valued ``n <= log2 N`` is
    reported separately because it fails for some small N (e.g. N = 3, 5).
    """
    if N < 3:
        raise ValueError("N >= 3 required")
    n = decompose_dimension(N)[0]
    ceil_log = (N - 1).bit_length()
    bound = ceil_log + 2
    return LogBound(bound, n + 2 == bound, n + 2 <= bound, 2**n <= N)


def format_table(rows: list[BoundsRow]) -> str:
    dims = ["dim(X)"] + [f"<= {r.dim_max}" for r in rows]
    degs = ["deg(X)"] + [f">= {r.deg_min}" for r in rows]
    widths = [max(len(a), len(b)) for a, b in zip(dims, degs)]
    line = lambda cells: " | ".join(c.rjust(w) for c, w in zip(cells, widths))
    return line(dims) + "\n" + line(degs)
