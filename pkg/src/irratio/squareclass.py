"""Square classes of k(P^n) generated by coordinates, b and t.

A class is stored as a GF(2) exponent vector over x0..xn plus two flag
bits for the opaque generators ``b = g / x0^deg(g)`` and the parameter
``t``.  The base field is assumed to contain a square root of -1, so signs
never appear: ``-a`` and ``a`` share a class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class SquareClass:
    """Element of K*/(K*)^2 for K = k(x0, ..., xn).

    Only the subgroup generated by the coordinate ratios, ``b`` and ``t``
    is representable.  The exponent vector always has even weight: every
    element of K* is a ratio of forms of equal degree, and ``b`` is itself
    of degree 0.
    """

    n: int
    exps: tuple[int, ...]
    b: int = 0
    t: int = 0

    def __post_init__(self):
        if len(self.exps) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} exponents, got {len(self.exps)}")
        if any(e not in (0, 1) for e in self.exps) or self.b not in (0, 1) or self.t not in (0, 1):
            raise ValueError("square class entries must be bits")
        if sum(self.exps) % 2:
            raise ValueError(f"odd-weight exponent vector {self.exps} is not a degree-0 class")

    def __mul__(self, other: SquareClass) -> SquareClass:
        return multiply(self, other)

    @property
    def is_trivial(self) -> bool:
        return not any(self.exps) and not self.b and not self.t

    def label(self) -> str:
        """Human readable form, e.g. ``b*x1*x2`` (x0 powers are implied)."""
        parts = []
        if self.b:
            parts.append("b")
        if self.t:
            parts.append("t")
        parts.extend(f"x{i}" for i, e in enumerate(self.exps) if e)
        return "*".join(parts) if parts else "1"

    @classmethod
    def from_label(cls, n: int, label: str) -> SquareClass:
        """Inverse of :meth:`label` for a known ambient dimension."""
        exps = [0] * (n + 1)
        b = t = 0
        for part in label.split("*"):
            part = part.strip()
            if part == "1":
                continue
            if part == "b":
                b ^= 1
            elif part == "t":
                t ^= 1
            elif part.startswith("x") and part[1:].isdigit() and int(part[1:]) <= n:
                exps[int(part[1:])] ^= 1
            else:
                raise ValueError(f"bad square class label {label!r}")
        return cls(n, tuple(exps), b, t)

    def to_dict(self) -> dict:
        return {"n": self.n, "class": self.label()}

    @classmethod
    def from_dict(cls, data: dict) -> SquareClass:
        return cls.from_label(int(data["n"]), data["class"])


def trivial(n: int) -> SquareClass:
    return SquareClass(n, (0,) * (n + 1))


def b_class(n: int) -> SquareClass:
    return SquareClass(n, (0,) * (n + 1), b=1)


def t_class(n: int) -> SquareClass:
    return SquareClass(n, (0,) * (n + 1), t=1)


def monomial_class(n: int, exps: Sequence[int], x0_shift: int = 0) -> SquareClass:
    """Class of ``prod x_i^exps[i] / x0^x0_shift`` (sign-free).

    The caller supplies the x0 power that makes the quotient degree 0; a
    mismatch surfaces as an odd-weight error.
    """
    if len(exps) != n + 1:
        raise ValueError(f"expected {n + 1} exponents, got {len(exps)}")
    bits = [e % 2 for e in exps]
    bits[0] = (bits[0] + x0_shift) % 2
    return SquareClass(n, tuple(bits))


def class_of_coordinate_ratio(i: int, j: int, n: int) -> SquareClass:
    """Class of ``x_i / x_j``; with j = 0 this is the class of ``-x_i/x0``."""
    for idx in (i, j):
        if not 0 <= idx <= n:
            raise IndexError(f"coordinate index {idx} outside 0..{n}")
    if i == j:
        raise ValueError("x_i/x_i is the trivial class; refusing i == j")
    exps = [0] * (n + 1)
    exps[i] = exps[j] = 1
    return SquareClass(n, tuple(exps))


def multiply(a: SquareClass, b: SquareClass) -> SquareClass:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    return SquareClass(
        a.n,
        tuple(x ^ y for x, y in zip(a.exps, b.exps)),
        a.b ^ b.b,
        a.t ^ b.t,
    )


def product(classes: Iterable[SquareClass], n: int) -> SquareClass:
    out = trivial(n)
    for c in classes:
        out = multiply(out, c)
    return out


def valuation_parity(a: SquareClass, i: int) -> int:
    """Parity of the valuation of ``a`` along the divisor {x_i = 0}, i >= 1.

    ``b`` and ``t`` are units there: g contains every pure power x_i^deg(g),
    so it does not vanish identically on a coordinate hyperplane.
    """
    if not 1 <= i <= a.n:
        raise IndexError(f"coordinate divisor index {i} outside 1..{a.n}")
    return a.exps[i]


def reduce_along(a: SquareClass, i: int, *, b_square_mod_coords: bool = True) -> SquareClass:
    """Image of the unit ``a`` in the residue field k({x_i = 0}) = k(P^{n-1}).

    Coordinate i is deleted and the remaining ones keep their order.  The
    image of ``b`` is a square because g is a square modulo every x_i; pass
    ``b_square_mod_coords=False`` when that fails and the reduction of a
    b-carrying class is refused.
    """
    if valuation_parity(a, i):
        raise ValueError(f"{a.label()} has odd valuation along x{i}; divide by the uniformizer first")
    if a.b and not b_square_mod_coords:
        raise ValueError("b does not reduce to a square: g is not a square modulo the coordinates")
    exps = a.exps[:i] + a.exps[i + 1:]
    return SquareClass(a.n - 1, exps, 0, a.t)
