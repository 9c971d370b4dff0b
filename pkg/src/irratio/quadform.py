"""Diagonal quadratic forms over k(P^n) as lists of square classes.

Covers the Pfister form psi = <<a1, ..., an>>, the form q = <b, c1/x0^d1, ...>,
the bijection rho that orders the monomials c_eps, entrywise similarity and
subform witnesses, the t -> 0 isotropy test, and a finite-field oracle layer
that specializes forms at points of P^n(F_p).

Isometry and subform tests here are entrywise: a scaling ``lam`` is accepted
when ``lam * entries`` matches the target entries as a multiset of square
classes.  That criterion is sufficient, not necessary.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .poly import HomogPoly
from .squareclass import SquareClass, b_class, monomial_class, multiply, trivial


@dataclass(frozen=True)
class DiagonalForm:
    n: int
    entries: tuple[SquareClass, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("a diagonal form needs rank >= 1")
        if any(e.n != self.n for e in self.entries):
            raise ValueError("form entries must share the ambient dimension")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def scaled(self, lam: SquareClass) -> DiagonalForm:
        return DiagonalForm(self.n, tuple(multiply(lam, e) for e in self.entries))

    def label(self) -> str:
        return "<" + ", ".join(e.label() for e in self.entries) + ">"


# -- rho ------------------------------------------------------------------------


Eps = tuple[int, ...]


def graded_lex(n: int) -> list[Eps]:
    """All eps in {0,1}^n by number of ones, then with x1 before x2 before ..."""
    return sorted(itertools.product((0, 1), repeat=n), key=lambda e: (sum(e), [-x for x in e]))


@dataclass(frozen=True)
class RhoMap:
    """Bijection {0, ..., 2^n - 1} -> {0,1}^n with rho(0) = 0."""

    n: int
    table: tuple[Eps, ...]

    def __post_init__(self):
        if len(self.table) != 2**self.n or set(self.table) != set(itertools.product((0, 1), repeat=self.n)):
            raise ValueError("rho must be a bijection onto {0,1}^n")
        if any(self.table[0]):
            raise ValueError("rho(0) must be the zero vector so that c_0 = 1")

    def __getitem__(self, i: int) -> Eps:
        return self.table[i]

    def index_of(self, eps: Sequence[int]) -> int:
        return self.table.index(tuple(eps))

    def to_list(self) -> list[list[int]]:
        return [list(e) for e in self.table]

    @classmethod
    def from_list(cls, n: int, table: Iterable[Sequence[int]]) -> RhoMap:
        return cls(n, tuple(tuple(int(x) for x in e) for e in table))


def choose_rho(n: int, pins: Sequence[tuple[int, Sequence[int]]] = ()) -> RhoMap:
    """Bijection honouring ``pins`` (index -> eps); free slots in graded-lex order."""
    table: dict[int, Eps] = {0: (0,) * n}
    for idx, eps in pins:
        eps = tuple(int(x) for x in eps)
        if len(eps) != n or not 0 <= idx < 2**n:
            raise ValueError(f"pin ({idx}, {eps}) out of range for n={n}")
        if idx == 0:
            if any(eps):
                raise ValueError("index 0 is reserved for the zero vector")
            continue
        if not any(eps):
            raise ValueError("the zero vector is reserved for index 0")
        if idx in table and table[idx] != eps:
            raise ValueError(f"conflicting pins for index {idx}")
        if eps in table.values() and table.get(idx) != eps:
            raise ValueError(f"eps {eps} pinned to two indices")
        table[idx] = eps
    free = iter(e for e in graded_lex(n) if e not in table.values())
    full = tuple(table[i] if i in table else next(free) for i in range(2**n))
    return RhoMap(n, full)


def c_class(n: int, eps: Sequence[int]) -> SquareClass:
    """Class of c_eps / x0^deg(c_eps) with c_eps = prod x_i^eps_i."""
    return monomial_class(n, (0, *eps), x0_shift=sum(eps))


def pfister_form(n: int, rho: RhoMap) -> DiagonalForm:
    if rho.n != n:
        raise ValueError("rho built for a different n")
    return DiagonalForm(n, tuple(c_class(n, rho[i]) for i in range(2**n)))


def q_form(n: int, r: int, b: SquareClass, rho: RhoMap) -> DiagonalForm:
    if not 1 <= r <= 2**n - 2:
        raise ValueError(f"r must satisfy 1 <= r <= 2^n - 2 = {2**n - 2}")
    if not b.b:
        raise ValueError("the first entry of q must carry b")
    if rho.n != n:
        raise ValueError("rho built for a different n")
    return DiagonalForm(n, (b, *(c_class(n, rho[i]) for i in range(1, r + 2))))


# -- entrywise similarity -----------------------------------------------------------


def _matches(scaled: Iterable[SquareClass], target: Iterable[SquareClass], subset: bool) -> bool:
    have, want = Counter(scaled), Counter(target)
    if subset:
        return all(want[k] >= v for k, v in have.items())
    return have == want


def is_scaled_isometric(a: DiagonalForm, b: DiagonalForm, mu: SquareClass) -> bool:
    """a = mu * b entrywise (as multisets)."""
    return a.rank == b.rank and _matches(b.scaled(mu).entries, a.entries, subset=False)


def is_scaled_subform(sub: DiagonalForm, ambient: DiagonalForm, lam: SquareClass) -> bool:
    """lam * sub injects into ambient entrywise (as multisets)."""
    return sub.rank <= ambient.rank and _matches(sub.scaled(lam).entries, ambient.entries, subset=True)


def find_scaling_isometry(a: DiagonalForm, b: DiagonalForm) -> SquareClass | None:
    """mu with a = mu * b entrywise, or None.

    If such mu exists it maps some entry of b onto a's first entry, so trying
    ``a[0] / b[j]`` for all j is complete for the entrywise criterion.
    """
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    if a.n != b.n:
        raise ValueError("dimension mismatch")
    for entry in b.entries:
        mu = multiply(a.entries[0], entry)
        if is_scaled_isometric(a, b, mu):
            return mu
    return None


def find_scaling_subform(
    sub: DiagonalForm, ambient: DiagonalForm, prefer: Sequence[SquareClass] = ()
) -> SquareClass | None:
    """lam with lam * sub contained in ambient entrywise, or None.

    The witness is rarely unique (any lam in a coset works); candidates in
    ``prefer`` are tried first so callers can ask for a specific one.
    """
    if sub.rank > ambient.rank:
        raise ValueError("subform rank exceeds the ambient rank")
    if sub.n != ambient.n:
        raise ValueError("dimension mismatch")
    candidates = list(prefer) + [multiply(a, sub.entries[0]) for a in ambient.entries]
    for lam in candidates:
        if is_scaled_subform(sub, ambient, lam):
            return lam
    return None


def t0_isotropy_check(q: DiagonalForm, g0_class: SquareClass) -> bool:
    """Whether q degenerates to an isotropic form as g degenerates.

    ``g0_class`` is the class of the degenerate g over x0^deg(g).  When it
    equals q's second entry c1/x0^d1, the specialized form contains the
    hyperbolic plane <c, -c> (= <c, c> as -1 is a square).
    """
    if not q.entries[0].b:
        raise ValueError("q has no b entry")
    if q.rank < 2:
        return False
    return g0_class == q.entries[1]


def conic_scaling(n: int) -> DiagonalForm:
    """<b * x2...xn / x0^(n-1), x1/x0, 1>."""
    tail = (0, 0) + (1,) * (n - 1)
    return DiagonalForm(
        n,
        (
            multiply(b_class(n), monomial_class(n, tail, x0_shift=n - 1)),
            monomial_class(n, (0, 1) + (0,) * (n - 1), x0_shift=1),
            trivial(n),
        ),
    )


def conic_similarity_witness(n: int, rho: RhoMap) -> SquareClass | None:
    if n < 2:
        raise ValueError("the conic construction needs n >= 2")
    q = q_form(n, 1, b_class(n), rho)
    return find_scaling_isometry(q, conic_scaling(n))


def conic_rho(n: int) -> RhoMap:
    """rho with c1 = x1 x2 ... xn and c2 = x2 ... xn."""
    return choose_rho(n, [(1, (1,) * n), (2, (0,) + (1,) * (n - 1))])


def conic_similarity_check(n: int, rho: RhoMap | None = None) -> bool:
    return conic_similarity_witness(n, rho if rho is not None else conic_rho(n)) is not None


# -- finite-field oracle layer ---------------------------------------------------------


def legendre(a: int, p: int) -> int:
    """1 for nonzero squares, -1 for non-squares, 0 for 0 (Euler's criterion)."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class FiniteFieldForm:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0:
            raise ValueError("p must be an odd prime")
        if any(c % self.p == 0 for c in self.coeffs):
            raise ValueError("regular forms have nonzero coefficients")

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def discriminant(self) -> int:
        d = 1
        for c in self.coeffs:
            d = d * c % self.p
        return d

    def scaled(self, lam: int) -> FiniteFieldForm:
        return FiniteFieldForm(self.p, tuple(c * lam % self.p for c in self.coeffs))


class RejectedPoint(ValueError):
    """A sample point lies on a coordinate hyperplane or an entry's zero locus."""


def specialize_form(entries: Sequence[HomogPoly], point: Sequence[int], p: int) -> FiniteFieldForm:
    """Evaluate polynomial entries at ``point`` (one value per ring variable)."""
    values = []
    for f in entries:
        v = f.evaluate_mod(p, point)
        if v == 0:
            raise RejectedPoint(f"{f.to_text()} vanishes at {tuple(point)}")
        values.append(v)
    return FiniteFieldForm(p, tuple(values))


def ff_forms_equivalent(a: FiniteFieldForm, b: FiniteFieldForm) -> bool:
    """Regular forms over F_p are classified by rank and discriminant class."""
    if a.p != b.p:
        raise ValueError("modulus mismatch")
    return a.rank == b.rank and legendre(a.discriminant(), a.p) == legendre(b.discriminant(), b.p)


def ff_isotropic(a: FiniteFieldForm, budget: int = 10**7) -> bool:
    """Exhaustive search for a nonzero zero of ``a``."""
    if a.p**a.rank > budget:
        raise ValueError(f"search space {a.p}^{a.rank} exceeds the budget {budget}")
    squares = [x * x % a.p for x in range(a.p)]
    for v in itertools.product(range(a.p), repeat=a.rank):
        if any(v) and sum(c * squares[x] for c, x in zip(a.coeffs, v)) % a.p == 0:
            return True
    return False


def sample_points(
    nvars: int,
    p: int,
    count: int,
    seed: int,
    accept=lambda pt: True,
    max_tries: int | None = None,
) -> list[tuple[int, ...]]:
    """Rejection-sample points with all coordinates nonzero mod p.

    ``accept`` may veto a candidate (e.g. when an entry vanishes there).
    """
    rng = random.Random(seed)
    out: list[tuple[int, ...]] = []
    tries = 0
    limit = max_tries if max_tries is not None else 100 * count + 1000
    while len(out) < count:
        tries += 1
        if tries > limit:
            raise RuntimeError(f"only {len(out)} of {count} points accepted after {limit} draws")
        pt = tuple(rng.randrange(1, p) for _ in range(nvars))
        if accept(pt):
            out.append(pt)
    return out
