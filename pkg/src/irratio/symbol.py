"""Mod-2 symbols (a1, ..., ai) in H^i(K, Z/2) and their residues.

A :class:`Symbol` is a formal GF(2)-sum of sorted tuples of square classes.
The normal form is sound but not complete: it drops tuples containing the
trivial class or a repeated class (``(a, a) = (a, -1) = 0`` once -1 is a
square) and cancels equal tuples in pairs, but never expands entries
multiplicatively.  A symbol that normalizes to zero may therefore still be
nonzero; a symbol with a nonzero iterated residue is certainly nonzero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .squareclass import (
    SquareClass,
    class_of_coordinate_ratio,
    product,
    reduce_along,
    valuation_parity,
)

Term = tuple[SquareClass, ...]


def _normalize_term(entries: Sequence[SquareClass]) -> Term | None:
    if any(e.is_trivial for e in entries):
        return None
    term = tuple(sorted(entries))
    if any(x == y for x, y in zip(term, term[1:])):
        return None
    return term


@dataclass(frozen=True)
class Symbol:
    n: int
    degree: int
    terms: frozenset[Term] = field(default_factory=frozenset)

    @classmethod
    def from_terms(cls, n: int, degree: int, raw: Iterable[Sequence[SquareClass]]) -> Symbol:
        acc: set[Term] = set()
        for entries in raw:
            if len(entries) != degree:
                raise ValueError(f"term of length {len(entries)} in a degree-{degree} symbol")
            if any(e.n != n for e in entries):
                raise ValueError("symbol entries must share the ambient dimension")
            term = _normalize_term(entries)
            if term is not None:
                acc ^= {term}
        return cls(n, degree, frozenset(acc))

    def __add__(self, other: Symbol) -> Symbol:
        if (self.n, self.degree) != (other.n, other.degree):
            raise ValueError("cannot add symbols of different dimension or degree")
        return Symbol(self.n, self.degree, self.terms ^ other.terms)

    @property
    def is_zero_form(self) -> bool:
        """True when the normal form is empty (which does *not* prove vanishing)."""
        return not self.terms

    def sorted_terms(self) -> list[Term]:
        return sorted(self.terms)

    def label(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join("(" + ", ".join(e.label() for e in t) + ")" for t in self.sorted_terms())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "terms": [[e.label() for e in t] for t in self.sorted_terms()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> Symbol:
        n = int(data["n"])
        raw = [[SquareClass.from_label(n, e) for e in t] for t in data["terms"]]
        return cls.from_terms(n, int(data["degree"]), raw)


def make_symbol(entries: Sequence[SquareClass]) -> Symbol:
    if not entries:
        raise ValueError("use zero_symbol/one_symbol for degree 0")
    n = entries[0].n
    return Symbol.from_terms(n, len(entries), [entries])


def one_symbol(n: int) -> Symbol:
    """The nonzero element of H^0 = Z/2."""
    return Symbol(n, 0, frozenset({()}))


def _residue_term(term: Term, i: int, b_square_mod_coords: bool) -> list[Term]:
    n = term[0].n
    uniformizer = class_of_coordinate_ratio(i, 0, n)
    ramified, units = [], []
    for e in term:
        if valuation_parity(e, i):
            ramified.append(e * uniformizer)
        else:
            units.append(e)
    m = len(ramified)
    if m == 0:
        return []
    reduce = lambda e: reduce_along(e, i, b_square_mod_coords=b_square_mod_coords)
    tail = [reduce(e) for e in units]
    head = [reduce(e) for e in ramified]
    if m == 1:
        return [tuple(tail)]
    return [tuple(head[:j] + head[j + 1:] + tail) for j in range(m)]


def residue(s: Symbol, i: int, *, b_square_mod_coords: bool = True) -> Symbol:
    """Residue of ``s`` along the coordinate divisor {x_i = 0}, i >= 1.

    Each tuple is split into entries of odd valuation, rewritten as
    ``pi * a_j`` with ``pi = x_i/x0``, and units; then

        d(pi a1, ..., pi am, a_{m+1}, ..., a_k)
            = sum_j (a1, ..., ^aj, ..., am) u (a_{m+1}, ..., a_k)

    with the sum read as 1 for m = 1 and as 0 for m = 0.  The result lives
    on P^{n-1} with coordinate i removed.
    """
    if s.degree == 0:
        raise ValueError("degree-0 symbols have no residue")
    if not 1 <= i <= s.n:
        raise IndexError(f"coordinate divisor index {i} outside 1..{s.n}")
    raw: list[Term] = []
    for term in s.terms:
        raw.extend(_residue_term(term, i, b_square_mod_coords))
    return Symbol.from_terms(s.n - 1, s.degree - 1, raw)


def alpha_symbol(n: int) -> Symbol:
    """alpha = (a1, ..., an) with a_i the class of -x_i/x0."""
    if n < 1:
        raise ValueError("alpha needs n >= 1")
    return make_symbol([class_of_coordinate_ratio(i, 0, n) for i in range(1, n + 1)])


class Verdict(str, enum.Enum):
    NONZERO = "NONZERO"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class ResidueCertificate:
    start: Symbol
    divisor_sequence: tuple[int, ...]
    intermediate: tuple[Symbol, ...]
    verdict: Verdict

    @property
    def final(self) -> Symbol:
        return self.intermediate[-1]

    def to_dict(self) -> dict:
        return {
            "start": self.start.to_dict(),
            "divisor_sequence": list(self.divisor_sequence),
            "intermediate": [s.to_dict() for s in self.intermediate],
            "verdict": self.verdict.value,
        }

    @classmethod
    def from_dict(cls, data: dict) -> ResidueCertificate:
        return cls(
            Symbol.from_dict(data["start"]),
            tuple(int(i) for i in data["divisor_sequence"]),
            tuple(Symbol.from_dict(s) for s in data["intermediate"]),
            Verdict(data["verdict"]),
        )


def degree_one_is_nonsquare(s: Symbol) -> bool:
    """A 1-symbol sum is the single class prod(terms); it is nonzero when
    that class has odd valuation along some coordinate divisor x_i, i >= 1."""
    if s.degree != 1 or not s.terms:
        return False
    cls = product((t[0] for t in s.terms), s.n)
    return any(cls.exps[1:])


def run_residue_chain(start: Symbol, divisors: Sequence[int]) -> ResidueCertificate:
    chain = [start]
    for i in divisors:
        chain.append(residue(chain[-1], i))
    final = chain[-1]
    verdict = Verdict.NONZERO if degree_one_is_nonsquare(final) else Verdict.INCONCLUSIVE
    return ResidueCertificate(start, tuple(divisors), tuple(chain), verdict)


def certify_alpha_nonzero(n: int) -> ResidueCertificate:
    """Residues of alpha along x_n, x_{n-1}, ..., x_2 leave (x1/x0) on P^1."""
    return run_residue_chain(alpha_symbol(n), list(range(n, 1, -1)))


def check_residue_certificate(cert: ResidueCertificate) -> bool:
    """Recompute every step of ``cert``; True iff the record is consistent."""
    try:
        redo = run_residue_chain(cert.start, cert.divisor_sequence)
    except (ValueError, IndexError):
        return False
    return redo.intermediate == cert.intermediate and redo.verdict == cert.verdict
