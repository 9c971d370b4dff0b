"""Sparse homogeneous polynomials over Q or F_p, plus the polynomial side
of the construction: the g builders, the pure-power and square-mod-coordinate
conditions, exact square roots, the structured coprimality test and the
plane-singularity and Fermat smoothness checks.

Terms are stored as ``{exponent tuple: coefficient}``.  Coefficients are
:class:`fractions.Fraction` over Q and plain ints in ``[0, p)`` over F_p.
Every variable except ``t`` counts towards the homogeneity grading; ``t`` is
a degree-0 parameter.  Monomials are ordered lexicographically in the order
the ring lists its variables (x0 > x1 > ... > y1 > ... > t).
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from sympy.ntheory import sqrt_mod

PARAM = "t"

Exps = tuple[int, ...]


class PolyRing:
    """Polynomial ring over Q (``modulus=None``) or F_p in named variables."""

    def __init__(self, variables: Sequence[str], modulus: int | None = None):
        if modulus is not None and (modulus < 3 or modulus % 2 == 0):
            raise ValueError(f"coefficient field must have odd characteristic, got {modulus}")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        self.variables = tuple(variables)
        self.modulus = modulus
        self.index = {v: i for i, v in enumerate(self.variables)}
        self.graded = tuple(v != PARAM for v in self.variables)

    @classmethod
    def standard(cls, n: int, n_y: int = 0, with_t: bool = False, modulus: int | None = None) -> PolyRing:
        names = [f"x{i}" for i in range(n + 1)] + [f"y{i}" for i in range(1, n_y + 1)]
        if with_t:
            names.append(PARAM)
        return cls(names, modulus)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and (self.variables, self.modulus) == (other.variables, other.modulus)

    def __hash__(self):
        return hash((self.variables, self.modulus))

    def __repr__(self):
        field = "QQ" if self.modulus is None else f"GF({self.modulus})"
        return f"PolyRing({field}[{', '.join(self.variables)}])"

    @property
    def field_name(self) -> str:
        return "QQ" if self.modulus is None else f"GF({self.modulus})"

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def coerce(self, c):
        if self.modulus is None:
            return Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator % self.modulus == 0:
                raise ZeroDivisionError(f"denominator of {c} vanishes mod {self.modulus}")
            return c.numerator * pow(c.denominator, -1, self.modulus) % self.modulus
        return int(c) % self.modulus

    def poly(self, terms: Mapping[Exps, object]) -> HomogPoly:
        return HomogPoly(self, terms)

    def zero(self) -> HomogPoly:
        return HomogPoly(self, {})

    def const(self, c) -> HomogPoly:
        return HomogPoly(self, {(0,) * self.nvars: c})

    def monomial(self, exps: Sequence[int], c=1) -> HomogPoly:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector length does not match the ring")
        return HomogPoly(self, {tuple(exps): c})

    def var(self, name: str) -> HomogPoly:
        exps = [0] * self.nvars
        exps[self.index[name]] = 1
        return self.monomial(exps)

    def sqrt_coeff(self, c):
        """A square root of ``c`` in the coefficient field, or None."""
        if self.modulus is None:
            c = Fraction(c)
            if c < 0:
                return None
            num, den = math.isqrt(c.numerator), math.isqrt(c.denominator)
            if num * num != c.numerator or den * den != c.denominator:
                return None
            return Fraction(num, den)
        c %= self.modulus
        if c == 0:
            return 0
        root = sqrt_mod(c, self.modulus)
        return None if root is None else root

    def parse(self, text: str) -> HomogPoly:
        return parse_poly(text, self)

    def with_modulus(self, modulus: int | None) -> PolyRing:
        return PolyRing(self.variables, modulus)


class HomogPoly:
    """Homogeneous polynomial; construction rejects mixed-degree term sets."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Exps, object]):
        self.ring = ring
        clean: dict[Exps, object] = {}
        for exps, c in terms.items():
            c = ring.coerce(c)
            if c:
                clean[tuple(exps)] = c
        degrees = {self._deg(e) for e in clean}
        if len(degrees) > 1:
            raise ValueError(f"inhomogeneous polynomial (degrees {sorted(degrees)})")
        self.terms = clean

    def _deg(self, exps: Exps) -> int:
        return sum(e for e, g in zip(exps, self.ring.graded) if g)

    # -- basic protocol --------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, HomogPoly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return f"HomogPoly({self.to_text()!r})"

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return self._deg(next(iter(self.terms)))

    def leading(self) -> tuple[Exps, object]:
        exps = max(self.terms)
        return exps, self.terms[exps]

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def _check(self, other: HomogPoly):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: HomogPoly) -> HomogPoly:
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return HomogPoly(self.ring, out)

    def __neg__(self) -> HomogPoly:
        return HomogPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: HomogPoly) -> HomogPoly:
        return self + (-other)

    def __mul__(self, other) -> HomogPoly:
        if not isinstance(other, HomogPoly):
            return HomogPoly(self.ring, {e: c * self.ring.coerce(other) for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exps, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return HomogPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> HomogPoly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = self.ring.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- substitution and evaluation ---------------------------------------

    def substitute_zero(self, name: str) -> HomogPoly:
        """Image modulo the variable ``name`` (the variable stays in the ring)."""
        i = self.ring.index[name]
        return HomogPoly(self.ring, {e: c for e, c in self.terms.items() if e[i] == 0})

    def substitute(self, name: str, value) -> HomogPoly:
        """Specialize a degree-0 variable (``t``) to a constant."""
        i = self.ring.index[name]
        if self.ring.graded[i]:
            raise ValueError("only the ungraded parameter may be set to a constant")
        value = self.ring.coerce(value)
        out: dict[Exps, object] = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            out[e2] = out.get(e2, 0) + c * value**k
        return HomogPoly(self.ring, out)

    def evaluate_mod(self, p: int, point: Sequence[int]) -> int:
        """Value at ``point`` (one entry per ring variable) reduced mod p."""
        if len(point) != self.ring.nvars:
            raise ValueError("point has the wrong number of coordinates")
        total = 0
        for e, c in self.terms.items():
            if isinstance(c, Fraction):
                if c.denominator % p == 0:
                    raise ZeroDivisionError(f"coefficient {c} undefined mod {p}")
                c = c.numerator * pow(c.denominator, -1, p)
            term = c % p
            for x, k in zip(point, e):
                if k:
                    term = term * pow(x, k, p) % p
            total += term
        return total % p

    def change_modulus(self, p: int) -> HomogPoly:
        """Reduce a rational polynomial modulo the prime p."""
        if self.ring.modulus is not None:
            raise ValueError("already over a finite field")
        return HomogPoly(self.ring.with_modulus(p), self.terms)

    def divisible_by_var(self, name: str) -> bool:
        i = self.ring.index[name]
        return bool(self.terms) and all(e[i] > 0 for e in self.terms)

    def x_degree_profile(self) -> list[tuple[int, int]]:
        """(x-degree, y-degree) of each term, for rings with x and y variables."""
        xs = [i for i, v in enumerate(self.ring.variables) if v.startswith("x")]
        ys = [i for i, v in enumerate(self.ring.variables) if v.startswith("y")]
        return [(sum(e[i] for i in xs), sum(e[i] for i in ys)) for e in self.terms]

    def to_text(self) -> str:
        return format_poly(self)


# -- text format --------------------------------------------------------------


def _format_coeff(c) -> str:
    return str(c) if not isinstance(c, Fraction) or c.denominator != 1 else str(c.numerator)


def format_poly(f: HomogPoly) -> str:
    """Canonical text: ``c * x0^a0 * ... * t^k`` terms in descending lex order."""
    if not f.terms:
        return "0"
    pieces = []
    for exps in sorted(f.terms, reverse=True):
        c = f.terms[exps]
        neg = f.ring.modulus is None and c < 0
        mag = -c if neg else c
        factors = [
            v if k == 1 else f"{v}^{k}" for v, k in zip(f.ring.variables, exps) if k
        ]
        if mag != 1 or not factors:
            factors.insert(0, _format_coeff(mag))
        body = "*".join(factors)
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")


def parse_poly(text: str, ring: PolyRing) -> HomogPoly:
    text = text.strip()
    if text == "0":
        return ring.zero()
    if not text:
        raise ValueError("empty polynomial text")
    if text[0] not in "+-":
        text = "+" + text
    parts = _TERM_SPLIT.split(text)[1:]
    if len(parts) % 2:
        raise ValueError(f"cannot parse polynomial {text!r}")
    terms: dict[Exps, object] = {}
    for sign, body in zip(parts[::2], parts[1::2]):
        coeff = Fraction(1)
        exps = [0] * ring.nvars
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {body!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in ring.index:
                raise ValueError(f"unknown variable {name!r}")
            exps[ring.index[name]] += int(power) if power else 1
        if sign == "-":
            coeff = -coeff
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return HomogPoly(ring, terms)


# -- square roots -------------------------------------------------------------


def _canonical_sign(s: HomogPoly) -> HomogPoly:
    _, c = s.leading()
    p = s.ring.modulus
    if (p is None and c < 0) or (p is not None and c > (p - 1) // 2):
        return -s
    return s


def multivariate_sqrt(f: HomogPoly) -> HomogPoly | None:
    """Exact square root of ``f`` in its own polynomial ring, or None.

    Peels terms off in lex order: the leading term of the root is the root
    of the leading term of ``f``; each further term is the leading term of
    the remainder divided by twice the root's leading term.  The result is
    normalized to a canonical sign.
    """
    ring = f.ring
    if f.is_zero():
        return f
    lead_e, lead_c = f.leading()
    if any(e % 2 for e in lead_e):
        return None
    root_c = ring.sqrt_coeff(lead_c)
    if root_c is None:
        return None
    s_lead = tuple(e // 2 for e in lead_e)
    s = ring.monomial(s_lead, root_c)
    two_c = 2 * root_c
    rem = f - s * s
    last = s_lead
    while not rem.is_zero():
        m, mc = rem.leading()
        exps = tuple(a - b for a, b in zip(m, s_lead))
        if min(exps) < 0 or exps >= last:
            return None
        coef = Fraction(mc) / Fraction(two_c) if ring.modulus is None else mc * pow(two_c, -1, ring.modulus)
        term = ring.monomial(exps, coef)
        rem = rem - (s * 2 + term) * term
        s = s + term
        last = exps
    if s * s != f:
        return None
    return _canonical_sign(s)


def leading_x_coefficient(f: HomogPoly) -> HomogPoly:
    """Coefficient (a polynomial in t alone) of the lex-leading x-monomial."""
    graded = f.ring.graded
    key = lambda e: tuple(k for k, g in zip(e, graded) if g)
    top = max(key(e) for e in f.terms)
    return f.ring.poly({
        tuple(0 if g else k for k, g in zip(e, graded)): c
        for e, c in f.terms.items() if key(e) == top
    })


def is_square_up_to_constant(f: HomogPoly) -> bool:
    """Whether ``f = c * s^2`` for a constant c of the algebraically closed base.

    With ``lc`` the leading x-coefficient of f, f = c s^2 forces
    lc * f = (lc * s / sqrt(c))^2 with a root that already has coefficients in
    the ring, so one exact square-root attempt decides the question.
    """
    if f.is_zero():
        return True
    return multivariate_sqrt(leading_x_coefficient(f) * f) is not None


# -- builders and conditions -----------------------------------------------------


class GVariant(str, enum.Enum):
    PARAMETRIC = "parametric"
    FINITE_FIELD = "finite-field"
    INTEGRAL = "integral"


def half_degree(n: int) -> int:
    """ceil((n+1)/2), the degree of G."""
    return (n + 2) // 2


def g_degree(n: int) -> int:
    return 2 * half_degree(n)


def epsilon(n: int) -> int:
    """0 if n+1 is even, 1 otherwise; makes x0^eps * x0...xn of degree deg(g)."""
    return (n + 1) % 2


def build_G(ring: PolyRing, n: int) -> HomogPoly:
    k = half_degree(n)
    out = ring.zero()
    for i in range(n + 1):
        out = out + ring.var(f"x{i}") ** k
    return out


def coordinate_product(ring: PolyRing, n: int) -> HomogPoly:
    """x0^eps * x0 * x1 * ... * xn."""
    exps = [0] * ring.nvars
    for i in range(n + 1):
        exps[i] = 1
    exps[0] += epsilon(n)
    return ring.monomial(exps)


def build_g(
    n: int,
    variant: GVariant = GVariant.PARAMETRIC,
    *,
    p: int | None = None,
    p0: int = 3,
    ring: PolyRing | None = None,
) -> HomogPoly:
    """The polynomial g for each variant.

    PARAMETRIC:   t^2 G^2 - x0^eps x0...xn   over Q(t)
    FINITE_FIELD: G^2 + x0^eps x0...xn       over F_p
    INTEGRAL:     p0^2 G^2 + x0^eps x0...xn  over Q, p0 an odd prime

    with G = sum_i x_i^ceil((n+1)/2).  ``ring`` may be given to build g
    inside a larger ring (e.g. one that also carries y variables); it must
    list x0..xn first.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    variant = GVariant(variant)
    if ring is None:
        if variant is GVariant.PARAMETRIC:
            ring = PolyRing.standard(n, with_t=True)
        elif variant is GVariant.FINITE_FIELD:
            if p is None:
                raise ValueError("the finite-field variant needs an odd prime p")
            ring = PolyRing.standard(n, modulus=p)
        else:
            ring = PolyRing.standard(n)
    G = build_G(ring, n)
    prod = coordinate_product(ring, n)
    if variant is GVariant.PARAMETRIC:
        if PARAM not in ring.index:
            raise ValueError("the parametric variant needs t in the ring")
        t = ring.var(PARAM)
        g = t * t * G * G - prod
    elif variant is GVariant.FINITE_FIELD:
        if ring.modulus is None:
            raise ValueError("the finite-field variant needs a finite coefficient field")
        g = G * G + prod
    else:
        if ring.modulus is not None:
            raise ValueError("the integral variant lives over Q")
        if p0 < 3 or not all(p0 % q for q in range(2, math.isqrt(p0) + 1)):
            raise ValueError(f"p0 must be an odd prime, got {p0}")
        g = G * G * (p0 * p0) + prod
    if not check_cond_pure_powers(g, n) or not check_cond_square_mod_coords(g, n):
        raise AssertionError("constructed g violates its defining conditions")
    return g


def _x_part(exps: Exps, n: int) -> Exps:
    return exps[: n + 1]


def check_cond_pure_powers(g: HomogPoly, n: int) -> bool:
    """g contains x_i^deg(g) with nonzero coefficient for every i = 0..n.

    Coefficients may involve the parameter t; terms with different t powers
    cannot cancel, so presence of any such term suffices.
    """
    if g.is_zero():
        return False
    D = g.degree
    found = set()
    for e in g.terms:
        xs = _x_part(e, n)
        others = [k for v, k in zip(g.ring.variables[n + 1:], e[n + 1:]) if v != PARAM]
        if any(others):
            continue
        for i, k in enumerate(xs):
            if k == D:
                found.add(i)
    return found == set(range(n + 1))


def check_cond_square_mod_coords(g: HomogPoly, n: int) -> bool:
    """Each reduction g mod x_i (i = 0..n) is a square over the closed base field."""
    return all(is_square_up_to_constant(g.substitute_zero(f"x{i}")) for i in range(n + 1))


def b_is_square(g: HomogPoly) -> bool:
    """b = g / x0^deg(g) is a square in k(P^n) iff g is a constant times a square."""
    return is_square_up_to_constant(g)


def monomial_gcd(polys: Iterable[HomogPoly]) -> Exps:
    polys = list(polys)
    if not polys or any(not f.is_monomial() for f in polys):
        raise ValueError("monomial gcd needs monomial inputs")
    exps = [next(iter(f.terms)) for f in polys]
    return tuple(min(col) for col in zip(*exps))


@dataclass(frozen=True)
class E0Structure:
    """Factorization e0 = h^h_power * x^monomial * g recorded by the builder."""

    h: HomogPoly
    h_power: int
    monomial: Exps
    g: HomogPoly

    def expand(self) -> HomogPoly:
        ring = self.g.ring
        return self.h ** self.h_power * ring.monomial(self.monomial) * self.g


def structured_coprimality(e: Sequence[HomogPoly], meta: E0Structure, extra_units: int = 0) -> bool:
    """gcd(e0, e1, ..., e_m) = 1 for constructed witnesses.

    ``e[1:]`` must be monomials; their gcd is a monomial m.  A variable
    dividing m divides e0 only through one of the known factors h, the
    monomial factor, or g, so checking those factors decides coprimality.
    ``extra_units`` counts additional constant entries (a double cover's
    unit coefficient), which make the gcd trivially 1.
    """
    if meta.expand() != e[0]:
        raise ValueError("e0 does not match its recorded factor structure")
    if extra_units:
        return True
    common = monomial_gcd(e[1:])
    ring = e[0].ring
    for i, k in enumerate(common):
        if not k:
            continue
        name = ring.variables[i]
        if meta.monomial[i] or meta.g.divisible_by_var(name):
            return False
        if meta.h_power and meta.h.divisible_by_var(name):
            return False
    return True


def plane_multiplicity(F: HomogPoly) -> int:
    """Multiplicity of {F = 0} along P = {x0 = ... = xn = 0}: the least x-degree."""
    profile = F.x_degree_profile()
    if not any(v.startswith("y") for v in F.ring.variables):
        raise ValueError("the plane x0 = ... = xn = 0 needs y variables")
    return min(x for x, _ in profile)


def _y_structure_ok(F: HomogPoly) -> bool:
    ys = [i for i, v in enumerate(F.ring.variables) if v.startswith("y")]
    for e in F.terms:
        ydeg = [e[i] for i in ys if e[i]]
        if ydeg and ydeg != [2]:
            return False
    return True


def jacobian_vanishes_on_plane(F: HomogPoly) -> bool:
    """Every first partial of F vanishes identically on P.

    Requires the shape e0 + sum e_i y_i^2 (each term free of y or a single
    y_i^2) and every term of x-degree >= 2.
    """
    mult = plane_multiplicity(F)
    return _y_structure_ok(F) and mult >= 2


def fermat_smoothness(N: int, d: int, p: int) -> bool:
    """Smoothness of sum x_i^d = 0 in P^{N+1} in characteristic p (0 for Q).

    The partials d*x_i^(d-1) have a common nontrivial zero only when p | d.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    return p == 0 or d % p != 0
