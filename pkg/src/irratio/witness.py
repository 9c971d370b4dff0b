"""Witness constructions and their certificates.

Three constructions are offered:

* ``build_witness_hypersurface`` -- Z = {e0 + sum e_i y_i^2 = 0} of degree d,
  singular along the plane P = {x0 = ... = xn = 0}, with the even/odd degree
  recipes for e_i;
* ``build_double_cover_witness`` -- the branch polynomial of a double cover
  of P^N together with its extra unit coefficient;
* ``build_conic_witness`` -- the conic bundle <b, c1/x0^d1, c2/x0^d2> over P^n.

Each builder runs every machine-checkable hypothesis and returns a
:class:`WitnessCertificate`.  Certificates store the polynomials as text
together with rho and the scaling witnesses, so :func:`verify_certificate`
re-runs every check from the stored data without any search.

The geometric conclusion (no decomposition of the diagonal for a very
general member) is a cited theorem and is recorded as such; only its
hypotheses are checked here.
"""

from __future__ import annotations

import enum
import json
import os
import tempfile
from dataclasses import dataclass, field
from typing import Callable

from .poly import (
    E0Structure,
    GVariant,
    HomogPoly,
    PARAM,
    PolyRing,
    b_is_square,
    build_g,
    check_cond_pure_powers,
    check_cond_square_mod_coords,
    g_degree,
    jacobian_vanishes_on_plane,
    parse_poly,
    plane_multiplicity,
    structured_coprimality,
)
from .quadform import (
    DiagonalForm,
    RejectedPoint,
    RhoMap,
    choose_rho,
    conic_scaling,
    ff_forms_equivalent,
    is_scaled_isometric,
    is_scaled_subform,
    legendre,
    pfister_form,
    q_form,
    sample_points,
    specialize_form,
    t0_isotropy_check,
    find_scaling_isometry,
    find_scaling_subform,
)
from .squareclass import SquareClass, b_class, monomial_class, multiply, trivial
from .symbol import ResidueCertificate, Verdict, certify_alpha_nonzero, check_residue_certificate

SCHEMA_VERSION = "irratio-cert/1"
DEFAULT_SEED = 20190611
ORACLE_PRIME = 101
ORACLE_SAMPLES = 200

CONCLUSION = {
    "label": "CITED-THEOREM",
    "statement": "a very general member of the family degenerating to this witness "
    "admits no integral decomposition of the diagonal, hence is not stably rational",
}


class Variant(str, enum.Enum):
    HYPERSURFACE = "hypersurface"
    DOUBLE_COVER = "double-cover"
    CONIC_BUNDLE = "conic-bundle"


class InfeasibleParameters(ValueError):
    """Raised with the violated inequality named in the message."""


class CertificateError(ValueError):
    """Malformed or internally inconsistent certificate file."""


@dataclass(frozen=True)
class WitnessParams:
    n: int
    r: int
    d: int | None
    variant: Variant = Variant.HYPERSURFACE
    g_variant: GVariant = GVariant.PARAMETRIC
    p: int | None = None
    p0: int = 3

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "g_variant", GVariant(self.g_variant))

    def validate(self) -> None:
        n, r, d = self.n, self.r, self.d
        if n < 2:
            raise InfeasibleParameters("n >= 2 violated")
        if not 1 <= r:
            raise InfeasibleParameters("r >= 1 violated")
        if r > 2**n - 2:
            raise InfeasibleParameters("r <= 2^n - 2 violated")
        if self.g_variant is GVariant.FINITE_FIELD:
            if self.p is None or self.p < 3 or self.p % 2 == 0:
                raise InfeasibleParameters("finite-field variant needs an odd prime p")
            if self.variant is not Variant.HYPERSURFACE or r != 2**n - 2:
                raise InfeasibleParameters("finite-field variant needs a hypersurface with r = 2^n - 2")
        if self.variant is Variant.HYPERSURFACE:
            if d is None or d < n + 2:
                raise InfeasibleParameters("d >= n + 2 violated")
        elif self.variant is Variant.DOUBLE_COVER:
            if d is None or d % 2:
                raise InfeasibleParameters("d even violated")
            if d < g_degree(n) + 2:
                raise InfeasibleParameters("d >= 2*ceil((n+1)/2) + 2 violated")
        else:
            if r != 1:
                raise InfeasibleParameters("conic bundles need r = 1")

    @property
    def N(self) -> int:
        return self.n + self.r

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "d": self.d,
            "N": self.N,
            "variant": self.variant.value,
            "g_variant": self.g_variant.value,
            "p": self.p,
            "p0": self.p0,
        }

    @classmethod
    def from_dict(cls, data: dict) -> WitnessParams:
        return cls(
            int(data["n"]),
            int(data["r"]),
            None if data.get("d") is None else int(data["d"]),
            Variant(data["variant"]),
            GVariant(data["g_variant"]),
            None if data.get("p") is None else int(data["p"]),
            int(data.get("p0", 3)),
        )


# -- the data a certificate carries ------------------------------------------------


@dataclass
class WitnessData:
    params: WitnessParams
    ring: PolyRing
    rho: RhoMap
    g: HomogPoly
    h: HomogPoly | None = None
    e0_structure: E0Structure | None = None
    e: list[HomogPoly] = field(default_factory=list)
    F: HomogPoly | None = None
    unit_slot: int | None = None
    mu: SquareClass | None = None
    lam: SquareClass | None = None
    scaling: SquareClass | None = None
    alpha: ResidueCertificate | None = None
    seed: int = DEFAULT_SEED
    oracle_p: int = ORACLE_PRIME
    oracle_samples: int = ORACLE_SAMPLES


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "n/a"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class WitnessCertificate:
    data: WitnessData
    checks: list[CheckResult]
    oracle: dict
    verdict: str

    @property
    def params(self) -> WitnessParams:
        return self.data.params

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return certificate_to_dict(self)

    def to_json(self) -> str:
        return dump_json(self.to_dict())


# -- polynomial recipes ----------------------------------------------------------------


def _ring_for(params: WitnessParams) -> PolyRing:
    if params.variant is Variant.HYPERSURFACE:
        n_y = params.r + 1
    elif params.variant is Variant.DOUBLE_COVER:
        n_y = params.r
    else:
        n_y = 0
    modulus = params.p if params.g_variant is GVariant.FINITE_FIELD else None
    return PolyRing.standard(params.n, n_y, with_t=params.g_variant is GVariant.PARAMETRIC, modulus=modulus)


def _x_monomial(ring: PolyRing, n: int, x_exps) -> HomogPoly:
    exps = [0] * ring.nvars
    exps[: n + 1] = x_exps
    return ring.monomial(exps)


def _check_h(h: HomogPoly, n: int) -> None:
    if h.is_zero() or h.degree != 1:
        raise InfeasibleParameters("h must be a linear form")
    for exps in h.terms:
        if any(exps[n + 1:]):
            raise InfeasibleParameters("h must involve x0..xn only")
    if len(h.terms) < 2:
        raise InfeasibleParameters("h must not be a multiple of a coordinate")


def _psi_class_with_shift(n: int, eps, shift: int) -> SquareClass:
    return monomial_class(n, (0, *eps), x0_shift=shift)


def hypersurface_pins(n: int):
    return [(1, (1,) * n)]


def double_cover_pins(n: int, r: int):
    """c1 = x1...xn always; c_{r+1} = x1 x2 unless that collides with c1 (n = 2)."""
    x1x2 = (1, 1) + (0,) * (n - 2)
    pins = [(1, (1,) * n)]
    if n >= 3:
        pins.append((r + 1, x1x2))
    return pins


def conic_pins(n: int):
    return [(1, (1,) * n), (2, (0,) + (1,) * (n - 1))]


def _build_hypersurface(params: WitnessParams, ring: PolyRing, g: HomogPoly, h: HomogPoly, rho: RhoMap, data: WitnessData):
    n, r, d = params.n, params.r, params.d
    D = g.degree
    x0 = ring.var("x0")
    if d % 2 == 0:
        mono = (0,) * (n + 1)
        h_power = d - D
        eps_list = [rho[i] for i in range(1, r + 2)]
        c_exps = [(0, *eps) for eps in eps_list]
        expected = trivial(n)
    else:
        mono = (0, 1) + (0,) * (n - 1)
        h_power = d - D - 1
        c_exps = [(0, 1 - rho[i][0], *rho[i][1:]) for i in range(1, r + 2)]
        expected = monomial_class(n, (1, 1) + (0,) * (n - 1))
    if h_power < 0 or h_power % 2:
        raise InfeasibleParameters(f"h exponent {h_power} must be even and non-negative")
    full_mono = list(mono) + [0] * (ring.nvars - n - 1)
    data.e0_structure = E0Structure(h, h_power, tuple(full_mono), g)
    e = [data.e0_structure.expand()]
    for ce in c_exps:
        k = d - 2 - sum(ce)
        if k < 0:
            raise InfeasibleParameters("d - 2 - deg(c_i) >= 0 violated")
        e.append(x0**k * _x_monomial(ring, n, ce))
    data.e = e
    F = e[0]
    for i, ei in enumerate(e[1:], start=1):
        F = F + ei * ring.var(f"y{i}") ** 2
    data.F = F
    return expected


def _build_double_cover(params: WitnessParams, ring: PolyRing, g: HomogPoly, h: HomogPoly, rho: RhoMap, data: WitnessData):
    n, r, d = params.n, params.r, params.d
    D = g.degree
    x1x2 = (1, 1) + (0,) * (n - 2)
    slots = [i for i in range(1, r + 2)]
    unit = next((i for i in slots if rho[i] == x1x2), None)
    if unit is None:
        raise InfeasibleParameters("x1*x2 must be among c_1..c_{r+1}")
    data.unit_slot = unit
    h_power = d - D - 2
    if h_power < 0 or h_power % 2:
        raise InfeasibleParameters(f"h exponent {h_power} must be even and non-negative")
    mono = [0, 1, 1] + [0] * (ring.nvars - 3)
    data.e0_structure = E0Structure(h, h_power, tuple(mono), g)
    e = [data.e0_structure.expand()]
    x0 = ring.var("x0")
    for i in slots:
        if i == unit:
            continue
        absorbed = tuple(a ^ b for a, b in zip(rho[i], x1x2))
        k = d - 2 - sum(absorbed)
        e.append(x0**k * _x_monomial(ring, n, (0, *absorbed)))
    data.e = e
    F = e[0]
    for i, ei in enumerate(e[1:], start=1):
        F = F + ei * ring.var(f"y{i}") ** 2
    data.F = F
    return monomial_class(n, (0, 1, 1) + (0,) * (n - 2))


def _new_data(params: WitnessParams, h: HomogPoly | str | None, seed: int, samples: int) -> WitnessData:
    params.validate()
    ring = _ring_for(params)
    n = params.n
    g = build_g(n, params.g_variant, p=params.p, p0=params.p0, ring=ring)
    if params.variant is Variant.HYPERSURFACE:
        rho = choose_rho(n, hypersurface_pins(n))
    elif params.variant is Variant.DOUBLE_COVER:
        rho = choose_rho(n, double_cover_pins(n, params.r))
    else:
        rho = choose_rho(n, conic_pins(n))
    if h is None:
        h = ring.var("x0") + ring.var("x1")
    elif isinstance(h, str):
        h = parse_poly(h, ring)
    if params.variant is not Variant.CONIC_BUNDLE:
        _check_h(h, n)
    oracle_p = params.p if params.g_variant is GVariant.FINITE_FIELD else ORACLE_PRIME
    return WitnessData(params, ring, rho, g, h, seed=seed, oracle_p=oracle_p, oracle_samples=samples)


def _finish(data: WitnessData) -> WitnessCertificate:
    data.alpha = certify_alpha_nonzero(data.params.n)
    checks, oracle = run_checks(data)
    verdict = "PASS" if all(c.ok for c in checks) else "FAIL"
    return WitnessCertificate(data, checks, oracle, verdict)


def build_witness_hypersurface(
    params: WitnessParams,
    *,
    h: HomogPoly | str | None = None,
    seed: int = DEFAULT_SEED,
    samples: int = ORACLE_SAMPLES,
) -> WitnessCertificate:
    """Even d: e0 = h^(d-deg g) g, e_i = x0^(d-2-d_i) c_i, lam = mu = 1.
    Odd d: e0 = h^(d-deg g-1) x1 g, e_i = x0^(d-2-d'_i) c'_i with
    c'_eps = x1^(1-eps1) x2^eps2 ... xn^epsn, lam = mu = x0 x1."""
    if params.variant is not Variant.HYPERSURFACE:
        raise InfeasibleParameters("params.variant must be hypersurface")
    data = _new_data(params, h, seed, samples)
    expected = _build_hypersurface(params, data.ring, data.g, data.h, data.rho, data)
    _attach_scalings(data, expected)
    return _finish(data)


def build_double_cover_witness(
    params: WitnessParams,
    *,
    h: HomogPoly | str | None = None,
    seed: int = DEFAULT_SEED,
    samples: int = ORACLE_SAMPLES,
) -> WitnessCertificate:
    """Branch polynomial F = e0 + sum e_i y_i^2 of a double cover w^2 + F = 0,
    with e0 = h^(d-deg g-2) x1 x2 g and e_i = x0^(d-2-deg c''_i) c''_i where
    c''_i is x1 x2 c_i with squares removed; lam = mu = x1 x2."""
    if params.variant is not Variant.DOUBLE_COVER:
        raise InfeasibleParameters("params.variant must be double-cover")
    data = _new_data(params, h, seed, samples)
    expected = _build_double_cover(params, data.ring, data.g, data.h, data.rho, data)
    _attach_scalings(data, expected)
    return _finish(data)


def build_conic_witness(
    N: int,
    *,
    g_variant: GVariant = GVariant.PARAMETRIC,
    p0: int = 3,
    seed: int = DEFAULT_SEED,
    samples: int = ORACLE_SAMPLES,
) -> WitnessCertificate:
    """Conic bundle over P^(N-1) given by <b, c1/x0^d1, c2/x0^d2> with
    c1 = x1...xn and c2 = x2...xn."""
    if N < 3:
        raise InfeasibleParameters("N >= 3 violated")
    if GVariant(g_variant) is GVariant.FINITE_FIELD:
        raise InfeasibleParameters("conic bundles use the parametric or integral g")
    params = WitnessParams(N - 1, 1, None, Variant.CONIC_BUNDLE, g_variant, None, p0)
    data = _new_data(params, None, seed, samples)
    data.h = None
    q = q_form(params.n, 1, b_class(params.n), data.rho)
    data.scaling = find_scaling_isometry(q, conic_scaling(params.n))
    return _finish(data)


def _attach_scalings(data: WitnessData, expected: SquareClass) -> None:
    q, eform = _q_and_eform(data)
    mu = find_scaling_isometry(q, eform)
    if mu is None:
        raise AssertionError("builder produced e_i with no entrywise similarity to q")
    data.mu = mu
    sub, psi = _sub_and_psi(data)
    data.lam = find_scaling_subform(sub, psi, prefer=[expected])


# -- square classes of the constructed entries ---------------------------------------------


def _monomial_entry_class(f: HomogPoly, n: int, shift: int) -> SquareClass:
    if not f.is_monomial():
        raise ValueError(f"{f.to_text()} is not a monomial")
    exps = next(iter(f.terms))
    if any(exps[n + 1:]):
        raise ValueError(f"{f.to_text()} involves non-x variables")
    return monomial_class(n, exps[: n + 1], x0_shift=shift)


def _e0_class(data: WitnessData) -> SquareClass:
    s = data.e0_structure
    n = data.params.n
    if s.h_power % 2:
        raise ValueError("odd power of h has no class in this group")
    mono = s.monomial[: n + 1]
    return multiply(b_class(n), monomial_class(n, mono, x0_shift=sum(mono)))


def _e_classes(data: WitnessData) -> list[SquareClass]:
    d, n = data.params.d, data.params.n
    return [_monomial_entry_class(f, n, d - 2) for f in data.e[1:]]


def _q_and_eform(data: WitnessData) -> tuple[DiagonalForm, DiagonalForm]:
    n, r = data.params.n, data.params.r
    q = q_form(n, r, b_class(n), data.rho)
    entries = [_e0_class(data), *_e_classes(data)]
    if data.params.variant is Variant.DOUBLE_COVER:
        entries.append(trivial(n))
    return q, DiagonalForm(n, tuple(entries))


def _sub_and_psi(data: WitnessData) -> tuple[DiagonalForm, DiagonalForm]:
    n = data.params.n
    entries = _e_classes(data)
    if data.params.variant is Variant.DOUBLE_COVER:
        entries.append(trivial(n))
    return DiagonalForm(n, tuple(entries)), pfister_form(n, data.rho)


def degenerate_g_class(data: WitnessData) -> SquareClass | None:
    """Class over x0^deg(g) of g at t = 0 (parametric) or mod p0 (integral)."""
    g, n = data.g, data.params.n
    if data.params.g_variant is GVariant.PARAMETRIC:
        g0 = g.substitute(PARAM, 0)
    elif data.params.g_variant is GVariant.INTEGRAL:
        g0 = g.change_modulus(data.params.p0)
    else:
        return None
    if g0.is_zero() or not g0.is_monomial():
        raise ValueError("degenerate g is not a monomial")
    exps = next(iter(g0.terms))
    return monomial_class(n, exps[: n + 1], x0_shift=g.degree)


# -- checks ------------------------------------------------------------------------------


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _check_feasibility(data: WitnessData) -> CheckResult:
    try:
        data.params.validate()
    except InfeasibleParameters as exc:
        return CheckResult("feasibility", "fail", str(exc))
    return CheckResult("feasibility", "pass", "parameter inequalities hold")


def _check_pure_powers(data):
    ok = check_cond_pure_powers(data.g, data.params.n)
    return CheckResult("pure_powers", _status(ok), "g contains x_i^deg(g) for all i")


def _check_square_mod_coords(data):
    ok = check_cond_square_mod_coords(data.g, data.params.n)
    return CheckResult("square_mod_coordinates", _status(ok), "g mod x_i is a square for all i")


def _check_rho_pins(data: WitnessData) -> CheckResult:
    n, r, variant = data.params.n, data.params.r, data.params.variant
    if variant is Variant.HYPERSURFACE:
        pins = hypersurface_pins(n)
    elif variant is Variant.DOUBLE_COVER:
        pins = double_cover_pins(n, r)
    else:
        pins = conic_pins(n)
    bad = [i for i, eps in pins if data.rho[i] != eps]
    detail = "; ".join(f"c{i} = {'*'.join(f'x{j + 1}' for j, b in enumerate(eps) if b)}" for i, eps in pins)
    if bad:
        return CheckResult("rho_pins", "fail", f"required {detail}; slots {bad} differ")
    return CheckResult("rho_pins", "pass", detail)


def _check_e0_structure(data: WitnessData) -> CheckResult:
    ok = data.e0_structure.expand() == data.e[0]
    return CheckResult("e0_factorization", _status(ok), f"e0 = h^{data.e0_structure.h_power} * monomial * g")


def _check_degrees(data: WitnessData) -> CheckResult:
    d = data.params.d
    want = [d] + [d - 2] * (len(data.e) - 1)
    got = [f.degree if f else None for f in data.e]
    return CheckResult("degrees", _status(got == want), f"deg e = {got}, expected {want}")


def _check_F(data: WitnessData) -> CheckResult:
    ring = data.ring
    F = data.e[0]
    for i, ei in enumerate(data.e[1:], start=1):
        F = F + ei * ring.var(f"y{i}") ** 2
    return CheckResult("F_matches_e", _status(F == data.F), "F = e0 + sum e_i y_i^2")


def _check_coprime(data: WitnessData) -> CheckResult:
    units = 1 if data.params.variant is Variant.DOUBLE_COVER else 0
    ok = structured_coprimality(data.e, data.e0_structure, extra_units=units)
    detail = "gcd(e0, ..., e_m) = 1" + (" (unit coefficient present)" if units else "")
    return CheckResult("coprime", _status(ok), detail)


def _check_q_similar(data: WitnessData) -> CheckResult:
    q, eform = _q_and_eform(data)
    ok = data.mu is not None and is_scaled_isometric(q, eform, data.mu)
    mu = data.mu.label() if data.mu is not None else "none"
    return CheckResult("q_similar_to_e_form", _status(ok), f"q = <{mu}> * {eform.label()}")


def _check_subform(data: WitnessData) -> CheckResult:
    sub, psi = _sub_and_psi(data)
    ok = data.lam is not None and is_scaled_subform(sub, psi, data.lam)
    lam = data.lam.label() if data.lam is not None else "none"
    return CheckResult("e_subform_of_pfister", _status(ok), f"<{lam}> * {sub.label()} inside psi")


def _check_t0(data: WitnessData) -> CheckResult:
    n = data.params.n
    g0 = degenerate_g_class(data)
    if g0 is None:
        return CheckResult("t0_isotropy", "n/a", "finite-field g: nontriviality via b not a square, r = 2^n - 2")
    r = 1 if data.params.variant is Variant.CONIC_BUNDLE else data.params.r
    q = q_form(n, r, b_class(n), data.rho)
    ok = t0_isotropy_check(q, g0)
    return CheckResult("t0_isotropy", _status(ok), f"degenerate b ~ {g0.label()} vs q[1] ~ {q.entries[1].label()}")


def _check_b_not_square(data: WitnessData) -> CheckResult:
    ok = not b_is_square(data.g)
    return CheckResult("b_not_square", _status(ok), "g is not a constant times a square")


def _check_alpha(data: WitnessData) -> CheckResult:
    cert = data.alpha
    fresh = certify_alpha_nonzero(data.params.n)
    ok = (
        cert is not None
        and check_residue_certificate(cert)
        and cert.start == fresh.start
        and cert.verdict is Verdict.NONZERO
    )
    steps = len(cert.divisor_sequence) if cert is not None else 0
    return CheckResult("alpha_nonzero", _status(ok), f"{steps} residues to {cert.final.label() if cert else '?'}")


def _check_plane(data: WitnessData) -> CheckResult:
    d = data.params.d
    mult = plane_multiplicity(data.F)
    ok = jacobian_vanishes_on_plane(data.F) and mult == d - 2
    return CheckResult("plane_multiplicity", _status(ok), f"multiplicity {mult} along P, expected {d - 2}")


def _check_conic(data: WitnessData) -> CheckResult:
    n = data.params.n
    q = q_form(n, 1, b_class(n), data.rho)
    target = conic_scaling(n)
    ok = data.scaling is not None and is_scaled_isometric(q, target, data.scaling)
    s = data.scaling.label() if data.scaling is not None else "none"
    return CheckResult("conic_similarity", _status(ok), f"q = <{s}> * {target.label()}")


def _guard(name: str, fn: Callable[[WitnessData], CheckResult], data: WitnessData) -> CheckResult:
    try:
        return fn(data)
    except Exception as exc:  # a malformed witness fails the check that tripped on it
        return CheckResult(name, "fail", f"error: {exc}")


CHECKS_BY_VARIANT: dict[Variant, list[tuple[str, Callable]]] = {
    Variant.HYPERSURFACE: [
        ("feasibility", _check_feasibility),
        ("pure_powers", _check_pure_powers),
        ("square_mod_coordinates", _check_square_mod_coords),
        ("rho_pins", _check_rho_pins),
        ("e0_factorization", _check_e0_structure),
        ("degrees", _check_degrees),
        ("F_matches_e", _check_F),
        ("coprime", _check_coprime),
        ("q_similar_to_e_form", _check_q_similar),
        ("e_subform_of_pfister", _check_subform),
        ("t0_isotropy", _check_t0),
        ("b_not_square", _check_b_not_square),
        ("alpha_nonzero", _check_alpha),
        ("plane_multiplicity", _check_plane),
    ],
    Variant.CONIC_BUNDLE: [
        ("feasibility", _check_feasibility),
        ("pure_powers", _check_pure_powers),
        ("square_mod_coordinates", _check_square_mod_coords),
        ("rho_pins", _check_rho_pins),
        ("conic_similarity", _check_conic),
        ("t0_isotropy", _check_t0),
        ("b_not_square", _check_b_not_square),
        ("alpha_nonzero", _check_alpha),
    ],
}
CHECKS_BY_VARIANT[Variant.DOUBLE_COVER] = CHECKS_BY_VARIANT[Variant.HYPERSURFACE]


def run_checks(data: WitnessData) -> tuple[list[CheckResult], dict]:
    checks = [_guard(name, fn, data) for name, fn in CHECKS_BY_VARIANT[data.params.variant]]
    oracle = run_oracle(data)
    checks.append(CheckResult("oracle", oracle["status"], oracle["detail"]))
    return checks, oracle


# -- finite-field oracle ---------------------------------------------------------------------


def class_representative(ring: PolyRing, c: SquareClass, g: HomogPoly) -> HomogPoly:
    """A polynomial whose value at any point has the square class of ``c``.

    The class of m / x0^k equals that of m * x0^k, so the representative is
    the monomial prod x_i^exps_i times g (for b) times t (for t).
    """
    f = _x_monomial(ring, c.n, c.exps)
    if c.b:
        f = f * g
    if c.t:
        f = f * ring.var(PARAM)
    return f


def _oracle_entries(data: WitnessData):
    """Polynomial stand-ins for q, the e-form, psi and the lam-scaled subform.

    The e-form side evaluates the actual e_i (including powers of h), so the
    oracle is independent of the factor bookkeeping used symbolically.
    """
    ring, n, d = data.ring, data.params.n, data.params.d
    x0 = ring.var("x0")
    rep = lambda c: class_representative(ring, c, data.g)
    q, _ = _q_and_eform(data)
    e_side = [data.e[0] * x0 ** (d % 2)] + [f * x0 ** ((d - 2) % 2) for f in data.e[1:]]
    if data.params.variant is Variant.DOUBLE_COVER:
        e_side.append(ring.const(1))
    sub_side = e_side[1:]
    psi = pfister_form(n, data.rho)
    return (
        [rep(c) for c in q.entries],
        e_side,
        [rep(c) for c in psi.entries],
        sub_side,
        rep(data.mu),
        rep(data.lam),
    )


def run_oracle(data: WitnessData) -> dict:
    p, count, seed = data.oracle_p, data.oracle_samples, data.seed
    record = {"seed": seed, "p": p, "samples": count, "accepted": 0, "failures": 0, "first_failure": None}
    if data.params.variant is Variant.CONIC_BUNDLE:
        record.update(status="n/a", detail="conic certificates use the symbolic similarity check only")
        return record
    try:
        q_side, e_side, psi_side, sub_side, mu_rep, lam_rep = _oracle_entries(data)
    except Exception as exc:
        record.update(status="fail", detail=f"error: {exc}")
        return record
    everything = q_side + e_side + psi_side + [mu_rep, lam_rep]

    def accept(pt):
        return all(f.evaluate_mod(p, pt) for f in everything)

    try:
        points = sample_points(data.ring.nvars, p, count, seed, accept, max_tries=50 * count + 1000)
    except RuntimeError as exc:
        record.update(status="n/a", detail=f"sampling over F_{p} exhausted: {exc}")
        return record
    failures = 0
    first = None
    for pt in points:
        try:
            qf = specialize_form(q_side, pt, p)
            ef = specialize_form(e_side, pt, p).scaled(mu_rep.evaluate_mod(p, pt))
            psif = specialize_form(psi_side, pt, p)
            subf = specialize_form(sub_side, pt, p).scaled(lam_rep.evaluate_mod(p, pt))
        except RejectedPoint:
            continue
        record["accepted"] += 1
        ok = ff_forms_equivalent(qf, ef)
        psi_cls = [legendre(c, p) for c in psif.coeffs]
        sub_cls = [legendre(c, p) for c in subf.coeffs]
        ok = ok and all(sub_cls.count(v) <= psi_cls.count(v) for v in set(sub_cls))
        ok = ok and all(a * b in psi_cls for a in psi_cls for b in psi_cls)
        if not ok:
            failures += 1
            if first is None:
                first = list(pt)
    record["failures"] = failures
    record["first_failure"] = first
    ok = failures == 0 and record["accepted"] > 0
    record.update(
        status=_status(ok),
        detail=f"{record['accepted']} points over F_{p}, {failures} failures",
    )
    return record


# -- serialization -------------------------------------------------------------------------------


def dump_json(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def certificate_to_dict(cert: WitnessCertificate) -> dict:
    data = cert.data
    sc = lambda c: None if c is None else c.to_dict()
    polys = {
        "g": data.g.to_text(),
        "h": None if data.h is None else data.h.to_text(),
        "e": [f.to_text() for f in data.e],
        "F": None if data.F is None else data.F.to_text(),
    }
    structure = None
    if data.e0_structure is not None:
        structure = {"h_power": data.e0_structure.h_power, "monomial": list(data.e0_structure.monomial)}
    return {
        "schema_version": SCHEMA_VERSION,
        "params": data.params.to_dict(),
        "field": data.ring.field_name,
        "variables": list(data.ring.variables),
        "rho": data.rho.to_list(),
        "unit_slot": data.unit_slot,
        "polynomials": polys,
        "e0_structure": structure,
        "scalars": {"lambda": sc(data.lam), "mu": sc(data.mu), "scaling": sc(data.scaling)},
        "alpha_certificate": None if data.alpha is None else data.alpha.to_dict(),
        "checks": [c.to_dict() for c in cert.checks],
        "oracle": cert.oracle,
        "conclusion": CONCLUSION,
        "verdict": cert.verdict,
    }


_REQUIRED = ("schema_version", "params", "field", "variables", "rho", "polynomials", "scalars", "checks", "oracle", "verdict")


def _parse_field(name: str) -> int | None:
    if name == "QQ":
        return None
    if name.startswith("GF(") and name.endswith(")"):
        return int(name[3:-1])
    raise CertificateError(f"unknown field {name!r}")


def certificate_from_dict(doc: dict) -> WitnessCertificate:
    missing = [k for k in _REQUIRED if k not in doc]
    if missing:
        raise CertificateError(f"missing fields: {missing}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise CertificateError(f"unsupported schema {doc['schema_version']!r}")
    try:
        params = WitnessParams.from_dict(doc["params"])
        ring = PolyRing(doc["variables"], _parse_field(doc["field"]))
        rho = RhoMap.from_list(params.n, doc["rho"])
        polys = doc["polynomials"]
        parse = lambda s: None if s is None else parse_poly(s, ring)
        g = parse(polys["g"])
        data = WitnessData(params, ring, rho, g, parse(polys.get("h")))
        data.e = [parse_poly(s, ring) for s in polys.get("e", [])]
        data.F = parse(polys.get("F"))
        data.unit_slot = doc.get("unit_slot")
        st = doc.get("e0_structure")
        if st is not None:
            data.e0_structure = E0Structure(data.h, int(st["h_power"]), tuple(int(k) for k in st["monomial"]), g)
        sc = lambda c: None if c is None else SquareClass.from_dict(c)
        data.lam = sc(doc["scalars"].get("lambda"))
        data.mu = sc(doc["scalars"].get("mu"))
        data.scaling = sc(doc["scalars"].get("scaling"))
        if doc.get("alpha_certificate") is not None:
            data.alpha = ResidueCertificate.from_dict(doc["alpha_certificate"])
        oracle = doc["oracle"]
        data.seed, data.oracle_p, data.oracle_samples = int(oracle["seed"]), int(oracle["p"]), int(oracle["samples"])
        checks = [CheckResult(c["name"], c["status"], c.get("detail", "")) for c in doc["checks"]]
    except CertificateError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise CertificateError(f"malformed certificate: {exc}") from exc
    if len(ring.variables) < params.n + 1 or ring.variables[: params.n + 1] != tuple(f"x{i}" for i in range(params.n + 1)):
        raise CertificateError("variable list inconsistent with n")
    return WitnessCertificate(data, checks, oracle, doc["verdict"])


def write_certificate(cert: WitnessCertificate, path: str | os.PathLike) -> None:
    """Write atomically: temp file in the target directory, then rename."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cert-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(cert.to_json())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_certificate(path: str | os.PathLike) -> WitnessCertificate:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CertificateError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise CertificateError("certificate must be a JSON object")
    return certificate_from_dict(doc)


# -- verification ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    verdict: str  # PASS | FAIL | TAMPERED
    failed: list[str]
    mismatched: list[str]
    checks: list[CheckResult]


def verify_certificate(cert: WitnessCertificate | dict) -> VerificationReport:
    """Re-run every check from the stored data.

    FAIL if any recomputed check fails; otherwise TAMPERED if the recorded
    check outcomes, oracle record or verdict disagree with the recomputation;
    otherwise PASS.
    """
    if isinstance(cert, dict):
        cert = certificate_from_dict(cert)
    checks, oracle = run_checks(cert.data)
    failed = [c.name for c in checks if not c.ok]
    recorded = {c.name: c.status for c in cert.checks}
    fresh = {c.name: c.status for c in checks}
    mismatched = sorted(k for k in set(recorded) | set(fresh) if recorded.get(k) != fresh.get(k))
    if cert.oracle != oracle:
        mismatched.append("oracle-record")
    expected_verdict = "FAIL" if failed else "PASS"
    if cert.verdict != expected_verdict:
        mismatched.append("verdict")
    if failed:
        verdict = "FAIL"
    elif mismatched:
        verdict = "TAMPERED"
    else:
        verdict = "PASS"
    return VerificationReport(verdict, failed, mismatched, checks)
