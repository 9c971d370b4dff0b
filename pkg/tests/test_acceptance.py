"""Acceptance criteria, one test per criterion.

Each test times itself against its budget and prints a single
``criterion k: PASS|FAIL`` line (shown even when pytest captures output).
"""

import time

import pytest

from irratio.bounds import bounds_table, decompose_dimension, min_degree
from irratio.poly import (
    GVariant,
    PolyRing,
    b_is_square,
    build_g,
    check_cond_pure_powers,
    check_cond_square_mod_coords,
    g_degree,
    multivariate_sqrt,
)
from irratio.symbol import Verdict, certify_alpha_nonzero
from irratio.witness import (
    Variant,
    WitnessParams,
    build_double_cover_witness,
    build_witness_hypersurface,
    run_oracle,
    verify_certificate,
)
from redteam import mutated_documents

GRID_CHECKS = (
    "pure_powers",
    "square_mod_coordinates",
    "e0_factorization",
    "coprime",
    "q_similar_to_e_form",
    "e_subform_of_pfister",
    "t0_isotropy",
    "b_not_square",
    "plane_multiplicity",
)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, elapsed, budget, note=""):
        in_time = budget is None or elapsed < budget
        status = "PASS" if ok and in_time else "FAIL"
        limit = f" (< {budget} s)" if budget is not None else ""
        extra = f" - {note}" if note else ""
        with capsys.disabled():
            print(f"\ncriterion {number}: {status}  {title}  [{elapsed:.2f} s{limit}]{extra}")
        assert ok, f"criterion {number} failed: {note}"
        assert in_time, f"criterion {number} exceeded {budget} s ({elapsed:.2f} s)"

    return emit


def test_criterion_1_table(report):
    start = time.perf_counter()
    rows = bounds_table(1032)
    ok = [r.dim_max for r in rows] == [4, 9, 18, 35, 68, 133, 262, 519, 1032]
    ok = ok and [r.deg_min for r in rows] == list(range(4, 13))
    report(1, "bounds table up to dimension 1032", ok, time.perf_counter() - start, 1)


def test_criterion_2_named_cases(report):
    start = time.perf_counter()
    ok = (
        decompose_dimension(3) == (2, 1)
        and min_degree(3) == 4
        and min_degree(4) == 4
        and min_degree(5) == 5
        and min_degree(1048576) == 22
    )
    report(2, "named dimension/degree cases", ok, time.perf_counter() - start, 1)


def test_criterion_3_alpha(report):
    start = time.perf_counter()
    bad = []
    for n in range(1, 17):
        cert = certify_alpha_nonzero(n)
        if not (
            cert.verdict is Verdict.NONZERO
            and len(cert.divisor_sequence) == n - 1
            and cert.final.label() == "(x0*x1)"
        ):
            bad.append(n)
    report(3, "alpha residue certificates n = 1..16", not bad, time.perf_counter() - start, 1, f"bad n: {bad}" if bad else "")


def test_criterion_4_witness_grid(report):
    start = time.perf_counter()
    bad, count = [], 0
    for n in (2, 3, 4):
        for r in range(1, 2**n - 1):
            for d in (n + 2, n + 3):
                cert = build_witness_hypersurface(WitnessParams(n, r, d))
                count += 1
                ok = cert.verdict == "PASS" and all(cert.check(c).status == "pass" for c in GRID_CHECKS)
                ok = ok and f"multiplicity {d - 2}" in cert.check("plane_multiplicity").detail
                if d % 2:
                    ok = ok and cert.data.lam.label() == cert.data.mu.label() == "x0*x1"
                if not ok:
                    bad.append((n, r, d, cert.failed))
    report(4, f"hypersurface witness grid ({count} witnesses)", not bad, time.perf_counter() - start, 60, str(bad) if bad else "")


def test_criterion_5_double_cover_grid(report):
    start = time.perf_counter()
    bad, count = [], 0
    for n in (2, 3):
        D = g_degree(n)
        for r in range(1, 2**n - 1):
            for d in (D + 2, D + 4):
                cert = build_double_cover_witness(WitnessParams(n, r, d, Variant.DOUBLE_COVER))
                count += 1
                ok = cert.verdict == "PASS" and cert.data.lam.label() == cert.data.mu.label() == "x1*x2"
                if not ok:
                    bad.append((n, r, d, cert.failed))
    report(5, f"double-cover witness grid ({count} witnesses)", not bad, time.perf_counter() - start, 30, str(bad) if bad else "")


def test_criterion_6_hpt(report):
    start = time.perf_counter()
    ring = PolyRing(["x0", "x1", "x2"])
    g = ring.parse("x0^2 + x1^2 + x2^2 - 2*x0*x1 - 2*x0*x2 - 2*x1*x2")
    ok = (
        check_cond_pure_powers(g, 2)
        and check_cond_square_mod_coords(g, 2)
        and multivariate_sqrt(g.substitute_zero("x2")) == ring.parse("x0 - x1")
    )
    report(6, "conic example g passes both conditions", ok, time.perf_counter() - start, None)


def test_criterion_7_oracle(report):
    start = time.perf_counter()
    cert = build_witness_hypersurface(WitnessParams(2, 2, 6), samples=200)
    record = run_oracle(cert.data)
    ok = record["p"] == 101 and record["accepted"] == 200 and record["failures"] == 0 and record["status"] == "pass"
    note = f"{record['accepted']} points, {record['failures']} failures"
    report(7, "finite-field oracle for (n, r, d) = (2, 2, 6)", ok, time.perf_counter() - start, 10, note)


def test_criterion_8_red_team(report):
    start = time.perf_counter()
    misses, count = [], 0
    for mutation, doc in mutated_documents():
        count += 1
        result = verify_certificate(doc)
        if result.verdict != "FAIL" or mutation.expected not in result.failed:
            misses.append((mutation.name, result.verdict, result.failed))
    ok = count == 20 and not misses
    report(8, f"{count} mutated certificates rejected at the named check", ok, time.perf_counter() - start, None, str(misses) if misses else "")


def test_criterion_9_variants(report):
    start = time.perf_counter()
    bad = []
    for p in (3, 7, 101):
        for n in (2, 3):
            cert = build_witness_hypersurface(
                WitnessParams(n, 2**n - 2, n + 2, g_variant=GVariant.FINITE_FIELD, p=p), samples=50
            )
            for name in ("pure_powers", "square_mod_coordinates", "b_not_square"):
                if cert.check(name).status != "pass":
                    bad.append(("finite-field", p, n, name))
        for n in range(1, 8):
            g = build_g(n, GVariant.FINITE_FIELD, p=p)
            if not (check_cond_pure_powers(g, n) and check_cond_square_mod_coords(g, n) and not b_is_square(g)):
                bad.append(("finite-field g", p, n))
    for p0 in (3, 5):
        for n in (2, 3):
            for r in range(1, 2**n - 1):
                cert = build_witness_hypersurface(
                    WitnessParams(n, r, n + 2, g_variant=GVariant.INTEGRAL, p0=p0), samples=20
                )
                if cert.verdict != "PASS":
                    bad.append(("integral", p0, n, r, cert.failed))
    report(9, "finite-field and integral variants of g", not bad, time.perf_counter() - start, 10, str(bad) if bad else "")
