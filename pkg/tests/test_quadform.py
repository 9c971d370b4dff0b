import itertools

import pytest

from irratio.poly import PolyRing
from irratio.quadform import (
    DiagonalForm,
    FiniteFieldForm,
    RejectedPoint,
    RhoMap,
    c_class,
    choose_rho,
    conic_rho,
    conic_scaling,
    conic_similarity_check,
    conic_similarity_witness,
    ff_forms_equivalent,
    ff_isotropic,
    find_scaling_isometry,
    find_scaling_subform,
    graded_lex,
    is_scaled_isometric,
    is_scaled_subform,
    legendre,
    pfister_form,
    q_form,
    sample_points,
    specialize_form,
    t0_isotropy_check,
)
from irratio.squareclass import SquareClass, b_class, multiply, product, trivial


def test_graded_lex_order():
    assert graded_lex(2) == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert graded_lex(3)[:4] == [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_choose_rho_honours_pins():
    rho = choose_rho(3, [(1, (1, 1, 1)), (4, (1, 1, 0))])
    assert rho[0] == (0, 0, 0) and rho[1] == (1, 1, 1) and rho[4] == (1, 1, 0)
    assert sorted(rho.table) == sorted(itertools.product((0, 1), repeat=3))
    assert RhoMap.from_list(3, rho.to_list()) == rho
    with pytest.raises(ValueError):
        choose_rho(2, [(1, (1, 1)), (1, (1, 0))])
    with pytest.raises(ValueError):
        choose_rho(2, [(1, (1, 1)), (2, (1, 1))])
    with pytest.raises(ValueError):
        choose_rho(2, [(0, (1, 0))])


def test_pfister_form_is_closed_under_products():
    for n in range(1, 6):
        psi = pfister_form(n, choose_rho(n))
        entries = set(psi.entries)
        assert len(entries) == 2**n
        assert all(multiply(a, b) in entries for a in entries for b in entries)


def test_q_form_shape():
    rho = choose_rho(2, [(1, (1, 1))])
    q = q_form(2, 2, b_class(2), rho)
    assert q.rank == 4
    assert q.entries[0] == b_class(2)
    assert q.entries[1] == c_class(2, (1, 1))
    with pytest.raises(ValueError):
        q_form(2, 3, b_class(2), rho)
    with pytest.raises(ValueError):
        q_form(2, 1, trivial(2), rho)


def test_scaling_search():
    n = 2
    rho = choose_rho(n)
    psi = pfister_form(n, rho)
    lam = c_class(n, (1, 0))
    scaled = psi.scaled(lam)
    mu = find_scaling_isometry(scaled, psi)
    assert mu is not None and is_scaled_isometric(scaled, psi, mu)
    sub = DiagonalForm(n, psi.entries[:2]).scaled(lam)
    found = find_scaling_subform(sub, psi, prefer=[lam])
    assert found == lam and is_scaled_subform(sub, psi, found)
    alien = DiagonalForm(n, (b_class(n), trivial(n)))
    assert find_scaling_subform(alien, psi) is None


def test_t0_isotropy():
    rho = choose_rho(2, [(1, (1, 1))])
    q = q_form(2, 1, b_class(2), rho)
    assert t0_isotropy_check(q, c_class(2, (1, 1)))
    assert not t0_isotropy_check(q, trivial(2))
    with pytest.raises(ValueError):
        t0_isotropy_check(DiagonalForm(2, (trivial(2), trivial(2))), trivial(2))


@pytest.mark.parametrize("n", range(2, 9))
def test_conic_similarity(n):
    assert conic_similarity_check(n)
    w = conic_similarity_witness(n, conic_rho(n))
    assert w is not None
    assert is_scaled_isometric(q_form(n, 1, b_class(n), conic_rho(n)), conic_scaling(n), w)
    if n == 2:
        assert w.label() == "x0*x2"


def test_finite_field_basics():
    assert [legendre(a, 7) for a in range(7)] == [0, 1, 1, -1, 1, -1, -1]
    f = FiniteFieldForm(7, (1, 3))
    assert ff_isotropic(f)  # -3 = 4 is a square mod 7
    assert not ff_isotropic(FiniteFieldForm(7, (1, 1)))
    assert ff_forms_equivalent(FiniteFieldForm(7, (1, 2)), FiniteFieldForm(7, (1, 1)))
    assert not ff_forms_equivalent(FiniteFieldForm(7, (1, 3)), FiniteFieldForm(7, (1, 1)))
    assert not ff_forms_equivalent(FiniteFieldForm(7, (1,)), FiniteFieldForm(7, (1, 1)))
    with pytest.raises(ValueError):
        FiniteFieldForm(7, (0, 1))
    with pytest.raises(ValueError):
        ff_isotropic(FiniteFieldForm(101, (1,) * 5), budget=1000)


def test_equivalence_matches_exhaustive_isometry_for_small_rank():
    p = 5
    for a in itertools.product(range(1, p), repeat=2):
        for b in itertools.product(range(1, p), repeat=2):
            fa, fb = FiniteFieldForm(p, a), FiniteFieldForm(p, b)
            values = lambda f: sorted(
                (f.coeffs[0] * x * x + f.coeffs[1] * y * y) % p for x in range(p) for y in range(p)
            )
            assert ff_forms_equivalent(fa, fb) == (values(fa) == values(fb))


def test_specialize_and_sample():
    ring = PolyRing.standard(1)
    pts = sample_points(2, 11, 30, seed=1)
    assert len(pts) == 30 and all(all(c % 11 for c in pt) for pt in pts)
    assert pts == sample_points(2, 11, 30, seed=1)
    f = specialize_form([ring.parse("x0"), ring.parse("x0 - x1")], (2, 5), 11)
    assert f.coeffs == (2, 8)
    with pytest.raises(RejectedPoint):
        specialize_form([ring.parse("x0 - x1")], (3, 3), 11)
    with pytest.raises(RuntimeError):
        sample_points(1, 3, 5, seed=0, accept=lambda pt: False, max_tries=10)
