import json

import pytest

from irratio.poly import GVariant
from irratio.witness import (
    CONCLUSION,
    CertificateError,
    InfeasibleParameters,
    Variant,
    WitnessParams,
    build_conic_witness,
    build_double_cover_witness,
    build_witness_hypersurface,
    certificate_from_dict,
    read_certificate,
    verify_certificate,
    write_certificate,
)
from redteam import mutated_documents


def hs(n, r, d, **kw):
    return build_witness_hypersurface(WitnessParams(n, r, d, **kw), samples=40)


@pytest.mark.parametrize("n,r,d", [(2, 1, 4), (2, 2, 5), (3, 6, 5), (3, 4, 6), (4, 14, 7), (2, 2, 8)])
def test_hypersurface_witness_passes(n, r, d):
    cert = hs(n, r, d)
    assert cert.verdict == "PASS", cert.failed
    assert cert.check("plane_multiplicity").status == "pass"
    assert cert.data.F.degree == d
    label = "x0*x1" if d % 2 else "1"
    assert cert.data.mu.label() == cert.data.lam.label() == label


def test_custom_h():
    cert = build_witness_hypersurface(WitnessParams(2, 2, 6), h="x0 - 2*x2", samples=10)
    assert cert.verdict == "PASS"
    assert "x2" in cert.data.h.to_text()
    with pytest.raises(InfeasibleParameters):
        build_witness_hypersurface(WitnessParams(2, 2, 6), h="x1", samples=10)


@pytest.mark.parametrize("n,r,d", [(2, 2, 6), (2, 1, 8), (3, 4, 6), (3, 6, 10)])
def test_double_cover_witness_passes(n, r, d):
    cert = build_double_cover_witness(WitnessParams(n, r, d, Variant.DOUBLE_COVER), samples=40)
    assert cert.verdict == "PASS", cert.failed
    assert cert.data.mu.label() == cert.data.lam.label() == "x1*x2"


@pytest.mark.parametrize("N", [3, 4, 5, 9])
def test_conic_witness(N):
    cert = build_conic_witness(N)
    assert cert.verdict == "PASS", cert.failed
    assert cert.check("oracle").status == "n/a"


@pytest.mark.parametrize(
    "args,message",
    [
        ((2, 3, 4), "r <= 2^n - 2"),
        ((2, 0, 4), "r >= 1"),
        ((3, 2, 4), "d >= n + 2"),
        ((1, 1, 4), "n >= 2"),
    ],
)
def test_infeasible_parameters_name_the_inequality(args, message):
    with pytest.raises(InfeasibleParameters, match=message.replace("^", r"\^").replace("+", r"\+")):
        build_witness_hypersurface(WitnessParams(*args))


def test_double_cover_needs_even_large_degree():
    with pytest.raises(InfeasibleParameters, match="d even"):
        build_double_cover_witness(WitnessParams(2, 1, 7, Variant.DOUBLE_COVER))
    with pytest.raises(InfeasibleParameters):
        build_double_cover_witness(WitnessParams(2, 1, 4, Variant.DOUBLE_COVER))


@pytest.mark.parametrize("p", [3, 7, 101])
def test_finite_field_variant(p):
    cert = build_witness_hypersurface(
        WitnessParams(2, 2, 4, g_variant=GVariant.FINITE_FIELD, p=p), samples=30
    )
    for name in ("pure_powers", "square_mod_coordinates", "b_not_square"):
        assert cert.check(name).status == "pass"
    assert cert.check("t0_isotropy").status == "n/a"
    assert cert.data.ring.field_name == f"GF({p})"
    with pytest.raises(InfeasibleParameters):
        WitnessParams(2, 1, 4, g_variant=GVariant.FINITE_FIELD, p=p).validate()


@pytest.mark.parametrize("p0", [3, 5])
def test_integral_variant(p0):
    cert = build_witness_hypersurface(WitnessParams(3, 6, 6, g_variant=GVariant.INTEGRAL, p0=p0), samples=30)
    assert cert.verdict == "PASS", cert.failed


def test_certificate_round_trip(tmp_path):
    cert = hs(2, 2, 6)
    path = tmp_path / "w.json"
    write_certificate(cert, path)
    text = path.read_text()
    doc = json.loads(text)
    assert doc["conclusion"] == CONCLUSION
    assert doc["conclusion"]["label"] == "CITED-THEOREM"
    again = read_certificate(path)
    assert again.to_json() == text
    assert verify_certificate(again).verdict == "PASS"
    assert hs(2, 2, 6).to_json() == text  # deterministic


def test_tampered_record_is_reported(tmp_path):
    cert = hs(2, 2, 6)
    doc = cert.to_dict()
    doc["checks"][3]["status"] = "fail"
    doc["verdict"] = "FAIL"
    report = verify_certificate(doc)
    assert report.verdict == "TAMPERED"
    assert "rho_pins" in report.mismatched and "verdict" in report.mismatched
    doc = cert.to_dict()
    doc["oracle"]["accepted"] = 199
    assert verify_certificate(doc).verdict == "TAMPERED"


def test_malformed_certificates(tmp_path):
    doc = hs(2, 1, 4).to_dict()
    bad = dict(doc)
    del bad["rho"]
    with pytest.raises(CertificateError):
        certificate_from_dict(bad)
    with pytest.raises(CertificateError):
        certificate_from_dict({**doc, "schema_version": "other/9"})
    with pytest.raises(CertificateError):
        certificate_from_dict({**doc, "polynomials": {**doc["polynomials"], "g": "x0^2 + x1"}})
    trunc = tmp_path / "t.json"
    trunc.write_text(json.dumps(doc)[:200])
    with pytest.raises(CertificateError):
        read_certificate(trunc)


@pytest.mark.parametrize("mutation_doc", list(mutated_documents()), ids=lambda md: md[0].name)
def test_red_team(mutation_doc):
    mutation, doc = mutation_doc
    report = verify_certificate(doc)
    assert report.verdict == "FAIL"
    assert mutation.expected in report.failed, report.failed
