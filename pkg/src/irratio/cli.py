"""Command line front end.

Exit codes: 0 pass, 1 usage error, 2 a check failed, 3 certificate tampered.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, symbol
from .poly import GVariant
from .witness import (
    DEFAULT_SEED,
    ORACLE_SAMPLES,
    CertificateError,
    InfeasibleParameters,
    Variant,
    WitnessParams,
    build_conic_witness,
    build_double_cover_witness,
    build_witness_hypersurface,
    read_certificate,
    run_oracle,
    verify_certificate,
    write_certificate,
)

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_TAMPERED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="irratio", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="build a witness and write its certificate")
    kind = gen.add_mutually_exclusive_group()
    kind.add_argument("--double-cover", action="store_true")
    kind.add_argument("--conic", action="store_true", help="conic bundle over P^(N-1); needs --N")
    gen.add_argument("--n", type=int)
    gen.add_argument("--r", type=int)
    gen.add_argument("--d", type=int)
    gen.add_argument("--N", type=int, dest="N")
    gen.add_argument("--g-variant", choices=[v.value for v in GVariant], default=GVariant.PARAMETRIC.value)
    gen.add_argument("--p", type=int, help="prime for the finite-field variant")
    gen.add_argument("--p0", type=int, default=3, help="prime for the integral variant")
    gen.add_argument("--h", help="linear form h (default x0 + x1)")
    gen.add_argument("--seed", type=int, default=DEFAULT_SEED)
    gen.add_argument("--samples", type=int, default=ORACLE_SAMPLES)
    gen.add_argument("--out", "-o", help="certificate path (default: stdout)")

    chk = sub.add_parser("check", help="re-verify a certificate file")
    chk.add_argument("path")

    bd = sub.add_parser("bounds", help="dimension/degree table")
    grp = bd.add_mutually_exclusive_group(required=True)
    grp.add_argument("--max-dim", type=int)
    grp.add_argument("--dim", type=int)
    bd.add_argument("--json", action="store_true", help="machine-readable rows")

    res = sub.add_parser("residue", help="iterated residues of alpha = (a1, ..., an)")
    res.add_argument("--n", type=int, required=True)
    res.add_argument("--json", action="store_true")

    orc = sub.add_parser("oracle", help="finite-field consistency oracle for a witness")
    orc.add_argument("--double-cover", action="store_true")
    orc.add_argument("--n", type=int, required=True)
    orc.add_argument("--r", type=int, required=True)
    orc.add_argument("--d", type=int, required=True)
    orc.add_argument("--samples", type=int, default=ORACLE_SAMPLES)
    orc.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return ap


def _witness_params(args) -> WitnessParams:
    for name in ("n", "r", "d"):
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required")
    variant = Variant.DOUBLE_COVER if args.double_cover else Variant.HYPERSURFACE
    return WitnessParams(args.n, args.r, args.d, variant, GVariant(args.g_variant), args.p, args.p0)


def cmd_gen(args) -> int:
    if args.conic:
        if args.N is None:
            raise UsageError("--conic needs --N")
        cert = build_conic_witness(args.N, g_variant=GVariant(args.g_variant), p0=args.p0, seed=args.seed, samples=args.samples)
    else:
        params = _witness_params(args)
        build = build_double_cover_witness if args.double_cover else build_witness_hypersurface
        cert = build(params, h=args.h, seed=args.seed, samples=args.samples)
    if args.out:
        write_certificate(cert, args.out)
        print(f"{cert.verdict}: wrote {args.out}")
    else:
        sys.stdout.write(cert.to_json())
    for c in cert.checks:
        if not c.ok:
            print(f"FAIL {c.name}: {c.detail}", file=sys.stderr)
    return EXIT_OK if cert.verdict == "PASS" else EXIT_FAIL


def cmd_check(args) -> int:
    try:
        cert = read_certificate(args.path)
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc}") from exc
    report = verify_certificate(cert)
    print(report.verdict)
    for name in report.failed:
        detail = next(c.detail for c in report.checks if c.name == name)
        print(f"  failed {name}: {detail}")
    for name in report.mismatched:
        print(f"  record mismatch: {name}")
    return {"PASS": EXIT_OK, "FAIL": EXIT_FAIL, "TAMPERED": EXIT_TAMPERED}[report.verdict]


def cmd_bounds(args) -> int:
    value = args.max_dim if args.max_dim is not None else args.dim
    if value < 3:
        raise UsageError("dimension must be at least 3")
    if args.dim is not None:
        n, r = bounds.decompose_dimension(args.dim)
        deg = bounds.min_degree(args.dim)
        if args.json:
            print(json.dumps({"N": args.dim, "n": n, "r": r, "min_degree": deg}, sort_keys=True))
        else:
            print(f"n={n} r={r} min-degree {deg}")
        return EXIT_OK
    rows = bounds.bounds_table(args.max_dim)
    if args.json:
        print(json.dumps([{"dim_max": r.dim_max, "deg_min": r.deg_min, "n": r.n} for r in rows], sort_keys=True))
    else:
        print(bounds.format_table(rows))
    return EXIT_OK


def cmd_residue(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    cert = symbol.certify_alpha_nonzero(args.n)
    if args.json:
        print(json.dumps(cert.to_dict(), sort_keys=True, indent=2))
    else:
        print(f"start: {cert.start.label()}")
        for i, s in zip(cert.divisor_sequence, cert.intermediate[1:]):
            print(f"residue along x{i}: {s.label()}")
        print(f"verdict: {cert.verdict.value}")
    return EXIT_OK if cert.verdict is symbol.Verdict.NONZERO else EXIT_FAIL


def cmd_oracle(args) -> int:
    params = _witness_params(argparse.Namespace(**vars(args), g_variant=GVariant.PARAMETRIC.value, p=None, p0=3))
    build = build_double_cover_witness if args.double_cover else build_witness_hypersurface
    cert = build(params, samples=args.samples, seed=args.seed)
    record = run_oracle(cert.data)
    print(json.dumps(record, sort_keys=True))
    return EXIT_OK if record["status"] == "pass" else EXIT_FAIL


COMMANDS = {"gen": cmd_gen, "check": cmd_check, "bounds": cmd_bounds, "residue": cmd_residue, "oracle": cmd_oracle}


def main(argv=None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (UsageError, InfeasibleParameters, CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
