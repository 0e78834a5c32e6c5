"""Command-line interface: construct sets, certify them, export codes.

Exit codes: 0 success, 1 verification mismatch or failed check, 2 bad
parameters or I/O problems.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import covcode, saturate, verify
from .errors import SatgeomError
from .gftower import field_spec, spec_from_dict, spec_to_dict, split_prime_power
from .projgeom import theta
from .ylines import certify_isomorphism


# --- set files ---

def set_to_dict(s: saturate.SaturatingSet) -> dict:
    gf = s.gf
    sub_degree = None
    if s.q_sub is not None:
        sub_degree = split_prime_power(s.q_sub)[1]
    return {
        "field": spec_to_dict(gf),
        "subfield_degree": sub_degree,
        "n": s.n,
        "rho": s.rho,
        "points": [[list(gf.coeffs(c)) for c in pt] for pt in s.points],
        "provenance": list(s.provenance),
    }


def set_from_dict(doc: dict) -> saturate.SaturatingSet:
    gf = spec_from_dict(doc["field"])
    q_sub = None
    if doc.get("subfield_degree"):
        q_sub = gf.p ** int(doc["subfield_degree"])
    points = tuple(
        tuple(gf.from_coeffs(c) for c in pt) for pt in doc["points"]
    )
    return saturate.SaturatingSet(
        n=int(doc["n"]),
        rho=int(doc["rho"]),
        q_sub=q_sub,
        gf=gf,
        points=points,
        provenance=tuple(doc["provenance"]),
    )


def write_set(s: saturate.SaturatingSet, path):
    with open(path, "w") as fh:
        json.dump(set_to_dict(s), fh, sort_keys=True, indent=2)
        fh.write("\n")


def read_set(path) -> saturate.SaturatingSet:
    with open(path) as fh:
        return set_from_dict(json.load(fh))


# --- subcommands ---

def cmd_construct(args) -> int:
    q = args.qprime ** (args.rho + 1)
    if args.trivial:
        p, e = split_prime_power(q)
        s = saturate.build_trivial_set(args.n, args.rho, field_spec(p, e), q_sub=args.qprime)
        bound = verify.trivial_bound(args.n, args.rho, q)
    else:
        s = saturate.build_saturating_set(args.n, args.rho, args.qprime)
        if (args.n + 1) % (args.rho + 1) == 0:
            bound = verify.trivial_bound(args.n, args.rho, q)
        else:
            bound = verify.main_bound(args.n, args.rho, args.qprime)
    if args.out:
        write_set(s, args.out)
    print(f"size={len(s.points)} bound={bound}")
    return 0


def cmd_verify(args) -> int:
    s = read_set(args.set)
    try:
        cert = verify.saturation_radius(s.points, s.n, s.gf)
    except SatgeomError as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True))
        return 1
    print(json.dumps(cert.to_dict(), sort_keys=True))
    if args.expect_rho is not None and cert.radius != args.expect_rho:
        return 1
    return 0


def cmd_export(args) -> int:
    s = read_set(args.set)
    code = covcode.parity_check_matrix(s)
    covcode.write_parity_text(code, args.out)
    print(f"n={code.n} r={code.r} q={code.gf.q}")
    return 0


def cmd_radius(args) -> int:
    code = covcode.read_parity_text(args.matrix)
    radius = covcode.covering_radius(code)
    print(f"R={radius}")
    return 0


def cmd_bounds(args) -> int:
    n, rho, qp = args.n, args.rho, args.qprime
    q = qp ** (rho + 1)
    lb = verify.lower_bound(n, rho, q)
    main = verify.main_bound(n, rho, qp)
    simple = str(verify.simple_bound(n, rho, qp)) if rho > 1 else "-"
    if (n + 1) % (rho + 1) == 0:
        trivial = str(verify.trivial_bound(n, rho, q))
    else:
        trivial = "-"
    dens = covcode.covering_density(main, n + 1, rho + 1, q)
    print(
        f"lower~{lb:.2f} main={main} simple={simple} trivial={trivial} "
        f"density={dens.numerator}/{dens.denominator}"
    )
    return 0


def cmd_isocheck(args) -> int:
    rep = certify_isomorphism(args.rho, args.m, args.qprime)
    ok = lambda b: "ok" if b else "FAIL"  # noqa: E731
    print(f"phi bijection: {ok(rep['bijection'])} ({rep['points']} points)")
    print(f"lines: {ok(rep['lines_ok'])} ({rep['lines']})")
    print(f"parallel classes: {ok(rep['classes_ok'])} ({rep['classes']})")
    return 0 if rep["bijection"] and rep["lines_ok"] and rep["classes_ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="satgeom")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a saturating set and write it as JSON")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--rho", type=int, required=True)
    c.add_argument("--qprime", type=int, required=True)
    c.add_argument("--out")
    c.add_argument("--trivial", action="store_true")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="certify the saturation radius of a set file")
    v.add_argument("--set", required=True)
    v.add_argument("--expect-rho", type=int, dest="expect_rho")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="write the parity-check matrix of a set file")
    e.add_argument("--set", required=True)
    e.add_argument("--out", required=True)
    e.set_defaults(func=cmd_export)

    r = sub.add_parser("radius", help="covering radius of a parity-check matrix")
    r.add_argument("--matrix", required=True)
    r.set_defaults(func=cmd_radius)

    b = sub.add_parser("bounds", help="bound table for given parameters")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--rho", type=int, required=True)
    b.add_argument("--qprime", type=int, required=True)
    b.set_defaults(func=cmd_bounds)

    i = sub.add_parser("isocheck", help="certify the line-geometry isomorphism")
    i.add_argument("--rho", type=int, required=True)
    i.add_argument("--m", type=int, required=True)
    i.add_argument("--qprime", type=int, required=True)
    i.set_defaults(func=cmd_isocheck)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SatgeomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
