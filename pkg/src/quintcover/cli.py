"""Command-line front end.

JSON goes to standard output with sorted keys and canonical rational strings,
so identical invocations give identical bytes.  A one-line summary (with the
elapsed time) goes to standard error unless ``--quiet`` is given.

Exit status: 0 pass, 1 fail or domain error, 2 usage error, 3 internal error.
"""

from __future__ import annotations

import argparse
import re
import sys
import time
from fractions import Fraction

from .cover import CoverParams, build_cover, classify_case, f4_roots, uv_invariants
from .curve import (
    Genus2Curve,
    case1_curve,
    case2_curve,
    case3_curve,
    case3_oracle_curve,
    curve_from_cover,
    curve_from_cover_general,
    subcover,
)
from .errors import QuintCoverError
from .exactalg import parse_rational
from .igusa import absolute, igusa_from_curve, reduced_aut_group_numeric
from .loci import (
    is_v4_point,
    nielsen_count,
    recover_case3,
    recover_parameter,
    u_of_a,
    y1_formulas,
    y2_formulas,
    y3_membership,
)
from .report import dumps
from .verify import SUITES, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _rat(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError, QuintCoverError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational 'p/q': {text!r}") from exc


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError("missing option(s): " + ", ".join("--" + m.replace("_", "-") for m in missing))


# -- verbs -------------------------------------------------------------------------------
def _cover(args) -> tuple[bool, dict]:
    _require(args, "a", "b")
    data = build_cover(CoverParams(args.a, args.b))
    return True, data.to_json()


def _pick_root(params: CoverParams, index: int):
    roots = [r.value for r in f4_roots(params) if not r.is_one]
    if index >= len(roots):
        raise UsageError(f"--root {index} out of range ({len(roots)} usable roots)")
    return roots[index]


def _build_curve(args) -> tuple[Genus2Curve, object]:
    if args.case is not None:
        _require(args, "a")
        if args.case == "I":
            return case1_curve(args.a)
        if args.case == "II":
            return case2_curve(args.a)
        if args.model == "oracle":
            return case3_oracle_curve(args.a, branch=args.root), None
        return case3_curve(args.a, branch=args.root)
    _require(args, "a", "b")
    params = CoverParams(args.a, args.b)
    z = _pick_root(params, args.root)
    if isinstance(z, Fraction):
        return curve_from_cover(args.a, args.b, z), subcover(args.a, args.b, z)
    return curve_from_cover_general(args.a, args.b, z), subcover(args.a, args.b, z)


def _curve(args) -> tuple[bool, dict]:
    curve, sub = _build_curve(args)
    return True, {"curve": curve.to_json(), "subcover": sub.to_json() if sub is not None else None}


def _invariants(args) -> tuple[bool, dict]:
    if args.coeffs is not None:
        curve = Genus2Curve(tuple(_rat(c) for c in args.coeffs.split(",")))
    else:
        curve, _ = _build_curve(args)
    inv = igusa_from_curve(curve)
    out = {"igusa": inv.to_json(), "curve": curve.to_json()}
    out["absolute"] = absolute(inv).to_json() if inv.J2 != 0 else None
    if args.aut:
        rep = reduced_aut_group_numeric(curve, args.precision_bits)
        out["aut"] = rep.to_json()
    return True, out


def _locus(args) -> tuple[bool, dict]:
    if args.case in ("I", "II"):
        _require(args, "T")
        f = y1_formulas if args.case == "I" else y2_formulas
        i1, i2, i3, j = f(args.T)
        return True, {
            "case": args.case, "T": args.T, "i1": i1, "i2": i2, "i3": i3, "j": j,
            "v4": is_v4_point(args.T, args.case),
        }
    if args.case == "III":
        _require(args, "a")
        u, v = u_of_a(args.a)
        return True, {"case": "III", "a": args.a, "u": u, "v": v, "v4": is_v4_point(args.a, "III")}
    _require(args, "a", "b")
    params = CoverParams(args.a, args.b)
    u, v = uv_invariants(params)
    return True, {
        "a": args.a, "b": args.b, "case": classify_case(params).value, "u": u, "v": v,
        "on_case_III_locus": y3_membership(args.a, args.b),
    }


def _recover(args) -> tuple[bool, dict]:
    _require(args, "case", "i1", "i2", "i3")
    if args.case == "III":
        u, v = recover_case3(args.i1, args.i2, args.i3)
        return True, {"case": "III", "u": u, "v": v}
    return True, recover_parameter(args.i1, args.i2, args.i3, args.case).to_json()


def _nielsen(args) -> tuple[bool, dict]:
    _require(args, "group", "types")
    return True, nielsen_count(args.group, args.types).to_json()


def _verify(args) -> tuple[bool, dict]:
    reports = run_suite(args.suite, args.seed)
    ok = all(r.passed for r in reports)
    return ok, {"suite": args.suite, "seed": args.seed, "checks": [r.to_json() for r in reports]}


VERBS = {
    "cover": _cover,
    "curve": _curve,
    "invariants": _invariants,
    "locus": _locus,
    "recover": _recover,
    "nielsen": _nielsen,
    "verify": _verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action=argparse.BooleanOptionalAction, default=True, help="emit JSON (default on)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--precision-bits", type=int, default=128)
    common.add_argument("--quiet", action="store_true")

    p = argparse.ArgumentParser(prog="quintcover", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    s = verb("cover", "F1..F4, phi and the ramification case at (a, b)")
    s.add_argument("--a", type=_rat)
    s.add_argument("--b", type=_rat)

    for name, help_ in (("curve", "genus-2 curve and elliptic subcover"), ("invariants", "Igusa and absolute invariants")):
        s = verb(name, help_)
        s.add_argument("--a", type=_rat)
        s.add_argument("--b", type=_rat)
        s.add_argument("--case", choices=["I", "II", "III"])
        s.add_argument("--root", type=int, default=0, help="which F4 root (or case III b-branch)")
        s.add_argument("--model", choices=["closed", "oracle"], default="closed", help="case III model")
        if name == "invariants":
            s.add_argument("--coeffs", help="ascending coefficients of f, comma separated")
            s.add_argument("--aut", action="store_true", help="numeric reduced automorphism group")

    s = verb("locus", "formulas along a degenerate locus, or locus data at (a, b)")
    s.add_argument("--case", choices=["I", "II", "III"])
    s.add_argument("--T", type=_rat)
    s.add_argument("--a", type=_rat)
    s.add_argument("--b", type=_rat)

    s = verb("recover", "locus parameter from absolute invariants")
    s.add_argument("--case", choices=["I", "II", "III"])
    for k in ("i1", "i2", "i3"):
        s.add_argument(f"--{k}", type=_rat)

    s = verb("nielsen", "count Nielsen classes by brute force")
    s.add_argument("--group", choices=["S5", "A5"])
    s.add_argument("--types", help='comma-separated cycle types, e.g. "2^2,2^2,4,2"')

    s = verb("verify", "run a verification suite")
    s.add_argument("--suite", choices=["all", *SUITES], default="all")
    return p


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Rewrite '--opt -3/2' as '--opt=-3/2'; argparse reads '-3/2' as an option otherwise."""
    out: list[str] = []
    for tok in argv:
        if out and re.match(r"-[\d.]", tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _attach_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    start = time.perf_counter()
    try:
        ok, payload = VERBS[args.verb](args)
        status = "pass" if ok else "fail"
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuintCoverError as exc:
        status, payload = "error", {"error": exc.code, "message": str(exc)}
    except Exception as exc:  # pragma: no cover - reported as an internal error
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    if args.json:
        print(dumps({"status": status, "payload": payload}))
    if not args.quiet:
        print(f"{args.verb}: {status} ({elapsed_ms} ms)", file=sys.stderr)
        if args.verb == "verify":
            for check in payload["checks"]:
                print(f"  {check['status']:4} {check['check']}", file=sys.stderr)
    return EXIT_PASS if status == "pass" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
