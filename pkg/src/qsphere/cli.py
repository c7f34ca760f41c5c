"""Command-line front-end: ``qsphere verify|act|d|lc|podles``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import connection, hopf, podles, verify
from .algebra import degree_cap, get_degree_cap
from .calculus import d as differential
from .errors import DegreeCapError, ParseError, QSphereError
from .parser import parse_element

OPS = ("E", "F", "K", "Kinv", "X+", "X-", "Xz")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _report_exit(args, report: verify.Report) -> int:
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print("\n".join(report.lines(verbose=args.verbose)))
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    return _report_exit(args, verify.run_suite(args.suite))


def cmd_act(args) -> int:
    side = hopf.LEFT if args.side == "l" else hopf.RIGHT
    f = parse_element(args.expr)
    out = hopf.operator(args.op, side)(f)
    _emit(args, {"schema": 1, "side": side, "op": args.op, "input": str(f), "result": str(out)}, str(out))
    return 0


def cmd_d(args) -> int:
    f = parse_element(args.expr)
    w = differential(f)
    payload = {"schema": 1, "input": str(f), "result": str(w),
               "left": {f"w{a}": str(g) for a, g in zip(hopf.INDICES, w.left_coeffs())}}
    _emit(args, payload, str(w))
    return 0


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise QSphereError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise QSphereError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc


def cmd_lc(args) -> int:
    h = connection.form_from_json(_load_json(args.metric))
    free = connection.params_from_json(_load_json(args.params)) if args.params else None
    conn = connection.lcSolve(h, free)
    cases = [
        verify.run_case("torsion-free", lambda: connection.checkTorsionFree(conn)),
        verify.run_case("compatible", lambda: connection.checkCompatBasis(conn, h)),
    ]
    report = verify.Report("lc", cases)
    payload = {"schema": 1, "connection": connection.connection_to_json(conn), "report": report.to_dict()}
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(json.dumps(connection.connection_to_json(conn), indent=2))
        print("\n".join(report.lines(verbose=True)))
    return 0 if report.passed else 1


def cmd_projector(args) -> int:
    p = podles.projector(args.n)
    entries = [[p.entry_str(i, j) for j in range(p.size)] for i in range(p.size)]
    checks = {
        "idempotent": p.is_idempotent(),
        "self-adjoint": p.is_self_adjoint(),
        "invariant": p.is_invariant(),
        "weight-rule": p.weight_rule(),
    }
    if args.json:
        # irrational entries are sqrt(w_i w_j) * W_ij; words and weights stay parseable
        words = [[str(x) for x in row] for row in p.words]
        weights = [str(w) for w in p.weights()]
        print(json.dumps({"schema": 1, "n": args.n, "entries": entries, "words": words,
                          "weights": weights, "checks": checks}, indent=2))
    else:
        width = max(len(e) for row in entries for e in row)
        for row in entries:
            print("  ".join(e.ljust(width) for e in row))
        for k, v in checks.items():
            print(f"{k}: {'pass' if v else 'fail'}")
    return 0 if all(checks.values()) else 1


def cmd_relrvf(args) -> int:
    cases = [verify.run_case(f"rel-rvf/m={m:+d},n={n}", lambda m=m, n=n: podles.checkRelRvf(m, n))
             for m, n in podles.sweep(args.mmax, args.nmax)]
    return _report_exit(args, verify.Report("rel-rvf", cases))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--degree-cap", type=int, default=None, metavar="N",
                        help=f"maximum monomial degree (default {get_degree_cap()})")

    ap = argparse.ArgumentParser(prog="qsphere", description="Exact checks on S^3_q and the Podles sphere.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", choices=("all",) + tuple(verify.SUITES))
    p.add_argument("-v", "--verbose", action="store_true", help="list passing cases too")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("act", parents=[common], help="apply E, F, K, Kinv or X_a from the left or right")
    p.add_argument("--side", choices=("l", "r"), required=True)
    p.add_argument("--op", choices=OPS, required=True)
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("d", parents=[common], help="exterior derivative of an element")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_d)

    p = sub.add_parser("lc", parents=[common], help="Levi-Civita connection of a rank-3 hermitian form")
    p.add_argument("--metric", required=True, metavar="FILE.json")
    p.add_argument("--params", metavar="FILE.json")
    p.set_defaults(func=cmd_lc)

    pod = sub.add_parser("podles", help="Podles sphere utilities")
    psub = pod.add_subparsers(dest="podles_command", required=True)
    p = psub.add_parser("projector", parents=[common], help="the projector p_n")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_projector)
    p = psub.add_parser("verify-relrvf", parents=[common], help="check the Y-relation on X(m) B0^n")
    p.add_argument("--mmax", type=int, default=3)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_relrvf)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.verbose = getattr(args, "verbose", False)
    try:
        if args.degree_cap is not None:
            with degree_cap(args.degree_cap):
                return args.func(args)
        return args.func(args)
    except ParseError as exc:
        print(f"qsphere: parse error: {exc}", file=sys.stderr)
        return 2
    except DegreeCapError as exc:
        print(f"qsphere: degree cap exceeded: {exc}", file=sys.stderr)
        return 3
    except QSphereError as exc:
        print(f"qsphere: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
