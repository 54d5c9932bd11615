"""Command-line surface.

Subcommands: bounds, classify, construct, decompose, gdd, dioph, brute,
verify.  Exit codes: 0 success, 1 verification failed or no witness
where one was demanded, 2 invalid input, 3 budget exceeded.  The
TRIPLEPACK_BUDGET environment variable sets the default search budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import jsonio
from .decomp import SearchStatus, find_triangle_decomposition, verify_decomposition
from .dioph import solve_avoidance
from .errors import TriplepackError
from .gdd import (
    gadget_multigraph,
    lgdd_exists,
    search_simple_gdd,
    simple_gdd_exists,
    simple_ts_exists,
    verify_gdd,
)
from .leave import achieved_lower_bound
from .oracle import ReportStatus, max_packing, verify_packing
from .params import classify, j_prime, johnson_bound, upper_bound

OK, FAIL, BAD_INPUT, BUDGET = 0, 1, 2, 3


def _default_budget():
    raw = os.environ.get("TRIPLEPACK_BUDGET")
    return int(raw) if raw else None


def _parse_range(spec: str):
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return range(int(lo), int(hi) + 1)
    return range(int(spec), int(spec) + 1)


def _load(path):
    with open(path) as fh:
        return json.load(fh)


def _emit(payload: dict, out: str | None):
    text = jsonio.dumps(payload)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_bounds(args) -> int:
    rows = []
    for n in _parse_range(args.n):
        if n <= args.k:
            continue
        label, _ = classify(n, args.k)
        jp = j_prime(n, args.k)
        try:
            achieved, _cert = achieved_lower_bound(n, args.k)
        except TriplepackError:
            achieved = None
        rows.append(
            {
                "n": n,
                "k": args.k,
                "case": label.value,
                "johnson": johnson_bound(n, args.k, 3),
                "j_prime": jp,
                "upper": upper_bound(n, args.k),
                "achieved": achieved,
            }
        )
    if args.format == "json":
        _emit({"bounds": rows}, args.out)
    else:
        print(f"{'n':>6} {'case':<10} {'J':>10} {'J_prime':>10} {'upper':>10} {'achieved':>10}")
        for r in rows:
            ach = "-" if r["achieved"] is None else r["achieved"]
            print(
                f"{r['n']:>6} {r['case']:<10} {r['johnson']:>10} "
                f"{r['j_prime']:>10} {r['upper']:>10} {ach:>10}"
            )
    return OK


def _cmd_classify(args) -> int:
    print(f"{'n':>6} {'k':>4} {'case':<10} residues")
    for n in _parse_range(args.n):
        if n <= args.k:
            continue
        label, data = classify(n, args.k)
        extra = {
            key: getattr(data, key)
            for key in ("r", "gamma", "gamma0", "q_beta", "p", "q_excess", "star_holds")
            if getattr(data, key) is not None
        }
        print(f"{n:>6} {args.k:>4} {label.value:<10} {extra}")
    return OK


def _cmd_construct(args) -> int:
    try:
        _xi, cert = achieved_lower_bound(args.n, args.k)
    except TriplepackError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return FAIL
    _emit(jsonio.certificate_to_dict(cert), args.out)
    return OK


def _cmd_decompose(args) -> int:
    g = jsonio.multigraph_from_dict(_load(args.input))
    res = find_triangle_decomposition(g, budget=args.budget)
    if res.status is SearchStatus.FOUND:
        _emit(
            {"status": "found", "triangles": jsonio.blocks_to_list(res.cliques)},
            args.out,
        )
        return OK
    if res.status is SearchStatus.BUDGET:
        _emit({"status": "budget-exceeded", "nodes": res.nodes}, args.out)
        return BUDGET
    _emit({"status": "none-found", "nodes": res.nodes}, args.out)
    return FAIL


def _cmd_gdd(args) -> int:
    row = {
        "g": args.g,
        "u": args.u,
        "lambda": args.lam,
        "simple_gdd_exists": simple_gdd_exists(args.g, args.u, args.lam),
        "lgdd_exists": lgdd_exists(args.g, args.u, args.lam),
    }
    if args.g == 1:
        row["simple_ts_exists"] = simple_ts_exists(args.u, args.lam)
    if args.search:
        status, inst, nodes = search_simple_gdd(args.g, args.u, args.lam, args.budget)
        row["search"] = status.value
        if inst is not None:
            row["witness"] = jsonio.gdd_to_dict(inst)
        _emit(row, args.out)
        if status is SearchStatus.BUDGET:
            return BUDGET
        return OK if status is SearchStatus.FOUND else FAIL
    _emit(row, args.out)
    return OK


def _cmd_dioph(args) -> int:
    inst = jsonio.dioph_from_dict(_load(args.input))
    x = solve_avoidance(inst)
    _emit({"solution": x}, args.out)
    return OK


def _cmd_brute(args) -> int:
    report = max_packing(args.n, args.k, args.t, args.budget)
    payload = {
        "n": args.n,
        "k": args.k,
        "t": args.t,
        "status": report.status.value,
        "value": report.value,
        "nodes": report.nodes_explored,
    }
    if report.witness is not None:
        payload["blocks"] = jsonio.blocks_to_list(report.witness)
    _emit(payload, args.out)
    if report.status is ReportStatus.BUDGET:
        return BUDGET
    return OK


def _cmd_verify(args) -> int:
    data = _load(args.input)
    kind = jsonio.identify(data)
    ok = False
    if kind == "certificate":
        cert = jsonio.certificate_from_dict(data)
        ok = cert.conditions().all_pass() and cert.xi <= upper_bound(cert.n, cert.k)
        for item in cert.evidence:
            if item.kind == "simple-gdd" and item.blocks:
                g, u, lam = item.params
                ok = ok and verify_decomposition(
                    gadget_multigraph(g, u, lam), item.blocks
                )
    elif kind == "gdd":
        ok = verify_gdd(jsonio.gdd_from_dict(data), require_simple=True)
    elif kind == "packing":
        ok = verify_packing(jsonio.packing_from_dict(data))
    elif kind == "multigraph":
        g = jsonio.multigraph_from_dict(data)
        g.validate()
        ok = True
    elif kind == "dioph":
        jsonio.dioph_from_dict(data)
        ok = True
    print(f"{kind}: {'ok' if ok else 'FAILED'}")
    return OK if ok else FAIL


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="triplepack",
        description="Bounds, constructions and certificates for triple packing numbers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--out", help="write JSON output to a file")
        return p

    p = add("bounds", _cmd_bounds, help="bound table over a range of n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", required=True, help="single value or range a..b")
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = add("classify", _cmd_classify, help="residue-case table")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", required=True, help="single value or range a..b")

    p = add("construct", _cmd_construct, help="emit a leave certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("decompose", _cmd_decompose, help="triangle-decompose a multigraph")
    p.add_argument("--input", required=True)
    p.add_argument("--budget", type=int, default=_default_budget())

    p = add("gdd", _cmd_gdd, help="GDD existence predicates / witness search")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--lam", type=int, required=True)
    p.add_argument("--search", action="store_true")
    p.add_argument("--budget", type=int, default=_default_budget())

    p = add("dioph", _cmd_dioph, help="solve a congruence/avoidance instance")
    p.add_argument("--input", required=True)

    p = add("brute", _cmd_brute, help="exact maximum packing, desk scale")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--budget", type=int, default=_default_budget())

    p = add("verify", _cmd_verify, help="re-check a JSON artifact")
    p.add_argument("input")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (TriplepackError, FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
