"""Command-line entry point.

Exit codes: 0 success / verified, 1 verification failed, 2 usage or input
error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import designs, extremal, lagrange, metric
from .blowup import classify_edges, read_spec, recursion_violations
from .errors import BudgetExceeded, NoSuchDesign, TuranLabError
from .hypercore import (
    find_clique,
    find_generalized_triangle,
    find_sigma_member,
    find_thin_violation,
    read_hgr,
    write_hgr,
)
from .symmetrize import symmetrize

SCHEMA = "turanlab/1"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(args, payload, out):
    payload = {"schema": SCHEMA, **payload}
    if args.json:
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
            if len(value) > 100:
                value = value[:97] + "..."
        out.write(f"{key:<24} {value}\n")


def _load_weighted(path, exact=True):
    path = Path(path)
    if path.suffix == ".json":
        return lagrange.read_weighted(path)
    F = read_hgr(path)
    return lagrange.WeightedHypergraph.uniform(F, exact=exact)


def _common(p):
    p.add_argument("--json", action="store_true", help="machine-readable JSON on stdout")
    p.add_argument("--seed", type=int, default=0, help="seed for all randomness (default 0)")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
    p.add_argument("--cache-dir", default=None, help="Steiner design cache (env TURANLAB_CACHE)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turanlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    st = sub.add_parser("steiner", help="build or verify (m, r, r-1) Steiner systems")
    st_sub = st.add_subparsers(dest="action", required=True)
    b = st_sub.add_parser("build", help="construct a design by exact cover")
    b.add_argument("-m", type=int, required=True)
    b.add_argument("-r", type=int, required=True)
    b.add_argument("-o", "--output", default=None, help="write the design as HGR")
    b.add_argument("--method", choices=["auto", "dlx", "extension"], default="auto")
    b.add_argument("--budget", type=int, default=designs.DEFAULT_BUDGET, help="DLX node limit")
    b.add_argument("--no-cache", action="store_true")
    _common(b)
    v = st_sub.add_parser("verify", help="check the Steiner identities of an HGR file")
    v.add_argument("-i", "--input", required=True)
    _common(v)

    lam = sub.add_parser("lambda", help="densities and Lagrangians")
    lam_sub = lam.add_subparsers(dest="action", required=True)
    for name, text in (
        ("eval", "density at the given (or uniform) weights"),
        ("residual", "first-order residual at the given (or uniform) weights"),
        ("max", "maximize the density over the simplex"),
        ("balanced", "compare the maximum with the uniform point"),
    ):
        p = lam_sub.add_parser(name, help=text)
        p.add_argument("-i", "--input", required=True, help="HGR file or weighted-graph JSON")
        if name in ("max", "balanced"):
            p.add_argument("--restarts", type=int, default=50)
            p.add_argument("--tol", type=float, default=1e-10 if name == "max" else 1e-9)
            p.add_argument("--max-iter", type=int, default=10_000)
        else:
            p.add_argument("--float", action="store_true", help="floating point instead of exact")
        _common(p)

    sy = sub.add_parser("symmetrize", help="shift weight across uncovered pairs")
    sy.add_argument("-i", "--input", required=True, help="weighted-graph JSON or HGR (uniform)")
    sy.add_argument("-o", "--output", default=None, help="write the final weighted graph JSON")
    sy.add_argument("--trace", default=None, help="write the step trace JSON")
    _common(sy)

    d = sub.add_parser("distance", help="edit distance to the blowups of a base graph")
    d.add_argument("-i", "--input", required=True)
    d.add_argument("--base", required=True, help="HGR file or registry key steiner:<m>:<r>")
    d.add_argument("--mode", choices=["exact", "heuristic"], default="exact")
    d.add_argument("--budget", type=int, default=metric.DEFAULT_BUDGET)
    d.add_argument("--restarts", type=int, default=20)
    d.add_argument("--transfer", action="store_true", help="also check the weighted transfer bound")
    _common(d)

    c = sub.add_parser("classify", help="good/bad/missing edges against a blowup spec")
    c.add_argument("-i", "--input", required=True)
    c.add_argument("--spec", required=True, help="BlowupSpec JSON")
    c.add_argument("--max-tuple", type=int, default=2)
    _common(c)

    s = sub.add_parser("search", help="exact Turán number by branch and bound")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--pattern", choices=sorted(extremal.PATTERNS), default="sigma")
    s.add_argument("--t", type=int, default=3, help="clique size for --pattern clique")
    s.add_argument("--budget", type=int, default=extremal.DEFAULT_BUDGET)
    s.add_argument("--parallel", action="store_true")
    s.add_argument("--deterministic", action="store_true", help="reproducible witness in parallel mode")
    _common(s)

    ve = sub.add_parser("verify", help="assert a graph is free of a pattern (or is a Steiner system)")
    ve.add_argument("-i", "--input", required=True)
    ve.add_argument("--pattern", choices=["sigma", "triangle", "thin", "clique", "steiner"], required=True)
    ve.add_argument("--t", type=int, default=3)
    _common(ve)

    co = sub.add_parser("constants", help="exact edge and degree densities of an (m, r, r-1) system")
    co.add_argument("-m", type=int, required=True)
    co.add_argument("-r", type=int, required=True)
    _common(co)
    return parser


# ---------------------------------------------------------------------------
# handlers return (exit code, payload)


def _steiner(args):
    if args.action == "verify":
        report = designs.verify_steiner(read_hgr(args.input))
        return (EXIT_OK if report.certified else EXIT_FAILED), {"report": report.to_dict()}
    try:
        system = designs.build_steiner(
            args.m, args.r, budget=args.budget, method=args.method,
            cache_dir=args.cache_dir, use_cache=not args.no_cache,
        )
    except NoSuchDesign as exc:
        return EXIT_FAILED, {"m": args.m, "r": args.r, "error": str(exc)}
    if args.output:
        write_hgr(system.base, args.output)
    payload = {
        "m": args.m,
        "r": args.r,
        "blocks": len(system.base),
        "certified": system.certified,
        "report": system.report.to_dict(),
        "output": args.output,
    }
    return (EXIT_OK if system.certified else EXIT_FAILED), payload


def _lambda(args):
    if args.action in ("eval", "residual"):
        W = _load_weighted(args.input, exact=not args.float)
        mu = [float(x) for x in W.mu] if args.float else W.mu
        if args.action == "eval":
            val = lagrange.lambda_eval(W.graph, mu)
            return EXIT_OK, {"value": lagrange._num_out(val), "value_float": float(val)}
        res = lagrange.critical_residual(W.graph, mu)
        return EXIT_OK, {"residual": lagrange._num_out(res), "residual_float": float(res)}
    F = _load_weighted(args.input).graph
    if args.action == "max":
        res = lagrange.maximize_lambda(
            F, restarts=args.restarts, tol=args.tol, seed=args.seed, max_iter=args.max_iter
        )
        return EXIT_OK, res.to_dict()
    report = lagrange.check_balanced(F, restarts=args.restarts, tol=args.tol, seed=args.seed)
    code = EXIT_OK if report.verdict == "consistent-with-balanced" else EXIT_FAILED
    return code, report.to_dict()


def _symmetrize(args):
    W = _load_weighted(args.input)
    trace = symmetrize(W)
    payload = trace.to_dict()
    if args.output:
        Path(args.output).write_text(json.dumps(trace.final.to_dict(), sort_keys=True, indent=2) + "\n")
    if args.trace:
        Path(args.trace).write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return EXIT_OK, payload


def _base(ref, cache_dir):
    from .blowup import resolve_base

    return resolve_base(ref, cache_dir=cache_dir)


def _distance(args):
    F = read_hgr(args.input)
    base = _base(args.base, args.cache_dir)
    if args.transfer:
        report = metric.check_distance_transfer(
            F, base, mode=args.mode, seed=args.seed, budget=args.budget
        )
        return (EXIT_OK if report.passed else EXIT_FAILED), report.to_dict()
    res = metric.distance_to_blowups(
        F, base, mode=args.mode, seed=args.seed, budget=args.budget, restarts=args.restarts
    )
    return EXIT_OK, res.to_dict()


def _classify(args):
    F = read_hgr(args.input)
    spec = read_spec(args.spec, cache_dir=args.cache_dir)
    cls = classify_edges(F, spec, max_tuple=args.max_tuple)
    payload = cls.to_dict()
    payload["recursion_violations"] = [
        {"counter": name, "tuple": list(I), "value": c, "child_sum": s}
        for name, I, c, s in recursion_violations(cls, F.r)
    ]
    return (EXIT_OK if not payload["recursion_violations"] else EXIT_FAILED), payload


def _search(args):
    res = extremal.max_free_edges(
        args.n, args.r, args.pattern, budget=args.budget, parallel=args.parallel,
        t=args.t, deterministic=args.deterministic, threads=args.threads,
    )
    payload = res.to_dict()
    check = extremal.extremal_witness_check(res)
    payload["witness_check"] = check.to_dict()
    if not check.passed:
        return EXIT_FAILED, payload
    return (EXIT_OK if res.certified else EXIT_BUDGET), payload


def _verify(args):
    F = read_hgr(args.input)
    if args.pattern == "steiner":
        report = designs.verify_steiner(F)
        return (EXIT_OK if report.certified else EXIT_FAILED), {"report": report.to_dict()}
    finder = {
        "sigma": find_sigma_member,
        "triangle": find_generalized_triangle,
        "thin": find_thin_violation,
        "clique": lambda G: find_clique(G, args.t),
    }[args.pattern]
    hit = finder(F)
    payload = {"pattern": args.pattern, "free": hit is None, "hit": None if hit is None else hit.to_dict()}
    return (EXIT_OK if hit is None else EXIT_FAILED), payload


def _constants(args):
    e, d = designs.steiner_constants(args.m, args.r)
    return EXIT_OK, {"m": args.m, "r": args.r, "e": str(e), "d": str(d), "e_float": float(e), "d_float": float(d)}


HANDLERS = {
    "steiner": _steiner,
    "lambda": _lambda,
    "symmetrize": _symmetrize,
    "distance": _distance,
    "classify": _classify,
    "search": _search,
    "verify": _verify,
    "constants": _constants,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        code, payload = HANDLERS[args.command](args)
    except BudgetExceeded as exc:
        err.write(f"turanlab: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (TuranLabError, OSError, ValueError, json.JSONDecodeError) as exc:
        err.write(f"turanlab: {exc}\n")
        return EXIT_USAGE
    command = args.command + (f" {args.action}" if hasattr(args, "action") else "")
    _emit(args, {"command": command, "exit_code": code, **payload}, out)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
