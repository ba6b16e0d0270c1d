"""Batch command line front end.

    r2r spectrum --n 5 [--evaluation 2,2,1] [--format csv]
    r2r bounds   --n 1000 --c 2 [--t-max 20000]
    r2r profile  --n 5 --t-max 40 [--evaluation 3,1,1]
    r2r verify   [--suite spectra|bijection|identities|all] [--n-max 6]
    r2r simulate --n 5 --t 20 --trials 1000000 --seed 7

Every output carries a metadata block (command, parameters, version). Without
``--output`` results go to stdout, or to ``$R2R_OUTPUT_DIR/<command>.<format>``
when that variable is set. Exit status: 0 ok, 1 failed verification, 2 bad
arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from pathlib import Path

from . import __version__
from .bounds import (
    analytic_upper_bound,
    cutoff_time,
    cyclic_to_random_time,
    l2_bound_exact,
    largesteig_term,
)
from .checks import run_suite
from .montecarlo import mc_sample
from .oracle import (
    build_r2r_matrix,
    build_r2r_multiset,
    distance_profile,
    evolve_distribution,
    point_mass,
    tv_distance,
)
from .partitions import Partition, parse_partition
from .spectrum import full_spectrum, spectrum_with_evaluation

OUTPUT_DIR_ENV = "R2R_OUTPUT_DIR"
EXACT_CURVE_MAX_N = 6
GRID_POINTS = 101


class UsageError(Exception):
    pass


def _fmt(x) -> str:
    # shortest round-trip for floats, plain text otherwise
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _json_float(x):
    if isinstance(x, float) and not math.isfinite(x):
        return str(x)
    return x


def _render(fmt: str, meta: dict, result: dict | None = None, columns: list[str] | None = None, rows: list[list] | None = None) -> str:
    if fmt == "json":
        body = {"metadata": meta}
        if result is not None:
            body["result"] = result
        if rows is not None:
            body["rows"] = [{c: _json_float(v) for c, v in zip(columns, r)} for r in rows]
        return json.dumps(body, indent=1, sort_keys=False) + "\n"
    buf = io.StringIO()
    for key, value in meta.items():
        buf.write(f"# {key}: {json.dumps(value)}\n")
    w = csv.writer(buf, lineterminator="\n")
    if rows is not None:
        w.writerow(columns)
        for r in rows:
            w.writerow([_fmt(v) for v in r])
    elif result is not None:
        buf.write(result["csv"])
    return buf.getvalue()


def _meta(args: argparse.Namespace, **extra) -> dict:
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "func", "output", "format")}
    return {"command": args.command, "parameters": params, "version": __version__, **extra}


def _evaluation(args) -> Partition | None:
    if getattr(args, "evaluation", None) is None:
        return None
    try:
        nu = parse_partition(args.evaluation)
    except ValueError as exc:
        raise UsageError(f"bad --evaluation: {exc}") from None
    if args.n is not None and nu.size != args.n:
        raise UsageError(f"--evaluation sums to {nu.size}, not --n {args.n}")
    return nu


def _t_grid(t_max: int) -> list[int]:
    if t_max + 1 <= 2 * GRID_POINTS:
        return list(range(t_max + 1))
    return sorted({round(i * t_max / (GRID_POINTS - 1)) for i in range(GRID_POINTS)})


# ---------------------------------------------------------------------------
# commands


def cmd_spectrum(args) -> tuple[str, int]:
    nu = _evaluation(args)
    if args.n is None and nu is None:
        raise UsageError("spectrum needs --n or --evaluation")
    s = full_spectrum(args.n) if nu is None or all(p == 1 for p in nu) else spectrum_with_evaluation(nu)
    meta = _meta(args, states=str(s.num_states))
    if args.format == "json":
        return _render("json", meta, s.to_json(args.include_zero)), 0
    return _render("csv", meta, {"csv": s.to_csv(args.include_zero)}), 0


def cmd_bounds(args) -> tuple[str, int]:
    n, c = args.n, args.c
    if n < 2:
        raise UsageError("--n must be at least 2")
    t_star = cutoff_time(n, c) if n >= 3 else None
    t_max = args.t_max if args.t_max is not None else (math.ceil(2 * t_star) if t_star else 60)
    spec = full_spectrum(n) if n <= EXACT_CURVE_MAX_N else None
    profile = {t: tv for t, tv, _ in distance_profile(build_r2r_matrix(n), t_max)} if spec else {}
    rows = []
    for t in _t_grid(t_max):
        rows.append([
            t,
            l2_bound_exact(spec, t) if spec else None,
            analytic_upper_bound(n, t),
            largesteig_term(n, t),
            profile.get(t),
        ])
    meta = _meta(args, t_star=t_star, cyclic_to_random_time=cyclic_to_random_time(n, c) if n >= 3 and c > 0 else None)
    return _render(args.format, meta, columns=["t", "l2_exact", "analytic", "largesteig_term", "tv_exact"], rows=rows), 0


def cmd_profile(args) -> tuple[str, int]:
    nu = _evaluation(args)
    if nu is None or all(p == 1 for p in nu):
        mat = build_r2r_matrix(args.n)
        spec = full_spectrum(args.n)
    else:
        mat = build_r2r_multiset(nu)
        spec = spectrum_with_evaluation(nu)
    rows = [[t, tv, chi2, l2_bound_exact(spec, t)] for t, tv, chi2 in distance_profile(mat, args.t_max)]
    meta = _meta(args, states=mat.size)
    return _render(args.format, meta, columns=["t", "tv_exact", "chi2_exact", "l2_spectral"], rows=rows), 0


def cmd_verify(args) -> tuple[str, int]:
    results = run_suite(args.suite, args.n_max)
    failed = sum(not r.passed for r in results)
    rows = [[r.suite, r.name, "pass" if r.passed else "FAIL", r.detail] for r in results]
    meta = _meta(args, checks=len(results), failed=failed)
    if args.format == "json":
        out = _render("json", meta, columns=["suite", "check", "status", "detail"], rows=rows)
    else:
        width = max((len(r[1]) for r in rows), default=10)
        lines = [f"# {k}: {json.dumps(v)}" for k, v in meta.items()]
        lines += [f"{r[0]:<11} {r[1]:<{width}}  {r[2]:<4}  {r[3]}".rstrip() for r in rows]
        out = "\n".join(lines) + "\n"
    return out, 1 if failed else 0


def cmd_simulate(args) -> tuple[str, int]:
    res = mc_sample(args.n, args.t, args.trials, args.seed)
    meta = _meta(args, **{"rng": "Philox/SeedSequence([seed, chunk])", **res.metadata()})
    result = {"summary": res.summary}
    rows = None
    if res.counts is not None:
        empirical = res.distribution()
        exact = evolve_distribution(build_r2r_matrix(args.n), point_mass(res.counts.size), args.t)
        result["tv_empirical"] = tv_distance(empirical)
        result["tv_exact"] = tv_distance(exact)
        rows = [[i, float(e), float(x)] for i, (e, x) in enumerate(zip(empirical.probabilities, exact.probabilities))]
    if args.format == "json":
        if rows is not None:
            result["distribution"] = {"columns": ["rank", "empirical", "exact"], "rows": rows}
        return _render("json", meta, result), 0
    meta = {**meta, **{k: v for k, v in result.items()}}
    if rows is None:
        return _render("csv", meta, {"csv": ""}), 0
    return _render("csv", meta, columns=["rank", "empirical", "exact"], rows=rows), 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="r2r", description="Random-to-random shuffle spectra, bounds and oracles.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--output", type=Path, help="file to write (default: stdout or $%s)" % OUTPUT_DIR_ENV)

    p = sub.add_parser("spectrum", help="exact eigenvalues and multiplicities")
    p.add_argument("--n", type=int)
    p.add_argument("--evaluation", help="card-type counts, e.g. 2,1,1")
    p.add_argument("--include-zero", action="store_true", help="keep zero-multiplicity pairs")
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("bounds", help="l2 bound curves and the cutoff marker")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, default=2.0)
    p.add_argument("--t-max", type=int)
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("profile", help="exact TV and chi-square distance per step")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--evaluation")
    common(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", choices=["spectra", "bijection", "identities", "all"], default="all")
    p.add_argument("--n-max", type=int, default=6)
    common(p)
    p.set_defaults(func=cmd_verify, format="table")

    p = sub.add_parser("simulate", help="seeded Monte Carlo from the identity deck")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"r2r {args.command}: error: {exc}", file=sys.stderr)
        return 2
    target = args.output
    if target is None and os.environ.get(OUTPUT_DIR_ENV):
        ext = "txt" if args.format == "table" else args.format
        target = Path(os.environ[OUTPUT_DIR_ENV]) / f"{args.command}.{ext}"
    if target is None:
        sys.stdout.write(text)
    else:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
