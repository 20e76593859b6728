"""Command line entry point: ``majdom <command> ...``.

Exit codes: 0 success, 1 internal invariant violation, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench
from .certificates import rank_outcomes, select_best
from .exact import DEFAULT_CAP, OracleCapExceeded, gamma_bruteforce, gamma_tree
from .graph import Configuration, is_connected, is_tree, tally_votes
from .heuristics import HEURISTICS, run_all
from .io import FormatError, parse_graph, parse_opinions, serialize_opinions

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _outcome_dict(o) -> dict:
    return {
        "method": o.method,
        "gamma": o.result.gamma,
        "yes_count": o.result.yes_count,
        "witness": o.result.witness.tolist(),
        "flips": len(o.repair_log),
        "certificate": o.certificate.as_dict(),
    }


def cmd_solve(args, out) -> int:
    g = parse_graph(_read(args.input))
    record = {"n": g.n, "m": g.m, "seed": args.seed, "method": args.method}
    lines = [f"graph n={g.n} m={g.m} seed={args.seed}"]
    if args.method == "exact":
        res = gamma_tree(g) if is_tree(g) else gamma_bruteforce(g, cap=args.cap)
        record.update(gamma=res.gamma, yes_count=res.yes_count, witness=res.witness.tolist(),
                      optimal=True)
        lines.append(f"method=exact gamma={res.gamma} yes={res.yes_count} "
                     f"witness={serialize_opinions(res.witness).strip()}")
    else:
        if not is_connected(g):
            raise UsageError("graph is disconnected")
        if args.method == "auto":
            outs = run_all(g, cap=args.cap)
            ranking = rank_outcomes(outs)
            best = select_best(outs)
            record["ranking"] = [_outcome_dict(o) for o in ranking]
            for o in ranking:
                lines.append(f"candidate {o.certificate.to_record()} gamma={o.result.gamma}")
        else:
            fn = HEURISTICS[args.method]
            best = fn(g, cap=args.cap) if args.method == "regular" else fn(g)
        record["selected"] = _outcome_dict(best)
        lines.append(f"method={best.method} gamma={best.result.gamma} "
                     f"interval=[{best.certificate.lb}, {best.certificate.ub}] "
                     f"width={best.certificate.width} flips={len(best.repair_log)}")
        lines.append(f"witness={serialize_opinions(best.result.witness).strip()}")
    if args.json:
        out.write(json.dumps(record, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_tally(args, out) -> int:
    g = parse_graph(_read(args.input))
    f = parse_opinions(_read(args.opinions), g.n)
    t = tally_votes(Configuration(g, f))
    out.write(f"yes={t.yes_count} n={g.n} accepted={int(t.accepted)} sum={int(f.sum())}\n")
    return EXIT_OK


def cmd_validate_lemmas(args, out) -> int:
    if args.n_max > args.cap:
        raise UsageError(f"n_max={args.n_max} exceeds oracle cap {args.cap}")
    try:
        report = bench.lemma_campaign(args.trials, args.n_max, args.seed, cap=args.cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(report.format())
    return EXIT_VIOLATION if report.total_violations else EXIT_OK


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def cmd_bench(args, out) -> int:
    try:
        records = bench.bench_records(args.generator, args.n, args.trials, args.seed,
                                      p=args.p, degree=args.degree, cap=args.cap,
                                      timing=args.timing)
    except bench.InvariantViolation as exc:
        out.write(f"invariant violation: {exc}\n")
        return EXIT_VIOLATION
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(args.out, bench.records_csv(records))
    if args.summary:
        _write(args.summary, bench.summary_csv(records))
    out.write(f"wrote {len(records)} rows to {args.out} seed={args.seed}\n")
    return EXIT_OK


def cmd_gamma_regular(args, out) -> int:
    rows = []
    for n in args.n:
        if n % 2 == 0:
            raise UsageError(f"n must be odd, got {n}")
        if args.k is not None:
            ks = args.k
        else:
            ks = [k for k in bench.feasible_degrees(n) if k >= 2]
        for k in ks:
            if args.oracle and (n * k % 2 or not 0 < k < n):
                raise UsageError(f"no {k}-regular graph on {n} vertices")
            if args.oracle and n > args.cap:
                raise UsageError(f"oracle cap exceeded: n={n} > cap={args.cap}")
            try:
                rows.append(bench.formula_row(n, k, args.oracle, args.cap))
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    out.write("n k formula oracle verdict\n")
    for r in rows:
        out.write(r.format() + "\n")
    disagree = sum(r.verdict == "disagree" for r in rows)
    if args.oracle:
        out.write(f"disagreements={disagree} of {len(rows)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="majdom", description="Strict majority domination numbers")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest n for exhaustive search")

    p = sub.add_parser("solve", help="solve one graph file")
    p.add_argument("--input", required=True)
    p.add_argument("--method", choices=["exact", "tree", "complete", "regular", "auto"], default="auto")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    add_cap(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("tally", help="count votes for a graph and opinion file")
    p.add_argument("--input", required=True)
    p.add_argument("--opinions", required=True)
    p.set_defaults(func=cmd_tally)

    p = sub.add_parser("validate-lemmas", help="check single-edge bounds on random graphs")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    add_cap(p)
    p.set_defaults(func=cmd_validate_lemmas)

    p = sub.add_parser("bench", help="heuristics versus the oracle, as CSV")
    p.add_argument("--generator", choices=["gnp", "random_tree", "complete", "circulant"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--summary", help="also write per-method error statistics here")
    p.add_argument("--timing", action="store_true", help="record wall-clock runtimes (breaks byte-identical output)")
    add_cap(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gamma-regular", help="closed form for odd regular graphs")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--k", type=int, nargs="+", help="degrees; default: every feasible degree >= 2")
    p.add_argument("--oracle", action="store_true", help="cross-check on the circulant graph")
    add_cap(p)
    p.set_defaults(func=cmd_gamma_regular)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, FormatError, OracleCapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
