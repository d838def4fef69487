"""Command-line verifier: run checks, print families, benchmark the engine."""

from __future__ import annotations

import argparse
import csv
import sys
from typing import Optional, Sequence

from . import families as fam
from .checks import (ALL_CHECKS, BUDGET, FAIL, bench, report_json, run_checks)


def _family_lines(family: str, n: int) -> list[str]:
    ring = fam.standard_ring(n)
    if family == "minors":
        return [ring.format(g) for g in fam.minors_ideal(n).gens]
    if family == "a":
        return [ring.format(g) for g in fam.gens_a(n).gens]
    if family == "G":
        return [ring.format(g) for g in fam.set_G(n)]
    if family == "M":
        out = []
        for i in range(1, n + 1):
            for m in fam.M_set(n, i):
                out.append(f"M_{i}: {ring.format(ring.from_monomial(m))}")
        return out
    if family == "chain":
        return [ring.format(g) for g in fam.chain_ideal(n).gens]
    if family == "link":
        _, link = fam.chain_link(n)
        return [ring.format(g) for g in link.gens]
    raise ValueError(f"unknown family {family!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="detlink",
        description="Verify links and residual intersections of 2xn minor ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run verification checks")
    p_verify.add_argument("--n", type=int, required=True, help="matrix width (>= 4)")
    p_verify.add_argument("--checks", default="all",
                          help=f"comma list or 'all'; known: {', '.join(ALL_CHECKS)}")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--budget-pairs", type=int, default=None)
    p_verify.add_argument("--timeout-secs", type=float, default=None)
    p_verify.add_argument("--format", choices=["json", "text"], default="text")
    p_verify.add_argument("--out", default=None, help="also write the report here")

    p_show = sub.add_parser("show", help="print an ideal family")
    p_show.add_argument("--family", required=True,
                        choices=["minors", "a", "G", "M", "link", "chain"])
    p_show.add_argument("--n", type=int, required=True)

    p_bench = sub.add_parser("bench", help="benchmark the Groebner engine")
    p_bench.add_argument("--n-min", type=int, default=4)
    p_bench.add_argument("--n-max", type=int, default=6)
    p_bench.add_argument("--csv", default=None, help="write rows to this CSV file")

    args = parser.parse_args(argv)

    if args.command == "show":
        for line in _family_lines(args.family, args.n):
            print(line)
        return 0

    if args.command == "bench":
        rows = bench(args.n_min, args.n_max)
        fields = ["n", "task", "status", "pairs_processed", "discarded_coprime",
                  "discarded_chain", "zero_reductions", "basis_size", "elapsed_ms"]
        if args.csv:
            with open(args.csv, "w", newline="") as fh:
                writer = csv.DictWriter(fh, fieldnames=fields)
                writer.writeheader()
                writer.writerows(rows)
        writer = csv.DictWriter(sys.stdout, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
        return 0

    selection = "all" if args.checks == "all" else [
        s.strip() for s in args.checks.split(",") if s.strip()]
    stretch = args.budget_pairs is not None or args.timeout_secs is not None
    try:
        reports = run_checks(args.n, selection, seed=args.seed,
                             max_pairs=args.budget_pairs,
                             timeout_secs=args.timeout_secs,
                             stretch=stretch)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    payload = report_json(reports, args.n, args.seed)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    if args.format == "json":
        print(payload)
    else:
        for r in reports:
            line = f"{r.name:24s} {r.status:16s} {r.elapsed_ms:10.1f} ms"
            if r.witness:
                line += f"  [{r.witness}]"
            print(line)
    bad = [r for r in reports if r.status in (FAIL, BUDGET)]
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
