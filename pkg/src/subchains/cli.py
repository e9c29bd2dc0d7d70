"""Command-line interface: ``count``, ``lattice``, ``audit`` and ``formula``.

Exit codes: 0 success, 2 invalid input, 3 counting methods disagree,
4 budget or cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .audit import run_audit, sn_bound_tables
from .chains import (
    BudgetExceeded,
    DEFAULT_ORACLE_BUDGET,
    FactoredInteger,
    chain_counts,
    g_by_maximal_recursion,
    g_cyclic_multinomial,
    h_by_inclusion_exclusion,
    h_dihedral_prime_power,
    lower_bound_h_sn,
    naive_chain_oracle,
)
from .export import dumps, lattice_csv, lattice_to_dict, rows_csv
from .group import CYCLIC_DIHEDRAL_CAP, ClosureCapError, named_group, parse_group_spec
from .lattice import enumerate_subgroups
from .perm import PermutationParseError

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE, EXIT_CAP = 0, 2, 3, 4


class Disagreement(RuntimeError):
    pass


def _emit(text: str, output: str | None = None):
    if output and output != "-":
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _group(args):
    return parse_group_spec(args.group, degree=args.degree, gens=args.gens)


def cmd_count(args) -> int:
    table = _group(args)
    lattice = enumerate_subgroups(table)
    methods = ["dp", "ie", "naive"] if args.method == "all" else [args.method]
    results: dict[str, dict[str, int]] = {}
    for m in methods:
        if m == "dp":
            cc = chain_counts(lattice)
            results[m] = {"g": cc.g, "h": cc.h}
        elif m == "ie":
            h, _ = h_by_inclusion_exclusion(lattice)
            results[m] = {"g": g_by_maximal_recursion(lattice), "h": h}
        else:
            g, h = naive_chain_oracle(lattice, budget=args.budget)
            results[m] = {"g": g, "h": h}
    agree = len({(r["g"], r["h"]) for r in results.values()}) == 1
    name = table.name or "group"
    if args.format == "json":
        doc = {
            "group": {"name": name, "degree": table.degree, "order": table.order},
            "subgroups": len(lattice),
            "methods": results,
            "agreement": agree,
        }
        _emit(dumps(doc))
    elif args.format == "csv":
        _emit(rows_csv(["method", "g", "h"], [[m, r["g"], r["h"]] for m, r in results.items()]))
    else:
        lines = [f"{name}: degree {table.degree}, order {table.order}, {len(lattice)} subgroups"]
        for m, r in results.items():
            lines.append(f"  {m:<6} g={r['g']}  h={r['h']}")
        if len(results) > 1:
            lines.append(f"agreement: {'OK' if agree else 'FAILED'}")
        _emit("\n".join(lines) + "\n")
    if not agree:
        raise Disagreement(f"methods disagree: {results}")
    return EXIT_OK


def cmd_lattice(args) -> int:
    lattice = enumerate_subgroups(_group(args))
    if args.format == "csv":
        _emit(lattice_csv(lattice), args.output)
    else:
        _emit(dumps(lattice_to_dict(lattice)), args.output)
    return EXIT_OK


def cmd_audit(args) -> int:
    report = run_audit()
    if args.format == "json":
        _emit(report.to_json(), args.output)
    elif args.format == "csv":
        rows = [[e.claim_id, e.paper_location, e.subject, e.paper_value, e.computed_value,
                 e.status, e.note] for e in report.entries]
        _emit(rows_csv(["claim_id", "paper_location", "subject", "paper_value",
                        "computed_value", "status", "note"], rows), args.output)
    else:
        _emit(report.to_text(), args.output)
    return EXIT_OK


def cmd_formula(args) -> int:
    out: dict[str, object] = {"kind": args.kind}
    if args.kind == "cyclic-g":
        if args.n is None or args.n < 1:
            raise ValueError("cyclic-g needs --n >= 1")
        out["n"] = args.n
        out["formula"] = g_cyclic_multinomial(FactoredInteger.of(args.n))
        if args.n <= CYCLIC_DIHEDRAL_CAP:
            out["lattice_dp"] = chain_counts(enumerate_subgroups(named_group("cyclic", args.n))).g
    elif args.kind == "dihedral-h":
        if args.p is None or args.m is None:
            raise ValueError("dihedral-h needs --p and --m")
        out.update(p=args.p, m=args.m, order=2 * args.p**args.m)
        out["formula"] = h_dihedral_prime_power(args.p, args.m, cap=10**9)
        if 2 * args.p**args.m <= CYCLIC_DIHEDRAL_CAP:
            lat = enumerate_subgroups(named_group("dihedral", 2 * args.p**args.m))
            out["lattice_dp"] = chain_counts(lat).h
    else:
        n = 5 if args.n is None else args.n
        if not 5 <= n <= 6:
            raise ValueError("sn-bound is evaluated for n in 5..6")
        alt, sym = sn_bound_tables(n)
        bound = lower_bound_h_sn(n, alt, sym)
        out.update(n=n, bound=bound)
        h = chain_counts(enumerate_subgroups(named_group("symmetric", n))).h
        out["computed_h"] = h
        out["verdict"] = "bound holds" if h >= bound else "bound violated"
    mismatch = "lattice_dp" in out and out["lattice_dp"] != out["formula"]
    if args.format == "json":
        _emit(dumps(out))
    else:
        if args.kind == "sn-bound":
            line = (f"bound for h(S{out['n']}) = {out['bound']}; computed h(S{out['n']}) = "
                    f"{out['computed_h']}: {out['verdict']}")
        else:
            line = f"{args.kind}: formula = {out['formula']}"
            if "lattice_dp" in out:
                rel = "!=" if mismatch else "="
                line += f" {rel} {out['lattice_dp']} (lattice DP)"
        _emit(line + "\n")
    if mismatch:
        raise Disagreement("closed form and lattice DP differ")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subchains",
        description="Subgroup lattices and chain counts of small permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def group_args(p):
        p.add_argument("--group", help="S<n>, A<n>, C<n>, D<order> or 'trivial'")
        p.add_argument("--degree", type=int, help="degree for --gens")
        p.add_argument("--gens", help='generators as cycle strings separated by ";"')

    p = sub.add_parser("count", help="count maximal chains g and chains ending at the top h")
    group_args(p)
    p.add_argument("--method", choices=["dp", "ie", "naive", "all"], default="dp")
    p.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET,
                   help="visit budget for the naive oracle")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("lattice", help="export the subgroup lattice")
    group_args(p)
    p.add_argument("--output", "-o", help="output path (default stdout)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("audit", help="recompute the published claim catalog")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("formula", help="evaluate a closed form with its lattice cross-check")
    p.add_argument("kind", choices=["cyclic-g", "dihedral-h", "sn-bound"])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_formula)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "group", None) is None and hasattr(args, "gens") and args.degree is None:
        parser.error("give --group, or --degree with --gens")
    try:
        return args.func(args)
    except Disagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (ClosureCapError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, KeyError, PermutationParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
