"""Command-line interface: family constructors, orderedness checks,
witness queries, cubic census enumeration, and claim verification.

Exit codes: 0 success/holds, 1 refuted property or failed claim,
2 inconclusive (node limit), 64 usage error.
Environment: KORDER_BACKEND (auto|numba|python) selects the search kernels,
KORDER_WORKERS sets the sequence-scan worker count, KORDER_NODE_LIMIT caps
search nodes (unset = unlimited).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .claims import CLAIM_IDS, claim_descriptions, exit_code, verify_claims
from .enumeration import census_classify, census_to_jsonl, enumerate_cubic
from .families import FAMILY_PARAMS, build_family, letters_for
from .graphio import Graph6Error, dot_export, graph6_decode, graph6_encode
from .graphs import DisconnectedGraphError, Graph, GraphConstructionError
from .orderedness import (
    SequenceError,
    find_cycle_through_in_order,
    find_hamiltonian_cycle_through_in_order,
    is_hamiltonian,
    is_k_ordered,
    is_k_ordered_hamiltonian,
)
from .symmetry import automorphism_group, cycle_orbit_count, enumerate_routes, is_n_transitive

EX_OK = 0
EX_REFUTED = 1
EX_INCONCLUSIVE = 2
EX_USAGE = 64

_ENV_EPILOG = (
    "environment variables:\n"
    "  KORDER_BACKEND     search kernels: auto (default), numba, python\n"
    "  KORDER_WORKERS     worker threads for k-orderedness scans (default 1)\n"
    "  KORDER_NODE_LIMIT  search node cap; exceeding it reports inconclusive\n"
    "\n"
    "Vertex sequences accept 0-based ids everywhere; with --family petersen\n"
    "or --family heawood the documented letter labels (a..j / A..N) work too."
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 64, not argparse's default 2
        raise _UsageError(message)


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="inline graph6 string")
    p.add_argument("--graph6-file", help="file with one graph6 line")
    p.add_argument("--family", choices=sorted(FAMILY_PARAMS), help="catalog family")
    for param in ("n", "k", "a", "b", "m"):
        p.add_argument(f"--{param}", type=int, default=None,
                       help=argparse.SUPPRESS)


def _family_params(args) -> dict[str, int]:
    wanted = FAMILY_PARAMS[args.family]
    params = {}
    for name in wanted:
        value = getattr(args, name)
        if value is None:
            raise _UsageError(f"family {args.family!r} requires --{name}")
        params[name] = value
    for name in ("n", "k", "a", "b", "m"):
        if name not in wanted and getattr(args, name) is not None:
            raise _UsageError(f"family {args.family!r} does not take --{name}")
    return params


def _load_graph(args) -> tuple[Graph, str | None]:
    """Resolve the graph source; returns (graph, letter labels or None)."""
    sources = [s for s in (args.graph6, args.graph6_file, args.family) if s]
    if len(sources) != 1:
        raise _UsageError("exactly one of --graph6, --graph6-file, --family required")
    if args.graph6:
        return graph6_decode(args.graph6), None
    if args.graph6_file:
        text = Path(args.graph6_file).read_text(encoding="utf-8")
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise _UsageError(f"{args.graph6_file} must contain exactly one graph6 line")
        return graph6_decode(lines[0]), None
    return build_family(args.family, **_family_params(args)), letters_for(args.family)


def _parse_seq(raw: str, letters: str | None, n: int) -> tuple[int, ...]:
    tokens = [t.strip() for t in raw.split(",") if t.strip()]
    if not tokens:
        raise _UsageError("empty --seq")
    out = []
    for tok in tokens:
        if tok.lstrip("-").isdigit():
            out.append(int(tok))
        elif len(tok) == 1 and tok.isalpha():
            if letters is None:
                raise _UsageError(
                    f"letter label {tok!r} needs --family petersen or --family heawood")
            if tok not in letters:
                raise _UsageError(f"unknown letter label {tok!r}")
            out.append(letters.index(tok))
        else:
            raise _UsageError(f"bad sequence token {tok!r}")
    return tuple(out)


def _cmd_family(args) -> int:
    args.family = args.name
    args.graph6 = args.graph6_file = None
    g, _ = _load_graph(args)
    if args.dot:
        sys.stdout.write(dot_export(g))
    else:
        print(graph6_encode(g))
    return EX_OK


def _cmd_check(args) -> int:
    g, _ = _load_graph(args)
    modes = [m for m in (args.k_ordered is not None,
                         args.transitivity is not None,
                         args.cycle_orbits is not None) if m]
    if args.k_ordered is not None:
        verdict = (is_k_ordered_hamiltonian if args.hamiltonian else is_k_ordered)(
            g, args.k_ordered)
        _emit({
            "check": "k-ordered-hamiltonian" if args.hamiltonian else "k-ordered",
            "k": args.k_ordered,
            "holds": verdict.holds,
            "failing_sequence": (list(verdict.failing_sequence)
                                 if verdict.failing_sequence else None),
            "sequences_total": verdict.sequences_total,
        })
        if verdict.holds is None:
            return EX_INCONCLUSIVE
        return EX_OK if verdict.holds else EX_REFUTED
    if args.transitivity is not None:
        ok = is_n_transitive(g, args.transitivity)
        _emit({
            "check": "transitivity",
            "n": args.transitivity,
            "routes": len(enumerate_routes(g, args.transitivity)),
            "aut_order": len(automorphism_group(g)),
            "holds": ok,
        })
        return EX_OK if ok else EX_REFUTED
    if args.cycle_orbits is not None:
        count, orbits = cycle_orbit_count(g, args.cycle_orbits)
        _emit({"check": "cycle-orbits", "length": args.cycle_orbits,
               "cycles": count, "orbits": orbits})
        return EX_OK
    if args.hamiltonian:
        ok, wit = is_hamiltonian(g)
        _emit({"check": "hamiltonian", "holds": ok,
               "cycle": list(wit.cycle) if wit else None})
        return EX_OK if ok else EX_REFUTED
    if modes:
        raise AssertionError("unreachable")
    raise _UsageError(
        "check needs one of --k-ordered, --hamiltonian, --transitivity, --cycle-orbits")


def _cmd_witness(args) -> int:
    g, letters = _load_graph(args)
    seq = _parse_seq(args.seq, letters, g.n)
    search = (find_hamiltonian_cycle_through_in_order if args.hamiltonian
              else find_cycle_through_in_order)
    outcome = search(g, seq)
    _emit({
        "graph": graph6_encode(g),
        "sequence": list(seq),
        "cycle": list(outcome.witness.cycle) if outcome.witness else None,
        "status": outcome.status,
        "nodes_expanded": outcome.nodes_expanded,
    })
    if outcome.status == "realized":
        return EX_OK
    if outcome.status == "refuted":
        return EX_REFUTED
    return EX_INCONCLUSIVE


def _cmd_enumerate(args) -> int:
    entries = enumerate_cubic(args.n, args.min_girth)
    if args.classify is not None:
        entries = census_classify(entries, args.classify)
    text = census_to_jsonl(entries)
    summary = (f"n={args.n} min_girth={args.min_girth} classes={len(entries)}"
               + (f" classified_k={args.classify}" if args.classify is not None else ""))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"{summary} -> {args.out}")
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EX_OK


def _cmd_verify_claims(args) -> int:
    selection = None
    if args.only:
        selection = [s.strip() for s in args.only.split(",") if s.strip()]
        unknown = sorted(set(selection) - set(CLAIM_IDS))
        if unknown:
            raise _UsageError(
                f"unknown claim ids: {', '.join(unknown)} (known: {', '.join(CLAIM_IDS)})")
    reports = verify_claims(selection, parallel=args.parallel)
    descriptions = claim_descriptions()
    width = max(len(r.claim_id) for r in reports)
    for r in reports:
        line = f"{r.claim_id:<{width}}  {r.status:<12}"
        if args.timings:
            line += f" {r.wall_time:8.2f}s"
        line += f"  {descriptions[r.claim_id]}"
        print(line)
    code = exit_code(reports)
    counts = {s: sum(1 for r in reports if r.status == s)
              for s in ("pass", "fail", "inconclusive")}
    print(f"total={len(reports)} pass={counts['pass']} fail={counts['fail']} "
          f"inconclusive={counts['inconclusive']}")
    if args.json:
        payload = [r.to_json(timings=args.timings) for r in reports]
        Path(args.json).write_text(
            json.dumps(payload, sort_keys=True, indent=1) + "\n", encoding="utf-8")
    return code


def build_parser() -> _Parser:
    parser = _Parser(
        prog="korder",
        description="k-orderedness checks, graph families, cubic census, "
                    "and claim verification for small graphs",
        epilog=_ENV_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_family = sub.add_parser("family", help="emit a catalog graph as graph6 or DOT")
    p_family.add_argument("--name", required=True, choices=sorted(FAMILY_PARAMS),
                          help="family id")
    for param in ("n", "k", "a", "b", "m"):
        p_family.add_argument(f"--{param}", type=int, default=None,
                              help=f"integer parameter {param} (family-dependent)")
    p_family.add_argument("--dot", action="store_true", help="emit DOT instead of graph6")
    p_family.set_defaults(fn=_cmd_family)

    p_check = sub.add_parser("check", help="decide a graph property (JSON verdict)")
    _add_graph_source(p_check)
    p_check.add_argument("--k-ordered", type=int, metavar="K",
                         help="check k-orderedness")
    p_check.add_argument("--hamiltonian", action="store_true",
                         help="with --k-ordered: hamiltonian variant; alone: hamiltonicity")
    p_check.add_argument("--transitivity", type=int, metavar="N",
                         help="check n-route transitivity")
    p_check.add_argument("--cycle-orbits", type=int, metavar="L",
                         help="count cycles of length L and their orbit count")
    p_check.set_defaults(fn=_cmd_check)

    p_wit = sub.add_parser("witness", help="find a cycle through a sequence in order")
    _add_graph_source(p_wit)
    p_wit.add_argument("--seq", required=True,
                       help="comma-separated vertices, e.g. 0,3,7,9 or A,B,C,L")
    p_wit.add_argument("--hamiltonian", action="store_true",
                       help="require a hamiltonian witness")
    p_wit.set_defaults(fn=_cmd_witness)

    p_enum = sub.add_parser("enumerate", help="census of connected cubic graphs")
    p_enum.add_argument("--n", type=int, required=True, help="vertex count (even, 4..16)")
    p_enum.add_argument("--min-girth", type=int, default=3, help="girth filter (default 3)")
    p_enum.add_argument("--classify", type=int, metavar="K",
                        help="also fill hamiltonian/k-ordered flags")
    p_enum.add_argument("--out", help="write JSONL census here (default stdout)")
    p_enum.set_defaults(fn=_cmd_enumerate)

    p_vc = sub.add_parser("verify-claims", help="run the registered claim checks")
    p_vc.add_argument("--only", help="comma-separated claim ids")
    p_vc.add_argument("--json", help="also write a JSON report to this path")
    p_vc.add_argument("--parallel", action="store_true", help="run claims concurrently")
    p_vc.add_argument("--timings", action="store_true",
                      help="include wall times (non-deterministic output)")
    p_vc.set_defaults(fn=_cmd_verify_claims)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"korder: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except (GraphConstructionError, Graph6Error, SequenceError) as exc:
        print(f"korder: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except DisconnectedGraphError as exc:
        print(f"korder: error: {exc}", file=sys.stderr)
        return EX_REFUTED
    except ValueError as exc:
        print(f"korder: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except FileNotFoundError as exc:
        print(f"korder: error: {exc}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
