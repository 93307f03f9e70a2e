"""Command line interface: ``levi <command> ...``.

Exit status is 0 on success, 1 when a checked claim fails or the input is
invalid, and 2 on usage errors.  Structured output goes to stdout as JSON;
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from levi import families as fam
from levi.canon import are_isomorphic, canonical_form
from levi.cuts import edge_connectivity, essential_4ec
from levi.errors import LeviError
from levi.graph import BLACK, WHITE, Graph, bipartition, girth, is_connected
from levi.io import read_graph, read_graphs, write_graph
from levi.martinetti import (
    ExtensionSite,
    ReductionSite,
    extend_move,
    extension_sites,
    is_irreducible,
    reduce_move,
    reduction_sites,
)
from levi.two_factors import DEFAULT_FULL_BUDGET, EnumBudget, classify
from levi.verify import GROUPS, all_passed, verify_claim_suite
from levi.witnesses import WitnessPair, d_witness_pair, t_witness_pair


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _read_input(source: str) -> bytes:
    if source == "-":
        return sys.stdin.buffer.read()
    path = Path(source)
    if path.is_file():
        return path.read_bytes()
    return source.encode()


def _graphs(args) -> list[Graph]:
    return list(read_graphs(_read_input(args.input), args.format))


def _threads(value: str | None) -> int:
    raw = value if value is not None else os.environ.get("LEVI_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid thread count {raw!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("thread count must be positive")
    return n


def _base(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"base line must be comma separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _name(g: Graph, v: int):
    return g.labels[v] if g.labels is not None else v


def _site_json(g: Graph, s) -> dict:
    if isinstance(s, ExtensionSite):
        return {"e1": [_name(g, v) for v in s.e1], "e2": [_name(g, v) for v in s.e2]}
    return {
        "edge": [_name(g, v) for v in s.edge],
        "option": s.option,
        "x": [_name(g, v) for v in s.x],
        "y": [_name(g, v) for v in s.y],
    }


# -- commands ------------------------------------------------------------------------

def cmd_gen(args) -> int:
    g = fam.build_family(args.family, args.n, args.variant, args.base)
    payload = write_graph(g, args.out_format)
    if args.labels:
        print(_dump({"format": args.out_format, "graph": payload.decode().rstrip("\n"),
                     "labels": list(g.labels) if g.labels is not None else None}))
    else:
        sys.stdout.write(payload.decode())
    return 0


def cmd_classify(args) -> int:
    if args.mode == "full":
        budget = EnumBudget.full(args.budget if args.budget is not None else DEFAULT_FULL_BUDGET)
    else:
        budget = EnumBudget.parity(args.budget)
    for g in _graphs(args):
        report = classify(g, budget, threads=args.threads)
        if args.json:
            print(_dump(report.to_json()))
        else:
            flags = " ".join(f"{k}={str(v).lower()}" for k, v in report.flags().items())
            counts = ",".join(f"{k}:{v}" for k, v in report.by_circuit_count.items())
            print(f"{report.graph} status={report.status} total={report.total_two_factors} "
                  f"circuit_counts={counts} {flags}")
        if args.verbose:
            for lengths, k in report.by_lengths.items():
                print(f"  {' '.join(map(str, lengths)):>30}  {k}", file=sys.stderr)
    return 0


def cmd_props(args) -> int:
    for g in _graphs(args):
        gi = girth(g)
        out = {
            "graph": write_graph(g).decode().strip(),
            "vertices": g.vertex_count,
            "edges": g.edge_count,
            "cubic": g.is_cubic(),
            "connected": is_connected(g),
            "bipartite": bipartition(g) is not None,
            "girth": None if gi == math.inf else int(gi),
        }
        if out["connected"] and g.vertex_count > 1:
            out["edge_connectivity"] = edge_connectivity(g)
            if out["cubic"]:
                verdict = essential_4ec(g)
                out["essentially_4_edge_connected"] = verdict.yes
                out["cut_witness"] = sorted(verdict.witness.edges) if verdict.witness else None
        print(_dump(out))
    return 0


def cmd_iso(args) -> int:
    g1 = read_graph(_read_input(args.first), args.format)
    g2 = read_graph(_read_input(args.second), args.format)
    print("true" if are_isomorphic(g1, g2) else "false")
    if args.verbose:
        print(canonical_form(g1).decode(), file=sys.stderr)
        print(canonical_form(g2).decode(), file=sys.stderr)
    return 0


def cmd_martinetti(args) -> int:
    points = BLACK if args.points == "black" else WHITE
    log = []
    graphs_out: list[bytes] = []
    for g in _graphs(args):
        if args.action == "irreducible":
            print("true" if is_irreducible(g, points) else "false")
            continue
        if args.action == "sites":
            print(_dump({
                "extension_sites": [_site_json(g, s) for s in extension_sites(g, points)],
                "reduction_sites": [_site_json(g, s) for s in
                                    reduction_sites(g, points, args.allow_disconnected, certificates=False)],
            }))
            continue
        if args.action == "extend":
            sites: list = extension_sites(g, points)
        else:
            sites = reduction_sites(g, points, args.allow_disconnected, certificates=False)
        if args.site is not None:
            if not 0 <= args.site < len(sites):
                raise LeviError(f"site index {args.site} out of range ({len(sites)} sites)")
            sites = [sites[args.site]]
        seen: set[bytes] = set()
        for k, s in enumerate(sites):
            if isinstance(s, ReductionSite):
                h, move = reduce_move(g, s, args.allow_disconnected)
            else:
                h, move = extend_move(g, s, points)
            if args.up_to_iso and move.after in seen:
                continue
            seen.add(move.after)
            graphs_out.append(write_graph(h))
            log.append({"kind": move.kind, "site": _site_json(g, s),
                        "before": move.before.decode(), "after": move.after.decode()})
    for line in graphs_out:
        sys.stdout.write(line.decode())
    if args.action in ("extend", "reduce"):
        text = _dump({"moves": log}) + "\n"
        if args.log:
            Path(args.log).write_text(text)
        else:
            sys.stderr.write(text)
    return 0


def _two_factor_json(g: Graph, tf) -> dict:
    return {
        "circuit_count": tf.circuit_count,
        "lengths": list(tf.lengths),
        "circuits": [[_name(g, v) for v in c] for c in tf.decomposition.circuits],
    }


def cmd_witnesses(args) -> int:
    if args.family == "d":
        g = fam.d_graph(args.n)
        pair: WitnessPair = d_witness_pair(args.n, g)
    else:
        g = fam.t_graph(args.n, args.variant)
        pair = t_witness_pair(args.n, args.variant, g)
    print(_dump({
        "family": pair.family,
        "params": list(pair.params),
        "hamiltonian": _two_factor_json(g, pair.hamiltonian),
        "disconnected": _two_factor_json(g, pair.disconnected),
    }))
    return 0


def cmd_verify(args) -> int:
    groups = tuple(x.strip() for x in args.claims.split(",")) if args.claims else GROUPS
    unknown = [x for x in groups if x not in GROUPS]
    if unknown:
        print(f"unknown claim group(s): {', '.join(unknown)}; valid: {', '.join(GROUPS)}", file=sys.stderr)
        return 2
    ledger = verify_claim_suite(groups, args.nmax)
    ok = all_passed(ledger)
    if args.json:
        print(_dump({"passed": ok, "claims": [c.to_json() for c in ledger]}))
    else:
        for c in ledger:
            print(f"{c.status.upper():<17} {c.id}  {c.statement}")
        print(f"{'PASS' if ok else 'FAIL'}: {sum(c.status == 'pass' for c in ledger)}/{len(ledger)} claims")
    return 0 if ok else 1


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=_threads, default=None,
                        help="worker processes (default: $LEVI_THREADS or 1)")
    common.add_argument("--verbose", action="store_true", help="human-readable detail on stderr")

    reader = argparse.ArgumentParser(add_help=False)
    reader.add_argument("--format", choices=("graph6", "edgelist"), default=None,
                        help="input format (auto-detected by default)")

    parser = argparse.ArgumentParser(prog="levi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a family graph")
    p.add_argument("--family", required=True,
                   choices=("k33", "heawood", "pappus", "desargues", "d", "t", "cyclic", "chain", "star"))
    p.add_argument("--n", type=int)
    p.add_argument("--variant", type=int, choices=(1, 2, 3))
    p.add_argument("--base", type=_base)
    p.add_argument("--out-format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--labels", action="store_true", help="emit JSON with the vertex label sidecar")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("classify", parents=[common, reader], help="2-factor census and parity flags")
    p.add_argument("input", help="graph6 string, file, or - for stdin")
    p.add_argument("--mode", choices=("full", "parity"), default="full")
    p.add_argument("--budget", type=_positive)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("props", parents=[common, reader], help="girth, bipartiteness, connectivity")
    p.add_argument("input")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("iso", parents=[common, reader], help="isomorphism test")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("martinetti", parents=[common, reader], help="Martinetti extension and reduction")
    p.add_argument("action", choices=("extend", "reduce", "sites", "irreducible"))
    p.add_argument("input")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--site", type=int, help="apply only the site with this index")
    p.add_argument("--allow-disconnected", action="store_true")
    p.add_argument("--points", choices=("black", "white"), default="black")
    p.add_argument("--log", help="write the JSON move log here instead of stderr")
    p.set_defaults(func=cmd_martinetti)

    p = sub.add_parser("witnesses", parents=[common], help="explicit parity witnesses")
    p.add_argument("--family", choices=("d", "t"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", type=int, choices=(1, 2, 3), default=1)
    p.set_defaults(func=cmd_witnesses)

    p = sub.add_parser("verify-paper", parents=[common], help="re-check every finite claim")
    p.add_argument("--json", action="store_true")
    p.add_argument("--claims", help=f"comma separated groups from {','.join(GROUPS)}")
    p.add_argument("--nmax", type=int, default=15)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.threads is None:
            args.threads = _threads(None)
    except argparse.ArgumentTypeError as exc:
        print(f"error: LEVI_THREADS: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (LeviError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
