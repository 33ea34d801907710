"""Command line interface.

Exit status: 0 on success, 1 for bad input, 2 when an internal check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import fd, oracle
from .gk import gk_dimension, unweighted_gk
from .graph import GraphError, WeightedGraph, render_word
from .io import parse_graph, render_graph
from .nod import NodAutomaton, all_bases
from .quasicycles import (enumerate_quasicycles, implies, is_selfconnected,
                          quasicycle_classes)


class CheckFailed(Exception):
    pass


def _read(path: str) -> WeightedGraph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror}") from None


def _base(items: Sequence[str] | None) -> dict[str, str] | None:
    if not items:
        return None
    out = {}
    for item in items:
        v, sep, e = item.partition("=")
        if not sep or not v or not e:
            raise GraphError(f"--base expects VERTEX=EDGE, got {item!r}")
        out[v.strip()] = e.strip()
    return out


# -- commands ----------------------------------------------------------------

def cmd_validate(g: WeightedGraph, args) -> dict:
    return {"valid": True, "vertices": len(g.vertices), "edges": len(g.edges)}


def cmd_info(g: WeightedGraph, args) -> dict:
    aut = NodAutomaton(g, _base(args.base))
    return {
        "vertices": list(g.vertices),
        "edges": [{"name": e.name, "source": e.source, "range": e.range, "weight": e.weight}
                  for e in g.edges],
        "sinks": g.sinks(),
        "weighted_edges": [e.name for e in g.weighted_edges()],
        "rwf": g.rwf(),
        "base": aut.base,
    }


def cmd_quasicycles(g: WeightedGraph, args) -> dict:
    aut = NodAutomaton(g, _base(args.base))
    classes = quasicycle_classes(aut)
    rows = []
    for c in classes:
        rows.append({
            "canonical": str(c.canonical),
            "length": len(c.canonical),
            "star": str(c.canonical.star().canonical()),
            "selfconnected": is_selfconnected(aut, c.canonical),
        })
    out: dict = {"count": len(classes), "classes": rows}
    if args.oracle:
        out["oracle"] = _check_quasicycles(aut)
    return out


def _check_quasicycles(aut: NodAutomaton) -> str:
    words = enumerate_quasicycles(aut)
    if len(aut.letters) <= 12 and oracle.literal_quasicycles(aut) != {p.word for p in words}:
        raise CheckFailed("quasi-cycle enumeration disagrees with the literal algorithm")
    for p in words:
        if oracle.brute_selfconnected(aut, p) != is_selfconnected(aut, p):
            raise CheckFailed(f"selfconnectedness of {p} disagrees with brute force")
        for q in words:
            if oracle.brute_implies(aut, p, q) != implies(aut, p, q):
                raise CheckFailed(f"{p} => {q} disagrees with brute force")
    return "ok"


def cmd_gkdim(g: WeightedGraph, args) -> dict:
    base = _base(args.base)
    if args.fast_unweighted and g.is_unweighted() and base is None:
        result = unweighted_gk(g)
    else:
        result = gk_dimension(g, base)
    out = result.to_json()
    if args.all_bases:
        summaries = {gk_dimension(g, b).summary() for b in all_bases(g)}
        out["all_bases"] = {"count": sum(1 for _ in all_bases(g)), "agree": len(summaries) == 1}
        if len(summaries) != 1:
            raise CheckFailed(f"base choices disagree: {sorted(summaries, key=str)}")
    if args.oracle:
        aut = NodAutomaton(g, base)
        _check_quasicycles(aut)
        if g.is_unweighted() and unweighted_gk(g).summary() != result.summary():
            raise CheckFailed("cycle-based and quasi-cycle-based answers disagree")
        out["oracle"] = "ok"
    return out


def cmd_growth(g: WeightedGraph, args) -> dict:
    aut = NodAutomaton(g, _base(args.base))
    counts = aut.count_by_length(args.max_len)
    out: dict = {"max_len": args.max_len, "d_V": aut.growth(args.max_len)}
    if args.counts:
        out["counts"] = counts
    if args.all_bases:
        runs = {tuple(NodAutomaton(g, b).count_by_length(args.max_len)) for b in all_bases(g)}
        out["all_bases"] = {"count": sum(1 for _ in all_bases(g)), "agree": len(runs) == 1}
        if len(runs) != 1:
            raise CheckFailed("nod-path counts depend on the base choice")
    if args.oracle:
        levels = aut.enumerate_nod_paths(args.max_len)
        if [len(level) for level in levels] != counts:
            raise CheckFailed("transfer counts disagree with explicit enumeration")
        out["oracle"] = "ok"
    return out


def cmd_basis(g: WeightedGraph, args) -> dict:
    aut = NodAutomaton(g, _base(args.base))
    levels = aut.enumerate_nod_paths(args.max_len)
    return {"max_len": args.max_len, "paths": [[render_word(w) for w in level] for level in levels]}


def cmd_decompose(g: WeightedGraph, args) -> dict:
    steps = fd.unweighting_steps(g)
    dec = fd.acyclic_decomposition(steps[-1].graph)
    dim = fd.dimension_oracle(g, _base(args.base))
    out: dict = {"sizes": list(dec.sizes), "dimension": dec.dimension,
                 "oracle": "ok" if dim == dec.dimension else "mismatch"}
    if args.all_bases:
        dims = {fd.dimension_oracle(g, b) for b in all_bases(g)}
        out["all_bases"] = {"count": sum(1 for _ in all_bases(g)), "agree": dims == {dec.dimension}}
    if args.oracle:
        for st in steps:
            if fd.dimension_oracle(st.graph) != dim:
                raise CheckFailed(f"dimension changed at the {st.action} step")
        fd.structural_audit(g)
    if args.steps:
        out["steps"] = [{"action": st.action, "pivot": st.pivot, "graph": render_graph(st.graph)}
                        for st in steps]
    if out["oracle"] != "ok" or out.get("all_bases", {}).get("agree") is False:
        raise CheckFailed(f"dimension check failed: {out}")
    return out


# -- text rendering --------------------------------------------------------------

def _text(command: str, out: dict) -> str:
    if command == "gkdim":
        if out["growth"] == "polynomial":
            lines = [f"polynomial growth, GK dimension {out['gk_dimension']}"]
            if "chain" in out:
                lines.append("longest chain: " + " => ".join(f"[{p}]" for p in out["chain"]))
        else:
            lines = ["exponential growth, GK dimension infinite",
                     f"selfconnected quasi-cycle: {out['witness']}"]
    elif command == "quasicycles":
        lines = [f"{out['count']} quasi-cycle classes"]
        for row in out["classes"]:
            flag = "  selfconnected" if row["selfconnected"] else ""
            lines.append(f"[{row['canonical']}]  star [{row['star']}]{flag}")
    elif command == "decompose":
        lines = [" x ".join(f"M_{n}(K)" for n in out["sizes"]) or "0",
                 f"dimension {out['dimension']} (nod-path count {out['oracle']})"]
        for st in out.get("steps", []):
            lines.append(f"-- {st['action']}" + (f" at {st['pivot']}" if st["pivot"] else ""))
            lines.append(st["graph"].rstrip())
    elif command == "basis":
        lines = [f"{k}: " + ", ".join(level) for k, level in enumerate(out["paths"])]
    elif command == "growth":
        lines = [f"{n}\t{d}" + (f"\t{out['counts'][n]}" if "counts" in out else "")
                 for n, d in enumerate(out["d_V"])]
    else:
        lines = [f"{k}: {v}" for k, v in out.items()]
    for key in ("all_bases", "oracle"):
        if key in out and command not in ("validate", "info"):
            lines.append(f"{key}: {out[key]}")
    return "\n".join(lines)


COMMANDS = {
    "validate": cmd_validate,
    "info": cmd_info,
    "quasicycles": cmd_quasicycles,
    "gkdim": cmd_gkdim,
    "growth": cmd_growth,
    "basis": cmd_basis,
    "decompose": cmd_decompose,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="graph file, or - for stdin")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--base", action="append", metavar="V=E",
                        help="choose E as the base edge at vertex V (repeatable)")
    common.add_argument("--oracle", action="store_true", help="run brute-force cross-checks")

    parser = argparse.ArgumentParser(prog="wlpa", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common])
    sub.add_parser("info", parents=[common])
    sub.add_parser("quasicycles", parents=[common])
    p = sub.add_parser("gkdim", parents=[common])
    p.add_argument("--fast-unweighted", action="store_true",
                   help="use the cycle criterion when every weight is 1")
    p.add_argument("--all-bases", action="store_true")
    p = sub.add_parser("growth", parents=[common])
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--counts", action="store_true", help="also print per-length counts")
    p.add_argument("--all-bases", action="store_true")
    p = sub.add_parser("basis", parents=[common])
    p.add_argument("--max-len", type=int, required=True)
    p = sub.add_parser("decompose", parents=[common])
    p.add_argument("--all-bases", action="store_true")
    p.add_argument("--steps", action="store_true", help="include every intermediate graph")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_len", 0) < 0:
        print("error: --max-len must be non-negative", file=sys.stderr)
        return 1
    try:
        g = _read(args.file)
        out = COMMANDS[args.command](g, args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AssertionError, CheckFailed) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(out))
    else:
        print(_text(args.command, out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
