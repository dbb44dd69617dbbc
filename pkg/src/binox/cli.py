"""Command-line harness.

Every subcommand prints a deterministic report and exits 0 whenever a
verdict was computed, including negative and budget-exceeded verdicts;
exit 2 means the input could not be used.  ``--porcelain`` switches to
stable key=value lines for scripting.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog as cat
from .complexes import clique_complex, is_graph_covering, is_simplicial_covering
from .config import Budgets
from .cover import classify, universal_cover
from .enumeration import canonical_graphs
from .errors import BinoxError, BudgetExceeded, KernelFault, SearchBudgetExceeded
from .explorer import explore, lift_check
from .graphs import (format_graph, format_vertex_map, load_graph,
                     load_vertex_map, save_graph)
from .homotopy import contraction_sequence, is_k_contractible
from .views import format_view, view


def _hint_graphs(path: str):
    hints = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("catalog:"):
                hints.append(cat.graph(line[len("catalog:"):]))
            else:
                hints.append(load_graph(line))
    return hints


def _emit(porcelain: bool, pairs: list[tuple[str, object]], human: str) -> None:
    if porcelain:
        for key, value in pairs:
            print(f"{key}={value}")
    else:
        print(human)


def _budgets(args: argparse.Namespace) -> Budgets:
    kw = {}
    if getattr(args, "vertex_budget", None) is not None:
        kw["cover_vertices"] = args.vertex_budget
    if getattr(args, "search_budget", None) is not None:
        kw["search_states"] = args.search_budget
    return Budgets(**kw)


def cmd_explore(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    hints = _hint_graphs(args.hints) if args.hints else ()
    mode = "hinted" if hints else args.mode
    out = explore(g, start=args.start, move_budget=args.max_moves, mode=mode,
                  hints=hints, walk=args.walk, budgets=_budgets(args))
    cand = out.candidate
    pairs = [
        ("status", out.status),
        ("moves", out.moves),
        ("phases_completed", out.phases_completed),
        ("halt_phase", out.halt_phase if out.halted else "-"),
        ("candidate_vertices", cand.graph.n if cand else "-"),
        ("visited", len(out.visited)),
        ("terrain_vertices", g.n),
    ]
    if out.halted:
        human = (f"halted at phase {out.halt_phase} after {out.moves} moves; "
                 f"candidate has {cand.graph.n} vertices; "
                 f"visited {len(out.visited)}/{g.n} vertices")
    else:
        human = (f"move budget of {args.max_moves} exhausted after "
                 f"{out.phases_completed} completed phases; no halt; "
                 f"visited {len(out.visited)}/{g.n} vertices")
    _emit(args.porcelain, pairs, human)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    got = classify(g, _budgets(args))
    pairs = [
        ("kind", got.kind),
        ("sheets", got.sheets if got.sheets is not None else "-"),
        ("cover_size", got.cover_size if got.cover_size is not None else "-"),
    ]
    if got.kind == "exceeds_budget":
        human = "development exceeded the vertex budget (cover infinite or large)"
    elif got.kind == "simply_connected":
        human = f"simply connected (its own universal cover, {got.cover_size} vertices)"
    else:
        human = (f"finite universal cover: {got.cover_size} vertices, "
                 f"{got.sheets} sheets")
    _emit(args.porcelain, pairs, human)
    return 0


def cmd_ucover(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    res = universal_cover(g, base=args.base, budgets=_budgets(args))
    if not res.finite:
        _emit(args.porcelain, [("status", res.status), ("explored", res.explored)],
              f"development exceeded {res.explored} lifted vertices")
        return 0
    pairs = [
        ("status", res.status),
        ("cover_vertices", res.cover.n),
        ("sheets", res.sheets),
    ]
    _emit(args.porcelain, pairs,
          f"finite: {res.cover.n} vertices, {res.sheets} sheets (audited)")
    if args.out:
        save_graph(res.cover, args.out)
    elif not args.porcelain:
        sys.stdout.write(format_graph(res.cover))
    if args.map_out:
        with open(args.map_out, "w", encoding="utf-8") as fh:
            fh.write(format_vertex_map(res.projection))
    return 0


def cmd_cover_check(args: argparse.Namespace) -> int:
    src = load_graph(args.src)
    dst = load_graph(args.dst)
    f = load_vertex_map(args.map, src, dst)
    gc = is_graph_covering(f, src, dst)
    try:
        sc = is_simplicial_covering(f, clique_complex(src), clique_complex(dst))
    except BinoxError:
        sc = False
    if gc != sc:
        raise KernelFault(f"covering notions disagree: graph={gc} simplicial={sc}")
    pairs = [
        ("graph_covering", str(gc).lower()),
        ("simplicial_covering", str(sc).lower()),
        ("agree", "true"),
    ]
    _emit(args.porcelain, pairs,
          f"graph covering: {gc}; simplicial covering: {sc}; definitions agree")
    return 0


def cmd_contract(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    loop = tuple(int(x) for x in args.loop.split(","))
    cx = clique_complex(g, _budgets(args))
    budgets = _budgets(args)
    try:
        if args.show_sequence:
            seq = contraction_sequence(loop, cx, args.k, budgets)
            verdict = "contractible" if seq is not None else "not_contractible"
        else:
            seq = None
            verdict = ("contractible"
                       if is_k_contractible(loop, cx, args.k, budgets)
                       else "not_contractible")
    except SearchBudgetExceeded:
        _emit(args.porcelain,
              [("verdict", "search_budget_exceeded"), ("moves", "-")],
              f"search budget exceeded before a verdict within {args.k} moves")
        return 0
    moves = len(seq) if seq is not None else "-"
    pairs = [("verdict", verdict), ("moves", moves)]
    if verdict == "contractible":
        human = f"contractible within {args.k} moves"
        if seq is not None:
            human += f" (minimum {len(seq)})"
    else:
        human = f"not contractible within {args.k} moves"
    _emit(args.porcelain, pairs, human)
    if seq is not None and not args.porcelain:
        for mv, lp in seq:
            data = ",".join(str(x) for x in mv.data)
            print(f"  {mv.kind}@{mv.index}{'(' + data + ')' if data else ''} -> {lp}")
    return 0


def cmd_lift_check(args: argparse.Namespace) -> int:
    cover = load_graph(args.cover)
    base = load_graph(args.base)
    f = load_vertex_map(args.map, cover, base)
    hints = _hint_graphs(args.hints) if args.hints else ()
    mode = "hinted" if hints else args.mode
    rep = lift_check(cover, base, f, cover_start=args.cover_start,
                     move_budget=args.steps, mode=mode, hints=hints,
                     walk=args.walk)
    pairs = [
        ("ok", str(rep.ok).lower()),
        ("steps_compared", rep.steps_compared),
        ("first_divergence", rep.first_divergence
         if rep.first_divergence is not None else "-"),
        ("base_halted", str(rep.base_run.halted).lower()),
        ("cover_halted", str(rep.cover_run.halted).lower()),
    ]
    if rep.ok:
        human = (f"runs agree for {rep.steps_compared} steps "
                 f"(actions, digests, projected positions)")
    else:
        human = f"runs diverge at step {rep.first_divergence}"
    _emit(args.porcelain, pairs, human)
    return 0


def cmd_view(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    sys.stdout.write(format_view(view(g, args.vertex, args.depth)))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    total = 0
    for n in range(1, args.n_max + 1):
        graphs = canonical_graphs(n)
        total += len(graphs)
        if args.count_only:
            print(f"n={n} count={len(graphs)}")
        else:
            for i, g in enumerate(graphs):
                print(f"# n={n} index={i}")
                sys.stdout.write(format_graph(g))
    if args.count_only:
        print(f"total={total}")
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "run":
        for line in cat.verify_catalog():
            print(line)
        print("catalog verified")
    else:
        for path in cat.write_catalog(args.dir):
            print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="binox",
        description="Explore port graphs with radius-1 sensing; analyze views, "
                    "coverings, loop contraction, and universal covers.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, walk=False):
        p.add_argument("--porcelain", action="store_true",
                       help="stable key=value output")
        if walk:
            p.add_argument("--mode", choices=["exhaustive", "hinted"],
                           default="exhaustive")
            p.add_argument("--hints", metavar="FILE",
                           help="file with one graph path (or catalog:NAME) per "
                                "line; implies hinted mode")
            p.add_argument("--walk", choices=["full", "nonbacktracking"],
                           default="full")

    p = sub.add_parser("explore", help="run the phased exploring agent")
    p.add_argument("graph")
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--max-moves", type=int, default=10**6, help="move budget")
    common(p, walk=True)
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("classify", help="bucket a graph by its universal cover")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=None, dest="vertex_budget",
                   help="lifted vertex cap")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ucover", help="develop the universal cover")
    p.add_argument("graph")
    p.add_argument("--base", type=int, default=0)
    p.add_argument("--budget", type=int, default=None, dest="vertex_budget",
                   help="lifted vertex cap")
    p.add_argument("--out", metavar="FILE", help="write the cover graph here")
    p.add_argument("--map-out", metavar="FILE", help="write the projection here")
    common(p)
    p.set_defaults(func=cmd_ucover)

    p = sub.add_parser("cover-check", help="test a vertex map for covering")
    p.add_argument("src", help="covering graph file")
    p.add_argument("dst", help="base graph file")
    p.add_argument("map", help="map file (m SRC DST lines)")
    common(p)
    p.set_defaults(func=cmd_cover_check)

    p = sub.add_parser("contract", help="bounded loop contraction")
    p.add_argument("graph")
    p.add_argument("--loop", required=True,
                   help="comma-separated closed vertex walk, e.g. 0,1,2,0")
    p.add_argument("--k", type=int, required=True, help="move bound")
    p.add_argument("--show-sequence", action="store_true")
    p.add_argument("--search-budget", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("lift-check", help="compare twin runs on cover and base")
    p.add_argument("cover")
    p.add_argument("base")
    p.add_argument("map", help="projection file, cover vertex -> base vertex")
    p.add_argument("--cover-start", type=int, default=0)
    p.add_argument("--steps", type=int, default=10**4, help="move budget")
    common(p, walk=True)
    p.set_defaults(func=cmd_lift_check)

    p = sub.add_parser("view", help="print a small view tree")
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, default=0)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_view)

    p = sub.add_parser("enumerate",
                       help="canonical connected port graphs by size")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("catalog", help="verify or write the built-in catalog")
    p.add_argument("action", choices=["run", "write"])
    p.add_argument("--dir", default="catalog", help="output directory for write")
    p.set_defaults(func=cmd_catalog)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except KernelFault:
        raise  # internal invariant broken; full traceback wanted
    except BudgetExceeded as exc:
        # budgets on subsidiary structures (cliques, cycles) surface as a
        # verdict-style line, still exit 0: the computation answered
        print(f"budget_exceeded: {exc}")
        return 0
    except (BinoxError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
