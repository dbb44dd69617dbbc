"""Run the exploration agent over catalog terrains and tabulate outcomes.

The default set pairs the four terrains whose universal covers are small
enough to halt on with the four that exhaust any budget.  Terrains of six
or more vertices only halt in hinted mode (--hinted feeds each terrain
its own description): an exhaustive phase k scans every terrain on fewer
than k vertices, which stops being enumerable past k = 6.  The octahedron
needs --hinted --walk nonbacktracking --budget 30000000 to halt.

Run: python3 scripts/explore_report.py [names...] [--budget N] [--hinted]
"""

import argparse
import sys
import time

from binox.catalog import graph, names
from binox.explorer import explore

DEFAULT_NAMES = ("p2", "p3", "k3", "k4", "c4", "c5", "c8", "grid3")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*", default=list(DEFAULT_NAMES))
    ap.add_argument("--budget", type=int, default=10**6, help="move budget")
    ap.add_argument("--hinted", action="store_true",
                    help="hint each terrain with its own description")
    ap.add_argument("--walk", choices=("full", "nonbacktracking"),
                    default="full")
    ap.add_argument("--list", action="store_true",
                    help="list catalog names and exit")
    args = ap.parse_args(argv)

    if args.list:
        print("\n".join(names()))
        return 0

    header = f"{'terrain':<12} {'status':<16} {'phase':>5} {'moves':>10} " \
             f"{'visited':>8} {'seconds':>8}"
    print(header)
    print("-" * len(header))
    for name in args.names:
        g = graph(name)
        kw = dict(move_budget=args.budget, walk=args.walk)
        if args.hinted:
            kw.update(mode="hinted", hints=[g])
        t0 = time.monotonic()
        out = explore(g, **kw)
        dt = time.monotonic() - t0
        phase = out.halt_phase if out.halt_phase is not None else "-"
        seen = f"{len(out.visited)}/{g.n}"
        print(f"{name:<12} {out.status:<16} {phase:>5} {out.moves:>10} "
              f"{seen:>8} {dt:>8.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
