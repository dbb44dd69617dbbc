"""The exploring agent and the harness that walks it over a terrain.

Strict separation: the agent receives only (radius-1 label, entry port)
observations and answers with a port number or None (halt).  The harness
owns the graph, executes moves, counts them, and records positions.  No
vertex identity ever crosses the boundary, so the agent is anonymous by
construction: two runs receiving equal observation sequences evolve
identically, which is exactly what the lift checker exercises.

The agent explores in phases k = 1, 2, ...; phase k physically walks the
depth-2k walk tree depth-first (each tree edge costs two moves, down and
up, so every phase ends back home), folding observed subtrees into a
per-run intern table.  At phase end (computation is free, only moves are
charged) it searches for a smaller-than-k candidate graph matching the
acquired view and halts when every simple cycle of the candidate is
k-contractible.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable

from .complexes import is_graph_covering
from .config import DEFAULT_BUDGETS, Budgets
from .enumeration import Candidate, find_candidate
from .errors import BudgetExceeded, InvalidMove, KernelFault, NotACovering
from .graphs import Label, PortGraph
from .homotopy import all_simple_cycles_k_contractible
from .views import ViewInterner, view_key

Observation = tuple[Label, "int | None"]


class PhasedAgent:
    """Phased view acquisition with a candidate-based halting test.

    ``mode`` selects the candidate stream: "exhaustive" (all port graphs by
    size) or "hinted" (only the provided hint graphs).  ``walk`` selects
    the acquisition strategy: "full" physically walks the complete walk
    tree; "nonbacktracking" skips the entry port at non-root nodes, which
    determines the same view at exponentially fewer moves.
    """

    def __init__(self, mode: str = "exhaustive", hints: Iterable[PortGraph] = (),
                 walk: str = "full", budgets: Budgets = DEFAULT_BUDGETS):
        if walk not in ("full", "nonbacktracking"):
            raise ValueError(f"unknown walk mode {walk!r}")
        if mode not in ("exhaustive", "hinted"):
            raise ValueError(f"unknown candidate mode {mode!r}")
        self.mode = mode
        self.hints = tuple(hints)
        self.walk = walk
        self.nb = walk == "nonbacktracking"
        self.budgets = budgets
        self.k = 0
        self.table = ViewInterner()  # local: ids depend only on observations
        # frames: [via_port_at_parent, entry_port, label, children, next_port]
        self.stack: list[list] = []
        self._descend_port: int | None = None
        self.view_ids: list[int] = []
        self.phase_log: list[tuple] = []
        self.accepted: Candidate | None = None
        self.accepted_k: int | None = None

    # -- protocol ----------------------------------------------------------

    def act(self, obs: Observation) -> int | None:
        label, entry = obs
        if self.accepted is not None:
            return None
        if self._descend_port is not None:
            self.stack.append([self._descend_port, entry, label, [], 0])
            self._descend_port = None
        elif not self.stack:
            if self.k != 0:
                raise KernelFault("agent has no frame mid-run")
            self.k = 1
            self.stack.append([None, None, label, [], 0])
        elif self.stack[-1][2] != label:
            raise KernelFault("label changed under the agent while ascending")
        return self._decide()

    def snapshot(self) -> tuple:
        """Complete agent state as plain data; input to the memory digest."""
        acc = None
        if self.accepted is not None:
            acc = (self.accepted.graph.encoding(), self.accepted.root,
                   self.accepted_k)
        return (
            self.k,
            self.mode,
            self.walk,
            tuple(h.encoding() for h in self.hints),
            tuple((f[0], f[1], f[2], tuple(f[3]), f[4]) for f in self.stack),
            self._descend_port,
            self.table.entries(),
            tuple(self.view_ids),
            tuple(self.phase_log),
            acc,
        )

    # -- internals ----------------------------------------------------------

    def _decide(self) -> int | None:
        while True:
            frame = self.stack[-1]
            if len(self.stack) - 1 < 2 * self.k:
                p = self._next_port(frame)
                if p is not None:
                    self._descend_port = p
                    return p
            ident = self.table.intern((frame[2], tuple(frame[3])))
            self.stack.pop()
            if self.stack:
                self.stack[-1][3].append((frame[0], frame[1], ident))
                return frame[1]  # ascend through the port we entered by
            if self._phase_end(ident):
                return None
            self.stack.append([None, None, frame[2], [], 0])

    def _next_port(self, frame: list) -> int | None:
        deg = frame[2][0]
        p = frame[4]
        while p < deg:
            frame[4] = p + 1
            if self.nb and frame[1] is not None and p == frame[1]:
                p = frame[4]
                continue
            return p
        return None

    def _phase_end(self, ident: int) -> bool:
        k = self.k
        self.view_ids.append(ident)
        vk = view_key(self.table, ident, 2 * k, self.nb)
        cand = find_candidate(vk, k, mode=self.mode, hints=self.hints,
                              table=self.table)
        cand_enc = verdict = None
        halted = False
        if cand is not None:
            cand_enc = cand.graph.encoding()
            try:
                ok = all_simple_cycles_k_contractible(cand.graph, k,
                                                      budgets=self.budgets)
                verdict = "contractible" if ok else "not_contractible"
            except BudgetExceeded:
                ok = False
                verdict = "test_budget_exceeded"
            if ok:
                self.accepted = cand
                self.accepted_k = k
                halted = True
        self.phase_log.append((k, ident, cand_enc, verdict))
        if not halted:
            self.k = k + 1
        return halted


def agent_digest(agent) -> str:
    """sha256 over a value-based rendering of the agent's snapshot.

    The snapshot is nested plain data (tuples, ints, strings, None), for
    which repr is canonical.  Reference-sharing serializers (pickle) are
    unsuitable here: byte output would depend on which equal label tuples
    happen to be the same object, which differs across terrains.
    """
    return hashlib.sha256(repr(agent.snapshot()).encode()).hexdigest()


# -- harness --------------------------------------------------------------------


@dataclass(frozen=True)
class StepRecord:
    position: int
    entry: int | None
    action: int | None  # None means halt
    digest: str | None


@dataclass(frozen=True)
class RunResult:
    halted: bool
    budget_exhausted: bool
    moves: int
    start: int
    final_position: int
    visited: frozenset[int]
    steps: tuple[StepRecord, ...]  # empty unless recording was requested


def run_agent(g: PortGraph, agent, start: int = 0,
              move_budget: int = DEFAULT_BUDGETS.moves,
              record: str = "none") -> RunResult:
    """Drive the agent until it halts or the move budget is exhausted.

    ``record``: "none" (fast), "steps" (positions and actions), or
    "digests" (additionally a sha256 memory digest per step).  A budget
    exhaustion leaves the final decision unexecuted and is reported in the
    result, never as an exception.
    """
    if record not in ("none", "steps", "digests"):
        raise ValueError(f"unknown record level {record!r}")
    if not 0 <= start < g.n:
        raise InvalidMove(f"start vertex {start} out of range")
    pos, entry, moves = start, None, 0
    visited = {start}
    steps: list[StepRecord] = []
    while True:
        action = agent.act((g.label(pos), entry))
        if record != "none":
            dg = agent_digest(agent) if record == "digests" else None
            steps.append(StepRecord(pos, entry, action, dg))
        if action is None:
            return RunResult(True, False, moves, start, pos,
                             frozenset(visited), tuple(steps))
        deg = g.degree(pos)
        if not isinstance(action, int) or not 0 <= action < deg:
            raise InvalidMove(
                f"agent chose port {action!r} at a degree-{deg} vertex"
            )
        if moves >= move_budget:
            return RunResult(False, True, moves, start, pos,
                             frozenset(visited), tuple(steps))
        entry = g.back_port(pos, action)
        pos = g.neighbor(pos, action)
        moves += 1
        visited.add(pos)


@dataclass(frozen=True)
class ExploreOutcome:
    status: str  # "halted" | "budget_exhausted"
    moves: int
    phases_completed: int
    halt_phase: int | None
    candidate: Candidate | None
    visited: frozenset[int]
    run: RunResult
    agent: PhasedAgent

    @property
    def halted(self) -> bool:
        return self.status == "halted"


def explore(g: PortGraph, start: int = 0,
            move_budget: int = DEFAULT_BUDGETS.moves,
            mode: str = "exhaustive", hints: Iterable[PortGraph] = (),
            walk: str = "full", budgets: Budgets = DEFAULT_BUDGETS,
            record: str = "none") -> ExploreOutcome:
    """One full exploration run; asserts total visitation on halt."""
    agent = PhasedAgent(mode=mode, hints=hints, walk=walk, budgets=budgets)
    run = run_agent(g, agent, start, move_budget, record)
    if run.halted and run.visited != frozenset(g.vertices):
        raise KernelFault(
            f"halted having visited {len(run.visited)} of {g.n} vertices"
        )
    return ExploreOutcome(
        status="halted" if run.halted else "budget_exhausted",
        moves=run.moves,
        phases_completed=len(agent.phase_log),
        halt_phase=agent.accepted_k,
        candidate=agent.accepted,
        visited=run.visited,
        run=run,
        agent=agent,
    )


def format_trace(g: PortGraph, run: RunResult) -> str:
    """Render a recorded run, one line per step:

        i <obs-hash> <mem-digest> <action> <pos>

    obs-hash covers exactly what the agent saw (label, entry port); the
    position column is harness metadata the agent never had.  mem-digest
    prints as - when the run was not recorded at the digests level.
    """
    lines = []
    for i, s in enumerate(run.steps):
        obs = (g.label(s.position), s.entry)
        oh = hashlib.sha256(repr(obs).encode()).hexdigest()[:16]
        action = "halt" if s.action is None else str(s.action)
        lines.append(f"{i} {oh} {s.digest or '-'} {action} {s.position}")
    return "\n".join(lines) + ("\n" if lines else "")


def reconstructed_projection(h: PortGraph, root: int, g: PortGraph,
                             start: int) -> dict[int, int] | None:
    """Map candidate vertices to the terrain vertices their walks reach.

    Propagates port-by-port from root -> start; returns None if any two
    walks to the same candidate vertex land on different terrain vertices
    (the map would be path-dependent) or ports run out.
    """
    f = {root: start}
    queue = [root]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        if h.degree(u) != g.degree(f[u]):
            return None
        for p in range(h.degree(u)):
            w = h.neighbor(u, p)
            img = g.neighbor(f[u], p)
            if w in f:
                if f[w] != img:
                    return None
            else:
                f[w] = img
                queue.append(w)
    return f


# -- lifting ---------------------------------------------------------------------


@dataclass(frozen=True)
class LiftReport:
    ok: bool
    steps_compared: int
    first_divergence: int | None
    base_run: RunResult
    cover_run: RunResult


def lift_check(cover: PortGraph, base: PortGraph, projection: dict[int, int],
               cover_start: int = 0, move_budget: int = 10**4,
               mode: str = "exhaustive", hints: Iterable[PortGraph] = (),
               walk: str = "full",
               budgets: Budgets = DEFAULT_BUDGETS) -> LiftReport:
    """Run twin agents on a cover and its base; compare step for step.

    The projection must be a covering (NotACovering otherwise).  Equal
    observation histories force equal actions and equal memory digests, and
    the cover run's position must project to the base run's position at
    every step; the report records the first step where any of that fails.
    """
    if not is_graph_covering(projection, cover, base):
        raise NotACovering("the given projection is not a covering")
    if not 0 <= cover_start < cover.n:
        raise InvalidMove(f"cover start {cover_start} out of range")

    def fresh() -> PhasedAgent:
        return PhasedAgent(mode=mode, hints=hints, walk=walk, budgets=budgets)

    base_run = run_agent(base, fresh(), projection[cover_start], move_budget,
                         record="digests")
    cover_run = run_agent(cover, fresh(), cover_start, move_budget,
                          record="digests")
    first: int | None = None
    upto = min(len(base_run.steps), len(cover_run.steps))
    for i in range(upto):
        sb, sc = base_run.steps[i], cover_run.steps[i]
        if (sb.action != sc.action or sb.entry != sc.entry
                or sb.digest != sc.digest
                or projection[sc.position] != sb.position):
            first = i
            break
    ok = (first is None
          and len(base_run.steps) == len(cover_run.steps)
          and base_run.halted == cover_run.halted
          and base_run.moves == cover_run.moves)
    return LiftReport(ok, upto if first is None else first, first,
                      base_run, cover_run)
