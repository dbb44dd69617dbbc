"""The exploring agent, its harness, trace tooling, and trace lifting."""

import re

import pytest

from binox.catalog import graph, vertex_map
from binox.complexes import is_graph_covering
from binox.enumeration import canonical_encoding
from binox.errors import InvalidMove, NotACovering
from binox.explorer import (PhasedAgent, explore, format_trace, lift_check,
                            reconstructed_projection, run_agent)
from binox.graphs import dest

from conftest import relabel

# (terrain, halting phase, total moves); frozen from verified runs
HALTING_RUNS = (
    ("k1", 2, 0),
    ("p2", 3, 24),
    ("p3", 4, 156),
    ("k3", 4, 1344),
    ("k4", 5, 199272),
)


class Scripted:
    """Plays a fixed port sequence, then halts."""

    def __init__(self, ports):
        self.ports = list(ports)
        self.seen = []

    def act(self, obs):
        self.seen.append(obs)
        return self.ports.pop(0) if self.ports else None

    def snapshot(self):
        return (tuple(self.ports), tuple(self.seen))


# -- harness -----------------------------------------------------------------------


def test_immediate_halt(p2):
    run = run_agent(p2, Scripted([]), record="steps")
    assert run.halted and not run.budget_exhausted
    assert run.moves == 0
    assert run.final_position == 0
    assert [s.action for s in run.steps] == [None]


def test_scripted_round_trip(p2):
    run = run_agent(p2, Scripted([0, 0]), record="steps")
    assert run.halted and run.moves == 2
    assert [s.position for s in run.steps] == [0, 1, 0]
    assert [s.entry for s in run.steps] == [None, 0, 0]
    assert run.visited == frozenset({0, 1})


def test_port_out_of_range_faults(p2):
    with pytest.raises(InvalidMove):
        run_agent(p2, Scripted([5]))
    with pytest.raises(InvalidMove):
        run_agent(p2, Scripted(["0"]))


def test_start_out_of_range_faults(p2):
    with pytest.raises(InvalidMove):
        run_agent(p2, Scripted([]), start=2)


def test_zero_budget_reports_exhaustion(p2):
    run = run_agent(p2, Scripted([0, 0]), move_budget=0)
    assert run.budget_exhausted and not run.halted
    assert run.moves == 0


def test_record_levels(p2):
    assert run_agent(p2, Scripted([0])).steps == ()
    steps = run_agent(p2, Scripted([0]), record="steps").steps
    assert all(s.digest is None for s in steps)
    digs = run_agent(p2, Scripted([0]), record="digests").steps
    assert all(re.fullmatch(r"[0-9a-f]{64}", s.digest) for s in digs)
    with pytest.raises(ValueError):
        run_agent(p2, Scripted([]), record="everything")


def test_agent_config_validated():
    with pytest.raises(ValueError):
        PhasedAgent(walk="diagonal")
    with pytest.raises(ValueError):
        PhasedAgent(mode="psychic")


# -- full exploration ---------------------------------------------------------------


@pytest.mark.parametrize("name,phase,moves", HALTING_RUNS)
def test_exploration_halts_with_frozen_counts(name, phase, moves):
    g = graph(name)
    out = explore(g)
    assert out.halted
    assert out.status == "halted"
    assert (out.halt_phase, out.moves) == (phase, moves)
    assert out.visited == frozenset(g.vertices)
    assert out.phases_completed == phase
    assert out.candidate is not None
    assert out.candidate.graph.n < phase


def test_halted_candidate_matches_terrain_class(k3):
    out = explore(k3)
    assert canonical_encoding(out.candidate.graph) == canonical_encoding(k3)


def test_square_exhausts_budget(c4):
    out = explore(c4, move_budget=10**4)
    assert out.status == "budget_exhausted"
    assert not out.halted
    assert out.moves == 10**4
    assert out.halt_phase is None and out.candidate is None


def test_exploration_is_positionally_anonymous(k3):
    perm = (2, 0, 1)
    h = relabel(k3, perm)
    a = explore(k3, start=0, record="steps")
    b = explore(h, start=perm[0], record="steps")
    assert [s.action for s in a.run.steps] == [s.action for s in b.run.steps]
    assert [s.entry for s in a.run.steps] == [s.entry for s in b.run.steps]
    assert [perm[s.position] for s in a.run.steps] \
        == [s.position for s in b.run.steps]


def test_memory_digests_deterministic(p2):
    a = explore(p2, record="digests")
    b = explore(p2, record="digests")
    assert [s.digest for s in a.run.steps] == [s.digest for s in b.run.steps]


def test_hinted_mode_changes_only_computation(k3):
    full = explore(k3)
    hinted = explore(k3, mode="hinted", hints=[k3])
    assert hinted.halted
    assert (hinted.halt_phase, hinted.moves) == (full.halt_phase, full.moves)


def test_hinted_mode_without_usable_hints_never_halts(k3):
    out = explore(k3, mode="hinted", hints=[], move_budget=3000)
    assert out.status == "budget_exhausted"


def test_nonbacktracking_walk_same_verdict_fewer_moves(p2, k3):
    for g, phase, full_moves in ((p2, 3, 24), (k3, 4, 1344)):
        nb = explore(g, walk="nonbacktracking")
        assert nb.halted and nb.halt_phase == phase
        assert nb.moves < full_moves
        assert canonical_encoding(nb.candidate.graph) \
            == canonical_encoding(explore(g).candidate.graph)


def test_nonbacktracking_frozen_counts(p2, k3):
    assert explore(p2, walk="nonbacktracking").moves == 6
    assert explore(k3, walk="nonbacktracking").moves == 80


# -- reconstruction -----------------------------------------------------------------


def test_reconstructed_projection_on_halted_runs():
    for name, _, _ in HALTING_RUNS:
        g = graph(name)
        out = explore(g)
        h, root = out.candidate.graph, out.candidate.root
        f = reconstructed_projection(h, root, g, out.run.start)
        assert f is not None
        assert is_graph_covering(f, h, g), name


def test_reconstruction_is_walk_independent(k3):
    out = explore(k3)
    h, root = out.candidate.graph, out.candidate.root
    f = reconstructed_projection(h, root, k3, 0)
    # every port word from the root lands where the image walk lands
    words = [(p, q) for p in range(2) for q in range(2)]
    words += [(p, q, r) for p in range(2) for q in range(2) for r in range(2)]
    for w in words:
        assert f[dest(h, root, w)] == dest(k3, 0, w)


def test_reconstruction_fails_on_incompatible_shapes(c4, k3):
    assert reconstructed_projection(c4, 0, k3, 0) is None
    assert reconstructed_projection(k3, 0, c4, 0) is None


# -- traces -------------------------------------------------------------------------


def test_trace_lines_one_per_step(p2):
    out = explore(p2, record="digests")
    text = format_trace(p2, out.run)
    lines = text.splitlines()
    assert len(lines) == len(out.run.steps)
    assert all(re.fullmatch(r"\d+ [0-9a-f]{16} [0-9a-f]{64} (halt|\d+) \d+", ln)
               for ln in lines)
    assert lines[-1].split()[3] == "halt"


def test_trace_marks_missing_digests(p2):
    out = explore(p2, record="steps")
    assert " - " in format_trace(p2, out.run).splitlines()[0]


def test_trace_of_unrecorded_run_is_empty(p2):
    assert format_trace(p2, explore(p2).run) == ""


# -- lifting ------------------------------------------------------------------------


def test_identity_lift_agrees_through_halt():
    p3 = graph("p3")
    rep = lift_check(p3, p3, {v: v for v in p3.vertices}, move_budget=10**4)
    assert rep.ok
    assert rep.first_divergence is None
    assert rep.base_run.halted and rep.cover_run.halted
    assert rep.base_run.moves == 156


def test_identity_lift_agrees_under_budget(k4):
    f, src, dst = vertex_map("k4_identity")
    rep = lift_check(src, dst, f, move_budget=500)
    assert rep.ok
    assert rep.base_run.budget_exhausted and rep.cover_run.budget_exhausted


def test_cycle_lift_agrees_step_for_step():
    f, src, dst = vertex_map("c8_to_c4")
    rep = lift_check(src, dst, f, move_budget=2000)
    assert rep.ok
    assert rep.steps_compared == 2001  # final undone decision included
    assert rep.first_divergence is None
    assert rep.base_run.moves == rep.cover_run.moves == 2000
    for sb, sc in zip(rep.base_run.steps, rep.cover_run.steps):
        assert f[sc.position] == sb.position
        assert sb.digest == sc.digest


def test_lift_requires_a_covering():
    f, src, dst = vertex_map("c6_to_k3")
    with pytest.raises(NotACovering):
        lift_check(src, dst, f)


def test_lift_respects_cover_start():
    f, src, dst = vertex_map("c8_to_c4")
    rep = lift_check(src, dst, f, cover_start=5, move_budget=500)
    assert rep.ok
    assert rep.base_run.start == f[5]
