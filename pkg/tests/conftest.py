"""Shared fixtures and strategies for the test suite."""

from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import strategies as st

from binox.catalog import graph as catalog_graph
from binox.enumeration import canonical_graphs
from binox.graphs import PortGraph


@lru_cache(maxsize=None)
def all_canonical(n_max: int) -> tuple[PortGraph, ...]:
    return tuple(g for n in range(1, n_max + 1) for g in canonical_graphs(n))


def relabel(g: PortGraph, perm) -> PortGraph:
    """Port-preserving isomorphic copy with vertices renamed by perm."""
    return PortGraph(g.n, [(perm[u], perm[v], pu, pv)
                           for u, v, pu, pv in g.edges()])


def small_graphs(n_max: int = 4) -> st.SearchStrategy[PortGraph]:
    """Every canonical connected port graph on <= n_max vertices."""
    return st.sampled_from(all_canonical(n_max))


@st.composite
def graph_with_vertex(draw, n_max: int = 4):
    g = draw(small_graphs(n_max))
    v = draw(st.integers(0, g.n - 1))
    return g, v


@st.composite
def graph_with_permutation(draw, n_max: int = 4):
    g = draw(small_graphs(n_max))
    perm = draw(st.permutations(range(g.n)))
    return g, tuple(perm)


@st.composite
def closed_walks(draw, n_max: int = 4, max_out: int = 3):
    """A loop built from a walk followed by its own backtrack, possibly
    with stationary steps mixed in.  Always a valid loop of the graph."""
    g = draw(small_graphs(n_max))
    v0 = draw(st.integers(0, g.n - 1))
    out = [v0]
    for _ in range(draw(st.integers(0, max_out))):
        here = out[-1]
        choice = draw(st.integers(-1, g.degree(here) - 1))
        out.append(here if choice < 0 else g.neighbor(here, choice))
    walk = out + out[-2::-1]
    return g, tuple(walk)


def all_closed_walks(g: PortGraph, max_steps: int):
    """Every closed walk of at most max_steps steps, stationary steps
    included, from every basepoint."""
    out = []
    for s in g.vertices:
        stack: list[tuple[int, ...]] = [(s,)]
        while stack:
            w = stack.pop()
            if w[-1] == s:
                out.append(w)
            if len(w) <= max_steps:
                here = w[-1]
                stack.append(w + (here,))
                for p in range(g.degree(here)):
                    stack.append(w + (g.neighbor(here, p),))
    return out


def irreversible_moves(g: PortGraph, max_steps: int):
    """Non-collapse moves on closed walks of <= max_steps steps whose
    result has no move back; empty list means reversibility holds."""
    from binox.complexes import clique_complex
    from binox.homotopy import neighbor_moves

    cx = clique_complex(g)
    bad = []
    for loop in all_closed_walks(g, max_steps):
        for mv, nxt in neighbor_moves(loop, cx):
            if mv.kind == "collapse":
                continue
            if not any(back == loop for _, back in neighbor_moves(nxt, cx)):
                bad.append((loop, mv, nxt))
    return bad


REVERSIBILITY_FAMILY = ("k1", "p2", "p3", "k3", "k4", "c4", "c5")


@pytest.fixture(scope="session")
def k3():
    return catalog_graph("k3")


@pytest.fixture(scope="session")
def k4():
    return catalog_graph("k4")


@pytest.fixture(scope="session")
def p2():
    return catalog_graph("p2")


@pytest.fixture(scope="session")
def c4():
    return catalog_graph("c4")
