"""Views, view equality, folds, and their serialization."""

import pytest
from hypothesis import given, settings

from binox.catalog import cycle_graph, graph, vertex_map
from binox.errors import DepthMismatch
from binox.views import (ViewInterner, fold_graph, fold_tree, format_view,
                         node_count, reintern, same_view, truncate, view,
                         view_eq, view_key)

from conftest import graph_with_vertex, small_graphs

K3_VIEW_DEPTH2 = (
    "view depth=2\n"
    "[] (2, (1, 0), ((0, 1, 0, 1),))\n"
    "  [0|1] (2, (1, 0), ((0, 1, 0, 1),))\n"
    "    [0|1] (2, (1, 0), ((0, 1, 0, 1),))\n"
    "    [1|0] (2, (1, 0), ((0, 1, 0, 1),))\n"
    "  [1|0] (2, (1, 0), ((0, 1, 0, 1),))\n"
    "    [0|1] (2, (1, 0), ((0, 1, 0, 1),))\n"
    "    [1|0] (2, (1, 0), ((0, 1, 0, 1),))\n"
)


# -- construction ------------------------------------------------------------------


def test_depth_zero_view_is_single_labelled_node(k3):
    t = view(k3, 0, 0)
    assert t.depth == 0
    assert t.root.label == k3.label(0)
    assert t.root.children == ()
    assert node_count(t) == 1


def test_p2_view_is_a_path(p2):
    t = view(p2, 0, 2)
    assert node_count(t) == 3  # u, u->v, u->v->u
    node = t.root
    for _ in range(2):
        assert len(node.children) == 1
        node = node.children[0][2]
    assert node.children == ()


def test_consistent_triangle_views_agree_everywhere(k3):
    for k in range(5):
        base = view(k3, 0, k)
        for v in (1, 2):
            assert view_eq(base, view(k3, v, k))


def test_view_children_follow_ports(k4):
    t = view(k4, 0, 1)
    assert [p for p, _q, _c in t.root.children] == [0, 1, 2]


# -- equality ---------------------------------------------------------------------


def test_view_eq_reflexive(k4):
    t = view(k4, 2, 3)
    assert view_eq(t, t)


def test_view_eq_rejects_depth_mismatch(k3):
    with pytest.raises(DepthMismatch):
        view_eq(view(k3, 0, 2), view(k3, 0, 3))


def test_c4_and_c8_vertices_indistinguishable():
    c4, c8 = cycle_graph(4), cycle_graph(8)
    for k in range(7):
        assert view_eq(view(c4, 0, k), view(c8, 3, k))


def test_p2_endpoints_indistinguishable(p2):
    assert view_eq(view(p2, 0, 1), view(p2, 1, 1))


def test_distinguishable_vertices_differ(c4):
    p3 = graph("p3")
    assert not view_eq(view(p3, 0, 2), view(p3, 1, 2))
    # both roots have degree 2, but the path's ends show at depth 1
    assert not view_eq(view(c4, 0, 3), view(p3, 1, 3))


# -- invariants --------------------------------------------------------------------


@given(graph_with_vertex())
@settings(max_examples=40)
def test_deeper_view_restricts_to_shallower(gv):
    g, v = gv
    for k in range(3):
        assert view_eq(truncate(view(g, v, k + 1), k), view(g, v, k))


def walk_tree_size(g, v, k):
    """Independent node-count oracle: 1 + sum over neighbours at k-1."""
    if k == 0:
        return 1
    return 1 + sum(walk_tree_size(g, w, k - 1) for w in g.neighbors(v))


@given(graph_with_vertex())
@settings(max_examples=40)
def test_node_count_matches_walk_count(gv):
    g, v = gv
    for k in range(4):
        assert node_count(view(g, v, k)) == walk_tree_size(g, v, k)


def test_covering_preserves_views():
    for name in ("c8_to_c4", "rp2_cover_to_rp2"):
        f, src, dst = vertex_map(name)
        for u in src.vertices:
            for k in range(3):
                assert view_eq(view(src, u, k), view(dst, f[u], k))


# -- folds -------------------------------------------------------------------------


@given(graph_with_vertex(), graph_with_vertex())
@settings(max_examples=60)
def test_fold_equality_is_view_equality(a, b):
    g1, v1 = a
    g2, v2 = b
    for k in (0, 2, 3):
        assert same_view(g1, v1, g2, v2, k) == view_eq(view(g1, v1, k),
                                                       view(g2, v2, k))


@given(graph_with_vertex(), graph_with_vertex())
@settings(max_examples=60)
def test_nonbacktracking_fold_same_relation(a, b):
    g1, v1 = a
    g2, v2 = b
    for k in (2, 4):
        assert (same_view(g1, v1, g2, v2, k, nonbacktracking=True)
                == same_view(g1, v1, g2, v2, k))


@given(graph_with_vertex())
@settings(max_examples=40)
def test_fold_tree_agrees_with_fold_graph(gv):
    g, v = gv
    table = ViewInterner()
    assert fold_tree(view(g, v, 3), table) == fold_graph(g, v, 3, table)


def test_reintern_lands_on_native_fold(k3, k4):
    t1, t2 = ViewInterner(), ViewInterner()
    a = fold_graph(k3, 0, 3, t1)
    b = fold_graph(k4, 0, 3, t1)
    ra = reintern(t1, a, t2)
    rb = reintern(t1, b, t2)
    assert ra != rb
    assert ra == fold_graph(k3, 0, 3, t2)
    assert rb == fold_graph(k4, 0, 3, t2)


def test_reintern_round_trip(k3):
    t1, t2 = ViewInterner(), ViewInterner()
    a = fold_graph(k3, 0, 2, t1)
    assert reintern(t2, reintern(t1, a, t2), t1) == a


def test_view_key_carries_root_and_child_labels(k3):
    table = ViewInterner()
    ident = fold_graph(k3, 0, 2, table)
    key = view_key(table, ident, 2)
    assert key.depth == 2
    assert key.root_label == k3.label(0)
    assert key.child_labels == (k3.label(1), k3.label(2))


# -- serialization ------------------------------------------------------------------


def test_view_serialization_golden(k3):
    assert format_view(view(k3, 0, 2)) == K3_VIEW_DEPTH2


def test_view_serialization_deterministic(k4):
    assert format_view(view(k4, 1, 3)) == format_view(view(k4, 1, 3))
