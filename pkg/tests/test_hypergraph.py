import re
from itertools import combinations

import pytest

from comax.hypergraph import (
    CoMaximalGraph,
    Hypergraph,
    build_comaximal_graph,
    build_hypergraph,
    degeneracy_order,
    incidence_graph,
    maximal_cliques,
)
from comax.lattice import Subgroup, is_comaximal
from comax.oracle import OracleGroup, closure, naive_maximal_cliques, oracle_vertex_set, product_size_of_sets


def word(w: str, n: int):
    """'a^2b' -> (2, True); 'ab' -> (1, True); 'a' -> (1, False); 'b' -> (0, True)."""
    m = re.fullmatch(r"(a(?:\^(\d+))?)?(b)?", w)
    assert m and w
    s = (int(m.group(2)) if m.group(2) else 1) if m.group(1) else 0
    return (s % n, m.group(3) is not None)


def generated(n: int, *words: str) -> frozenset:
    return closure([word(w, n) for w in words], n)


def edge_sets(h: Hypergraph, n: int) -> set[frozenset]:
    grp = OracleGroup(n)
    return {frozenset(grp.elements(h.vertices[v]) for v in e) for e in h.hyperedges}


def gens(n, *groups):
    return {frozenset(generated(n, *g) for g in groups)}


# --- fixtures transcribed from generator notation -----------------------------------


def test_n2_single_hyperedge():
    h = build_hypergraph(2)
    assert h.num_vertices == 3
    assert edge_sets(h, 2) == gens(2, ["a"], ["b"], ["ab"])


def test_n4_five_hyperedges():
    n = 4
    h3, h4, h5, h6 = ["b"], ["ab"], ["a^2b"], ["a^3b"]
    h7, h8, h9 = ["a"], ["a^2", "ab"], ["a^2", "b"]
    expected = set()
    for e in ([h3, h7, h8], [h4, h7, h9], [h5, h7, h8], [h6, h7, h9], [h7, h8, h9]):
        expected |= gens(n, *e)
    assert edge_sets(build_hypergraph(n), n) == expected


def test_n6_thirteen_hyperedges():
    # the last three edges hold both index-2 dihedral subgroups together with
    # a <a^3, a^j b>; dropping either one would leave a non-maximal clique
    n = 6
    listing = [
        [["a^2"], ["a^3", "b"]],
        [["a^2"], ["a^3", "ab"]],
        [["a^2"], ["a^3", "a^2b"]],
        [["a^3"], ["a^2", "ab"], ["a^2", "b"]],
        [["b"], ["a"], ["a^2", "ab"]],
        [["a^3b"], ["a"], ["a^2", "b"]],
        [["ab"], ["a"], ["a^2", "b"]],
        [["a^4b"], ["a"], ["a^2", "ab"]],
        [["a^2b"], ["a"], ["a^2", "ab"]],
        [["a^5b"], ["a"], ["a^2", "b"]],
        [["a"], ["a^2", "b"], ["a^2", "ab"], ["a^3", "b"]],
        [["a"], ["a^2", "b"], ["a^2", "ab"], ["a^3", "ab"]],
        [["a"], ["a^2", "b"], ["a^2", "ab"], ["a^3", "a^2b"]],
    ]
    expected = set()
    for e in listing:
        expected |= gens(n, *e)
    h = build_hypergraph(n)
    assert h.num_hyperedges == 13
    assert edge_sets(h, n) == expected


# --- co-maximal graph -------------------------------------------------------------


def test_comax_graph_n4():
    g = build_comaximal_graph(4)
    assert len(g) == 7 and len(g.edges()) == 11


def test_comax_graph_n2_triangle():
    g = build_comaximal_graph(2)
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]


@pytest.mark.parametrize("n", [6, 12, 15])
def test_comax_graph_matches_oracle_adjacency(n):
    g = build_comaximal_graph(n, debug=True)
    grp = OracleGroup(n)
    for u, v in combinations(range(len(g)), 2):
        prod = product_size_of_sets(grp.elements(g.vertices[u]), grp.elements(g.vertices[v]), n)
        assert (v in g.adjacency[u]) == (prod == 2 * n)


def test_comax_graph_rejects_bad_adjacency():
    verts = (Subgroup.rotation(1), Subgroup.dihedral(2, 0))
    with pytest.raises(ValueError):
        CoMaximalGraph(2, verts, (frozenset({1}), frozenset()))
    with pytest.raises(ValueError):
        CoMaximalGraph(2, verts, (frozenset({0}), frozenset()))


# --- cliques ---------------------------------------------------------------------


def test_cliques_triangle_and_path():
    tri = (frozenset({1, 2}), frozenset({0, 2}), frozenset({0, 1}))
    path = (frozenset({1}), frozenset({0, 2}), frozenset({1}))
    assert maximal_cliques(tri) == [(0, 1, 2)]
    assert maximal_cliques(path) == [(0, 1), (1, 2)]


def test_cliques_n4_five():
    assert len(maximal_cliques(build_comaximal_graph(4))) == 5


def test_degeneracy_order_is_permutation():
    g = build_comaximal_graph(12)
    assert sorted(degeneracy_order(g.adjacency)) == list(range(len(g)))


@pytest.mark.parametrize("n", range(2, 31))
def test_hyperedges_match_naive_oracle(n):
    grp = OracleGroup(n)
    overt = oracle_vertex_set(n)
    adj = [
        {j for j, b in enumerate(overt) if j != i and product_size_of_sets(a, b, n) == 2 * n}
        for i, a in enumerate(overt)
    ]
    oracle_edges = {frozenset(overt[v] for v in c) for c in naive_maximal_cliques(adj)}
    h = build_hypergraph(n)
    assert {grp.elements(v) for v in h.vertices} == set(overt)
    assert edge_sets(h, n) == oracle_edges


@pytest.mark.parametrize("n", range(2, 41))
def test_hyperedges_are_maximal_cliques_covering_every_edge(n):
    h = build_hypergraph(n)
    verts = h.vertices
    masks = h.edge_masks()
    for e in h.hyperedges:
        for u, v in combinations(e, 2):
            assert is_comaximal(verts[u], verts[v], n)
    for a, b in combinations(masks, 2):
        assert a & b != a and a & b != b
    for u, v in build_comaximal_graph(n).edges():
        pair = (1 << u) | (1 << v)
        assert any(m & pair == pair for m in masks)


# --- incidence graph ----------------------------------------------------------------


def test_incidence_n2_star():
    inc = incidence_graph(build_hypergraph(2))
    assert inc.num_nodes == 4 and len(inc.edges) == 3
    assert inc.adjacency()[3] == [0, 1, 2]


def test_incidence_n4_counts():
    inc = incidence_graph(build_hypergraph(4))
    assert (inc.num_nodes, len(inc.edges)) == (12, 15)


def test_incidence_two_vertex_edge_is_path():
    h = Hypergraph((Subgroup.rotation(1), Subgroup.dihedral(2, 0)), ((0, 1),))
    inc = incidence_graph(h)
    assert inc.adjacency() == {0: [2], 1: [2], 2: [0, 1]}
    assert inc.node_label(2) == "e0"


def test_hypergraph_validation_and_json():
    with pytest.raises(ValueError):
        Hypergraph((Subgroup.rotation(1),), ((1, 0),))
    with pytest.raises(ValueError):
        Hypergraph((Subgroup.rotation(1),), ((0, 3),))
    h = build_hypergraph(12)
    assert Hypergraph.from_json(h.to_json()) == h


def test_membership_masks_agree():
    h = build_hypergraph(12)
    mem = h.memberships()
    masks = h.membership_masks()
    for v in range(h.num_vertices):
        assert masks[v] == sum(1 << j for j in mem[v])
