import math
from itertools import combinations, product

import networkx as nx
import pytest

from comax.hypergraph import Hypergraph, build_hypergraph, incidence_graph
from comax.lattice import Subgroup, is_prime_power, prime_divisors
from comax.structure import (
    INF,
    analyze_structure,
    chromatic_number,
    decode_inf,
    diameter,
    distance,
    encode_inf,
    girth,
    graph_girth,
    has_repeated_pair,
    is_chordal,
    is_helly,
    is_helly_exhaustive,
    is_host_tree,
    is_hypertree,
    is_proper_coloring,
    is_star,
    line_graph,
    predict,
    star_host_tree,
    two_section,
    type_coloring,
    uniform_k,
)

R, D = Subgroup.rotation, Subgroup.dihedral


def toy(edges, nv=None):
    nv = nv if nv is not None else 1 + max(v for e in edges for v in e)
    verts = tuple(Subgroup.dihedral(nv + 1, i) for i in range(nv))  # placeholder labels
    return Hypergraph(verts, tuple(tuple(sorted(e)) for e in edges))


# --- independent references -------------------------------------------------------


def nx_two_section(h):
    g = nx.Graph()
    g.add_nodes_from(range(h.num_vertices))
    for e in h.hyperedges:
        g.add_edges_from(combinations(e, 2))
    return g


def nx_incidence(h):
    g = nx.Graph()
    inc = incidence_graph(h)
    g.add_nodes_from(range(inc.num_nodes))
    g.add_edges_from(inc.graph_edges())
    return g


def ref_diameter(h):
    g = nx_two_section(h)
    return nx.diameter(g) if nx.is_connected(g) else INF


def ref_girth(h):
    # a Berge cycle of length k is a cycle of length 2k in the incidence graph;
    # two hyperedges sharing two vertices give a 2-cycle
    if any(len(set(a) & set(b)) >= 2 for a, b in combinations(h.hyperedges, 2)):
        return 2
    g = nx.girth(nx_incidence(h))
    return INF if g == math.inf else g // 2


def ref_helly(h):
    # Berge: Helly iff for every vertex triple the edges holding >= 2 of them meet
    sets = [set(e) for e in h.hyperedges]
    for t in combinations(range(h.num_vertices), 3):
        fam = [e for e in sets if len(e & set(t)) >= 2]
        if fam and not set.intersection(*fam):
            return False
    return True


def ref_chromatic(h):
    for k in range(1, h.num_vertices + 1):
        for colors in product(range(k), repeat=h.num_vertices):
            if all(len({colors[v] for v in e}) > 1 for e in h.hyperedges if len(e) > 1):
                return k
    raise AssertionError


# --- distance / diameter -----------------------------------------------------------


def test_distance_examples():
    h4 = build_hypergraph(4)
    assert distance(h4, h4.index_of(D(4, 0)), h4.index_of(R(1))) == 1
    h6 = build_hypergraph(6)
    assert distance(h6, h6.index_of(R(2)), h6.index_of(R(3))) == 3
    assert distance(h6, 5, 5) == 0


def test_distance_disconnected_is_inf():
    h = toy([(0, 1), (2, 3)])
    assert distance(h, 0, 3) == INF
    assert diameter(h) == INF


@pytest.mark.parametrize("n,d", [(2, 1), (9, 2), (12, 3)])
def test_diameter_examples(n, d):
    assert diameter(build_hypergraph(n)) == d


@pytest.mark.parametrize("n", range(2, 41))
def test_diameter_matches_networkx(n):
    h = build_hypergraph(n)
    assert diameter(h) == ref_diameter(h)


# --- girth ------------------------------------------------------------------------


@pytest.mark.parametrize("n,g", [(8, 2), (27, INF), (6, 2)])
def test_girth_examples(n, g):
    assert girth(build_hypergraph(n)) == g


@pytest.mark.parametrize("n", range(2, 41))
def test_girth_matches_incidence_reference(n):
    h = build_hypergraph(n)
    assert girth(h) == ref_girth(h)
    assert (girth(h) == 2) == has_repeated_pair(h)


def test_girth_of_toy_cycles():
    tri = toy([(0, 1), (1, 2), (0, 2)])
    assert girth(tri) == 3
    assert girth(toy([(0, 1), (1, 2)])) == INF
    assert graph_girth({0: [1, 2], 1: [0, 2], 2: [0, 1]}) == 3


# --- colouring ----------------------------------------------------------------------


@pytest.mark.parametrize("n", [4, 30])
def test_chromatic_examples(n):
    h = build_hypergraph(n)
    k, witness = chromatic_number(h)
    assert k == 2 and is_proper_coloring(h, witness)


def test_chromatic_single_triple():
    h = toy([(0, 1, 2)])
    assert chromatic_number(h)[0] == 2
    assert not is_proper_coloring(h, [0, 0, 0])


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_chromatic_matches_brute_force(n):
    h = build_hypergraph(n)
    assert chromatic_number(h)[0] == ref_chromatic(h)


def test_chromatic_needs_three():
    # as 2-uniform hypergraphs, K4 needs four colours and the 5-cycle three
    k4 = toy([e for e in combinations(range(4), 2)])
    assert chromatic_number(k4)[0] == 4
    c5 = toy([(i, (i + 1) % 5) for i in range(5)])
    assert chromatic_number(c5)[0] == 3


@pytest.mark.parametrize("n", range(2, 41))
def test_type_colouring_proper(n):
    h = build_hypergraph(n)
    assert is_proper_coloring(h, type_coloring(h))


# --- star / Helly / hypertree ---------------------------------------------------------


def test_star_examples():
    h4 = build_hypergraph(4)
    assert h4.vertices[is_star(h4)] == R(1)
    h9 = build_hypergraph(9)
    assert h9.vertices[is_star(h9)] == R(1)
    assert is_star(build_hypergraph(6)) is None


@pytest.mark.parametrize("n", [2, 3, 4, 8, 9, 25, 27, 32])
def test_star_host_tree_valid(n):
    h = build_hypergraph(n)
    assert is_host_tree(h, star_host_tree(h))


def test_host_tree_rejects_bad_tree():
    h = toy([(0, 1, 2)])
    assert not is_host_tree(h, [(0, 1)])
    assert not is_host_tree(h, [(0, 1), (0, 1)])


def test_helly_examples():
    assert not is_helly(build_hypergraph(6))
    assert is_helly(build_hypergraph(4))
    assert is_helly_exhaustive(build_hypergraph(4))


def test_helly_n15_observed_true():
    # every triangle family has a common vertex for n = 15, so Helly holds;
    # the hypergraph still fails to be a hypertree through its line graph
    h = build_hypergraph(15)
    assert is_helly(h) and ref_helly(h)
    assert not is_chordal(line_graph(h))
    assert not is_hypertree(h)


def test_helly_toy_counterexample():
    # three pairwise-meeting edges with no common point
    h = toy([(0, 1), (1, 2), (0, 2)])
    assert not is_helly(h) and not is_helly_exhaustive(h)


@pytest.mark.parametrize("n", range(2, 61))
def test_helly_matches_berge_reference(n):
    h = build_hypergraph(n)
    assert is_helly(h) == ref_helly(h)
    if h.num_hyperedges <= 16:
        assert is_helly(h) == is_helly_exhaustive(h)


@pytest.mark.parametrize("n", range(2, 61))
def test_helly_observed_rule(n):
    rule = is_prime_power(n) or (n % 2 == 1 and len(prime_divisors(n)) == 2)
    assert is_helly(build_hypergraph(n)) == rule


def test_helly_fails_with_three_odd_primes():
    assert not is_helly(build_hypergraph(105))


def test_exhaustive_helly_limit():
    with pytest.raises(ValueError):
        is_helly_exhaustive(build_hypergraph(12), limit=3)


@pytest.mark.parametrize("n,expected", [(8, True), (6, False), (3, True)])
def test_hypertree_examples(n, expected):
    assert is_hypertree(build_hypergraph(n)) is expected


# networkx's chordality test is slow on the dense line graphs beyond n = 48
@pytest.mark.parametrize("n", range(2, 49))
def test_line_graph_chordality_matches_networkx(n):
    adj = line_graph(build_hypergraph(n))
    g = nx.Graph()
    g.add_nodes_from(range(len(adj)))
    g.add_edges_from((a, b) for a, s in enumerate(adj) for b in s)
    assert is_chordal(adj) == nx.is_chordal(g)


@pytest.mark.parametrize("n", range(2, 61))
def test_hypertree_implies_helly(n):
    h = build_hypergraph(n)
    assert not is_hypertree(h) or is_helly(h)


def test_chordal_small_graphs():
    c4 = [{1, 3}, {0, 2}, {1, 3}, {0, 2}]
    assert not is_chordal(c4)
    c4[0].add(2)
    c4[2].add(0)
    assert is_chordal(c4)


# --- uniformity -----------------------------------------------------------------------


@pytest.mark.parametrize("n,k", [(8, 3), (5, 2), (12, None)])
def test_uniform_examples(n, k):
    assert uniform_k(build_hypergraph(n)) == k


# --- predictions / report -----------------------------------------------------------


def test_predict_examples():
    p2, p49, p10 = predict(2), predict(49), predict(10)
    assert (p2.diameter, p2.girth) == (1, INF)
    assert (p49.diameter, p49.girth, p49.star) == (2, INF, True)
    assert (p10.diameter, p10.girth, p10.star, p10.uniform) == (3, 2, False, None)


@pytest.mark.parametrize("n", range(2, 61))
def test_report_agrees_with_prediction(n):
    assert analyze_structure(n).mismatches() == []


def test_inf_encoding():
    assert encode_inf(INF) == "inf" and decode_inf("inf") == INF
    assert encode_inf(3) == 3 and decode_inf(3) == 3
    js = analyze_structure(2).to_json()
    assert js["girth"] == "inf" and js["diameter"] == 1


def test_two_section_symmetric():
    adj = two_section(build_hypergraph(12))
    assert all(u in adj[v] for u, s in enumerate(adj) for v in s)
