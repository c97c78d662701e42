"""Randomised properties (hypothesis)."""

from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from comax.embedding import (
    complete_bipartite,
    euler_genus_lower_bounds,
    kmn_genus,
    planarity,
    rotation_genus,
    verify_embedding,
    verify_obstruction,
)
from comax.hypergraph import Hypergraph, build_hypergraph, maximal_cliques
from comax.lattice import (
    Subgroup,
    divisors,
    enumerate_subgroups,
    intersect,
    is_comaximal,
    is_comaximal_closed_form,
    product_size,
    subgroup_order,
)
from comax.oracle import OracleGroup, elements_of, naive_maximal_cliques
from comax.structure import is_helly, is_helly_exhaustive, is_proper_coloring, chromatic_number

ns = st.integers(min_value=2, max_value=64)


@st.composite
def subgroup_pairs(draw):
    n = draw(ns)
    subs = enumerate_subgroups(n)
    h = draw(st.sampled_from(subs))
    k = draw(st.sampled_from(subs))
    return n, h, k


@st.composite
def descriptors(draw):
    n = draw(ns)
    r = draw(st.sampled_from(divisors(n)))
    if draw(st.booleans()):
        return n, Subgroup.rotation(r)
    return n, Subgroup.dihedral(r, draw(st.integers(min_value=0, max_value=r - 1)))


@settings(max_examples=300, deadline=None)
@given(subgroup_pairs())
def test_meet_and_product_match_elements(case):
    n, h, k = case
    g = OracleGroup(n)
    assert g.elements(intersect(h, k, n)) == g.meet(h, k)
    assert product_size(h, k, n) == g.product_size(h, k)
    assert product_size(h, k, n) * subgroup_order(intersect(h, k, n), n) == subgroup_order(h, n) * subgroup_order(k, n)


@settings(max_examples=300, deadline=None)
@given(subgroup_pairs())
def test_comaximal_symmetric_and_closed_form(case):
    n, h, k = case
    if h == k:
        return
    assert is_comaximal(h, k, n) == is_comaximal(k, h, n) == is_comaximal_closed_form(h, k)


@settings(max_examples=200, deadline=None)
@given(descriptors())
def test_intersection_is_idempotent_and_contained(case):
    n, h = case
    assert intersect(h, h, n) == h
    whole = Subgroup.dihedral(1, 0)
    assert intersect(h, whole, n) == h
    assert elements_of(h, n) <= elements_of(whole, n)


@st.composite
def random_graphs(draw, max_nodes=9):
    nv = draw(st.integers(min_value=1, max_value=max_nodes))
    pairs = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    adj = [set() for _ in range(nv)]
    for u, v in chosen:
        adj[u].add(v)
        adj[v].add(u)
    return adj


@settings(max_examples=200, deadline=None)
@given(random_graphs())
def test_cliques_match_naive(adj):
    fast = maximal_cliques(tuple(frozenset(s) for s in adj))
    slow = sorted(naive_maximal_cliques(adj))
    assert fast == slow


@st.composite
def small_hypergraphs(draw):
    nv = draw(st.integers(min_value=2, max_value=7))
    edges = draw(st.lists(
        st.frozensets(st.integers(min_value=0, max_value=nv - 1), min_size=2, max_size=nv),
        min_size=1, max_size=8, unique=True))
    verts = tuple(Subgroup.dihedral(nv, i) for i in range(nv))
    return Hypergraph(verts, tuple(sorted(tuple(sorted(e)) for e in edges)))


@settings(max_examples=200, deadline=None)
@given(small_hypergraphs())
def test_helly_triangle_criterion_matches_exhaustive(h):
    assert is_helly(h) == is_helly_exhaustive(h)


@settings(max_examples=150, deadline=None)
@given(small_hypergraphs())
def test_chromatic_witness_is_proper_and_optimal(h):
    k, witness = chromatic_number(h)
    assert is_proper_coloring(h, witness) and len(set(witness)) <= k
    if k > 1 and (k - 1) ** h.num_vertices <= 50_000:
        # k - 1 colours never suffice
        for c in product(range(k - 1), repeat=h.num_vertices):
            assert not is_proper_coloring(h, c)


@settings(max_examples=150, deadline=None)
@given(random_graphs(max_nodes=10))
def test_planarity_certificates_always_verify(adj):
    g = {u: sorted(s) for u, s in enumerate(adj)}
    v = planarity(g)
    if v.is_planar:
        verify_embedding(g, v)
        assert rotation_genus(g, v.rotation) == 0
    else:
        verify_obstruction(g, v)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=5), st.integers(min_value=2, max_value=5), st.randoms(use_true_random=False))
def test_random_rotation_genus_respects_bounds(m, k, rnd):
    adj = complete_bipartite(m, k)
    rot = {u: rnd.sample(nb, len(nb)) for u, nb in adj.items()}
    g = rotation_genus(adj, rot)
    e, v = m * k, m + k
    assert kmn_genus(m, k)[0] <= g <= (e - v + 1) // 2
    assert euler_genus_lower_bounds(adj)[0] <= g


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2, max_value=40))
def test_hyperedges_are_antichain(n):
    masks = build_hypergraph(n).edge_masks()
    assert len(set(masks)) == len(masks)
    for a in masks:
        for b in masks:
            assert a == b or a & b != a
