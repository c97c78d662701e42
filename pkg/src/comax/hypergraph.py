"""Co-maximal graph, its clique hypergraph, and the incidence graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .lattice import Subgroup, check_n, is_comaximal, is_comaximal_closed_form, vertex_set

__all__ = [
    "CoMaximalGraph",
    "Hypergraph",
    "IncidenceGraph",
    "build_comaximal_graph",
    "maximal_cliques",
    "build_hypergraph",
    "incidence_graph",
    "degeneracy_order",
]


@dataclass(frozen=True)
class CoMaximalGraph:
    """Simple graph on ``vertices``; ``adjacency[i]`` is the neighbour set of vertex i."""

    n: int
    vertices: tuple[Subgroup, ...]
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != len(self.vertices):
            raise ValueError("adjacency must have one entry per vertex")
        for u, nbrs in enumerate(self.adjacency):
            if u in nbrs:
                raise ValueError(f"self-loop at vertex {u}")
            for v in nbrs:
                if u not in self.adjacency[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in sorted(nbrs) if u < v]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])


@dataclass(frozen=True)
class Hypergraph:
    """Vertex list plus hyperedges given as sorted tuples of vertex indices."""

    vertices: tuple[Subgroup, ...]
    hyperedges: tuple[tuple[int, ...], ...]
    n: int | None = None

    def __post_init__(self) -> None:
        nv = len(self.vertices)
        for e in self.hyperedges:
            if list(e) != sorted(set(e)):
                raise ValueError(f"hyperedge {e} is not a sorted set")
            if e and (e[0] < 0 or e[-1] >= nv):
                raise ValueError(f"hyperedge {e} references a missing vertex")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_hyperedges(self) -> int:
        return len(self.hyperedges)

    def memberships(self) -> list[list[int]]:
        """For each vertex, the indices of the hyperedges containing it."""
        out: list[list[int]] = [[] for _ in self.vertices]
        for j, e in enumerate(self.hyperedges):
            for v in e:
                out[v].append(j)
        return out

    def edge_masks(self) -> list[int]:
        """Hyperedges as vertex bitmasks."""
        return [sum(1 << v for v in e) for e in self.hyperedges]

    def membership_masks(self) -> list[int]:
        """Vertices as hyperedge bitmasks."""
        masks = [0] * self.num_vertices
        for j, e in enumerate(self.hyperedges):
            for v in e:
                masks[v] |= 1 << j
        return masks

    def index_of(self, h: Subgroup) -> int:
        return self.vertices.index(h)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": [v.to_json() for v in self.vertices],
            "hyperedges": [list(e) for e in self.hyperedges],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Hypergraph":
        return cls(
            vertices=tuple(Subgroup.from_json(v) for v in obj["vertices"]),
            hyperedges=tuple(tuple(e) for e in obj["hyperedges"]),
            n=obj.get("n"),
        )


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite vertex/hyperedge graph.

    As a plain graph, vertex ``i`` is node ``i`` and hyperedge ``j`` is
    node ``num_vertices + j``.
    """

    num_vertices: int
    num_hyperedges: int
    edges: tuple[tuple[int, int], ...]  # (vertex index, hyperedge index)
    labels: tuple[str, ...] = field(default=(), compare=False)

    @property
    def num_nodes(self) -> int:
        return self.num_vertices + self.num_hyperedges

    def node_of_hyperedge(self, j: int) -> int:
        return self.num_vertices + j

    def is_vertex_node(self, node: int) -> bool:
        return node < self.num_vertices

    def graph_edges(self) -> list[tuple[int, int]]:
        return [(v, self.num_vertices + j) for v, j in self.edges]

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {u: [] for u in range(self.num_nodes)}
        for u, w in self.graph_edges():
            adj[u].append(w)
            adj[w].append(u)
        for u in adj:
            adj[u].sort()
        return adj

    def node_label(self, node: int) -> str:
        if self.labels:
            return self.labels[node]
        return f"v{node}" if self.is_vertex_node(node) else f"e{node - self.num_vertices}"


# --- builders --------------------------------------------------------------


def build_comaximal_graph(n: int, *, debug: bool = False) -> CoMaximalGraph:
    """Deleted co-maximal subgroup graph on :func:`vertex_set`.

    The gcd closed form decides adjacency; with ``debug`` every pair is also
    checked against the product-size definition.
    """
    return _build_comaximal_graph(check_n(n), debug)


@lru_cache(maxsize=64)
def _build_comaximal_graph(n: int, debug: bool) -> CoMaximalGraph:
    verts = tuple(vertex_set(n))
    nbrs: list[set[int]] = [set() for _ in verts]
    for u in range(len(verts)):
        for v in range(u + 1, len(verts)):
            adj = is_comaximal_closed_form(verts[u], verts[v])
            if debug:
                assert adj == is_comaximal(verts[u], verts[v], n), (verts[u], verts[v])
            if adj:
                nbrs[u].add(v)
                nbrs[v].add(u)
    for u, s in enumerate(nbrs):
        if not s:
            raise AssertionError(f"vertex {verts[u]} has no co-maximal partner for n={n}")
    return CoMaximalGraph(n, verts, tuple(frozenset(s) for s in nbrs))


def degeneracy_order(adjacency: Sequence[frozenset[int]]) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (ties by index)."""
    deg = {u: len(a) for u, a in enumerate(adjacency)}
    alive = set(deg)
    order = []
    while alive:
        u = min(alive, key=lambda x: (deg[x], x))
        order.append(u)
        alive.remove(u)
        for w in adjacency[u]:
            if w in alive:
                deg[w] -= 1
    return order


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_cliques(g: CoMaximalGraph | Sequence[frozenset[int]]) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques with at least two vertices.

    Bron-Kerbosch with Tomita pivoting inside a degeneracy-ordered outer
    loop; sets are int bitmasks.  Output is sorted lexicographically.
    """
    adjacency = g.adjacency if isinstance(g, CoMaximalGraph) else tuple(g)
    nb = [sum(1 << v for v in a) for a in adjacency]
    found: list[tuple[int, ...]] = []

    def expand(r: list[int], p: int, x: int) -> None:
        if not p:
            if not x and len(r) >= 2:
                found.append(tuple(sorted(r)))
            return
        px = p | x
        pivot = max(_bits(px), key=lambda u: (nb[u] & p).bit_count())
        for v in _bits(p & ~nb[pivot]):
            r.append(v)
            expand(r, p & nb[v], x & nb[v])
            r.pop()
            bit = 1 << v
            p &= ~bit
            x |= bit

    later = 0
    order = degeneracy_order(adjacency)
    for v in order:
        later |= 1 << v
    for v in order:
        later &= ~(1 << v)
        earlier_mask = ((1 << len(adjacency)) - 1) & ~later & ~(1 << v)
        expand([v], later & nb[v], earlier_mask & nb[v])
    found.sort()
    return found


def build_hypergraph(n: int) -> Hypergraph:
    """The co-maximal hypergraph: hyperedges are the maximal cliques of the co-maximal graph."""
    return _build_hypergraph(check_n(n))


@lru_cache(maxsize=64)
def _build_hypergraph(n: int) -> Hypergraph:
    g = build_comaximal_graph(n)
    return Hypergraph(vertices=g.vertices, hyperedges=tuple(maximal_cliques(g)), n=n)


def incidence_graph(h: Hypergraph) -> IncidenceGraph:
    edges = tuple((v, j) for j, e in enumerate(h.hyperedges) for v in e)
    edges = tuple(sorted(edges))
    labels = tuple(str(v) for v in h.vertices) + tuple(f"e{j}" for j in range(h.num_hyperedges))
    return IncidenceGraph(h.num_vertices, h.num_hyperedges, edges, labels)
