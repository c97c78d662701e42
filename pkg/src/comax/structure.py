"""Hypergraph invariants and their closed-form predictions for Co_H(D_n).

Infinite diameter/girth values are ``math.inf``; JSON output writes them as
the string ``"inf"``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Sequence

from .hypergraph import Hypergraph, build_hypergraph, incidence_graph
from .lattice import check_n, is_prime_power, prime_divisors

__all__ = [
    "Predictions",
    "StructureReport",
    "two_section",
    "distance",
    "diameter",
    "graph_girth",
    "girth",
    "has_repeated_pair",
    "chromatic_number",
    "is_proper_coloring",
    "type_coloring",
    "is_star",
    "is_helly",
    "is_helly_exhaustive",
    "line_graph",
    "is_chordal",
    "is_hypertree",
    "star_host_tree",
    "is_host_tree",
    "uniform_k",
    "predict",
    "analyze_structure",
]

INF = math.inf


def encode_inf(x):
    return "inf" if x == INF else x


def decode_inf(x):
    return INF if x == "inf" else x


# --- distances ---------------------------------------------------------------


def two_section(h: Hypergraph) -> list[set[int]]:
    """Vertices adjacent iff they share a hyperedge."""
    adj: list[set[int]] = [set() for _ in h.vertices]
    for e in h.hyperedges:
        for u, v in combinations(e, 2):
            adj[u].add(v)
            adj[v].add(u)
    return adj


def _bfs(adj: Sequence[set[int]] | Sequence[list[int]], src: int) -> list[float]:
    dist = [INF] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(h: Hypergraph, u: int, v: int) -> float:
    """Fewest hyperedges on a Berge path from u to v (``inf`` if none).

    Shortest Berge paths never repeat a hyperedge, so this is the ordinary
    shortest-path distance in the 2-section.
    """
    nv = h.num_vertices
    if not (0 <= u < nv and 0 <= v < nv):
        raise IndexError(f"vertex index out of range: {u}, {v}")
    return _bfs(two_section(h), u)[v]


def diameter(h: Hypergraph) -> float:
    if not h.vertices:
        raise ValueError("diameter of an empty hypergraph is undefined")
    adj = two_section(h)
    return max(max(_bfs(adj, s)) for s in range(len(adj)))


# --- girth -------------------------------------------------------------------


def _is_forest(adj: dict[int, list[int]]) -> bool:
    n_edges = sum(len(a) for a in adj.values()) // 2
    seen: set[int] = set()
    comps = 0
    for s in adj:
        if s in seen:
            continue
        comps += 1
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return n_edges == len(adj) - comps


def graph_girth(adj: dict[int, list[int]], lower_bound: int = 3) -> float:
    """Length of a shortest cycle of a simple graph, ``inf`` for forests.

    BFS from every node; stops early once a cycle of ``lower_bound`` length
    is seen (4 for bipartite graphs).
    """
    if _is_forest(adj):
        return INF
    best = INF
    for s in adj:
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best <= lower_bound:
            break
    return best


def girth(h: Hypergraph) -> float:
    """Shortest Berge cycle length: half the girth of the incidence graph."""
    g = graph_girth(incidence_graph(h).adjacency(), lower_bound=4)
    return INF if g == INF else g // 2


def has_repeated_pair(h: Hypergraph) -> bool:
    """Two distinct hyperedges sharing at least two vertices (a Berge 2-cycle)."""
    seen: set[tuple[int, int]] = set()
    for e in h.hyperedges:
        pairs = set(combinations(e, 2))
        if pairs & seen:
            return True
        seen |= pairs
    return False


# --- colouring ---------------------------------------------------------------


def is_proper_coloring(h: Hypergraph, coloring: Sequence[int]) -> bool:
    return all(len({coloring[v] for v in e}) > 1 for e in h.hyperedges)


def type_coloring(h: Hypergraph) -> list[int]:
    """Colour 0 for rotation vertices, 1 for dihedral vertices."""
    return [0 if v.is_rotation else 1 for v in h.vertices]


def _try_color(h: Hypergraph, k: int, order: list[int], member: list[list[int]]) -> list[int] | None:
    sizes = [len(e) for e in h.hyperedges]
    counts = [[0] * k for _ in h.hyperedges]
    coloring = [-1] * h.num_vertices

    def place(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        # colours beyond used+1 are symmetric to used+1
        for c in range(min(k, used + 1)):
            ok = True
            touched = []
            for j in member[v]:
                counts[j][c] += 1
                touched.append(j)
                if counts[j][c] == sizes[j]:
                    ok = False
                    break
            if ok:
                coloring[v] = c
                if place(pos + 1, max(used, c + 1)):
                    return True
                coloring[v] = -1
            for j in touched:
                counts[j][c] -= 1
        return False

    return coloring if place(0, 0) else None


def chromatic_number(h: Hypergraph) -> tuple[int, list[int]]:
    """Exact chromatic number with a witness colouring.

    Tries k = 1, 2, ... with backtracking over vertices in decreasing
    hyperedge-membership order (ties by index).
    """
    if any(len(e) < 2 for e in h.hyperedges):
        raise ValueError("a hyperedge with fewer than two vertices admits no proper colouring")
    member = h.memberships()
    order = sorted(range(h.num_vertices), key=lambda v: (-len(member[v]), v))
    for k in range(1, h.num_vertices + 1):
        witness = _try_color(h, k, order, member)
        if witness is not None:
            return k, witness
    return max(1, h.num_vertices), list(range(h.num_vertices))


# --- star / Helly / hypertree -----------------------------------------------


def is_star(h: Hypergraph) -> int | None:
    """Index of the first vertex lying in every hyperedge, or None."""
    if not h.hyperedges:
        return None
    common = set(h.hyperedges[0])
    for e in h.hyperedges[1:]:
        common.intersection_update(e)
    return min(common) if common else None


def is_helly(h: Hypergraph) -> bool:
    """Helly property by the triple criterion.

    For every vertex triple, the hyperedges containing at least two of the
    three must share a vertex.  Only triangles of the 2-section can fail:
    if some pair of the triple is never covered, every hyperedge in the
    family contains the third vertex.
    """
    masks = h.edge_masks()
    pair_meet: dict[tuple[int, int], int] = {}
    for e, m in zip(h.hyperedges, masks):
        for pair in combinations(e, 2):
            pair_meet[pair] = pair_meet.get(pair, m) & m
    adj = two_section(h)
    for x in range(h.num_vertices):
        for y in sorted(w for w in adj[x] if w > x):
            mxy = pair_meet[(x, y)]
            for z in sorted(w for w in adj[x] & adj[y] if w > y):
                if not (mxy & pair_meet[(x, z)] & pair_meet[(y, z)]):
                    return False
    return True


def is_helly_exhaustive(h: Hypergraph, limit: int = 16) -> bool:
    """Helly property by checking every subfamily; only for small edge sets."""
    m = h.num_hyperedges
    if m > limit:
        raise ValueError(f"exhaustive Helly check limited to {limit} hyperedges, got {m}")
    masks = h.edge_masks()
    for size in range(3, m + 1):
        for fam in combinations(masks, size):
            if all(a & b for a, b in combinations(fam, 2)):
                common = fam[0]
                for f in fam[1:]:
                    common &= f
                if not common:
                    return False
    return True


def line_graph(h: Hypergraph) -> list[set[int]]:
    """Hyperedges adjacent iff they intersect."""
    member = h.memberships()
    adj: list[set[int]] = [set() for _ in h.hyperedges]
    for edges in member:
        for a, b in combinations(edges, 2):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def is_chordal(adj: Sequence[set[int]]) -> bool:
    """Maximum cardinality search, then verify the elimination ordering."""
    n = len(adj)
    weight = [0] * n
    numbered = [False] * n
    order: list[int] = []
    for _ in range(n):
        v = max((u for u in range(n) if not numbered[u]), key=lambda u: (weight[u], -u))
        numbered[v] = True
        order.append(v)
        for w in adj[v]:
            if not numbered[w]:
                weight[w] += 1
    # reverse of the visit order is a perfect elimination ordering iff chordal
    peo = order[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        if any(w != parent and w not in adj[parent] for w in later):
            return False
    return True


def is_hypertree(h: Hypergraph) -> bool:
    """Subtree hypergraph test: Helly and a chordal line graph."""
    return is_helly(h) and is_chordal(line_graph(h))


def star_host_tree(h: Hypergraph) -> list[tuple[int, int]] | None:
    """Host tree through the star centre, when the hypergraph is a star."""
    c = is_star(h)
    if c is None:
        return None
    return [(c, v) if c < v else (v, c) for v in range(h.num_vertices) if v != c]


def is_host_tree(h: Hypergraph, tree: Sequence[tuple[int, int]]) -> bool:
    """Check ``tree`` spans the vertices and every hyperedge induces a connected subtree."""
    nv = h.num_vertices
    if len(tree) != nv - 1:
        return False
    adj: list[set[int]] = [set() for _ in range(nv)]
    for u, v in tree:
        adj[u].add(v)
        adj[v].add(u)
    if nv and max(_bfs(adj, 0)) == INF:
        return False
    for e in h.hyperedges:
        inside = set(e)
        seen = {e[0]}
        stack = [e[0]]
        while stack:
            u = stack.pop()
            for w in adj[u] & inside:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != inside:
            return False
    return True


def uniform_k(h: Hypergraph) -> int | None:
    sizes = {len(e) for e in h.hyperedges}
    return sizes.pop() if len(sizes) == 1 else None


# --- predictions and report ----------------------------------------------------


@dataclass(frozen=True)
class Predictions:
    diameter: float
    girth: float
    chromatic: int
    star: bool
    hypertree: bool
    helly: bool  # observed, not a proved statement
    uniform: int | None

    def to_json(self) -> dict:
        d = asdict(self)
        d["diameter"] = encode_inf(d["diameter"])
        d["girth"] = encode_inf(d["girth"])
        return d


def predict(n: int) -> Predictions:
    """Closed-form values of every invariant, from n alone."""
    check_n(n)
    pp = is_prime_power(n)
    odd_pp = pp and n % 2 == 1
    two_power = pp and n % 2 == 0
    return Predictions(
        diameter=1 if n == 2 else (2 if pp else 3),
        girth=INF if (n == 2 or odd_pp) else 2,
        chromatic=2,
        star=pp,
        hypertree=pp,
        # observed: Helly also holds for odd n with exactly two prime factors
        helly=pp or (n % 2 == 1 and len(prime_divisors(n)) == 2),
        uniform=3 if two_power else (2 if odd_pp else None),
    )


@dataclass
class StructureReport:
    n: int
    diameter: float
    girth: float
    chromatic: int
    star: bool
    helly: bool
    hypertree: bool
    uniform: int | None
    predictions: Predictions
    star_center: int | None = None
    coloring: list[int] = field(default_factory=list, repr=False)

    def mismatches(self) -> list[str]:
        out = []
        for name in ("diameter", "girth", "chromatic", "star", "helly", "hypertree", "uniform"):
            if getattr(self, name) != getattr(self.predictions, name):
                out.append(name)
        return out

    @property
    def agreement(self) -> bool:
        return not self.mismatches()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "diameter": encode_inf(self.diameter),
            "girth": encode_inf(self.girth),
            "chromatic": self.chromatic,
            "star": self.star,
            "helly": self.helly,
            "hypertree": self.hypertree,
            "uniform": self.uniform,
            "predictions": self.predictions.to_json(),
            "agreement": self.agreement,
        }


def analyze_structure(n: int, h: Hypergraph | None = None) -> StructureReport:
    h = build_hypergraph(n) if h is None else h
    chi, coloring = chromatic_number(h)
    center = is_star(h)
    return StructureReport(
        n=n,
        diameter=diameter(h),
        girth=girth(h),
        chromatic=chi,
        star=center is not None,
        helly=is_helly(h),
        hypertree=is_hypertree(h),
        uniform=uniform_k(h),
        predictions=predict(n),
        star_center=center,
        coloring=coloring,
    )
