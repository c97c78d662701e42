"""Embeddability of incidence graphs: certified planarity, K_{3,k} certificates,
genus bounds and the surface classification of Co_H(D_n).

Graphs are plain adjacency mappings ``node -> iterable of neighbours``;
:class:`~comax.hypergraph.IncidenceGraph` instances are accepted wherever a
graph is expected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Mapping, Union

import networkx as nx

from .hypergraph import Hypergraph, IncidenceGraph, build_hypergraph, incidence_graph
from .lattice import check_n, is_prime_power

__all__ = [
    "Embedding",
    "Obstruction",
    "PlanarityVerdict",
    "TripleCertificate",
    "SurfaceClass",
    "Surface",
    "Basis",
    "CertificateError",
    "planarity",
    "verify_embedding",
    "verify_obstruction",
    "rotation_genus",
    "find_triple_certificate",
    "verify_triple_certificate",
    "kmn_genus",
    "euler_genus_lower_bounds",
    "classify_surface",
    "complete_bipartite",
]

Adjacency = Mapping[int, Iterable[int]]


class CertificateError(ValueError):
    """A planarity/genus certificate failed verification."""


def _as_adjacency(g: IncidenceGraph | Adjacency) -> dict[int, list[int]]:
    if isinstance(g, IncidenceGraph):
        return g.adjacency()
    return {u: sorted(set(nbrs)) for u, nbrs in g.items()}


def _edges(adj: Mapping[int, Iterable[int]]) -> set[frozenset[int]]:
    return {frozenset((u, w)) for u, nbrs in adj.items() for w in nbrs}


def complete_bipartite(m: int, k: int) -> dict[int, list[int]]:
    """K_{m,k} with left nodes 0..m-1 and right nodes m..m+k-1."""
    adj = {u: list(range(m, m + k)) for u in range(m)}
    adj.update({w: list(range(m)) for w in range(m, m + k)})
    return adj


def _components(adj: Mapping[int, Iterable[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in sorted(adj):
        if s in seen:
            continue
        seen.add(s)
        comp, stack = [], [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


# --- rotation systems ----------------------------------------------------------


def _trace_faces(adj: Mapping[int, list[int]], rotation: Mapping[int, list[int]]) -> list[list[tuple[int, int]]]:
    pos = {u: {w: i for i, w in enumerate(rotation[u])} for u in rotation}
    seen: set[tuple[int, int]] = set()
    faces = []
    for u in sorted(adj):
        for w in rotation[u]:
            if (u, w) in seen:
                continue
            face = []
            dart = (u, w)
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                a, b = dart
                cyc = rotation[b]
                dart = (b, cyc[(pos[b][a] + 1) % len(cyc)])
            faces.append(face)
    return faces


def rotation_genus(graph: IncidenceGraph | Adjacency, rotation: Mapping[int, list[int]]) -> int:
    """Orientable genus of the embedding described by ``rotation``.

    Faces are traced dart by dart; each connected component contributes
    ``(2 - V + E - F) / 2`` and the contributions are summed.
    """
    adj = _as_adjacency(graph)
    if set(rotation) != set(adj):
        raise CertificateError("rotation must list every node exactly once")
    for u, nbrs in adj.items():
        cyc = list(rotation[u])
        if len(cyc) != len(set(cyc)) or set(cyc) != set(nbrs):
            raise CertificateError(f"rotation at node {u} is not a cyclic order of its neighbours")
    faces = _trace_faces(adj, {u: list(c) for u, c in rotation.items()})
    total = 0
    for comp in _components(adj):
        members = set(comp)
        v = len(comp)
        e = sum(len(adj[u]) for u in comp) // 2
        f = sum(1 for face in faces if face[0][0] in members) if e else 1
        twice = 2 - v + e - f
        if twice < 0 or twice % 2:
            raise CertificateError(f"inconsistent face count in component of node {comp[0]}")
        total += twice // 2
    return total


# --- planarity -------------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """Planar combinatorial embedding: a cyclic neighbour order per node."""

    rotation: dict[int, list[int]]
    faces: int

    is_planar = True

    def to_json(self) -> dict:
        return {
            "kind": "embedding",
            "faces": self.faces,
            "rotation": {str(u): list(c) for u, c in sorted(self.rotation.items())},
        }


@dataclass(frozen=True)
class Obstruction:
    """Kuratowski subdivision: branch vertices plus the internally disjoint
    paths joining them (each path lists its nodes end to end)."""

    kind: str  # "k5_subdivision" | "k33_subdivision"
    branch_vertices: list[int]
    paths: list[list[int]]

    is_planar = False

    def to_json(self) -> dict:
        return {"kind": self.kind, "branch_vertices": list(self.branch_vertices), "paths": [list(p) for p in self.paths]}


PlanarityVerdict = Union[Embedding, Obstruction]


def verify_embedding(graph: IncidenceGraph | Adjacency, emb: Embedding) -> None:
    adj = _as_adjacency(graph)
    if rotation_genus(adj, emb.rotation) != 0:
        raise CertificateError("rotation system is not planar")
    # faces are counted per component, so V - E + F = 2 per component
    comps = _components(adj)
    if len(adj) - len(_edges(adj)) + emb.faces != 2 * len(comps):
        raise CertificateError("Euler's formula fails for the claimed face count")


def verify_obstruction(graph: IncidenceGraph | Adjacency, obs: Obstruction) -> None:
    """Check that ``obs`` really is a subdivision of K5 or K3,3 inside ``graph``."""
    adj = _as_adjacency(graph)
    branch = list(obs.branch_vertices)
    bset = set(branch)
    if len(bset) != len(branch):
        raise CertificateError("repeated branch vertex")
    interior_seen: set[int] = set()
    pairs = set()
    for path in obs.paths:
        if len(path) < 2 or path[0] not in bset or path[-1] not in bset or path[0] == path[-1]:
            raise CertificateError(f"path {path} does not join two branch vertices")
        for a, b in zip(path, path[1:]):
            if b not in adj.get(a, ()):
                raise CertificateError(f"path {path} uses missing edge {a}-{b}")
        inner = path[1:-1]
        if len(set(inner)) != len(inner) or bset & set(inner) or interior_seen & set(inner):
            raise CertificateError(f"path {path} is not internally disjoint")
        interior_seen |= set(inner)
        pair = frozenset((path[0], path[-1]))
        if pair in pairs:
            raise CertificateError(f"two paths join {sorted(pair)}")
        pairs.add(pair)
    if obs.kind == "k5_subdivision":
        if len(bset) != 5 or pairs != {frozenset(p) for p in combinations(branch, 2)}:
            raise CertificateError("paths do not realise K5")
    elif obs.kind == "k33_subdivision":
        if len(bset) != 6 or len(pairs) != 9:
            raise CertificateError("paths do not realise K3,3")
        first = branch[0]
        right = {x for p in pairs if first in p for x in p if x != first}
        left = bset - right
        if len(left) != 3 or pairs != {frozenset((x, y)) for x in left for y in right}:
            raise CertificateError("paths do not realise K3,3")
    else:
        raise CertificateError(f"unknown obstruction kind {obs.kind!r}")


def _kuratowski_from_subgraph(sub: nx.Graph) -> Obstruction:
    branch = sorted(u for u in sub if sub.degree(u) >= 3)
    bset = set(branch)
    paths, done = [], set()
    for b in branch:
        for nxt in sorted(sub[b]):
            path = [b, nxt]
            while path[-1] not in bset:
                here, prev = path[-1], path[-2]
                path.append(next(w for w in sub[here] if w != prev))
            key = tuple(path) if path[0] < path[-1] else tuple(reversed(path))
            if key not in done:
                done.add(key)
                paths.append(list(key))
    paths.sort()
    kind = "k5_subdivision" if len(branch) == 5 else "k33_subdivision"
    return Obstruction(kind, branch, paths)


def planarity(graph: IncidenceGraph | Adjacency) -> PlanarityVerdict:
    """Planar embedding or Kuratowski subdivision, re-verified before return.

    The search itself is networkx's left-right planarity test; the returned
    certificate is checked independently by face tracing or by walking the
    subdivision paths.
    """
    adj = _as_adjacency(graph)
    g = nx.Graph()
    g.add_nodes_from(sorted(adj))
    g.add_edges_from(_bfs_edge_order(adj))
    planar, emb = nx.check_planarity(g)
    if planar:
        data = emb.get_data()
        rotation = {u: list(data.get(u, [])) for u in sorted(adj)}
        faces = len(_trace_faces(adj, rotation)) + sum(1 for u in adj if not adj[u])
        verdict: PlanarityVerdict = Embedding(rotation, faces)
        verify_embedding(adj, verdict)
    else:
        verdict = _kuratowski_from_subgraph(_minimal_nonplanar(_bfs_edge_order(adj)))
        verify_obstruction(adj, verdict)
    return verdict


def _bfs_edge_order(adj: Mapping[int, list[int]]) -> list[tuple[int, int]]:
    """Edges in breadth-first discovery order, starting from each component's
    highest-degree node; keeps dense local structure near the front."""
    order, seen_nodes, seen_edges = [], set(), set()
    starts = sorted(adj, key=lambda u: (-len(adj[u]), u))
    for s in starts:
        if s in seen_nodes:
            continue
        seen_nodes.add(s)
        queue = [s]
        for u in queue:
            for w in adj[u]:
                key = (u, w) if u < w else (w, u)
                if key not in seen_edges:
                    seen_edges.add(key)
                    order.append(key)
                if w not in seen_nodes:
                    seen_nodes.add(w)
                    queue.append(w)
    return order


def _is_planar_edges(edges: list[tuple[int, int]]) -> bool:
    return nx.check_planarity(nx.Graph(edges))[0]


def _minimal_nonplanar(edges: list[tuple[int, int]]) -> nx.Graph:
    """Edge-minimal non-planar subgraph of a non-planar edge list.

    Each round binary-searches the shortest prefix of the remaining edges
    that is non-planar together with the edges kept so far; the last edge of
    that prefix is essential, so it is kept and everything after it dropped.
    Every kept edge is needed, hence the result is a Kuratowski subdivision.
    """
    kept: list[tuple[int, int]] = []
    rest = list(edges)
    while _is_planar_edges(kept):
        lo, hi = 1, len(rest)
        while lo < hi:
            mid = (lo + hi) // 2
            if _is_planar_edges(kept + rest[:mid]):
                lo = mid + 1
            else:
                hi = mid
        kept.append(rest[lo - 1])
        rest = rest[: lo - 1]
    return nx.Graph(kept)


# --- K_{3,k} certificates and genus bounds ----------------------------------------


@dataclass(frozen=True)
class TripleCertificate:
    """Three vertices lying together in every listed hyperedge (a K_{3,k} in the incidence graph)."""

    vertices: tuple[int, int, int]
    common_hyperedges: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.common_hyperedges)

    def to_json(self, h: Hypergraph | None = None) -> dict:
        out = {"kind": "k3k_triple", "vertices": list(self.vertices), "common_hyperedges": list(self.common_hyperedges)}
        if h is not None:
            out["labels"] = [str(h.vertices[v]) for v in self.vertices]
        return out


def find_triple_certificate(h: Hypergraph, k: int) -> TripleCertificate | None:
    """First vertex triple (lexicographic) contained in at least k common hyperedges."""
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    masks = h.membership_masks()
    nv = h.num_vertices
    for x in range(nv):
        if masks[x].bit_count() < k:
            continue
        for y in range(x + 1, nv):
            mxy = masks[x] & masks[y]
            if mxy.bit_count() < k:
                continue
            for z in range(y + 1, nv):
                m = mxy & masks[z]
                if m.bit_count() >= k:
                    edges = tuple(j for j in range(h.num_hyperedges) if m >> j & 1)
                    return TripleCertificate((x, y, z), edges)
    return None


def verify_triple_certificate(h: Hypergraph, cert: TripleCertificate, k: int) -> None:
    if len(set(cert.vertices)) != 3:
        raise CertificateError("triple must name three distinct vertices")
    if len(set(cert.common_hyperedges)) != len(cert.common_hyperedges) or cert.k < k:
        raise CertificateError(f"need at least {k} distinct hyperedges")
    for j in cert.common_hyperedges:
        if not set(cert.vertices) <= set(h.hyperedges[j]):
            raise CertificateError(f"hyperedge {j} misses part of the triple")


def kmn_genus(m: int, n: int) -> tuple[int, int]:
    """(orientable, non-orientable) genus of K_{m,n}."""
    if m < 2 or n < 2:
        raise ValueError("K_{m,n} genus formulas need m, n >= 2")
    prod = (m - 2) * (n - 2)
    return -(-prod // 4), -(-prod // 2)


def euler_genus_lower_bounds(graph: IncidenceGraph | Adjacency) -> tuple[int, int]:
    """Euler-formula lower bounds for a bipartite graph (all faces have length >= 4).

    Orientable bounds add over components.  For the non-orientable bound the
    largest per-component value is returned, which is always valid.
    """
    adj = _as_adjacency(graph)
    orient, nonorient = 0, 0
    for comp in _components(adj):
        v = len(comp)
        e = sum(len(adj[u]) for u in comp) // 2
        x = e - 2 * v + 4
        orient += max(0, -(-x // 4))
        nonorient = max(nonorient, max(0, -(-x // 2)))
    return orient, nonorient


# --- surface classification --------------------------------------------------------


class Surface(str, Enum):
    PLANAR = "planar"
    TOROIDAL_AND_PROJECTIVE = "toroidal_and_projective"
    HIGHER_GENUS = "higher_genus"


class Basis(str, Enum):
    THEOREM = "theorem"
    CERTIFICATE = "certificate"
    BOTH = "both"


@dataclass
class SurfaceClass:
    n: int
    surface: Surface
    basis: Basis
    planarity: PlanarityVerdict
    euler_bounds: tuple[int, int]
    triple: TripleCertificate | None = None
    genus_lower_bounds: tuple[int, int] = (0, 0)
    notes: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        """Theorem-driven class does not contradict any attached certificate."""
        g, ng = self.genus_lower_bounds
        if self.surface is Surface.PLANAR:
            return self.planarity.is_planar
        if self.surface is Surface.TOROIDAL_AND_PROJECTIVE:
            return not self.planarity.is_planar and g <= 1 and ng <= 1
        return not self.planarity.is_planar

    def to_json(self, h: Hypergraph | None = None) -> dict:
        return {
            "n": self.n,
            "class": self.surface.value,
            "basis": self.basis.value,
            "planarity": self.planarity.to_json(),
            "euler_bounds": list(self.euler_bounds),
            "triple": self.triple.to_json(h) if self.triple else None,
            "genus_lower_bounds": list(self.genus_lower_bounds),
            "consistent": self.consistent,
            "notes": list(self.notes),
        }


def _predicted_surface(n: int) -> Surface:
    if is_prime_power(n):
        return Surface.PLANAR
    if n == 6:
        return Surface.TOROIDAL_AND_PROJECTIVE
    return Surface.HIGHER_GENUS


def classify_surface(n: int, h: Hypergraph | None = None) -> SurfaceClass:
    """Plane / torus-and-projective-plane / neither, with whatever certificates exist.

    The class comes from n.  Certificates (planarity verdict, a K_{3,7} or
    K_{3,5} triple, Euler bounds) are attached; the basis is ``both`` when
    they independently establish the class and ``theorem`` otherwise.
    """
    check_n(n)
    h = build_hypergraph(n) if h is None else h
    inc = incidence_graph(h)
    verdict = planarity(inc)
    euler = euler_genus_lower_bounds(inc)
    surface = _predicted_surface(n)
    notes: list[str] = []

    triple = None
    lb_orient, lb_nonorient = euler
    if not verdict.is_planar:
        lb_orient, lb_nonorient = max(lb_orient, 1), max(lb_nonorient, 1)
    if surface is not Surface.PLANAR:
        triple = find_triple_certificate(h, 7) or find_triple_certificate(h, 5)
        if triple is not None:
            g, ng = kmn_genus(3, triple.k)
            lb_orient, lb_nonorient = max(lb_orient, g), max(lb_nonorient, ng)

    if surface is Surface.PLANAR:
        basis = Basis.BOTH if verdict.is_planar else Basis.THEOREM
    elif surface is Surface.HIGHER_GENUS:
        basis = Basis.BOTH if (lb_orient >= 2 and lb_nonorient >= 2) else Basis.THEOREM
        if basis is Basis.THEOREM:
            notes.append("no certificate found for genus >= 2; classification rests on the theorem alone")
    else:
        basis = Basis.THEOREM
        notes.append("non-planarity certified; torus embedding is checked by the shipped rotation-system fixture")
    return SurfaceClass(n, surface, basis, verdict, euler, triple, (lb_orient, lb_nonorient), notes)
