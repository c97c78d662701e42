"""Brute-force element-level model of D_n, used as ground truth in tests.

Elements are pairs ``(rot, flip)`` standing for ``a^rot b^flip``.  Element
sets are frozensets; :func:`canonical` gives the sorted-tuple form used for
structural comparison and display.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable

import numpy as np

from .lattice import Subgroup, check_n, subgroup_order

Element = tuple[int, bool]
ElementSet = frozenset

DEFAULT_CAP = 64


class OracleCapExceeded(ValueError):
    pass


def _cap(n: int, cap: int | None) -> int:
    check_n(n)
    limit = DEFAULT_CAP if cap is None else cap
    if n > limit:
        raise OracleCapExceeded(f"oracle is capped at n <= {limit}, got n={n}")
    return n


def identity() -> Element:
    return (0, False)


def all_elements(n: int) -> frozenset:
    return frozenset((s, f) for s in range(n) for f in (False, True))


def multiply(x: Element, y: Element, n: int) -> Element:
    s, f = x
    t, g = y
    if f:
        return ((s - t) % n, not g)
    return ((s + t) % n, g)


def closure(generators: Iterable[Element], n: int) -> frozenset:
    """Smallest subgroup containing ``generators`` (breadth-first over right multiplication)."""
    gens = list(generators)
    seen = {identity()}
    queue = deque([identity()])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = multiply(x, g, n)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def elements_of(h: Subgroup, n: int) -> frozenset:
    h.validate(n)
    rots = [(k * h.r) % n for k in range(n // h.r)]
    out = {(s, False) for s in rots}
    if h.is_dihedral:
        out |= {((s + h.i) % n, True) for s in rots}
    assert len(out) == subgroup_order(h, n)
    return frozenset(out)


def set_product(a: Iterable[Element], b: Iterable[Element], n: int) -> frozenset:
    bl = list(b)
    return frozenset(multiply(x, y, n) for x in a for y in bl)


def _arrays(a: Iterable[Element]) -> tuple[np.ndarray, np.ndarray]:
    pts = sorted(a)
    return (np.array([s for s, _ in pts], dtype=np.int64), np.array([f for _, f in pts], dtype=bool))


def product_size_of_sets(a: Iterable[Element], b: Iterable[Element], n: int) -> int:
    """|AB| computed with numpy broadcasting; same rule as :func:`multiply`."""
    a_rot, a_flip = _arrays(a)
    b_rot, b_flip = _arrays(b)
    sign = np.where(a_flip, -1, 1)[:, None]
    rot = (a_rot[:, None] + sign * b_rot[None, :]) % n
    flip = a_flip[:, None] ^ b_flip[None, :]
    return int(np.unique(rot + n * flip).size)


def oracle_enumerate_subgroups(n: int, cap: int | None = None) -> list[frozenset]:
    """Every subgroup of D_n (trivial and whole group included), as element sets.

    Subgroups of D_n need at most two generators, so closing all one- and
    two-element generator sets finds them all.
    """
    _cap(n, cap)
    elems = sorted(all_elements(n))
    found = {closure([x], n) for x in elems}
    found |= {closure(pair, n) for pair in combinations(elems, 2)}
    return sorted(found, key=lambda s: (len(s), canonical(s)))


def canonical(s: Iterable[Element]) -> tuple:
    return tuple(sorted(s))


def format_element(x: Element) -> str:
    s, f = x
    if not f:
        return "e" if s == 0 else f"a^{s}"
    return "b" if s == 0 else f"a^{s}·b"


class OracleGroup:
    """Per-n cache of element sets for fast repeated product checks."""

    def __init__(self, n: int, cap: int | None = None):
        self.n = _cap(n, cap)
        self._elements: dict[Subgroup, frozenset] = {}

    def elements(self, h: Subgroup) -> frozenset:
        s = self._elements.get(h)
        if s is None:
            s = self._elements[h] = elements_of(h, self.n)
        return s

    def product(self, h: Subgroup, k: Subgroup) -> frozenset:
        return set_product(self.elements(h), self.elements(k), self.n)

    def product_size(self, h: Subgroup, k: Subgroup) -> int:
        return product_size_of_sets(self.elements(h), self.elements(k), self.n)

    def is_comaximal(self, h: Subgroup, k: Subgroup) -> bool:
        return self.product_size(h, k) == 2 * self.n

    def meet(self, h: Subgroup, k: Subgroup) -> frozenset:
        return self.elements(h) & self.elements(k)


def oracle_vertex_set(n: int, cap: int | None = None) -> list[frozenset]:
    """Proper nontrivial subgroups with a co-maximal partner, by element-level products."""
    group = all_elements(_cap(n, cap))
    subs = [s for s in oracle_enumerate_subgroups(n, cap) if 1 < len(s) < 2 * n]
    return [
        a for a in subs
        if any(b != a and product_size_of_sets(a, b, n) == len(group) for b in subs)
    ]


def naive_maximal_cliques(adjacency: list[set[int]]) -> list[tuple[int, ...]]:
    """Grow every clique in increasing index order and keep the maximal ones.

    Exponential and deliberately simple; only for cross-checking.
    """
    nv = len(adjacency)
    out = []

    def grow(clique: list[int], candidates: set[int]) -> None:
        if len(clique) >= 2:
            common = set(range(nv))
            for v in clique:
                common &= adjacency[v]
            if not common:
                out.append(tuple(clique))
        for v in sorted(candidates):
            if v > clique[-1]:
                grow(clique + [v], candidates & adjacency[v])

    for v in range(nv):
        grow([v], set(adjacency[v]))
    return sorted(out)
