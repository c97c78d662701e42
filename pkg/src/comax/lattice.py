"""Closed-form subgroup arithmetic for the dihedral group D_n (order 2n).

Every subgroup of D_n is either a rotation subgroup ``<a^r>`` or a dihedral
subgroup ``<a^r, a^i b>`` with ``r | n``.  Orders, meets and set-product
sizes of such subgroups follow from gcd/lcm arithmetic, so nothing here ever
touches group elements (see :mod:`comax.oracle` for the element-level check).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

__all__ = [
    "InvalidParameter",
    "InvalidSubgroup",
    "Subgroup",
    "SubgroupOrderPair",
    "divisors",
    "prime_divisors",
    "num_distinct_prime_divisors",
    "is_prime_power",
    "is_square_free",
    "check_n",
    "enumerate_subgroups",
    "subgroup_order",
    "intersect",
    "product_size",
    "order_pair",
    "is_comaximal",
    "is_comaximal_closed_form",
    "vertex_set",
]


class InvalidParameter(ValueError):
    """Raised for a group parameter outside the supported range (n < 2)."""


class InvalidSubgroup(ValueError):
    """Raised when a subgroup descriptor does not describe a subgroup of D_n."""


@dataclass(frozen=True, order=True)
class Subgroup:
    """Canonical descriptor of a subgroup of D_n.

    ``kind`` is ``"rotation"`` for ``<a^r>`` and ``"dihedral"`` for
    ``<a^r, a^i b>``.  ``i`` is always 0 for rotation subgroups.  The
    trivial subgroup is ``Subgroup("rotation", n)`` and the whole group is
    ``Subgroup("dihedral", 1, 0)``; neither is ever a vertex.
    """

    kind: Literal["rotation", "dihedral"]
    r: int
    i: int = 0

    @classmethod
    def rotation(cls, r: int) -> "Subgroup":
        return cls("rotation", r, 0)

    @classmethod
    def dihedral(cls, r: int, i: int) -> "Subgroup":
        return cls("dihedral", r, i % r)

    @property
    def is_rotation(self) -> bool:
        return self.kind == "rotation"

    @property
    def is_dihedral(self) -> bool:
        return self.kind == "dihedral"

    def sort_key(self) -> tuple[int, int, int]:
        # rotations first (ascending r), then dihedrals by (r, i)
        return (0 if self.is_rotation else 1, self.r, self.i)

    def __str__(self) -> str:
        if self.is_rotation:
            return f"R({self.r})"
        return f"D({self.r},{self.i})"

    def to_json(self) -> dict:
        if self.is_rotation:
            return {"type": "rotation", "r": self.r}
        return {"type": "dihedral", "r": self.r, "i": self.i}

    @classmethod
    def from_json(cls, obj: dict) -> "Subgroup":
        kind = obj.get("type")
        if kind == "rotation":
            return cls.rotation(int(obj["r"]))
        if kind == "dihedral":
            return cls.dihedral(int(obj["r"]), int(obj["i"]))
        raise InvalidSubgroup(f"unknown subgroup type {kind!r}")

    @classmethod
    def parse(cls, text: str) -> "Subgroup":
        """Parse the text form ``R(r)`` or ``D(r,i)``."""
        s = text.strip().replace(" ", "")
        if len(s) < 4 or s[1] != "(" or s[-1] != ")":
            raise InvalidSubgroup(f"cannot parse subgroup {text!r}")
        args = s[2:-1].split(",")
        try:
            vals = [int(a) for a in args]
        except ValueError:
            raise InvalidSubgroup(f"cannot parse subgroup {text!r}") from None
        if s[0] == "R" and len(vals) == 1:
            return cls.rotation(vals[0])
        if s[0] == "D" and len(vals) == 2:
            return cls.dihedral(vals[0], vals[1])
        raise InvalidSubgroup(f"cannot parse subgroup {text!r}")

    def validate(self, n: int) -> None:
        if self.r < 1 or n % self.r:
            raise InvalidSubgroup(f"{self}: r={self.r} does not divide n={n}")
        if self.is_dihedral and not 0 <= self.i < self.r:
            raise InvalidSubgroup(f"{self}: i must lie in [0, r)")
        if self.is_rotation and self.i != 0:
            raise InvalidSubgroup(f"{self}: rotation subgroups carry no offset")

    def is_trivial(self, n: int) -> bool:
        return self.is_rotation and self.r == n

    def is_whole(self) -> bool:
        return self.is_dihedral and self.r == 1


@dataclass(frozen=True)
class SubgroupOrderPair:
    h_order: int
    k_order: int
    meet_order: int
    product_size: int

    def __post_init__(self) -> None:
        if self.product_size * self.meet_order != self.h_order * self.k_order:
            raise ValueError("product_size * meet_order must equal h_order * k_order")


# --- number theory ---------------------------------------------------------


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def prime_divisors(n: int) -> tuple[int, ...]:
    out = []
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return tuple(out)


def num_distinct_prime_divisors(n: int) -> int:
    if n < 1:
        raise InvalidParameter(f"n must be positive, got {n}")
    return len(prime_divisors(n))


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(prime_divisors(n)) == 1


def is_square_free(n: int) -> bool:
    return all(n % (p * p) for p in prime_divisors(n))


def check_n(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidParameter(f"n must be an integer >= 2, got {n!r}")
    return n


# --- subgroup arithmetic ---------------------------------------------------


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Subgroup, ...]:
    divs = divisors(n)
    rot = [Subgroup.rotation(r) for r in divs if r < n]
    dih = [Subgroup.dihedral(r, i) for r in divs if r >= 2 for i in range(r)]
    return tuple(rot + dih)


def enumerate_subgroups(n: int) -> list[Subgroup]:
    """All proper nontrivial subgroups of D_n, each exactly once, canonically ordered."""
    return list(_enumerate(check_n(n)))


def subgroup_order(h: Subgroup, n: int) -> int:
    h.validate(n)
    return n // h.r if h.is_rotation else 2 * n // h.r


def intersect(h: Subgroup, k: Subgroup, n: int) -> Subgroup:
    """Meet of two subgroups; the trivial subgroup comes back as ``R(n)``."""
    h.validate(n)
    k.validate(n)
    lcm = math.lcm(h.r, k.r)
    if not (h.is_dihedral and k.is_dihedral):
        return Subgroup.rotation(lcm)
    g = math.gcd(h.r, k.r)
    diff = h.i - k.i
    if diff % g:
        return Subgroup.rotation(lcm)
    # h.r * x0 + k.r * y0 = diff; the common reflection is a^(i - r1*x0) b
    x0 = (diff // g) * pow(h.r // g, -1, k.r // g) if k.r // g > 1 else 0
    return Subgroup.dihedral(lcm, (h.i - h.r * x0) % lcm)


def product_size(h: Subgroup, k: Subgroup, n: int) -> int:
    """|HK| from the coset identity |HK| = |H||K| / |H ∩ K|."""
    return subgroup_order(h, n) * subgroup_order(k, n) // subgroup_order(intersect(h, k, n), n)


def order_pair(h: Subgroup, k: Subgroup, n: int) -> SubgroupOrderPair:
    return SubgroupOrderPair(
        subgroup_order(h, n),
        subgroup_order(k, n),
        subgroup_order(intersect(h, k, n), n),
        product_size(h, k, n),
    )


def is_comaximal_closed_form(h: Subgroup, k: Subgroup) -> bool:
    """gcd shortcut for HK = D_n; agrees with :func:`is_comaximal` (tested)."""
    if h.is_rotation and k.is_rotation:
        return False
    g = math.gcd(h.r, k.r)
    if h.is_rotation or k.is_rotation:
        return g == 1
    return g == 1 or (g == 2 and (h.i - k.i) % 2 == 1)


def is_comaximal(h: Subgroup, k: Subgroup, n: int, *, debug: bool = False) -> bool:
    """True iff HK is the whole group, i.e. ``product_size == 2n``."""
    if h == k:
        raise InvalidSubgroup(f"co-maximality is defined for distinct subgroups, got {h} twice")
    result = product_size(h, k, n) == 2 * n
    if debug:
        assert result == is_comaximal_closed_form(h, k), (h, k, n)
    return result


@lru_cache(maxsize=None)
def _vertex_set(n: int) -> tuple[Subgroup, ...]:
    primes = prime_divisors(n)
    return tuple(
        h for h in _enumerate(n)
        if h.is_dihedral or any(h.r % p for p in primes)
    )


def vertex_set(n: int) -> list[Subgroup]:
    """Subgroups with at least one co-maximal partner.

    A rotation subgroup ``<a^r>`` qualifies iff some prime divisor of n
    does not divide r; every dihedral subgroup pairs with ``<a>``.
    """
    return list(_vertex_set(check_n(n)))
