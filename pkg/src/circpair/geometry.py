"""Circles Phi(a)+b, the block set they form, circularity, and circle families."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import chain, combinations
from math import isqrt
from typing import Iterable, Optional

from .errors import DomainError
from .ferrero import PhiGroup


@dataclass(frozen=True)
class Circle:
    """The block Phi(radius_rep) + center, with its points sorted ascending."""

    radius_rep: int
    center: int
    points: tuple[int, ...]
    p: int

    @cached_property
    def point_set(self) -> frozenset[int]:
        return frozenset(self.points)

    def __contains__(self, x):
        return int(x) in self.point_set

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def key(self) -> tuple[int, int]:
        return (self.radius_rep, self.center)


@dataclass(frozen=True)
class CircleFamily:
    """E^r_c: circles of radius class r centered at the points of Phi(c), sorted by center."""

    radius_rep: int
    center_orbit_rep: int
    circles: tuple[Circle, ...]

    def __len__(self):
        return len(self.circles)

    def __iter__(self):
        return iter(self.circles)

    def __contains__(self, circle):
        return any(circle.key == c.key for c in self.circles)

    def points(self) -> frozenset[int]:
        return frozenset().union(*(c.point_set for c in self.circles))


@dataclass(frozen=True)
class CircularityResult:
    circular: bool
    witness: Optional[tuple[int, ...]] = None
    reason: str = ""

    def __bool__(self):
        return self.circular


def translate(points: Iterable[int], b: int, p: int) -> frozenset[int]:
    return frozenset((x + b) % p for x in points)


def dilate(points: Iterable[int], a: int, p: int) -> frozenset[int]:
    return frozenset(x * a % p for x in points)


def circle(phi: PhiGroup, a, b) -> Circle:
    a = phi.field.residue(a)
    b = phi.field.residue(b)
    if a == 0:
        raise DomainError("radius must be nonzero")
    r = phi.rep(a)
    p = phi.p
    pts = tuple(sorted((f * r + b) % p for f in phi.elements))
    return Circle(r, b, pts, p)


def all_circles(phi: PhiGroup) -> list[Circle]:
    """Every block of B*, ordered by (radius class, center)."""
    return [circle(phi, r, b) for r in phi.orbit_reps for b in range(phi.p)]


def circles_through(phi: PhiGroup, x) -> list[Circle]:
    """The p-1 circles containing the point x: Phi(r) + (x - f*r) for every class r and f in Phi."""
    x = phi.field.residue(x)
    p = phi.p
    out = {}
    for r in phi.orbit_reps:
        for f in phi.elements:
            c = (x - f * r) % p
            out[(r, c)] = circle(phi, r, c)
    return [out[key] for key in sorted(out)]


def pair_index(blocks: Iterable[Iterable[int]]) -> dict[tuple[int, int], list[int]]:
    """Map each unordered pair (x < y) to the indices of the blocks containing it."""
    index: dict[tuple[int, int], list[int]] = {}
    for i, block in enumerate(blocks):
        for pair in combinations(sorted(block), 2):
            index.setdefault(pair, []).append(i)
    return index


def circularity_bound(v: int) -> int:
    """Largest k with (2k-3)^2 <= 4v-7, i.e. floor((3 + sqrt(4v-7)) / 2)."""
    if v < 3:
        raise DomainError(f"bound needs v >= 3, got {v}")
    # 2k - 3 <= isqrt(4v - 7)
    return (3 + isqrt(4 * v - 7)) // 2


def is_circular(phi: PhiGroup, prefilter: bool = False) -> CircularityResult:
    """Decide circularity of the block set B* of (Z_p, Phi).

    A triple witness means two distinct blocks share those three points; a pair
    witness means the pair lies in fewer than two blocks.  With ``prefilter``, a
    block size above :func:`circularity_bound` is rejected without a witness.
    """
    p, k = phi.p, phi.order
    if prefilter and k > circularity_bound(p):
        return CircularityResult(False, None, f"block size {k} exceeds bound {circularity_bound(p)}")

    blocks = []
    for r in phi.orbit_reps:
        base = [f * r % p for f in phi.elements]
        blocks.extend(tuple(sorted((x + b) % p for x in base)) for b in range(p))
    index: dict[tuple[int, int], list[int]] = {}
    empty: list[int] = []
    for i, block in enumerate(blocks):
        pairs = list(combinations(block, 2))
        hits = Counter(chain.from_iterable(index.get(pair, empty) for pair in pairs))
        # |B ∩ B'| = s contributes C(s, 2) pair hits; s >= 3 iff hits >= 3
        clash = min((j for j, h in hits.items() if h >= 3), default=None)
        if clash is not None:
            common = sorted(set(block) & set(blocks[clash]))
            return CircularityResult(False, tuple(common[:3]), "three points lie in two distinct blocks")
        for pair in pairs:
            index.setdefault(pair, []).append(i)

    for x, y in combinations(range(p), 2):
        if len(index.get((x, y), ())) < 2:
            return CircularityResult(False, (x, y), "a pair lies in fewer than two blocks")
    return CircularityResult(True)


def family(phi: PhiGroup, r, c) -> CircleFamily:
    r = phi.field.residue(r)
    c = phi.field.residue(c)
    if r == 0 or c == 0:
        raise DomainError("family needs nonzero radius and center class")
    centers = sorted(phi.orbit_points(c))
    return CircleFamily(phi.rep(r), phi.rep(c), tuple(circle(phi, r, b) for b in centers))


def intersect(A: Circle, B: Circle) -> frozenset[int]:
    if A.p != B.p:
        raise DomainError(f"circles over Z_{A.p} and Z_{B.p} cannot be intersected")
    return A.point_set & B.point_set


def tangency_profile(F: CircleFamily, A: Circle) -> tuple[int, int]:
    """(m, n): how many other circles of F meet A in exactly one point, and in exactly two."""
    if A not in F:
        raise DomainError("circle is not a member of the family")
    sizes = Counter(len(intersect(A, B)) for B in F if B.key != A.key)
    return sizes[1], sizes[2]


def orbit_section_sizes(F: CircleFamily, phi: PhiGroup, r) -> list[int]:
    """|A ∩ Phi(r)| for each A in F, in family order."""
    orb = phi.orbit_points(r)
    return [len(A.point_set & orb) for A in F]


def apply(phi_element: int, C: Circle, phi: PhiGroup) -> Circle:
    """Image of a circle under multiplication by an element of Phi."""
    return circle(phi, phi_element * C.radius_rep, phi_element * C.center)
