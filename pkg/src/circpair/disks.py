"""Disks D(a;b) and interior parts of circles.

``disk_bruteforce`` follows the definition literally and is the oracle for every
faster construction here.  The fast paths need |Phi| even.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DomainError, PreconditionError
from .ferrero import PhiGroup
from .field import PrimeField
from .geometry import Circle, circle, circles_through, is_circular


@dataclass(frozen=True)
class Disk:
    """A disk with its points and the orbit representatives o_i with points = U Phi(o_i) + center."""

    radius_rep: int
    center: int
    points: tuple[int, ...]
    orbit_reps: tuple[int, ...]

    @cached_property
    def point_set(self) -> frozenset[int]:
        return frozenset(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, x):
        return int(x) in self.point_set


@dataclass(frozen=True)
class TangentRadiusSet:
    """Radius classes r admitting a circle through ``center`` tangent to Phi(a)+center.

    ``witnesses`` maps each class to the first tangent circle found for it.
    """

    radius_rep: int
    center: int
    witnesses: dict

    @property
    def classes(self) -> tuple[int, ...]:
        return tuple(sorted(self.witnesses))

    def __len__(self):
        return len(self.witnesses)


def _nonzero_radius(phi: PhiGroup, a) -> int:
    a = phi.field.residue(a)
    if a == 0:
        raise DomainError("radius must be nonzero")
    return a


def _require_circular(phi: PhiGroup):
    result = is_circular(phi)
    if not result:
        raise PreconditionError(f"{phi!r} is not circular: {result.reason} {result.witness}")


def _require_even(phi: PhiGroup):
    if not phi.is_even:
        raise PreconditionError(f"|Phi| = {phi.order} is odd; the fast disk construction needs even order")


def _make_disk(phi: PhiGroup, a: int, b: int, points: Iterable[int]) -> Disk:
    pts = tuple(sorted(set(points)))
    p = phi.p
    reps = tuple(sorted({phi.rep((x - b) % p) for x in pts}))
    return Disk(phi.rep(a), b, pts, reps)


def tangent_circles(phi: PhiGroup, a: int, b: int) -> list[Circle]:
    """Circles through b meeting Phi(a)+b in exactly one point."""
    boundary = circle(phi, a, b).point_set
    out = []
    for C in circles_through(phi, b):
        if len(C.point_set & boundary) == 1:
            out.append(C)
    return out


def disk_bruteforce(phi: PhiGroup, a, b, check_circular: bool = False) -> Disk:
    a = _nonzero_radius(phi, a)
    b = phi.field.residue(b)
    if check_circular:
        _require_circular(phi)
    points = set()
    for C in tangent_circles(phi, a, b):
        points.update(C.points)
    return _make_disk(phi, a, b, points)


def interior(phi: PhiGroup, a, b, method: str = "auto") -> frozenset[int]:
    """Disk minus its boundary circle."""
    a = _nonzero_radius(phi, a)
    b = phi.field.residue(b)
    D = disk(phi, a, b, method)
    return D.point_set - circle(phi, a, b).point_set


def fast_radius(phi: PhiGroup, a) -> int:
    """r = a/2, the radius of the family whose union is D(a;0)."""
    a = _nonzero_radius(phi, a)
    return a * phi.field.inv(2) % phi.p


def disk_fast(phi: PhiGroup, a, b) -> Disk:
    """Union of the circles Phi(r)+c, c in Phi(r), translated by b, with r = a/2."""
    _require_even(phi)
    a = _nonzero_radius(phi, a)
    b = phi.field.residue(b)
    p = phi.p
    r = fast_radius(phi, a)
    orb = [f * r % p for f in phi.elements]
    points = {(x + c + b) % p for c in orb for x in orb}
    return _make_disk(phi, a, b, points)


def disk(phi: PhiGroup, a, b, method: str = "auto") -> Disk:
    if method == "brute":
        return disk_bruteforce(phi, a, b)
    if method == "fast":
        return disk_fast(phi, a, b)
    if method == "auto":
        return disk_fast(phi, a, b) if phi.is_even else disk_bruteforce(phi, a, b)
    raise DomainError(f"unknown disk method {method!r}")


def disk_orbit_decomposition(phi: PhiGroup, a, canonical: bool = True) -> list[int]:
    """Orbit representatives of D(a;0): 0, a, and (g^i + 1) r for 1 <= i < n, with r = a/2.

    g is the stored generator and |Phi| = 2n.  With ``canonical`` each value is
    replaced by the minimal residue of its orbit and the list is sorted;
    otherwise the raw values are returned in the order above.
    """
    _require_even(phi)
    a = _nonzero_radius(phi, a)
    p = phi.p
    r = fast_radius(phi, a)
    raw = [0, a] + [(phi.elements[i] + 1) * r % p for i in range(1, phi.half_order)]
    if not canonical:
        return raw
    return sorted({phi.rep(x) for x in raw})


def points_from_orbits(phi: PhiGroup, reps: Iterable[int], b: int = 0) -> frozenset[int]:
    p = phi.p
    return frozenset((x + b) % p for o in reps for x in phi.orbit_points(o))


def disk_equal(phi: PhiGroup, a, b, a2, b2, method: str = "auto") -> bool:
    return disk(phi, a, b, method).point_set == disk(phi, a2, b2, method).point_set


def predicted_disk_equal(phi: PhiGroup, a, b, a2, b2) -> bool:
    """Equality predicted by the disk equality laws, valid when the non-group hypothesis holds."""
    f = phi.field
    return f.residue(b) == f.residue(b2) and phi.rep(a) == phi.rep(a2)


def is_multiplicative_group(field: PrimeField, s: Iterable[int]) -> bool:
    s = frozenset(field.residue(x) for x in s)
    if 0 in s:
        raise DomainError("a multiplicative group cannot contain 0")
    if 1 not in s:
        return False
    p = field.p
    for x in s:
        if field.inv(x) not in s:
            return False
        for y in s:
            if x * y % p not in s:
                return False
    return True


def satisfies_nongroup_hypothesis(phi: PhiGroup, method: str = "auto") -> bool:
    """True when D(1;0) minus {0} is not a multiplicative group."""
    D = disk(phi, 1, 0, method)
    return not is_multiplicative_group(phi.field, D.point_set - {0})


def tangent_radius_set(phi: PhiGroup, a, b) -> TangentRadiusSet:
    a = _nonzero_radius(phi, a)
    b = phi.field.residue(b)
    witnesses: dict[int, Circle] = {}
    for C in tangent_circles(phi, a, b):
        witnesses.setdefault(C.radius_rep, C)
    return TangentRadiusSet(phi.rep(a), b, witnesses)


def future_work_union(phi: PhiGroup, a, b) -> frozenset[int]:
    """Union over r in M^{a,b} of the points of E^r_{-r} + b.

    Returned for comparison with the brute-force disk; nothing here assumes they agree.
    """
    M = tangent_radius_set(phi, a, b)
    p = phi.p
    b = phi.field.residue(b)
    pts = set()
    for r in M.classes:
        orb = [f * r % p for f in phi.elements]
        for c in orb:
            # centers run over Phi(-r) + b
            pts.update((x - c + b) % p for x in orb)
    return frozenset(pts)
