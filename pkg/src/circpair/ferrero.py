"""The regular group Phi = <g> acting on Z_p by multiplication, and its orbits."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import DomainError
from .field import PrimeField


@dataclass(frozen=True)
class Orbit:
    """An orbit Phi(a); ``representative`` is its smallest residue."""

    representative: int
    elements: tuple[int, ...]

    def __contains__(self, x):
        return int(x) in self.elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class PhiGroup:
    """Cyclic subgroup of Z_p^* generated by ``generator``.

    ``elements`` lists g^0, g^1, ..., g^(k-1) in that order, so
    ``elements[i]`` is the i-th power of the generator.
    """

    field: PrimeField
    generator: int
    order: int
    elements: tuple[int, ...]
    _class_of: tuple[int, ...] = dc_field(repr=False, compare=False)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def k(self) -> int:
        return self.order

    def __repr__(self):
        return f"PhiGroup(p={self.p}, g={self.generator}, order={self.order})"

    def __contains__(self, x):
        return int(x) % self.p in self.element_set

    @cached_property
    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def rep(self, x) -> int:
        """Canonical (minimal) representative of the orbit containing x."""
        return self._class_of[self.field.residue(x)]

    def orbit(self, a) -> Orbit:
        a = self.field.residue(a)
        return Orbit(self.rep(a), tuple(sorted({phi * a % self.p for phi in self.elements})))

    def orbit_points(self, a) -> frozenset[int]:
        a = self.field.residue(a)
        return frozenset(phi * a % self.p for phi in self.elements)

    @cached_property
    def orbit_reps(self) -> tuple[int, ...]:
        """Representatives of the nontrivial orbits, ascending."""
        return tuple(sorted(set(self._class_of[1:])))

    def orbit_partition(self) -> list[Orbit]:
        return [self.orbit(0)] + [self.orbit(r) for r in self.orbit_reps]

    @property
    def is_even(self) -> bool:
        return self.order % 2 == 0

    @property
    def half_order(self) -> int:
        return self.order // 2

    def is_ferrero_pair(self) -> bool:
        return is_ferrero_pair(self)


def build_phi(field: PrimeField, g) -> PhiGroup:
    g = field.residue(g)
    if g in (0, 1):
        raise DomainError(f"generator must lie in [2, p-1], got {g}")
    order = field.mult_order(g)
    elements = []
    x = 1
    for _ in range(order):
        elements.append(x)
        x = x * g % field.p
    assert x == 1

    p = field.p
    class_of = [0] * p
    seen = [False] * p
    seen[0] = True
    for a in range(1, p):
        if seen[a]:
            continue
        # a is the smallest unseen residue, hence the minimum of its orbit
        for phi in elements:
            y = phi * a % p
            seen[y] = True
            class_of[y] = a
    return PhiGroup(field, g, order, tuple(elements), tuple(class_of))


def canonical_generator(field: PrimeField, k: int) -> int:
    """Smallest residue of multiplicative order exactly k."""
    if k < 2 or (field.p - 1) % k:
        raise DomainError(f"no subgroup of order {k} in Z_{field.p}^*")
    for g in range(2, field.p):
        if field.mult_order(g) == k:
            return g
    raise AssertionError("unreachable: cyclic group has every divisor order")


def is_ferrero_pair(phi: PhiGroup) -> bool:
    """Check regularity and surjectivity of x -> -phi(x) + x for every phi != 1.

    Executed point by point even though a prime field guarantees the answer.
    """
    p = phi.p
    if phi.order < 2:
        return False
    for f in phi.elements[1:]:
        if f == 1:
            return False
        for x in range(1, p):
            if f * x % p == x:
                return False
        image = {(x - f * x) % p for x in range(p)}
        if len(image) != p:
            return False
    return True


def orbit(phi: PhiGroup, a) -> Orbit:
    return phi.orbit(a)


def orbit_partition(phi: PhiGroup) -> list[Orbit]:
    return phi.orbit_partition()
