"""Field-generated planar nearrings built by projecting Z_p^* onto Phi.

The multiplication is a*b = f(a)*b for a != 0 and 0*b = 0, where f(x) = x / rep(x)
and rep picks a representative from the coset x*Phi.  When gcd(k, (p-1)/k) = 1 the
representatives form the complementary subgroup and f is the homomorphic
projection x -> x^u with u = 1 mod k, u = 0 mod (p-1)/k.  Otherwise rep(x) is
omega^(ind(x) mod (p-1)/k) for the primitive root omega.

Every law is checked exhaustively with numpy at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd
from typing import Optional, Sequence

import numpy as np

from .disks import interior as disk_interior
from .errors import AxiomError, DomainError
from .ferrero import PhiGroup, build_phi
from .field import PrimeField
from .geometry import circle, is_circular


@dataclass(frozen=True)
class ProjectionNearring:
    field: PrimeField
    phi: PhiGroup
    omega: int
    projection: tuple[int, ...]  # f(x) for x in 0..p-1, with f(0) = 0
    homomorphic: bool
    table: np.ndarray = dc_field(repr=False, compare=False)

    @property
    def p(self) -> int:
        return self.field.p

    def mul(self, a, b) -> int:
        return int(self.table[self.field.residue(a), self.field.residue(b)])

    def multiplier_classes(self) -> list[tuple[int, ...]]:
        """Equivalent-multiplier classes, found by grouping identical table rows."""
        groups: dict[bytes, list[int]] = {}
        for a in range(self.p):
            groups.setdefault(self.table[a].tobytes(), []).append(a)
        return sorted(tuple(g) for g in groups.values())

    def blocks(self) -> set[tuple[int, ...]]:
        """N* a + b for all a != 0, b, with N* the non-annihilating multipliers."""
        nonzero = [a for a in range(self.p) if self.table[a].any()]
        out = set()
        for a in range(1, self.p):
            base = {int(self.table[n, a]) for n in nonzero}
            for b in range(self.p):
                out.add(tuple(sorted((x + b) % self.p for x in base)))
        return out


@dataclass(frozen=True)
class DoublePlanarPair:
    first: ProjectionNearring
    second: ProjectionNearring


@dataclass(frozen=True)
class InteriorReport:
    a: int
    b: int
    disk_interior: frozenset
    clay: dict  # partner generator -> interior set
    orbit_reps: dict  # partner generator -> Phi-orbit representatives (of c - b)

    def sizes(self) -> dict:
        return {g: len(s) for g, s in self.clay.items()}

    def symmetric_differences(self) -> dict:
        """Pairwise symmetric differences between the partner-based sets, plus each vs the disk interior."""
        out = {}
        keys = sorted(self.clay)
        for i, g in enumerate(keys):
            out[(g, "disk")] = self.clay[g] ^ self.disk_interior
            for h in keys[i + 1 :]:
                out[(g, h)] = self.clay[g] ^ self.clay[h]
        return out


def _projection(field: PrimeField, phi: PhiGroup, omega: int) -> tuple[list[int], bool]:
    p, k = field.p, phi.order
    m = (p - 1) // k
    f = [0] * p
    if gcd(k, m) == 1:
        u = m * pow(m, -1, k) % (p - 1)
        for x in range(1, p):
            f[x] = pow(x, u, p)
        return f, True
    log = field.log_table(omega)
    for x in range(1, p):
        rep = pow(omega, log[x] % m, p)
        f[x] = x * field.inv(rep) % p
    return f, False


def _first_violation(mask: np.ndarray) -> Optional[tuple[int, ...]]:
    bad = np.argwhere(mask)
    return tuple(int(t) for t in bad[0]) if bad.size else None


def check_nearring_laws(table: np.ndarray, p: int):
    """Raise AxiomError on the first failure of associativity or left distributivity."""
    idx = np.arange(p)
    add = (idx[:, None] + idx[None, :]) % p
    # x*(y+z) == x*y + x*z
    lhs = table[:, add]
    rhs = (table[:, :, None] + table[:, None, :]) % p
    w = _first_violation(lhs != rhs)
    if w:
        raise AxiomError(f"left distributivity fails at {w}", w)
    # (x*y)*z == x*(y*z)
    lhs = table[table]  # lhs[x, y, z] = table[table[x, y], z]
    rhs = table[:, table]  # rhs[x, y, z] = table[x, table[y, z]]
    w = _first_violation(lhs != rhs)
    if w:
        raise AxiomError(f"associativity fails at {w}", w)
    if table[0].any() or table[:, 0].any():
        raise AxiomError("not 0-symmetric", (0,))


def check_planarity(table: np.ndarray, p: int):
    """At least three multiplier classes, and a*x = b*x + c uniquely solvable for inequivalent a, b."""
    rows = {}
    for a in range(p):
        rows.setdefault(table[a].tobytes(), a)
    reps = sorted(rows.values())
    if len(reps) < 3:
        raise AxiomError(f"only {len(reps)} equivalent-multiplier classes", tuple(reps))
    for i, a in enumerate(reps):
        for b in reps[i + 1 :]:
            diff = (table[a] - table[b]) % p
            # unique solvability for every c <=> x -> a*x - b*x is a bijection
            if np.unique(diff).size != p:
                raise AxiomError(f"a*x = b*x + c is not uniquely solvable for a={a}, b={b}", (a, b))


def build_projection_nearring(field: PrimeField, g, omega: Optional[int] = None, check: bool = True) -> ProjectionNearring:
    phi = build_phi(field, g)
    if phi.order == field.p - 1:
        raise DomainError("Phi = Z_p^* leaves only two multiplier classes; planarity needs a proper subgroup")
    omega = field.primitive_root if omega is None else field.residue(omega)
    f, homomorphic = _projection(field, phi, omega)
    p = field.p
    fa = np.array(f, dtype=np.int64)
    table = (fa[:, None] * np.arange(p, dtype=np.int64)[None, :]) % p
    table.setflags(write=False)
    if check:
        check_nearring_laws(table, p)
        check_planarity(table, p)
    return ProjectionNearring(field, phi, omega, tuple(f), homomorphic, table)


def is_double_planar(nr1: ProjectionNearring, nr2: ProjectionNearring) -> tuple[bool, Optional[tuple]]:
    """Exhaustive check that each multiplication left-distributes over the other.

    The witness is ("first", a, b, c) for a failure of a*1(b*2 c) = (a*1 b)*2(a*1 c),
    or ("second", a, b, c) for the symmetric law.
    """
    if nr1.field != nr2.field:
        raise DomainError("nearrings over different fields")
    t1, t2 = nr1.table, nr2.table
    for name, s, t in (("first", t1, t2), ("second", t2, t1)):
        # s[a, t[b, c]] == t[s[a, b], s[a, c]]
        lhs = s[:, t]
        rhs = t[s[:, :, None], s[:, None, :]]
        w = _first_violation(lhs != rhs)
        if w:
            return False, (name,) + w
    return True, None


def build_double_planar(field: PrimeField, g_first, g_second) -> DoublePlanarPair:
    omega = field.primitive_root
    nr1 = build_projection_nearring(field, g_first, omega)
    nr2 = build_projection_nearring(field, g_second, omega)
    ok, witness = is_double_planar(nr1, nr2)
    if not ok:
        raise AxiomError(f"mutual left distributivity fails at {witness}", witness)
    return DoublePlanarPair(nr1, nr2)


def rays_from(nr: ProjectionNearring, c: int) -> list[frozenset[int]]:
    """The rays {n*d + c : n in N} for d != 0, one per distinct ray."""
    p = nr.p
    seen = {}
    for d in range(1, p):
        ray = frozenset((int(x) + c) % p for x in nr.table[:, d])
        seen.setdefault(ray, None)
    return list(seen)


def clay_interior(pair: DoublePlanarPair, a, b, reading: str = "tangent") -> frozenset[int]:
    """Points c off the circle Phi(a)+b (Phi from ``pair.first``) judged interior via rays of ``pair.second``.

    reading="tangent": no ray from c meets the circle in more than one point.
    reading="meets": every ray from c meets the circle.
    """
    first, second = pair.first, pair.second
    field = first.field
    a, b = field.residue(a), field.residue(b)
    if a == 0:
        raise DomainError("radius must be nonzero")
    if reading not in ("tangent", "meets"):
        raise DomainError(f"unknown reading {reading!r}")
    C = circle(first.phi, a, b).point_set
    p = field.p
    out = set()
    for c in range(p):
        if c in C:
            continue
        hits = [len(ray & C) for ray in rays_from(second, c)]
        if reading == "tangent":
            ok = max(hits) <= 1
        else:
            ok = min(hits) >= 1
        if ok:
            out.add(c)
    return frozenset(out)


def orbit_representatives(phi: PhiGroup, points, center: int = 0) -> list[int]:
    p = phi.p
    return sorted({phi.rep((x - center) % p) for x in points})


def compare_interiors(phi: PhiGroup, partners: Sequence[int], a, b, reading: str = "tangent") -> InteriorReport:
    field = phi.field
    a, b = field.residue(a), field.residue(b)
    result = is_circular(phi)
    if not result:
        raise DomainError(f"{phi!r} is not circular")
    clay, reps = {}, {}
    for g in partners:
        pair = build_double_planar(field, phi.generator, g)
        s = clay_interior(pair, a, b, reading)
        clay[int(g)] = s
        reps[int(g)] = orbit_representatives(phi, s, b)
    return InteriorReport(a, b, disk_interior(phi, a, b), clay, reps)
