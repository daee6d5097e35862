"""Scanning primes for circular pairs, with an append-only JSON-lines cache."""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .designs import disk_design, verify_bibd
from .disks import (
    disk,
    disk_bruteforce,
    future_work_union,
    satisfies_nongroup_hypothesis,
    tangent_radius_set,
)
from .errors import DomainError
from .ferrero import build_phi, canonical_generator
from .field import PrimeField, divisors, is_prime
from .geometry import is_circular

CACHE_ENV = "CIRCPAIR_CACHE_DIR"
CACHE_NAME = "scan.jsonl"


@dataclass(frozen=True)
class ScanRecord:
    p: int
    g: int
    k: int
    circular: bool
    even: bool
    disk_size: Optional[int] = None
    non_group: Optional[bool] = None
    bibd_params: Optional[dict] = None
    designs_checked: bool = False
    reason: str = ""
    timestamp: str = ""

    @property
    def key(self) -> tuple[int, int]:
        return (self.p, self.k)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "ScanRecord":
        return cls(**json.loads(line))


def default_cache_path() -> Path:
    base = os.environ.get(CACHE_ENV)
    root = Path(base) if base else Path.home() / ".cache" / "circpair"
    return root / CACHE_NAME


def load_cache(path: Path) -> dict[tuple[int, int], ScanRecord]:
    records: dict[tuple[int, int], ScanRecord] = {}
    if not path.exists():
        return records
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = ScanRecord.from_json(line)
            except (json.JSONDecodeError, TypeError):
                # a torn final line from an interrupted run
                continue
            records[rec.key] = rec
    return records


def primes_between(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 3), hi + 1) if is_prime(q)]


def scan_pair(p: int, k: int, designs: bool = True) -> ScanRecord:
    field = PrimeField(p)
    g = canonical_generator(field, k)
    phi = build_phi(field, g)
    res = is_circular(phi, prefilter=True)
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    if not res:
        return ScanRecord(p, g, k, False, k % 2 == 0, reason=res.reason, timestamp=stamp)
    size = len(disk(phi, 1, 0))
    non_group = satisfies_nongroup_hypothesis(phi)
    params = None
    if designs:
        result = verify_bibd(disk_design(phi))
        params = result.params.to_dict() if result else None
    return ScanRecord(p, g, k, True, k % 2 == 0, size, non_group, params, designs, "", stamp)


def _tasks(p_min: int, p_max: int, order: Optional[int]) -> list[tuple[int, int]]:
    out = []
    for p in primes_between(p_min, p_max):
        for k in divisors(p - 1):
            if k < 2 or (order is not None and k != order):
                continue
            out.append((p, k))
    return out


def _run(task):
    p, k, designs = task
    return scan_pair(p, k, designs)


def scan(
    p_min: int,
    p_max: int,
    order: Optional[int] = None,
    cache: Optional[Path] = None,
    designs: bool = True,
    jobs: int = 1,
) -> tuple[list[ScanRecord], int]:
    """Scan every prime in [p_min, p_max] and every subgroup order (or just ``order``).

    Returns all matching records in (p, k) order and the number computed this call.
    A cached record is reused unless designs are requested and it was scanned without them.
    """
    if p_min > p_max:
        raise DomainError(f"empty range: {p_min} > {p_max}")
    cached = load_cache(cache) if cache else {}
    todo = []
    for p, k in _tasks(p_min, p_max, order):
        rec = cached.get((p, k))
        if rec is None or (designs and rec.circular and not rec.designs_checked):
            todo.append((p, k, designs))

    fresh: list[ScanRecord] = []
    if todo:
        fh = None
        if cache:
            cache.parent.mkdir(parents=True, exist_ok=True)
            fh = cache.open("a")
        try:
            if jobs > 1:
                with ProcessPoolExecutor(max_workers=jobs) as pool:
                    results: Iterable[ScanRecord] = pool.map(_run, todo)
                    fresh = _collect(results, fh)
            else:
                fresh = _collect(map(_run, todo), fh)
        finally:
            if fh:
                fh.close()
    for rec in fresh:
        cached[rec.key] = rec
    keys = _tasks(p_min, p_max, order)
    return [cached[key] for key in keys], len(fresh)


def _collect(results: Iterable[ScanRecord], fh) -> list[ScanRecord]:
    out = []
    for rec in results:
        if fh:
            fh.write(rec.to_json() + "\n")
            fh.flush()
        out.append(rec)
    return out


@dataclass(frozen=True)
class ConjectureRow:
    p: int
    g: int
    k: int
    n: int
    M_size: int
    matches: bool
    translation_invariant: bool

    COLUMNS = ("p", "g", "k", "n", "M_size", "matches")

    def cells(self) -> tuple:
        return (self.p, self.g, self.k, self.n, self.M_size, self.matches)


def conjecture_rows(p_min: int, p_max: int, odd_only: bool = True) -> Iterator[ConjectureRow]:
    """|M^{1,0}| for every circular pair in range; compares against 2n for |Phi| = 2n+1.

    For even |Phi| = 2n the comparison is also against 2n, for reference only.
    """
    if p_min > p_max:
        raise DomainError(f"empty range: {p_min} > {p_max}")
    for p, k in _tasks(p_min, p_max, None):
        if odd_only and k % 2 == 0:
            continue
        field = PrimeField(p)
        phi = build_phi(field, canonical_generator(field, k))
        if not is_circular(phi, prefilter=True):
            continue
        n = k // 2
        M = tangent_radius_set(phi, 1, 0)
        shifted = tangent_radius_set(phi, 1, 1)
        yield ConjectureRow(p, phi.generator, k, n, len(M), len(M) == 2 * n, M.classes == shifted.classes)


def odd_disk_stats(p: int, g: int) -> dict:
    """Brute-force disk data for one pair, logged next to the conjecture table.

    ``overlap`` is the total family size minus the size of the union, over the
    families E^r_{-r} for r in M^{1,0}; 0 means the families are pairwise disjoint.
    """
    phi = build_phi(PrimeField(p), g)
    D = disk_bruteforce(phi, 1, 0)
    M = tangent_radius_set(phi, 1, 0)
    sizes = []
    for r in M.classes:
        orb = [f * r % p for f in phi.elements]
        sizes.append(len({(x - c) % p for c in orb for x in orb}))
    union = future_work_union(phi, 1, 0)
    return {
        "p": p,
        "g": g,
        "k": phi.order,
        "disk_size": len(D),
        "full": len(D) == p,
        "formula_holds": union == D.point_set,
        "overlap": sum(sizes) - len(union),
    }
