"""Incidence structures built from circles and disks, and BIBD verification."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .disks import disk
from .errors import DomainError
from .ferrero import PhiGroup
from .geometry import all_circles, pair_index, translate


@dataclass(frozen=True)
class BibdParams:
    v: int
    b: int
    k: int
    r: int
    lam: int

    def identities_hold(self) -> bool:
        """vr = bk and lambda(v-1) = r(k-1)."""
        return self.v * self.r == self.b * self.k and self.lam * (self.v - 1) == self.r * (self.k - 1)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.v, self.b, self.k, self.r, self.lam)

    def to_dict(self) -> dict:
        return {"v": self.v, "b": self.b, "k": self.k, "r": self.r, "lambda": self.lam}

    @classmethod
    def from_dict(cls, d: dict) -> "BibdParams":
        return cls(d["v"], d["b"], d["k"], d["r"], d["lambda"])


@dataclass(frozen=True)
class Design:
    """Points 0..v-1 and setwise-distinct blocks, each a sorted tuple, in lexicographic order.

    ``raw_count`` is the number of blocks generated before deduplication.
    """

    v: int
    blocks: tuple[tuple[int, ...], ...]
    phi: Optional[tuple[int, int]] = None
    raw_count: Optional[int] = dc_field(default=None, compare=False)

    @cached_property
    def pairs(self) -> dict[tuple[int, int], list[int]]:
        return pair_index(self.blocks)

    @property
    def b(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class BibdResult:
    params: Optional[BibdParams]
    witness: Optional[tuple] = None
    reason: str = ""

    def __bool__(self):
        return self.params is not None


def make_design(v: int, blocks, phi: Optional[tuple[int, int]] = None) -> Design:
    blocks = list(blocks)
    distinct = {tuple(sorted(set(B))) for B in blocks}
    for B in distinct:
        if not B:
            raise DomainError("blocks must be nonempty")
        if B[0] < 0 or B[-1] >= v:
            raise DomainError(f"block {B} has points outside 0..{v - 1}")
    return Design(v, tuple(sorted(distinct)), phi, len(blocks))


def circle_design(phi: PhiGroup) -> Design:
    return make_design(phi.p, (c.points for c in all_circles(phi)), (phi.p, phi.generator))


def disk_design(phi: PhiGroup, method: str = "auto") -> Design:
    """All distinct disks D(a;b), a != 0, deduplicated setwise.

    Each D(a;b) is built as D(a;0) + b, which holds for every circular pair.
    """
    p = phi.p
    blocks = []
    for a in range(1, p):
        base = disk(phi, a, 0, method).points
        for b in range(p):
            blocks.append(translate(base, b, p))
    return make_design(p, blocks, (p, phi.generator))


def pair_count(d: Design, x: int, y: int) -> int:
    if x == y:
        raise DomainError("pair count needs two distinct points")
    return len(d.pairs.get((min(x, y), max(x, y)), ()))


def _pair_counts(d: Design) -> np.ndarray:
    """Symmetric v x v matrix of pair counts, accumulated block by block; diagonal = replication."""
    counts = np.zeros((d.v, d.v), dtype=np.int64)
    for B in d.blocks:
        idx = np.fromiter(B, dtype=np.intp, count=len(B))
        counts[np.ix_(idx, idx)] += 1
    return counts


def verify_bibd(d: Design) -> BibdResult:
    """Check constant k, r and lambda; report the first failure in canonical order."""
    if not d.blocks:
        return BibdResult(None, None, "design has no blocks")
    k = len(d.blocks[0])
    for i, B in enumerate(d.blocks):
        if len(B) != k:
            return BibdResult(None, ("block", i), f"block {i} has size {len(B)}, expected {k}")

    counts = _pair_counts(d)
    reps = np.diagonal(counts)
    r = int(reps[0])
    bad = np.flatnonzero(reps != r)
    if bad.size:
        x = int(bad[0])
        return BibdResult(None, ("point", x), f"point {x} lies in {int(reps[x])} blocks, expected {r}")

    if d.v < 2:
        return BibdResult(None, None, "need at least two points")
    lam = int(counts[0, 1])
    off = counts != lam
    np.fill_diagonal(off, False)
    bad_pairs = np.argwhere(np.triu(off))
    if bad_pairs.size:
        x, y = (int(t) for t in bad_pairs[0])
        return BibdResult(None, ("pair", x, y), f"pair ({x}, {y}) lies in {int(counts[x, y])} blocks, expected {lam}")

    params = BibdParams(d.v, d.b, k, r, lam)
    if not params.identities_hold():
        # cannot happen for a genuine count; kept as a guard on the counting code
        return BibdResult(None, None, f"parameter identities fail for {params}")
    return BibdResult(params)


def disk_design_params(p: int, n: int) -> BibdParams:
    """Closed-form parameters of the disk design for |Phi| = 2n over Z_p."""
    if n < 1 or (p - 1) % (2 * n):
        raise DomainError(f"2n = {2 * n} does not divide p - 1 = {p - 1}")
    k = 2 * n * n + 1
    b = p * (p - 1) // (2 * n)
    r_num = (p - 1) * k
    if r_num % (2 * n):
        raise DomainError("replication number is not an integer")
    return BibdParams(p, b, k, r_num // (2 * n), n * k)


# name required by the public interface
theorem_2_20_params = disk_design_params


def circle_design_params(v: int, k: int) -> BibdParams:
    """Parameters of the circle design of a planar pair with blocks of size k."""
    if (v * (v - 1)) % k:
        raise DomainError(f"k = {k} does not divide v(v-1)")
    return BibdParams(v, v * (v - 1) // k, k, v - 1, k - 1)


def incidence_matrix(d: Design) -> np.ndarray:
    """v x b 0/1 matrix; rows are points ascending, columns follow ``d.blocks``."""
    M = np.zeros((d.v, d.b), dtype=np.int8)
    for j, B in enumerate(d.blocks):
        M[list(B), j] = 1
    return M


def gram_identity_holds(d: Design, params: BibdParams) -> bool:
    """M M^T = (r - lambda) I + lambda J."""
    M = incidence_matrix(d).astype(np.int64)
    G = M @ M.T
    expected = np.full((d.v, d.v), params.lam, dtype=np.int64)
    expected += (params.r - params.lam) * np.eye(d.v, dtype=np.int64)
    return bool(np.array_equal(G, expected))


def translation_reduced_pairs_agree(d: Design) -> bool:
    """<x,y> == <0, y-x> for every pair, using the pair index."""
    v = d.v
    for x, y in combinations(range(v), 2):
        if pair_count(d, x, y) != pair_count(d, 0, (y - x) % v):
            return False
    return True


def design_to_json(d: Design, params: Optional[BibdParams] = None) -> dict:
    phi = {"p": d.phi[0], "g": d.phi[1]} if d.phi else None
    return {
        "v": d.v,
        "phi": phi,
        "blocks": [list(B) for B in d.blocks],
        "params": params.to_dict() if params else None,
    }


def design_from_json(obj: dict) -> tuple[Design, Optional[BibdParams]]:
    phi = (obj["phi"]["p"], obj["phi"]["g"]) if obj.get("phi") else None
    d = make_design(obj["v"], obj["blocks"], phi)
    params = BibdParams.from_dict(obj["params"]) if obj.get("params") else None
    return d, params


def export_json(d: Design, path, params: Optional[BibdParams] = None) -> Path:
    path = Path(path)
    with path.open("w") as fh:
        json.dump(design_to_json(d, params), fh)
        fh.write("\n")
    return path


def export_csv(d: Design, path) -> Path:
    """Incidence matrix as CSV: a header of block indices, then one row per point."""
    path = Path(path)
    M = incidence_matrix(d)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(range(d.b))
        w.writerows(M.tolist())
    return path


def read_csv(path) -> np.ndarray:
    with Path(path).open(newline="") as fh:
        rows = list(csv.reader(fh))
    return np.array([[int(x) for x in row] for row in rows[1:]], dtype=np.int8)


def remove_block(d: Design, index: int) -> Design:
    blocks: Sequence = d.blocks[:index] + d.blocks[index + 1 :]
    return Design(d.v, tuple(blocks), d.phi, None)
