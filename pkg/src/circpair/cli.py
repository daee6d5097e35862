"""Command line interface: ``circpair {pair,disk,design,clay,scan,conjecture} ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog
from .designs import (
    circle_design,
    circle_design_params,
    disk_design,
    export_csv,
    export_json,
    disk_design_params,
    verify_bibd,
)
from .disks import (
    disk_bruteforce,
    disk_fast,
    disk_orbit_decomposition,
    interior,
)
from .errors import DomainError
from .ferrero import PhiGroup, build_phi
from .field import PrimeField
from .geometry import circle, circularity_bound, is_circular
from .nearring import build_double_planar, clay_interior, orbit_representatives


class UsageError(Exception):
    pass


def _fmt(points) -> str:
    return "{" + ", ".join(str(x) for x in sorted(points)) + "}"


def _params(t) -> str:
    return "(" + ", ".join(str(x) for x in t) + ")"


def _phi(p: int, g: int) -> PhiGroup:
    field = PrimeField(p)
    if not 0 <= g < p:
        raise UsageError(f"generator {g} does not belong to Z_{p}")
    return build_phi(field, g)


def _residue(p: int, x: int, name: str) -> int:
    if not 0 <= x < p:
        raise UsageError(f"{name} = {x} does not belong to Z_{p}")
    return x


def _require_circular(phi: PhiGroup):
    res = is_circular(phi)
    if not res:
        raise DomainError(f"pair (Z_{phi.p}, <{phi.generator}>) is not circular: {res.reason}, witness {res.witness}")


def cmd_pair(args, out):
    phi = _phi(args.p, args.g)
    parts = phi.orbit_partition()
    res = is_circular(phi)
    print(f"p = {phi.p}, g = {phi.generator}, order k = {phi.order}", file=out)
    print(f"Phi = {_fmt(phi.elements)}", file=out)
    print(f"orbits: {len(parts)}", file=out)
    for o in parts:
        print(f"  [{o.representative}] {_fmt(o.elements)}", file=out)
    print(f"ferrero pair: {str(phi.is_ferrero_pair()).lower()}", file=out)
    print(f"circularity bound: k <= {circularity_bound(phi.p)}", file=out)
    line = f"circular: {str(res.circular).lower()}"
    if not res:
        line += f" ({res.reason}; witness {res.witness})"
    print(line, file=out)
    return 0


def cmd_disk(args, out):
    phi = _phi(args.p, args.g)
    a = _residue(phi.p, args.a, "a")
    b = _residue(phi.p, args.b, "b")
    if a == 0:
        raise DomainError("radius must be nonzero")
    _require_circular(phi)
    method = args.method
    if method == "auto":
        method = "fast" if phi.is_even else "brute"
    if method in ("fast", "both") and not phi.is_even:
        raise DomainError(f"|Phi| = {phi.order} is odd; the fast construction needs even order")

    status = 0
    if method == "both":
        D = disk_fast(phi, a, b)
        oracle = disk_bruteforce(phi, a, b)
        match = D.point_set == oracle.point_set
        if not match:
            status = 1
    elif method == "fast":
        D = disk_fast(phi, a, b)
    else:
        D = disk_bruteforce(phi, a, b)

    print(f"disk D({a};{b}) over (Z_{phi.p}, <{phi.generator}>), method {method}", file=out)
    print(f"circle: {_fmt(circle(phi, a, b).points)}", file=out)
    print(f"points ({len(D)}): {_fmt(D.points)}", file=out)
    print(f"orbit classes (of x - {b}): {_fmt(D.orbit_reps)}", file=out)
    if phi.is_even:
        raw = disk_orbit_decomposition(phi, a, canonical=False)
        print(f"decomposition 0, a, (g^i+1)a/2: {_fmt(raw)}", file=out)
        n = phi.half_order
        print(f"expected size 2n^2+1 = {2 * n * n + 1}", file=out)
    print(f"interior: {_fmt(interior(phi, a, b, 'brute' if method == 'brute' else 'auto'))}", file=out)
    if method == "both":
        print(f"match: {str(match).lower()}", file=out)
        if not match:
            print(f"error: fast and brute-force disks differ: {_fmt(D.point_set ^ oracle.point_set)}", file=sys.stderr)
    return status


def cmd_design(args, out):
    phi = _phi(args.p, args.g)
    if args.blocks == "disks":
        _require_circular(phi)
        d = disk_design(phi)
    else:
        d = circle_design(phi)
    res = verify_bibd(d)
    print(f"{args.blocks} design over (Z_{phi.p}, <{phi.generator}>): v = {d.v}, {d.b} distinct blocks from {d.raw_count}", file=out)
    if res:
        print(f"BIBD (v, b, k, r, lambda) = {_params(res.params.as_tuple())}", file=out)
        print(f"vr = bk: {str(res.params.v * res.params.r == res.params.b * res.params.k).lower()}", file=out)
        print(f"lambda(v-1) = r(k-1): {str(res.params.lam * (res.params.v - 1) == res.params.r * (res.params.k - 1)).lower()}", file=out)
    else:
        print(f"not a BIBD: {res.reason}", file=out)
    if args.blocks == "circles":
        expected = circle_design_params(phi.p, phi.order)
        print(f"planar-pair formula: {_params(expected.as_tuple())}", file=out)
    elif phi.is_even:
        expected = disk_design_params(phi.p, phi.half_order)
        print(f"closed-form disk parameters: {_params(expected.as_tuple())}", file=out)

    if args.export:
        path = Path(args.export)
        try:
            if args.format == "csv":
                export_csv(d, path)
            else:
                export_json(d, path, res.params)
        except OSError as exc:
            print(f"error: cannot write {path}: {exc.strerror}", file=sys.stderr)
            return 1
        print(f"wrote {path}", file=out)
    return 0


def cmd_clay(args, out):
    phi = _phi(args.p, args.g_phi)
    _phi(args.p, args.g_partner)
    a = _residue(phi.p, args.a, "a")
    b = _residue(phi.p, args.b, "b")
    if a == 0:
        raise DomainError("radius must be nonzero")
    _require_circular(phi)
    pair = build_double_planar(phi.field, args.g_phi, args.g_partner)
    clay = clay_interior(pair, a, b)
    disk_int = interior(phi, a, b)
    print(f"circle Phi({a})+{b} = {_fmt(circle(phi, a, b).points)}", file=out)
    print(f"partner <{args.g_partner}> (order {pair.second.phi.order}): double planar", file=out)
    print(f"clay interior ({len(clay)}): {_fmt(clay)}", file=out)
    print(f"clay Phi-orbit reps: {_fmt(orbit_representatives(phi, clay, b))}", file=out)
    print(f"disk interior ({len(disk_int)}): {_fmt(disk_int)}", file=out)
    print(f"disk Phi-orbit reps: {_fmt(orbit_representatives(phi, disk_int, b))}", file=out)
    return 0


def cmd_scan(args, out):
    cache = None if args.no_cache else Path(args.cache) if args.cache else catalog.default_cache_path()
    order = None if args.all_orders else args.order
    try:
        records, computed = catalog.scan(args.p_min, args.p_max, order, cache, not args.no_designs, args.jobs)
    except OSError as exc:
        print(f"error: cannot use cache {cache}: {exc.strerror}", file=sys.stderr)
        return 1
    print("p\tg\tk\tcircular\teven\tdisk_size\tnon_group\tbibd", file=out)
    for rec in records:
        if args.circular_only and not rec.circular:
            continue
        params = rec.bibd_params
        bibd = _params(catalog_params(params)) if params else "-"
        print(
            f"{rec.p}\t{rec.g}\t{rec.k}\t{str(rec.circular).lower()}\t{str(rec.even).lower()}\t"
            f"{rec.disk_size if rec.disk_size is not None else '-'}\t"
            f"{'-' if rec.non_group is None else str(rec.non_group).lower()}\t{bibd}",
            file=out,
        )
    print(f"computed {computed} new record(s)", file=out)
    return 0


def catalog_params(d: dict) -> tuple:
    return (d["v"], d["b"], d["k"], d["r"], d["lambda"])


def cmd_conjecture(args, out):
    print("\t".join(catalog.ConjectureRow.COLUMNS), file=out)
    flagged = 0
    for row in catalog.conjecture_rows(args.p_min, args.p_max, args.odd_only):
        print("\t".join(str(c).lower() if isinstance(c, bool) else str(c) for c in row.cells()), file=out)
        if not row.matches:
            flagged += 1
        if args.stats:
            print(f"# {catalog.odd_disk_stats(row.p, row.g)} translation_invariant={row.translation_invariant}", file=out)
    print(f"# flagged rows (M_size != 2n): {flagged}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circpair", description="Circular Ferrero pairs over Z_p: circles, disks and designs.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("pair", help="inspect the pair (Z_p, <g>)")
    sp.add_argument("p", type=int)
    sp.add_argument("g", type=int)
    sp.set_defaults(func=cmd_pair)

    sp = sub.add_parser("disk", help="disk D(a;b) and interior of Phi(a)+b")
    sp.add_argument("p", type=int)
    sp.add_argument("g", type=int)
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("--method", choices=("auto", "brute", "fast", "both"), default="auto")
    sp.set_defaults(func=cmd_disk)

    sp = sub.add_parser("design", help="verify the circle or disk design")
    sp.add_argument("p", type=int)
    sp.add_argument("g", type=int)
    sp.add_argument("--blocks", choices=("circles", "disks"), default="circles")
    sp.add_argument("--export", metavar="PATH")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=cmd_design)

    sp = sub.add_parser("clay", help="partner-based interior points next to the disk interior")
    sp.add_argument("p", type=int)
    sp.add_argument("g_phi", type=int)
    sp.add_argument("g_partner", type=int)
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.set_defaults(func=cmd_clay)

    sp = sub.add_parser("scan", help="catalog circular pairs over a range of primes")
    sp.add_argument("p_min", type=int)
    sp.add_argument("p_max", type=int)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--order", type=int)
    grp.add_argument("--all-orders", action="store_true")
    sp.add_argument("--cache", metavar="PATH", help=f"JSON-lines cache (default: ${catalog.CACHE_ENV}/{catalog.CACHE_NAME})")
    sp.add_argument("--no-cache", action="store_true")
    sp.add_argument("--no-designs", action="store_true", help="skip disk-design verification")
    sp.add_argument("--circular-only", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("conjecture", help="|M^{1,0}| against 2n for circular pairs")
    sp.add_argument("p_min", type=int)
    sp.add_argument("p_max", type=int)
    sp.add_argument("--odd-only", action="store_true")
    sp.add_argument("--stats", action="store_true", help="log disk size and family overlap per row")
    sp.set_defaults(func=cmd_conjecture)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("scan", "conjecture") and args.p_min > args.p_max:
        parser.error(f"empty range: {args.p_min} > {args.p_max}")
    if args.command == "scan" and args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
