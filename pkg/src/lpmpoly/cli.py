"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 invalid
region or unsupported region for the verb, 4 size cap exceeded.  Output is
deterministic byte-for-byte for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import ehrhart as eh
from . import verify as ver
from .decompose import border_strips, decomposition_tree, region_to_strip
from .errors import DisconnectedRegion, DominanceViolation, EmptyWord, EndpointMismatch, InvalidCharacter
from .matroid import bases
from .paths import Region, parse_path
from .polytope import (
    catalan_edge_formula,
    catalan_facet_count,
    dimension,
    edges,
    facets,
    h_representation,
    kcatalan_facet_count,
    vertices,
)
from .triangulate import hypersimplex_triangulation
from .volume import catalan_area, catalan_number, volume

USAGE_ERROR, INVALID_REGION, SIZE_CAP = 2, 3, 4


def _region_from_args(args) -> Region:
    if args.file and (args.lower or args.upper):
        raise SystemExit(USAGE_ERROR)
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return Region.from_json_dict(data)
    if not (args.lower and args.upper):
        print("error: provide --lower and --upper, or --file", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    return Region(parse_path(args.lower), parse_path(args.upper))


def _emit(payload, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def cmd_bases(args) -> int:
    region = _region_from_args(args)
    _check_cap(region, args)
    words = ["".join(map(str, bv.coords)) for bv in bases(region)]
    _emit(words, args.format, words)
    return 0


def cmd_dim(args) -> int:
    region = _region_from_args(args)
    payload = {"dimension": dimension(region)}
    _emit(payload, args.format, [str(payload["dimension"])])
    return 0


def cmd_edges(args) -> int:
    region = _region_from_args(args)
    _check_cap(region, args)
    verts = ["".join(map(str, v)) for v in vertices(region)]
    pairs = [list(e) for e in edges(region)]
    payload = {"vertices": verts, "edges": pairs, "count": len(pairs)}
    _emit(payload, args.format, [f"{verts[i]} -- {verts[j]}" for i, j in edges(region)])
    return 0


def cmd_hrep(args) -> int:
    region = _region_from_args(args)
    _check_cap(region, args)
    verts = vertices(region)
    rep = h_representation(region)
    records = []
    for cons in rep.equalities + rep.inequalities:
        tight = tuple(k for k, v in enumerate(verts) if cons.tight(v))
        records.append(cons.to_json_dict(tight))
    _emit(records, args.format, [json.dumps(r) for r in records])
    return 0


def cmd_facets(args) -> int:
    region = _region_from_args(args)
    _check_cap(region, args)
    records = [f.constraint.to_json_dict(f.tight) for f in facets(region)]
    _emit(records, args.format, [json.dumps(r) for r in records])
    return 0


def _tree_json(node) -> dict:
    if not node.children:
        strip = region_to_strip(node.region)
        return {"strip": strip.direction_word, "descents": sorted(strip.descents)}
    return {
        "split": {"x": node.split.x, "j": node.split.j},
        "children": [_tree_json(c) for c in node.children],
    }


def cmd_decompose(args) -> int:
    region = _region_from_args(args)
    _check_cap(region, args)
    from .matroid import is_connected

    if not is_connected(region):
        print("error: region is disconnected; decompose each block", file=sys.stderr)
        return INVALID_REGION
    payload = _tree_json(decomposition_tree(region))
    strips = [s.direction_word for s in border_strips(region)]
    _emit(payload, args.format, strips)
    return 0


def cmd_volume(args) -> int:
    region = _region_from_args(args)
    _check_cap(region, args)
    payload = {"volume_normalized": str(volume(region))}
    _emit(payload, args.format, [payload["volume_normalized"]])
    return 0


def cmd_ehrhart(args) -> int:
    region = _region_from_args(args)
    _check_cap(region, args)
    poly = eh.ehrhart_polynomial(region)
    values = {
        str(t): str(eh.count_lattice_points(region, t))
        for t in range(poly.degree + 3)
    }
    payload = {
        "coeffs": [_frac(c) for c in poly.coeffs],
        "volume_normalized": str(poly.normalized_volume),
        "values": values,
    }
    _emit(payload, args.format, [json.dumps(payload)])
    return 0


def cmd_triangulate(args) -> int:
    if args.lower or args.upper or args.file:
        print("error: triangulate takes --k and --n, not a region", file=sys.stderr)
        return USAGE_ERROR
    cells = hypersimplex_triangulation(args.k, args.n)
    records = [c.to_json_dict() for c in cells]
    _emit(records, args.format, [json.dumps(r) for r in records])
    return 0


def cmd_catalan(args) -> int:
    if args.lower or args.upper or args.file:
        print("error: catalan takes --n (and optionally --r), not a region", file=sys.stderr)
        return USAGE_ERROR
    n = args.n
    payload = {
        "n": n,
        "catalan_number": str(catalan_number(n)),
        "edge_count": str(catalan_edge_formula(n)),
        "gap_area_total": _frac(catalan_area(n)),
    }
    if n >= 2:
        payload["facet_count_claim"] = catalan_facet_count(n)
    if args.r:
        payload["kcatalan_facet_count_claim"] = kcatalan_facet_count(args.r, n)
    _emit(payload, args.format, [json.dumps(payload)])
    return 0


def cmd_verify(args) -> int:
    target = args.target
    if target == "all":
        ok, results, errata = ver.run_all(max_size=args.max_size, t_max=args.t_max)
        for res in results:
            print(res.line())
            for failure in res.failures:
                print(f"    {failure}")
        print()
        print("errata report")
        print("-------------")
        for row in errata:
            print(row.line())
        return 0 if ok else 1
    if target == "facets":
        res = ver.check_facets(max_size=min(args.max_size, 8))
    elif target == "volume":
        res = ver.check_volume(max_size=min(args.max_size, 7))
    elif target == "ehrhart-formula":
        for line in ver.reconcile_sweep(max_size=min(args.max_size, 6), t_max=args.t_max):
            print(line)
        return 0
    else:
        print(f"error: unknown verify target {target!r}", file=sys.stderr)
        return USAGE_ERROR
    print(res.line())
    for failure in res.failures:
        print(f"    {failure}")
    return 0 if res.ok else 1


def _check_cap(region: Region, args) -> None:
    cap = getattr(args, "max_size", 10) or 10
    if region.size > cap:
        print(
            f"error: region has {region.size} elements, over the cap {cap} "
            "(raise with --max-size)",
            file=sys.stderr,
        )
        raise SystemExit(SIZE_CAP)


def _add_region_flags(sub) -> None:
    sub.add_argument("--lower", help="lower bounding path word (E/N letters)")
    sub.add_argument("--upper", help="upper bounding path word (E/N letters)")
    sub.add_argument("--file", help="JSON file with {\"lower\": .., \"upper\": ..}")
    sub.add_argument("--max-size", type=int, default=10, dest="max_size")
    sub.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpm", description="lattice path matroid polytopes, exactly"
    )
    subs = parser.add_subparsers(dest="verb", required=True)
    for verb, fn in (
        ("bases", cmd_bases),
        ("dim", cmd_dim),
        ("edges", cmd_edges),
        ("hrep", cmd_hrep),
        ("facets", cmd_facets),
        ("decompose", cmd_decompose),
        ("volume", cmd_volume),
        ("ehrhart", cmd_ehrhart),
    ):
        sub = subs.add_parser(verb)
        _add_region_flags(sub)
        sub.set_defaults(func=fn)
    tri = subs.add_parser("triangulate")
    _add_region_flags(tri)
    tri.add_argument("--k", type=int, required=True)
    tri.add_argument("--n", type=int, required=True)
    tri.set_defaults(func=cmd_triangulate)
    cat = subs.add_parser("catalan")
    _add_region_flags(cat)
    cat.add_argument("--n", type=int, required=True)
    cat.add_argument("--r", type=int)
    cat.set_defaults(func=cmd_catalan)
    ver_sub = subs.add_parser("verify")
    ver_sub.add_argument(
        "target", choices=("all", "facets", "volume", "ehrhart-formula")
    )
    ver_sub.add_argument("--max-size", type=int, default=6, dest="max_size")
    ver_sub.add_argument("--t-max", type=int, default=3, dest="t_max")
    ver_sub.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> None:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except (InvalidCharacter, EmptyWord, EndpointMismatch, DominanceViolation) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        sys.exit(INVALID_REGION)
    except DisconnectedRegion as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(INVALID_REGION)
    sys.exit(code)


if __name__ == "__main__":
    main()
