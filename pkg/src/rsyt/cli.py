"""Command-line front end.

One verb per operation family; JSON by default, --format table/csv for
eyeballing, exit code 2 with a machine-readable error object on any
domain validation failure.  Identical invocations (same flags, same
--seed) produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import diagrams, jsonio
from .enumeration import (
    DEFAULT_ENUMERATION_CAP,
    bounds,
    enumerate_realizable,
    enumerate_single_row_extensions,
    extension_count_formula,
    fixed_witness_extensions,
    hyperplane_count,
    region_count_crosscheck,
)
from .errors import BadInput, RsytError
from .networks import (
    enumerate_networks,
    network_count,
    saturation_enumerate,
    staircase_lower_recurrence,
    staircase_recurrence_factor,
    staircase_upper_bound,
    witness_search,
)
from .realizability import (
    decide_realizable,
    find_taboo_certificate,
    survey_taboo_completeness,
    verify_witness,
)
from .slices import (
    Flag,
    face_dimension,
    lattice_path_of_vertex,
    min_max_prefix,
    normal_cone,
    slice_edges,
    slice_vertices,
    vertex_count_formula,
)


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise BadInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise BadInput(f"{path} is not valid JSON: {exc}") from exc


def _cap(default: int) -> int:
    raw = os.environ.get("RSYT_CAP")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise BadInput(f"RSYT_CAP must be an integer, got {raw!r}") from exc


def _flatten(doc, prefix=""):
    if isinstance(doc, dict):
        for key in doc:
            yield from _flatten(doc[key], f"{prefix}{key}.")
    else:
        yield prefix.rstrip("."), doc


def _emit(doc, args) -> None:
    fmt = getattr(args, "format", "json")
    if isinstance(doc, str):
        text = doc
    elif fmt == "table":
        pairs = [(k, v) for k, v in _flatten(doc)]
        width = max((len(k) for k, _ in pairs), default=0)
        text = "\n".join(
            f"{k.ljust(width)}  {json.dumps(v) if isinstance(v, (list, dict)) else v}"
            for k, v in pairs
        )
    elif fmt == "csv":
        pairs = [(k, v) for k, v in _flatten(doc)]
        lines = ["key,value"]
        for k, v in pairs:
            cell = json.dumps(v) if isinstance(v, (list, dict)) else str(v)
            if any(c in cell for c in ",\"\n"):
                cell = '"' + cell.replace('"', '""') + '"'
            lines.append(f"{k},{cell}")
        text = "\n".join(lines)
    else:
        text = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _cmd_check(args) -> dict:
    t = jsonio.tableau_from_json(_load_json(args.tableau))
    result = decide_realizable(t, full_system=args.full_system)
    return jsonio.feasibility_to_json(result)


def _cmd_witness(args) -> dict:
    t = jsonio.tableau_from_json(_load_json(args.tableau))
    w = jsonio.witness_from_json(_load_json(args.witness))
    return {"valid": verify_witness(t, w)}


def _cmd_taboo(args) -> dict:
    if args.survey:
        if args.m is None or args.n is None:
            raise BadInput("--survey needs --m and --n")
        rep = survey_taboo_completeness(
            args.m, args.n, max_size=args.max_size,
            cap=_cap(DEFAULT_ENUMERATION_CAP),
        )
        return {
            "m": rep.m,
            "n": rep.n,
            "max_size": rep.max_size,
            "nonrealizable": rep.nonrealizable_count,
            "certified": rep.certified_count,
            "uncertified": [
                [list(r) for r in t.rows] for t in rep.uncertified
            ],
        }
    t = jsonio.tableau_from_json(_load_json(args.tableau))
    size = args.max_size if args.max_size is not None else 4
    cert = find_taboo_certificate(t, max_size=size)
    return jsonio.taboo_to_json(cert)


def _cmd_enumerate(args) -> dict:
    rep = enumerate_realizable(
        args.m,
        args.n,
        prune=args.prune,
        collect_nonrealizable=args.collect,
        cap=_cap(DEFAULT_ENUMERATION_CAP),
        jobs=args.jobs,
    )
    return jsonio.enumeration_to_json(rep, timing=args.timing)


def _cmd_extensions(args) -> dict:
    if (args.tableau is None) == (args.witness is None):
        raise BadInput("provide exactly one of --tableau or --witness")
    if args.witness:
        w = jsonio.witness_from_json(_load_json(args.witness))
        exts = fixed_witness_extensions(w)
        return {
            "count": len(exts),
            "extensions": [[list(r) for r in t.rows] for t in exts],
        }
    t = jsonio.tableau_from_json(_load_json(args.tableau))
    doc = {"formula_count": extension_count_formula(t)}
    if args.enumerate:
        exts = enumerate_single_row_extensions(
            t, cap=_cap(DEFAULT_ENUMERATION_CAP)
        )
        doc["count"] = len(exts)
        doc["extensions"] = [[list(r) for r in e.rows] for e in exts]
    return doc


def _cmd_bounds(args) -> dict:
    return jsonio.bounds_to_json(bounds(args.m, args.n))


def _cmd_regions(args) -> dict:
    count = region_count_crosscheck(args.m, args.n)
    return {
        "m": args.m,
        "n": args.n,
        "regions": str(count),
        "hyperplanes": hyperplane_count(args.m, args.n),
    }


def _cmd_staircase(args) -> dict:
    if args.staircase_cmd == "networks":
        nets = list(enumerate_networks(args.wires))
        doc = {
            "wires": args.wires,
            "count": str(len(nets)),
            "closed_form": str(network_count(args.wires)),
        }
        if not args.count_only:
            doc["networks"] = [jsonio.network_to_json(n) for n in nets]
        return doc
    if args.staircase_cmd == "check":
        net = jsonio.network_from_json(_load_json(args.network))
        verdict = witness_search(net, args.budget, seed=args.seed)
        return jsonio.verdict_to_json(verdict)
    if args.staircase_cmd == "saturate":
        found = saturation_enumerate(args.wires, args.budget, seed=args.seed)
        nets = sorted(found, key=lambda n: n.swaps)
        return {
            "wires": args.wires,
            "found": str(len(nets)),
            "networks": [jsonio.network_to_json(n) for n in nets],
        }
    if args.staircase_cmd == "bounds":
        return {
            "n": args.n,
            "upper": jsonio.frac_to_str(staircase_upper_bound(args.n)),
            "lower": jsonio.frac_to_str(staircase_lower_recurrence(args.n)),
            "factor": jsonio.frac_to_str(staircase_recurrence_factor(args.n)),
        }
    raise BadInput(f"unknown staircase subcommand: {args.staircase_cmd!r}")


def _parse_flag(raw: str) -> Flag:
    try:
        parts = json.loads(raw)
        return Flag(tuple(tuple(int(e) for e in p) for p in parts))
    except (json.JSONDecodeError, TypeError) as exc:
        raise BadInput(f"--flag must be JSON like [[1],[1,2,3]]: {exc}") from exc


def _cmd_slice(args) -> dict:
    if args.slice_cmd == "vertices":
        vs = slice_vertices(args.m, args.n, args.k)
        assert len(vs) == vertex_count_formula(args.m, args.n, args.k)
        return {
            "count": str(len(vs)),
            "vertices": [list(v.perm) for v in vs],
        }
    if args.slice_cmd == "edges":
        es = slice_edges(args.m, args.n, args.k)
        return {
            "count": str(len(es)),
            "edges": [[list(a.perm), list(b.perm)] for a, b in es],
        }
    if args.slice_cmd == "cone":
        v = jsonio.vertex_from_json(_load_json(args.vertex))
        return jsonio.cone_to_json(normal_cone(v))
    if args.slice_cmd == "dim":
        f = _parse_flag(args.flag)
        lo, hi = min_max_prefix(f, args.m)
        return {
            "dim": face_dimension(f, args.m, args.k),
            "min_prefix": lo,
            "max_prefix": hi,
        }
    raise BadInput(f"unknown slice subcommand: {args.slice_cmd!r}")


def _cmd_viz(args) -> str:
    if args.viz_cmd == "projection":
        w = jsonio.witness_from_json(_load_json(args.witness))
        return diagrams.render_projection_diagram(w)
    if args.viz_cmd == "line":
        w = jsonio.witness_from_json(_load_json(args.witness))
        return diagrams.render_line_diagram(w)
    if args.viz_cmd == "wiring":
        net = jsonio.network_from_json(_load_json(args.network))
        return diagrams.render_wiring_diagram(net)
    if args.viz_cmd == "path":
        v = jsonio.vertex_from_json(_load_json(args.vertex))
        return diagrams.render_lattice_path(lattice_path_of_vertex(v))
    raise BadInput(f"unknown viz subcommand: {args.viz_cmd!r}")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "table", "csv"), default="json")
    p.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="rsyt",
        description="Realizability of rectangular tableaux, sorting networks, "
        "and permutahedron slices, in exact arithmetic.",
    )
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="decide realizability of a tableau")
    p.add_argument("--tableau", required=True, help="tableau JSON file")
    p.add_argument("--full-system", action="store_true",
                   help="use all pairwise comparisons instead of consecutive ones")
    _add_common(p)
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("witness", help="verify a witness against a tableau")
    p.add_argument("--tableau", required=True)
    p.add_argument("--witness", required=True, help="witness JSON file")
    _add_common(p)
    p.set_defaults(run=_cmd_witness)

    p = sub.add_parser("taboo", help="search for a taboo certificate")
    p.add_argument("--tableau")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--survey", action="store_true",
                   help="survey all non-realizable tableaux of a shape")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    _add_common(p)
    p.set_defaults(run=_cmd_taboo)

    p = sub.add_parser("enumerate", help="census of realizable tableaux")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prune", dest="prune", action="store_true", default=True)
    p.add_argument("--no-prune", dest="prune", action="store_false")
    p.add_argument("--collect", action="store_true",
                   help="list the non-realizable tableaux")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true",
                   help="include elapsed seconds (breaks byte determinism)")
    _add_common(p)
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("extensions", help="one-row extensions of a tableau")
    p.add_argument("--tableau")
    p.add_argument("--witness")
    p.add_argument("--enumerate", action="store_true",
                   help="with --tableau: list all realizable extensions")
    _add_common(p)
    p.set_defaults(run=_cmd_extensions)

    p = sub.add_parser("bounds", help="census bounds for a rectangle")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(run=_cmd_bounds)

    p = sub.add_parser("regions", help="hyperplane-arrangement region count")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(run=_cmd_regions)

    p = sub.add_parser("staircase", help="sorting-network operations")
    ssub = p.add_subparsers(dest="staircase_cmd", required=True)
    q = ssub.add_parser("networks", help="enumerate all networks")
    q.add_argument("--wires", type=int, required=True)
    q.add_argument("--count-only", action="store_true")
    _add_common(q)
    q.set_defaults(run=_cmd_staircase)
    q = ssub.add_parser("check", help="randomized witness search")
    q.add_argument("--network", required=True, help="network JSON file")
    q.add_argument("--budget", type=int, default=1000)
    q.add_argument("--seed", type=int, default=0)
    _add_common(q)
    q.set_defaults(run=_cmd_staircase)
    q = ssub.add_parser("saturate", help="harvest networks from random points")
    q.add_argument("--wires", type=int, required=True)
    q.add_argument("--budget", type=int, default=1000)
    q.add_argument("--seed", type=int, default=0)
    _add_common(q)
    q.set_defaults(run=_cmd_staircase)
    q = ssub.add_parser("bounds", help="staircase count bounds")
    q.add_argument("--n", type=int, required=True)
    _add_common(q)
    q.set_defaults(run=_cmd_staircase)

    p = sub.add_parser("slice", help="permutahedron slice operations")
    lsub = p.add_subparsers(dest="slice_cmd", required=True)
    q = lsub.add_parser("vertices")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    _add_common(q)
    q.set_defaults(run=_cmd_slice)
    q = lsub.add_parser("edges")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    _add_common(q)
    q.set_defaults(run=_cmd_slice)
    q = lsub.add_parser("cone")
    q.add_argument("--vertex", required=True, help="vertex JSON file")
    _add_common(q)
    q.set_defaults(run=_cmd_slice)
    q = lsub.add_parser("dim")
    q.add_argument("--flag", required=True,
                   help='flag as JSON, e.g. "[[1],[1,2,3,4]]"')
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    _add_common(q)
    q.set_defaults(run=_cmd_slice)

    p = sub.add_parser("viz", help="SVG renderings")
    vsub = p.add_subparsers(dest="viz_cmd", required=True)
    q = vsub.add_parser("projection")
    q.add_argument("--witness", required=True)
    _add_common(q)
    q.set_defaults(run=_cmd_viz)
    q = vsub.add_parser("line")
    q.add_argument("--witness", required=True)
    _add_common(q)
    q.set_defaults(run=_cmd_viz)
    q = vsub.add_parser("wiring")
    q.add_argument("--network", required=True)
    _add_common(q)
    q.set_defaults(run=_cmd_viz)
    q = vsub.add_parser("path")
    q.add_argument("--vertex", required=True)
    _add_common(q)
    q.set_defaults(run=_cmd_viz)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.run(args)
    except RsytError as exc:
        sys.stdout.write(
            json.dumps({"error": exc.payload()}, sort_keys=True,
                       separators=(",", ":")) + "\n"
        )
        return 2
    _emit(doc, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
