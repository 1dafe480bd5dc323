"""JSON codecs for every value the tools exchange.

Rationals travel as "p/q" strings (integers shorten to "p"), counts as
decimal strings so arbitrary precision survives any JSON parser.  Readers
re-validate through the library constructors, so a parsed document is as
trustworthy as a computed one.
"""

from __future__ import annotations

from fractions import Fraction

from .enumeration import BoundsReport, EnumerationReport
from .errors import BadInput
from .networks import PointConfiguration, RealizabilityVerdict, SortingNetwork
from .realizability import (
    FarkasCertificate,
    FeasibilityResult,
    OuterSumWitness,
    TabooCertificate,
)
from .slices import LabeledLatticePath, NormalConeDescription, SliceVertex
from .tableaux import Shape, Tableau, validate_tableau


def frac_to_str(v) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def frac_from_str(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise BadInput(f"not a rational: {s!r}") from exc


def shape_to_json(s: Shape) -> dict:
    if s.kind == "rect":
        return {"kind": "rect", "m": s.m, "n": s.n}
    return {"kind": "staircase", "n": s.n}


def shape_from_json(doc: dict) -> Shape:
    kind = doc.get("kind")
    if kind == "rect":
        return Shape.rect(int(doc["m"]), int(doc["n"]))
    if kind == "staircase":
        return Shape.staircase(int(doc["n"]))
    raise BadInput(f"unknown shape kind: {kind!r}")


def tableau_to_json(t: Tableau) -> dict:
    return {
        "shape": shape_to_json(t.shape),
        "rows": [list(r) for r in t.rows],
    }


def tableau_from_json(doc: dict) -> Tableau:
    try:
        shape = shape_from_json(doc["shape"])
        rows = tuple(tuple(int(v) for v in row) for row in doc["rows"])
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInput(f"malformed tableau document: {exc}") from exc
    return validate_tableau(shape, rows)


def witness_to_json(w: OuterSumWitness) -> dict:
    return {
        "x": [frac_to_str(v) for v in w.x],
        "y": [frac_to_str(v) for v in w.y],
    }


def witness_from_json(doc: dict) -> OuterSumWitness:
    try:
        x = tuple(frac_from_str(v) for v in doc["x"])
        y = tuple(frac_from_str(v) for v in doc["y"])
    except (KeyError, TypeError) as exc:
        raise BadInput(f"malformed witness document: {exc}") from exc
    return OuterSumWitness(x, y)


def farkas_to_json(c: FarkasCertificate) -> dict:
    return {"multipliers": [frac_to_str(v) for v in c.multipliers]}


def farkas_from_json(doc: dict) -> FarkasCertificate:
    return FarkasCertificate(
        tuple(frac_from_str(v) for v in doc["multipliers"])
    )


def feasibility_to_json(r: FeasibilityResult) -> dict:
    if r.realizable:
        return {
            "outcome": "realizable",
            "witness": witness_to_json(r.witness),
            "margin": frac_to_str(r.margin),
        }
    return {
        "outcome": "not_realizable",
        "farkas": farkas_to_json(r.certificate),
    }


def taboo_to_json(c: TabooCertificate | None) -> dict:
    if c is None:
        return {"certificate": None}
    return {
        "certificate": {
            "a": [list(cell) for cell in c.a_cells],
            "b": [list(cell) for cell in c.b_cells],
        }
    }


def taboo_from_json(doc: dict) -> TabooCertificate | None:
    cert = doc.get("certificate")
    if cert is None:
        return None
    return TabooCertificate(
        tuple((int(i), int(j)) for i, j in cert["a"]),
        tuple((int(i), int(j)) for i, j in cert["b"]),
    )


def enumeration_to_json(r: EnumerationReport, timing: bool = False) -> dict:
    doc = {
        "m": r.m,
        "n": r.n,
        "realizable": str(r.realizable_count),
        "total": str(r.total_count),
        "pruned": r.pruned,
    }
    if r.nonrealizable is not None:
        doc["nonrealizable"] = [
            [list(row) for row in t.rows] for t in r.nonrealizable
        ]
    if timing:
        doc["elapsed_seconds"] = round(r.elapsed, 3)
    return doc


def bounds_to_json(b: BoundsReport) -> dict:
    return {
        "m": b.m,
        "n": b.n,
        "upper": frac_to_str(b.upper),
        "lower": str(b.lower),
        "syt_total": str(b.syt_total),
        "ratio_upper": frac_to_str(b.ratio_upper),
    }


def network_to_json(net: SortingNetwork) -> dict:
    return {"wires": net.wires, "swaps": list(net.swaps)}


def network_from_json(doc: dict) -> SortingNetwork:
    try:
        return SortingNetwork(
            int(doc["wires"]), tuple(int(p) for p in doc["swaps"])
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInput(f"malformed network document: {exc}") from exc


def config_to_json(p: PointConfiguration) -> dict:
    return {
        "points": [[frac_to_str(x), frac_to_str(y)] for x, y in p.points]
    }


def config_from_json(doc: dict) -> PointConfiguration:
    try:
        pts = tuple(
            (frac_from_str(x), frac_from_str(y)) for x, y in doc["points"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInput(f"malformed configuration document: {exc}") from exc
    return PointConfiguration(pts)


def verdict_to_json(v: RealizabilityVerdict) -> dict:
    if v.config is not None:
        return {
            "outcome": "witness",
            "config": config_to_json(v.config),
            "budget_spent": v.budget_spent,
        }
    return {"outcome": "unknown", "budget_spent": v.budget_spent}


def vertex_to_json(v: SliceVertex) -> dict:
    return {"perm": list(v.perm), "m": v.m, "n": v.n, "k": v.k}


def vertex_from_json(doc: dict) -> SliceVertex:
    try:
        return SliceVertex(
            tuple(int(p) for p in doc["perm"]),
            int(doc["m"]),
            int(doc["n"]),
            int(doc["k"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInput(f"malformed vertex document: {exc}") from exc


def path_to_json(p: LabeledLatticePath) -> dict:
    return {
        "steps": [[d, label] for d, label in p.steps],
        "m": p.m,
        "n": p.n,
        "area": p.area,
    }


def cone_to_json(c: NormalConeDescription) -> dict:
    return {
        "delta_plain": [list(r) for r in c.delta_plain],
        "delta_m": [list(r) for r in c.delta_m],
    }
