"""JSON documents for complexes, families, points, verdicts, and reports.

Rationals travel as lowest-terms "p/q" strings so round trips are
bit-exact; all vertex arrays are sorted ascending and 1-based.  `dumps`
is byte-stable: same document in, same bytes out.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .catalog import CatalogReport
from .complexes import NonFaceFamily, SimplicialComplex
from .gale import GaleConfiguration
from .oracle import PointConfiguration
from .recognizer import (
    MaxOddCycle,
    NotSphere,
    OutOfScope,
    SimplexBoundary,
    Sphere,
    TwoPartition,
    Verdict,
)


class DocumentError(ValueError):
    """The JSON document is malformed or violates a type invariant."""


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True) + "\n"


def fraction_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def fraction_from_str(s) -> Fraction:
    try:
        if isinstance(s, str):
            return Fraction(s)
        if isinstance(s, int) and not isinstance(s, bool):
            return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad rational {s!r}: {exc}") from exc
    raise DocumentError(f"rationals must be 'p/q' strings, got {s!r}")


def _require(doc, key, kind, what):
    if not isinstance(doc, dict):
        raise DocumentError(f"{what} document must be a JSON object")
    if key not in doc:
        raise DocumentError(f"{what} document is missing {key!r}")
    value = doc[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise DocumentError(f"{what}.{key} must be an integer")
    if kind is list and not isinstance(value, list):
        raise DocumentError(f"{what}.{key} must be an array")
    return value


def _int_lists(value, what) -> tuple[tuple[int, ...], ...]:
    out = []
    for row in value:
        if not isinstance(row, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in row):
            raise DocumentError(f"{what} must be arrays of integers")
        out.append(tuple(row))
    return tuple(out)


def complex_to_doc(c: SimplicialComplex) -> dict:
    return {"m": c.m, "facets": [list(f) for f in c.facets]}


def complex_from_doc(doc) -> SimplicialComplex:
    m = _require(doc, "m", int, "complex")
    facets = _int_lists(_require(doc, "facets", list, "complex"), "complex.facets")
    try:
        return SimplicialComplex(m, facets)
    except ValueError as exc:
        raise DocumentError(f"invalid complex: {exc}") from exc


def family_to_doc(f: NonFaceFamily) -> dict:
    return {"m": f.m, "nonfaces": [list(a) for a in f.members]}


def family_from_doc(doc) -> NonFaceFamily:
    m = _require(doc, "m", int, "non-face")
    members = _int_lists(_require(doc, "nonfaces", list, "non-face"), "nonfaces")
    try:
        return NonFaceFamily(m, members)
    except ValueError as exc:
        raise DocumentError(f"invalid non-face family: {exc}") from exc


def points_to_doc(pc: PointConfiguration) -> dict:
    return {
        "dim": pc.dim,
        "points": [[fraction_to_str(x) for x in p] for p in pc.points],
    }


def points_from_doc(doc) -> PointConfiguration:
    dim = _require(doc, "dim", int, "points")
    rows = _require(doc, "points", list, "points")
    points = []
    for row in rows:
        if not isinstance(row, list) or len(row) != dim:
            raise DocumentError(f"each point must be an array of {dim} rationals")
        points.append(tuple(fraction_from_str(x) for x in row))
    try:
        return PointConfiguration(tuple(points))
    except ValueError as exc:
        raise DocumentError(f"invalid point configuration: {exc}") from exc


def gale_to_doc(g: GaleConfiguration) -> dict:
    return {
        "dim": g.dim,
        "points": [[fraction_to_str(x) for x in v] for v in g.vectors],
    }


def certificate_to_doc(cert) -> dict:
    if isinstance(cert, SimplexBoundary):
        return {"kind": "simplex_boundary", "ordering": [list(cert.member)]}
    if isinstance(cert, TwoPartition):
        return {"kind": "two_partition", "ordering": [list(cert.first), list(cert.second)]}
    if isinstance(cert, MaxOddCycle):
        return {
            "kind": "max_odd_cycle",
            "ordering": [list(a) for a in cert.ordering],
            "blocks": [list(b) for b in cert.blocks],
        }
    raise TypeError(f"unknown certificate {cert!r}")


def verdict_to_doc(v: Verdict) -> dict:
    if isinstance(v, Sphere):
        return {"verdict": "sphere", "d": v.d, "certificate": certificate_to_doc(v.certificate)}
    if isinstance(v, NotSphere):
        return {"verdict": "not_sphere", "reason": v.reason.value}
    if isinstance(v, OutOfScope):
        return {
            "verdict": "out_of_scope",
            "d": v.d,
            "reason": f"complex has m={v.m} vertices and dimension d={v.d}; m - d >= 5",
        }
    raise TypeError(f"unknown verdict {v!r}")


def betti_to_doc(profile: tuple[int, ...]) -> dict:
    return {"reduced_betti": list(profile)}


def catalog_to_doc(report: CatalogReport) -> dict:
    return {
        "m": report.m,
        "classes": [
            {
                "bracelet": list(cls.bracelet),
                "f_vector": list(cls.f_vector),
                "nonfaces": [list(a) for a in cls.family.members],
                "blocks": [list(b) for b in cls.certificate.blocks],
            }
            for cls in report.classes
        ],
    }
