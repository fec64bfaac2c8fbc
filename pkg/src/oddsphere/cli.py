"""Command-line front end: JSON in, JSON out, one subcommand per workflow.

Exit codes: `check` maps its verdict to 0 (sphere), 1 (not a sphere), or
2 (out of scope); malformed input or an invariant violation is 64 for every
subcommand; other operational failures exit 1.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .catalog import catalog as run_catalog
from .complexes import complex_from_nonfaces, minimal_nonfaces
from .gale import diagram_from_certificate, realize_gale_vectors, reconstruct_points, recover_nonfaces
from .oracle import betti_mod2, boundary_complex, hull_facets, sphere_betti_profile
from .recognizer import MaxOddCycle, NotSphere, Sphere, find_max_odd_cycle, recognize

EX_INPUT = 64


class InputError(Exception):
    pass


def _read_doc(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc


def _write_doc(doc, path: str) -> None:
    text = serialize.dumps(doc)
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _complex_from_any(doc):
    """Accept either a complex document or a non-face document."""
    if isinstance(doc, dict) and "facets" in doc:
        return serialize.complex_from_doc(doc)
    if isinstance(doc, dict) and "nonfaces" in doc:
        return complex_from_nonfaces(serialize.family_from_doc(doc))
    raise serialize.DocumentError("expected a document with 'facets' or 'nonfaces'")


def _print_certificate(cert, stream=sys.stderr) -> None:
    if isinstance(cert, MaxOddCycle):
        cyc = " - ".join("{" + ",".join(map(str, a)) + "}" for a in cert.ordering)
        blocks = " | ".join("{" + ",".join(map(str, b)) + "}" for b in cert.blocks)
        print(f"cyclic ordering: {cyc}", file=stream)
        print(f"blocks: {blocks}", file=stream)
    else:
        print(f"certificate: {cert}", file=stream)


def _cmd_check(args) -> int:
    comp = _complex_from_any(_read_doc(args.input))
    verdict = recognize(comp)
    _write_doc(serialize.verdict_to_doc(verdict), args.output)
    if isinstance(verdict, Sphere):
        if args.verbose:
            _print_certificate(verdict.certificate)
        return 0
    if isinstance(verdict, NotSphere):
        return 1
    return 2


def _cmd_nonfaces(args) -> int:
    comp = serialize.complex_from_doc(_read_doc(args.input))
    _write_doc(serialize.family_to_doc(minimal_nonfaces(comp)), args.output)
    return 0


def _cmd_complex(args) -> int:
    fam = serialize.family_from_doc(_read_doc(args.input))
    _write_doc(serialize.complex_to_doc(complex_from_nonfaces(fam)), args.output)
    return 0


def _cmd_realize(args) -> int:
    fam = serialize.family_from_doc(_read_doc(args.input))
    cert = find_max_odd_cycle(fam)
    if cert is None:
        print("error: the family is not a maximum odd cycle", file=sys.stderr)
        return 1
    if args.verbose:
        _print_certificate(cert)
    g = realize_gale_vectors(diagram_from_certificate(cert))
    points = reconstruct_points(g)
    _write_doc(serialize.points_to_doc(points), args.output)
    if args.verify:
        expected = complex_from_nonfaces(fam)
        realized = boundary_complex(points)
        if realized != expected:
            print("verification: hull boundary differs from the complex", file=sys.stderr)
            return 1
        print("verification: hull boundary matches the complex", file=sys.stderr)
    return 0


def _cmd_hull(args) -> int:
    pc = serialize.points_from_doc(_read_doc(args.input))
    facets = hull_facets(pc)
    _write_doc({"m": pc.n, "facets": [list(f) for f in facets]}, args.output)
    return 0


def _cmd_homology(args) -> int:
    comp = serialize.complex_from_doc(_read_doc(args.input))
    _write_doc(serialize.betti_to_doc(betti_mod2(comp)), args.output)
    return 0


def _cmd_catalog(args) -> int:
    report = run_catalog(args.m)
    _write_doc(serialize.catalog_to_doc(report), args.output)
    return 0


def _cmd_verify(args) -> int:
    comp = _complex_from_any(_read_doc(args.input))
    stages: dict[str, bool | str] = {}
    verdict = recognize(comp)
    stages["recognizer"] = isinstance(verdict, Sphere)
    ok = stages["recognizer"]
    if isinstance(verdict, Sphere) and isinstance(verdict.certificate, MaxOddCycle):
        cert = verdict.certificate
        fam = minimal_nonfaces(comp)
        if args.verbose:
            _print_certificate(cert)
        g = realize_gale_vectors(diagram_from_certificate(cert))
        points = reconstruct_points(g)
        stages["realization"] = True
        stages["hull_matches_complex"] = boundary_complex(points) == comp
        stages["homology_profile"] = betti_mod2(comp) == sphere_betti_profile(verdict.d)
        recovered = recover_nonfaces(g)
        stages["gale_readback"] = recovered is not None and recovered[0] == fam
        ok = all(v is True for v in stages.values())
    elif isinstance(verdict, Sphere):
        # simplex boundary / two-partition spheres have no planar diagram
        stages["realization"] = "skipped"
        stages["hull_matches_complex"] = "skipped"
        stages["homology_profile"] = betti_mod2(comp) == sphere_betti_profile(verdict.d)
        stages["gale_readback"] = "skipped"
        ok = stages["recognizer"] and stages["homology_profile"] is True
    _write_doc({"ok": ok, "stages": stages}, args.output)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddsphere",
        description="Recognize, realize, and catalog simplicial spheres on few vertices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {
        "check": ("decide sphereness of a complex or non-face family", _cmd_check),
        "nonfaces": ("minimal non-faces of a complex", _cmd_nonfaces),
        "complex": ("facets of the complex determined by non-faces", _cmd_complex),
        "realize": ("exact polytope realization of a maximum odd cycle", _cmd_realize),
        "hull": ("facets of the convex hull of rational points", _cmd_hull),
        "homology": ("reduced GF(2) Betti numbers of a complex", _cmd_homology),
        "catalog": ("all spheres on m vertices of dimension m-4", _cmd_catalog),
        "verify": ("full recognizer/realization/oracle cross-check", _cmd_verify),
    }
    for name, (help_text, handler) in commands.items():
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        if name != "catalog":
            p.add_argument("--input", "-i", default="-", help="input JSON path, '-' for stdin")
        p.add_argument("--output", "-o", default="-", help="output JSON path, '-' for stdout")
        p.add_argument("--verbose", action="store_true", help="print certificates to stderr")
        if name == "realize":
            p.add_argument("--verify", action="store_true", help="also compare the hull with the complex")
        if name == "catalog":
            p.add_argument("--m", type=int, required=True, help="vertex count (4..10)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (InputError, serialize.DocumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_INPUT


if __name__ == "__main__":
    sys.exit(main())
