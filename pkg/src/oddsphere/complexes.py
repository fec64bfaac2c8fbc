"""Simplicial complexes on a vertex set [1, m] and their minimal non-faces.

A complex is stored by its facets (inclusion-maximal faces); a non-face
family is the antichain of inclusion-minimal subsets that are not faces.
The two determine each other, and both conversions live here.

All values are immutable and all operations are pure functions, so
everything in this module is safe to share between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

Face = tuple[int, ...]

MAX_VERTICES = 64  # vertex sets are machine-word bitmasks internally


class InvariantError(ValueError):
    """A value violates one of the structural invariants of its type."""


def as_face(vertices: Iterable[int], m: int | None = None) -> Face:
    """Normalize an iterable of vertex labels into a sorted, duplicate-free face."""
    vs = tuple(sorted(vertices))
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InvariantError(f"vertex labels must be integers >= 1, got {v!r}")
    if len(set(vs)) != len(vs):
        raise InvariantError(f"duplicate vertex in face {vs}")
    if m is not None and vs and vs[-1] > m:
        raise InvariantError(f"face {vs} exceeds vertex count m={m}")
    return vs


def _mask(face: Face) -> int:
    bits = 0
    for v in face:
        bits |= 1 << (v - 1)
    return bits


def _face(mask: int) -> Face:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _check_m(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InvariantError(f"vertex count m must be a positive integer, got {m!r}")
    if m > MAX_VERTICES:
        raise InvariantError(f"vertex count m={m} exceeds the bitmask limit {MAX_VERTICES}")


def _check_antichain(faces: Sequence[Face], what: str) -> None:
    masks = [_mask(f) for f in faces]
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j and a & b == a:
                raise InvariantError(
                    f"{what} must form an antichain: {faces[i]} is contained in {faces[j]}"
                )


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facet antichain; every singleton of [m] is a face."""

    m: int
    facets: tuple[Face, ...]

    def __post_init__(self):
        _check_m(self.m)
        facets = tuple(sorted({as_face(f, self.m) for f in self.facets}))
        object.__setattr__(self, "facets", facets)
        if not facets:
            raise InvariantError("a complex needs at least one facet")
        _check_antichain(facets, "facets")
        covered = 0
        for f in facets:
            covered |= _mask(f)
        if covered != (1 << self.m) - 1:
            raise InvariantError(
                f"facets must cover every vertex of [1, {self.m}] (every singleton is a face)"
            )

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1


@dataclass(frozen=True)
class NonFaceFamily:
    """An antichain of subsets of [m], each of size >= 2 (the minimal non-faces)."""

    m: int
    members: tuple[Face, ...]

    def __post_init__(self):
        _check_m(self.m)
        members = tuple(sorted({as_face(f, self.m) for f in self.members}))
        object.__setattr__(self, "members", members)
        for f in members:
            if len(f) < 2:
                raise InvariantError(f"non-face {f} has size < 2; singletons are always faces")
        _check_antichain(members, "non-face family members")


def is_face(c: SimplicialComplex, a: Iterable[int]) -> bool:
    """True iff `a` is contained in some facet of `c`."""
    am = _mask(as_face(a, c.m))
    return any(am & _mask(f) == am for f in c.facets)


def minimal_nonfaces(c: SimplicialComplex) -> NonFaceFamily:
    """The inclusion-minimal subsets of [m] that are not faces of `c`.

    Candidates are scanned by increasing cardinality from 2 up to d+2
    (larger sets always contain a smaller non-face), skipping supersets
    of members already found.
    """
    m = c.m
    facet_masks = [_mask(f) for f in c.facets]
    found: list[int] = []
    top = min(c.dimension + 2, m)
    for size in range(2, top + 1):
        for combo in itertools.combinations(range(1, m + 1), size):
            am = _mask(combo)
            if any(am & g == g for g in found):
                continue
            if any(am & fm == am for fm in facet_masks):
                continue
            found.append(am)
    return NonFaceFamily(m, tuple(_face(g) for g in found))


def _antichain_minima(masks: Iterable[int]) -> set[int]:
    by_size = sorted(set(masks), key=lambda x: (x.bit_count(), x))
    keep: list[int] = []
    for cand in by_size:
        if not any(cand & k == k for k in keep):
            keep.append(cand)
    return set(keep)


def complex_from_nonfaces(f: NonFaceFamily) -> SimplicialComplex:
    """The complex whose faces are exactly the sets containing no member of `f`.

    Facets are complements of the minimal hitting sets of the family,
    computed member by member with antichain pruning after each step.
    """
    full = (1 << f.m) - 1
    transversals: set[int] = {0}
    for member in f.members:
        am = _mask(member)
        nxt: set[int] = set()
        for t in transversals:
            if t & am:
                nxt.add(t)
            else:
                rest = am
                while rest:
                    bit = rest & -rest
                    nxt.add(t | bit)
                    rest ^= bit
        transversals = _antichain_minima(nxt)
    facets = tuple(sorted(_face(full ^ t) for t in transversals))
    return SimplicialComplex(f.m, facets)


def all_faces(c: SimplicialComplex) -> set[Face]:
    """Every face of `c`, including the empty face."""
    seen: set[int] = set()
    for f in c.facets:
        fm = _mask(f)
        sub = fm
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fm
    return {_face(s) for s in seen}


def faces_by_dimension(c: SimplicialComplex) -> list[list[Face]]:
    """Faces grouped by dimension, index 0 holding the empty face (dim -1)."""
    groups: list[list[Face]] = [[] for _ in range(c.dimension + 2)]
    for f in all_faces(c):
        groups[len(f)].append(f)
    for g in groups:
        g.sort()
    return groups


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    """(f_-1, f_0, ..., f_d): face counts per dimension, with f_-1 = 1."""
    return tuple(len(g) for g in faces_by_dimension(c))


def euler_characteristic(c: SimplicialComplex) -> int:
    fv = f_vector(c)
    return sum((-1) ** i * fi for i, fi in enumerate(fv[1:]))


def permuted(c: SimplicialComplex, perm: dict[int, int]) -> SimplicialComplex:
    """Relabel vertices of a complex by a bijection of [1, m]."""
    return SimplicialComplex(c.m, tuple(as_face(perm[v] for v in f) for f in c.facets))


def permuted_family(f: NonFaceFamily, perm: dict[int, int]) -> NonFaceFamily:
    return NonFaceFamily(f.m, tuple(as_face(perm[v] for v in a) for a in f.members))
