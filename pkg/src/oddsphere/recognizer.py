"""Sphere recognition from minimal non-faces, with checkable certificates.

A complex on m vertices of dimension d is a sphere exactly when its
minimal non-face family has one of three shapes:

* m = d+2: the family is the single set [m] (simplex boundary);
* m = d+3: the family is a partition of [m] into two sets of size >= 2;
* m = d+4: the family is a maximum odd cycle -- an odd number n >= 3 of
  members admitting a cyclic ordering with successive members disjoint
  whose alternating (n-1)/2-fold intersections partition [m].

Vertex counts beyond d+4 are out of scope (no characterization exists).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .complexes import (
    Face,
    NonFaceFamily,
    SimplicialComplex,
    as_face,
    minimal_nonfaces,
)

CyclicOrdering = tuple[Face, ...]


class EvenLength(ValueError):
    """Alternating intersections need an odd cycle length."""


class TooShort(ValueError):
    """Cyclic orderings shorter than 3 have no alternating structure."""


class InternalInconsistency(RuntimeError):
    """A certificate contradicts the complex it was computed from (a bug)."""


class NotSphereReason(enum.Enum):
    NON_ODD_FAMILY_SIZE = "non_odd_family_size"
    NO_CYCLIC_ORDERING = "no_cyclic_ordering"
    BLOCKS_NOT_PARTITION = "blocks_not_partition"
    FULL_SIMPLEX = "full_simplex"
    WRONG_FAMILY_SHAPE = "wrong_family_shape"


@dataclass(frozen=True)
class SimplexBoundary:
    member: Face


@dataclass(frozen=True)
class TwoPartition:
    first: Face
    second: Face


@dataclass(frozen=True)
class MaxOddCycle:
    ordering: CyclicOrdering
    blocks: tuple[Face, ...]

    @property
    def n(self) -> int:
        return len(self.ordering)

    @property
    def k(self) -> int:
        return (len(self.ordering) - 1) // 2


Certificate = SimplexBoundary | TwoPartition | MaxOddCycle


@dataclass(frozen=True)
class Sphere:
    d: int
    certificate: Certificate


@dataclass(frozen=True)
class NotSphere:
    reason: NotSphereReason


@dataclass(frozen=True)
class OutOfScope:
    m: int
    d: int


Verdict = Sphere | NotSphere | OutOfScope


def alternating_blocks(ordering: CyclicOrdering) -> tuple[Face, ...]:
    """B_i = A_i `intersect` A_{i+2} `intersect` ... `intersect` A_{i+n-3}, indices mod n.

    For n = 3 the intersection has a single term, so B_i = A_i.
    """
    n = len(ordering)
    if n < 3:
        raise TooShort(f"cyclic ordering has length {n} < 3")
    if n % 2 == 0:
        raise EvenLength(f"cyclic ordering has even length {n}")
    k = (n - 1) // 2
    blocks = []
    for i in range(n):
        acc = set(ordering[i])
        for j in range(1, k):
            acc &= set(ordering[(i + 2 * j) % n])
        blocks.append(tuple(sorted(acc)))
    return tuple(blocks)


def _dihedral_variants(ordering: CyclicOrdering):
    n = len(ordering)
    fwd = list(ordering)
    rev = list(reversed(ordering))
    for seq in (fwd, rev):
        for r in range(n):
            yield tuple(seq[r:] + seq[:r])


def canonical_certificate(ordering: CyclicOrdering) -> MaxOddCycle:
    """The dihedral representative whose block sequence is lexicographically least.

    Rotating or reversing a valid ordering keeps it valid; this picks one
    representative per orbit, and it reproduces the block labelling used
    in the worked pentagon example (B_i = {i+1}).
    """
    best: tuple | None = None
    for seq in _dihedral_variants(ordering):
        blocks = alternating_blocks(seq)
        key = (blocks, seq)
        if best is None or key < best:
            best = key
    assert best is not None
    return MaxOddCycle(ordering=best[1], blocks=best[0])


def _is_partition(blocks: tuple[Face, ...], m: int) -> bool:
    if any(not b for b in blocks):
        return False
    union: set[int] = set()
    total = 0
    for b in blocks:
        union.update(b)
        total += len(b)
    return total == m and union == set(range(1, m + 1))


def validate_certificate(cert: Certificate, m: int) -> None:
    """Re-check a certificate from scratch; raises InvariantError-style ValueError."""
    full = tuple(range(1, m + 1))
    if isinstance(cert, SimplexBoundary):
        if as_face(cert.member, m) != full:
            raise ValueError(f"simplex-boundary certificate must carry [1,{m}]")
        if m < 2:
            raise ValueError("simplex-boundary certificate needs m >= 2")
        return
    if isinstance(cert, TwoPartition):
        a = as_face(cert.first, m)
        b = as_face(cert.second, m)
        if len(a) < 2 or len(b) < 2:
            raise ValueError("two-partition blocks must have size >= 2")
        if set(a) & set(b) or set(a) | set(b) != set(full):
            raise ValueError("two-partition blocks must partition [m]")
        return
    if isinstance(cert, MaxOddCycle):
        n = len(cert.ordering)
        if n < 3 or n % 2 == 0:
            raise ValueError(f"maximum odd cycle needs odd length >= 3, got {n}")
        members = [as_face(a, m) for a in cert.ordering]
        if len(set(members)) != n:
            raise ValueError("cyclic ordering repeats a member")
        for i in range(n):
            if set(members[i]) & set(members[(i + 1) % n]):
                raise ValueError(
                    f"successive members {members[i]} and {members[(i + 1) % n]} intersect"
                )
        blocks = alternating_blocks(tuple(members))
        if blocks != cert.blocks:
            raise ValueError("stored blocks disagree with the alternating intersections")
        if not _is_partition(blocks, m):
            raise ValueError("alternating blocks do not partition [m]")
        if n == 3 and any(len(b) < 2 for b in blocks):
            raise ValueError("3-cycle blocks must have size >= 2")
        return
    raise TypeError(f"unknown certificate type {type(cert)!r}")


def _search_max_odd_cycle(f: NonFaceFamily) -> tuple[MaxOddCycle | None, bool]:
    """All-cycles backtracking over the disjointness graph of the members.

    Returns (best certificate or None, whether any cyclic ordering exists).
    The best certificate is the canonically smallest valid one.
    """
    members = list(f.members)
    n = len(members)
    m = f.m
    if n < 3 or n % 2 == 0:
        return None, False
    sets = [set(a) for a in members]
    adj = [
        [j for j in range(n) if j != i and not (sets[i] & sets[j])]
        for i in range(n)
    ]
    if any(len(nb) < 2 for nb in adj):
        return None, False

    # n blocks must partition [m], so more members than vertices can never
    # succeed; only probe for the existence of a cycle (diagnostics).
    exhaustive = n <= m

    best: tuple | None = None
    saw_cycle = False
    used = [False] * n
    used[0] = True
    path = [0]

    def extend() -> bool:
        nonlocal best, saw_cycle
        if len(path) == n:
            if 0 not in adj[path[-1]] or path[1] > path[-1]:
                return False
            saw_cycle = True
            if not exhaustive:
                return True
            ordering = tuple(members[i] for i in path)
            blocks = alternating_blocks(ordering)
            if _is_partition(blocks, m) and (n > 3 or all(len(b) >= 2 for b in blocks)):
                cert = canonical_certificate(ordering)
                key = (cert.blocks, cert.ordering)
                if best is None or key < best:
                    best = key
            return False
        for j in adj[path[-1]]:
            if not used[j]:
                used[j] = True
                path.append(j)
                stop = extend()
                path.pop()
                used[j] = False
                if stop:
                    return True
        return False

    extend()
    if best is None:
        return None, saw_cycle
    return MaxOddCycle(ordering=best[1], blocks=best[0]), True


def find_max_odd_cycle(f: NonFaceFamily) -> MaxOddCycle | None:
    """The canonical maximum-odd-cycle certificate for `f`, if one exists."""
    cert, _ = _search_max_odd_cycle(f)
    return cert


def recognize(c: SimplicialComplex) -> Verdict:
    """Decide sphereness of a complex on at most d+4 vertices.

    Verdicts carry a certificate whose shape fixes the dimension:
    simplex boundary (d = m-2), two-set partition (d = m-3), or maximum
    odd cycle (d = m-4).  Complexes with m - d >= 5 are out of scope.
    """
    m, d = c.m, c.dimension
    if m - d >= 5:
        return OutOfScope(m, d)
    if m == d + 1:
        return NotSphere(NotSphereReason.FULL_SIMPLEX)
    fam = minimal_nonfaces(c)
    members = fam.members
    full = tuple(range(1, m + 1))
    if members == (full,):
        if d != m - 2:
            raise InternalInconsistency(f"simplex-boundary family but dim {d} != {m - 2}")
        return Sphere(m - 2, SimplexBoundary(full))
    if len(members) == 2:
        a, b = members
        if not (set(a) & set(b)) and set(a) | set(b) == set(full):
            if d != m - 3:
                raise InternalInconsistency(f"two-partition family but dim {d} != {m - 3}")
            return Sphere(m - 3, TwoPartition(a, b))
        return NotSphere(NotSphereReason.WRONG_FAMILY_SHAPE)
    if len(members) < 3:
        return NotSphere(NotSphereReason.WRONG_FAMILY_SHAPE)
    if len(members) % 2 == 0:
        return NotSphere(NotSphereReason.NON_ODD_FAMILY_SIZE)
    cert, saw_cycle = _search_max_odd_cycle(fam)
    if cert is None:
        if saw_cycle:
            return NotSphere(NotSphereReason.BLOCKS_NOT_PARTITION)
        return NotSphere(NotSphereReason.NO_CYCLIC_ORDERING)
    if d != m - 4:
        raise InternalInconsistency(f"maximum odd cycle found but dim {d} != {m - 4}")
    validate_certificate(cert, m)
    return Sphere(m - 4, cert)


def all_max_odd_cycle_orderings(f: NonFaceFamily) -> list[MaxOddCycle]:
    """Every valid certificate up to dihedral symmetry (no uniqueness is assumed)."""
    members = list(f.members)
    n = len(members)
    if n < 3 or n % 2 == 0 or n > f.m:
        return []
    out: set[MaxOddCycle] = set()
    for perm in itertools.permutations(range(1, n)):
        path = (0,) + perm
        if path[1] > path[-1]:
            continue
        ordering = tuple(members[i] for i in path)
        ok = all(
            not (set(ordering[i]) & set(ordering[(i + 1) % n])) for i in range(n)
        )
        if not ok:
            continue
        blocks = alternating_blocks(ordering)
        if _is_partition(blocks, f.m) and (n > 3 or all(len(b) >= 2 for b in blocks)):
            out.add(canonical_certificate(ordering))
    return sorted(out, key=lambda c: (c.blocks, c.ordering))
