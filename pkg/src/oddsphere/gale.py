"""Exact Gale transforms, planar Gale diagrams, and the polygon realization.

The planar constructions never form unit vectors (those are irrational);
positive-ray direction classes carry the same information exactly, because
the origin-in-relative-interior test is invariant under positive scaling.
Regular polygon vertices are replaced by nearby rational points on the unit
circle via the tangent half-angle parameterization, and every combinatorial
conclusion drawn from them is re-verified with exact arithmetic.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .complexes import Face, NonFaceFamily
from .linalg import (
    Vec,
    cross2,
    dot,
    is_zero_vec,
    kernel_basis,
    matrix_rank,
    solve,
    vec,
    vec_scale,
    vec_sub,
)
from .oracle import PointConfiguration
from .recognizer import MaxOddCycle, canonical_certificate, validate_certificate


# a direction class: the primitive integer vector on a positive ray
DiagramDirection = tuple[int, int]


class NotAffinelySpanning(ValueError):
    """gale_transform needs points that affinely span their space."""


class InvalidConfiguration(ValueError):
    """A vector configuration violates the Gale invariants."""


class ZeroInput(ValueError):
    """A direction or dependence vector must be nonzero."""


class ToleranceExhausted(RuntimeError):
    """Polygon approximation kept perturbing the direction classes (a bug)."""


@dataclass(frozen=True)
class GaleConfiguration:
    """Vectors y_1..y_n of a common dimension e with zero sum, spanning Q^e."""

    vectors: tuple[Vec, ...]

    def __post_init__(self):
        vs = tuple(vec(v) for v in self.vectors)
        object.__setattr__(self, "vectors", vs)
        if not vs:
            raise InvalidConfiguration("a Gale configuration needs at least one vector")
        dims = {len(v) for v in vs}
        if len(dims) != 1:
            raise InvalidConfiguration(f"vectors of mixed dimensions {sorted(dims)}")
        e = dims.pop()
        for coord in range(e):
            if sum(v[coord] for v in vs) != 0:
                raise InvalidConfiguration("vectors must sum to zero exactly")
        if matrix_rank([list(v) for v in vs]) != e:
            raise InvalidConfiguration(f"vectors must linearly span Q^{e}")

    @property
    def n(self) -> int:
        return len(self.vectors)

    @property
    def dim(self) -> int:
        return len(self.vectors[0])


@dataclass(frozen=True)
class CombinatorialDiagram:
    """Assignment of each vertex of [m] to one of 2k+1 polygon slots.

    Slot j, read for j = 0, 1, ..., 2k, carries the blocks in the order
    B_0, B_{-2}, B_{-4}, ...; every slot must be occupied.
    """

    k: int
    slots: tuple[int, ...]  # slots[i-1] = slot of vertex i

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        size = 2 * self.k + 1
        if len(self.slots) < size:
            raise ValueError(f"need at least {size} vertices to fill {size} slots")
        if any(not (0 <= s < size) for s in self.slots):
            raise ValueError(f"slot indices must lie in 0..{size - 1}")
        if len(set(self.slots)) != size:
            raise ValueError("every slot needs at least one vertex")

    @property
    def m(self) -> int:
        return len(self.slots)

    @property
    def size(self) -> int:
        return 2 * self.k + 1


def primitive_direction(v: Sequence) -> DiagramDirection:
    """The primitive integer vector on the positive ray through v (v nonzero)."""
    x, y = Fraction(v[0]), Fraction(v[1])
    if x == 0 and y == 0:
        raise ZeroInput("the zero vector has no direction")
    scale = math.lcm(x.denominator, y.denominator)
    a, b = int(x * scale), int(y * scale)
    g = math.gcd(abs(a), abs(b))
    return a // g, b // g


def _angular_cmp(a: Sequence, b: Sequence) -> int:
    """Counterclockwise comparison of nonzero vectors from the positive x-axis."""
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return ha - hb
    c = cross2(a, b)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def sort_counterclockwise(directions: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    return sorted(directions, key=functools.cmp_to_key(_angular_cmp))


def diagram_from_certificate(cert: MaxOddCycle) -> CombinatorialDiagram:
    """Place vertex i at slot j exactly when i lies in block B_{-2j}."""
    n = len(cert.blocks)
    k = (n - 1) // 2
    m = sum(len(b) for b in cert.blocks)
    slots = [-1] * m
    for j in range(n):
        for v in cert.blocks[(-2 * j) % n]:
            slots[v - 1] = j
    return CombinatorialDiagram(k=k, slots=tuple(slots))


def coface_test(diag: CombinatorialDiagram, a: Iterable[int]) -> bool:
    """True iff the slots missed by `a` never fit inside k+1 consecutive slots.

    Equivalent to: the vertices of `a` span a proper face of the realized
    polytope, i.e. `a` is a face of the complex the diagram encodes.
    """
    inside = set(a)
    comp_slots = {diag.slots[v - 1] for v in range(1, diag.m + 1) if v not in inside}
    n = diag.size
    for start in range(n):
        arc = {(start + t) % n for t in range(diag.k + 1)}
        if comp_slots <= arc:
            return False
    return True


def rational_polygon(k: int, tol: Fraction | None = None) -> list[Vec]:
    """2k+1 rational points on the unit circle near the regular polygon's vertices.

    Point j sits within tol of j/(2k+1) of a full turn from the x-axis,
    via the tangent half-angle map t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)),
    so each point satisfies x^2 + y^2 = 1 exactly.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 2 * k + 1
    if tol is None:
        tol = Fraction(1, 16 * n)
    tol = Fraction(tol)
    if not 0 < tol < Fraction(1, 8 * n):
        raise ValueError(f"tol must lie strictly between 0 and 1/{8 * n} of a turn")
    # |angle error| <= 2 |t error| <= 1/Q, far below tol * 2*pi for this Q
    q = math.ceil(Fraction(4) / tol)
    points: list[Vec] = []
    for j in range(n):
        theta = 2.0 * math.pi * j / n
        if theta > math.pi:
            theta -= 2.0 * math.pi
        t = Fraction(math.tan(theta / 2.0)).limit_denominator(q)
        den = 1 + t * t
        points.append(((1 - t * t) / den, 2 * t / den))
    for p in points:
        assert dot(p, p) == 1
    for i in range(n):
        assert cross2(points[i], points[(i + 1) % n]) > 0, "polygon lost its cyclic order"
    for i, j in itertools.combinations(range(n), 2):
        assert cross2(points[i], points[j]) != 0, "polygon vertices became parallel"
    return points


def _verified_classes(diag: CombinatorialDiagram, vectors: list[Vec]) -> bool:
    """Exact check that the vectors still encode the diagram's combinatorics.

    Requires: no zero vector, one direction class per slot, all classes
    distinct, none antipodal, counterclockwise class order equal to the
    slot order up to rotation, and every k+1 consecutive classes spanning
    less than a half turn.  Together these pin down the same face lattice
    as the symbolic diagram, for every vertex subset at once.
    """
    n, k = diag.size, diag.k
    if any(is_zero_vec(v) for v in vectors):
        return False
    prims = [primitive_direction(v) for v in vectors]
    class_by_slot: list[tuple[int, int] | None] = [None] * n
    for i, p in enumerate(prims):
        j = diag.slots[i]
        if class_by_slot[j] is None:
            class_by_slot[j] = p
        elif class_by_slot[j] != p:
            return False
    classes = [p for p in class_by_slot if p is not None]
    if len(set(classes)) != n:
        return False
    for a, b in itertools.combinations(classes, 2):
        if a == (-b[0], -b[1]):
            return False
    ordered = sort_counterclockwise(classes)
    pos0 = ordered.index(class_by_slot[0])
    if [ordered[(pos0 + t) % n] for t in range(n)] != list(class_by_slot):
        return False
    for j in range(n):
        if cross2(class_by_slot[j], class_by_slot[(j + k) % n]) <= 0:
            return False
    return True


def _realize_once(diag: CombinatorialDiagram, polygon: Sequence[Vec]) -> GaleConfiguration | None:
    n = diag.size
    sizes = [0] * n
    for s in diag.slots:
        sizes[s] += 1
    raw = [vec_scale(Fraction(1, sizes[s]), vec(polygon[s])) for s in diag.slots]
    defect = (sum(v[0] for v in raw), sum(v[1] for v in raw))
    correction = (defect[0] / diag.m, defect[1] / diag.m)
    vectors = [vec_sub(v, correction) for v in raw]
    if not _verified_classes(diag, vectors):
        return None
    return GaleConfiguration(tuple(vectors))


def realize_gale_vectors(
    diag: CombinatorialDiagram,
    polygon: Sequence[Vec] | None = None,
    tol: Fraction | None = None,
    max_halvings: int = 8,
) -> GaleConfiguration:
    """Planar Gale vectors for a diagram: v_slot / |block|, recentered to sum 0.

    The mean correction spreads the polygon's rounding defect equally over
    all m vectors, restoring the zero sum exactly.  If it disturbed the
    direction classes, the polygon is regenerated with halved tolerance;
    exhausting the retries indicates a bug, not bad input.
    """
    if polygon is not None:
        if len(polygon) != diag.size:
            raise ValueError(f"polygon must have {diag.size} vertices")
        g = _realize_once(diag, polygon)
        if g is None:
            raise ToleranceExhausted("supplied polygon perturbs the direction classes")
        return g
    t = Fraction(tol) if tol is not None else Fraction(1, 16 * diag.size)
    for _ in range(max_halvings + 1):
        g = _realize_once(diag, rational_polygon(diag.k, t))
        if g is not None:
            return g
        t = t / 2
    raise ToleranceExhausted(f"direction classes kept drifting after {max_halvings} halvings")


def gale_transform(points: PointConfiguration) -> GaleConfiguration:
    """Rows of a kernel basis of the homogenized coordinate matrix."""
    n, d = points.n, points.dim
    rows = [[p[r] for p in points.points] for r in range(d)]
    rows.append([Fraction(1)] * n)
    kern = kernel_basis(rows)
    if n - len(kern) < d + 1:
        raise NotAffinelySpanning(f"points do not affinely span Q^{d}")
    vectors = tuple(tuple(b[i] for b in kern) for i in range(n))
    return GaleConfiguration(vectors)


def reconstruct_points(g: GaleConfiguration) -> PointConfiguration:
    """Affinely spanning points in Q^{n-e-1} whose Gale transform spans like g.

    The orthogonal complement of the configuration's column space contains
    the all-ones vector (zero sum); its basis is renormalized so that the
    all-ones vector is the last element, and the remaining vectors are read
    off columnwise as point coordinates.
    """
    n, e = g.n, g.dim
    d = n - e - 1
    if d < 1:
        raise InvalidConfiguration(f"reconstruction needs n - e - 1 >= 1, got {d}")
    if e == 0:
        kern = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    else:
        rows = [[v[coord] for v in g.vectors] for coord in range(e)]
        kern = kernel_basis(rows)
    ones = [Fraction(1)] * n
    coeffs = solve([[k[i] for k in kern] for i in range(n)], ones)
    if coeffs is None:
        raise InvalidConfiguration("all-ones vector missing from the complement")
    drop = max(i for i, c in enumerate(coeffs) if c != 0)
    basis = [kern[i] for i in range(len(kern)) if i != drop]
    points = tuple(tuple(b[i] for b in basis) for i in range(n))
    return PointConfiguration(points)


def dependence_from_direction(g: GaleConfiguration, alpha: Sequence) -> Vec:
    """lambda_i = <alpha, y_i>: an affine dependence of the reconstructed points."""
    a = vec(alpha)
    if len(a) != g.dim:
        raise ValueError(f"alpha must have dimension {g.dim}")
    if is_zero_vec(a):
        raise ZeroInput("alpha must be nonzero")
    lam = tuple(dot(a, y) for y in g.vectors)
    assert not is_zero_vec(lam)  # the y_i span, so some inner product is nonzero
    return lam


def direction_from_dependence(g: GaleConfiguration, lam: Sequence) -> Vec:
    """The unique alpha with <alpha, y_i> = lambda_i for all i."""
    weights = vec(lam)
    if len(weights) != g.n:
        raise ValueError(f"lambda must have one weight per vector ({g.n})")
    if is_zero_vec(weights):
        raise ZeroInput("lambda must be nonzero")
    alpha = solve([list(y) for y in g.vectors], weights)
    if alpha is None:
        raise InvalidConfiguration("lambda is not a dependence for this configuration")
    return alpha


def relint_origin_test(vectors: Iterable[Sequence]) -> bool:
    """Exact test: does the origin lie in relint(conv(vectors)) in the plane?

    True iff the vectors admit a strictly positive combination summing to
    zero: the nonzero ones positively span the plane, or they all lie on a
    line with both rays present, or everything is the zero vector.
    """
    vs = [vec(v) for v in vectors]
    if not vs:
        return False
    for v in vs:
        if len(v) != 2:
            raise ValueError("relint_origin_test expects planar vectors")
    nonzero = [v for v in vs if not is_zero_vec(v)]
    if not nonzero:
        return True
    classes = sorted({primitive_direction(v) for v in nonzero})
    if len(classes) == 1:
        return False
    if len(classes) == 2:
        a, b = classes
        return a == (-b[0], -b[1])
    ordered = sort_counterclockwise(classes)
    s = len(ordered)
    return all(cross2(ordered[i], ordered[(i + 1) % s]) > 0 for i in range(s))


def recover_nonfaces(g: GaleConfiguration) -> tuple[NonFaceFamily, MaxOddCycle] | None:
    """Read a maximum odd cycle back off a planar configuration, if it is one.

    Returns None unless the direction classes are standard: all nonzero,
    an odd number >= 3 of classes, none antipodal, every k+1 consecutive
    classes inside an open half-plane, and (for k = 1) every class carrying
    at least two vectors.  Classes in counterclockwise order are the blocks
    B_0, B_{-2}, ..., B_{-4k}; members are rebuilt as unions of k
    consecutive blocks.
    """
    if g.dim != 2:
        raise InvalidConfiguration("recover_nonfaces expects a planar configuration")
    if any(is_zero_vec(v) for v in g.vectors):
        return None
    members_of: dict[tuple[int, int], list[int]] = {}
    for i, v in enumerate(g.vectors, start=1):
        members_of.setdefault(primitive_direction(v), []).append(i)
    s = len(members_of)
    if s < 3 or s % 2 == 0:
        return None
    for a, b in itertools.combinations(members_of, 2):
        if a == (-b[0], -b[1]):
            return None
    k = (s - 1) // 2
    ordered = sort_counterclockwise(members_of)
    if any(cross2(ordered[j], ordered[(j + k) % s]) <= 0 for j in range(s)):
        return None
    if k == 1 and any(len(members_of[p]) < 2 for p in ordered):
        return None
    blocks: list[Face] = [()] * s
    for j in range(s):
        blocks[(-2 * j) % s] = tuple(sorted(members_of[ordered[j]]))
    ordering = tuple(
        tuple(sorted(v for j in range(k) for v in blocks[(i - 2 * j) % s]))
        for i in range(s)
    )
    cert = canonical_certificate(ordering)
    validate_certificate(cert, g.n)
    family = NonFaceFamily(g.n, ordering)
    return family, cert
