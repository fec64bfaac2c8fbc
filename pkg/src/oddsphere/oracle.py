"""Independent ground truth: exact hulls, homology mod 2, pseudomanifold tests.

Nothing here knows about non-face families or Gale diagrams; it answers
geometric and topological questions from first principles so the other
modules can be checked against it.  Facet enumeration is brute force over
vertex subsets -- at most a few hundred candidate hyperplanes at the sizes
this library targets -- and all hyperplane arithmetic is exact rational.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .complexes import Face, SimplicialComplex, euler_characteristic, faces_by_dimension
from .linalg import Vec, dot, kernel_basis, linear_feasible_nonneg, matrix_rank, vec


class NotFullDimensional(ValueError):
    """The points do not affinely span their ambient space."""


class NonSimplicial(ValueError):
    """Some supporting hyperplane contains more than D of the points."""


class InteriorPoint(ValueError):
    """Some labelled point is not a vertex of the hull."""


@dataclass(frozen=True)
class PointConfiguration:
    """Labelled points x_1, ..., x_n in Q^D; label i is points[i-1]."""

    points: tuple[Vec, ...]

    def __post_init__(self):
        pts = tuple(vec(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("a point configuration needs at least one point")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise ValueError(f"points of mixed dimensions {sorted(dims)}")
        if pts[0] == ():
            raise ValueError("points must live in dimension >= 1")

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def dim(self) -> int:
        return len(self.points[0])


def _homogeneous_rows(pc: PointConfiguration) -> list[list[Fraction]]:
    rows = [[p[r] for p in pc.points] for r in range(pc.dim)]
    rows.append([Fraction(1)] * pc.n)
    return rows


def hull_facets(pc: PointConfiguration) -> tuple[Face, ...]:
    """Facets of the convex hull as sorted label tuples.

    Each D-subset spanning a hyperplane is tested exactly: it is a facet
    iff every other point lies strictly on one side.  A supporting
    hyperplane through more than D points makes the hull non-simplicial,
    which is reported rather than guessed around.
    """
    n, d = pc.n, pc.dim
    if matrix_rank(_homogeneous_rows(pc)) < d + 1:
        raise NotFullDimensional(f"points span less than Q^{d}")
    facets: list[Face] = []
    for combo in itertools.combinations(range(1, n + 1), d):
        rows = [list(pc.points[i - 1]) + [Fraction(1)] for i in combo]
        kern = kernel_basis(rows)
        if len(kern) != 1:
            continue  # affinely dependent subset
        normal = kern[0]  # (a_1..a_D, c): hyperplane <a, x> + c = 0
        pos = neg = False
        coplanar: list[int] = []
        for i in range(1, n + 1):
            if i in combo:
                continue
            s = dot(normal[:d], pc.points[i - 1]) + normal[d]
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            else:
                coplanar.append(i)
        if pos and neg:
            continue
        if coplanar:
            raise NonSimplicial(
                f"supporting hyperplane {tuple(normal)} contains points "
                f"{tuple(sorted(set(combo) | set(coplanar)))}"
            )
        facets.append(tuple(combo))
    return tuple(sorted(facets))


def is_vertex(pc: PointConfiguration, label: int) -> bool:
    """True iff x_label is not a convex combination of the other points."""
    if not 1 <= label <= pc.n:
        raise ValueError(f"label {label} out of range 1..{pc.n}")
    others = [pc.points[i] for i in range(pc.n) if i != label - 1]
    if not others:
        return True
    cols = [list(p) + [Fraction(1)] for p in others]
    matrix = [[cols[j][r] for j in range(len(others))] for r in range(pc.dim + 1)]
    rhs = list(pc.points[label - 1]) + [Fraction(1)]
    return not linear_feasible_nonneg(matrix, rhs)


def boundary_complex(pc: PointConfiguration) -> SimplicialComplex:
    """The boundary complex of a simplicial hull with all points extremal."""
    facets = hull_facets(pc)
    for label in range(1, pc.n + 1):
        if not is_vertex(pc, label):
            raise InteriorPoint(f"point {label} is not a vertex of the hull")
    return SimplicialComplex(pc.n, facets)


def _rank_mod2(mat: np.ndarray) -> int:
    a = mat.copy().astype(np.uint8)
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivots = np.nonzero(a[r:, c])[0]
        if pivots.size == 0:
            continue
        p = r + int(pivots[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        hits = np.nonzero(a[:, c])[0]
        hits = hits[hits != r]
        a[hits] ^= a[r]
        r += 1
    return r


def betti_mod2(c: SimplicialComplex) -> tuple[int, ...]:
    """Reduced Betti numbers over GF(2) for dimensions -1 .. d.

    A d-sphere has profile (0, ..., 0, 1); that is the necessary condition
    this oracle contributes.
    """
    groups = faces_by_dimension(c)  # groups[s] = faces of size s (dim s-1)
    index = [{f: i for i, f in enumerate(g)} for g in groups]
    ranks = [0] * (len(groups) + 1)  # ranks[s] = rank of boundary C_{s-1} -> C_{s-2}
    for s in range(1, len(groups)):
        mat = np.zeros((len(groups[s - 1]), len(groups[s])), dtype=np.uint8)
        for j, face in enumerate(groups[s]):
            for drop in range(s):
                sub = face[:drop] + face[drop + 1 :]
                mat[index[s - 1][sub], j] = 1
        ranks[s] = _rank_mod2(mat)
    betti = []
    for s in range(len(groups)):  # dimension s-1
        cycles = len(groups[s]) - ranks[s]
        betti.append(cycles - ranks[s + 1])
    return tuple(betti)


def sphere_betti_profile(d: int) -> tuple[int, ...]:
    return tuple(0 for _ in range(d + 1)) + (1,)


def is_pseudomanifold(c: SimplicialComplex) -> bool:
    """Pure, every ridge in exactly two facets, facet graph connected."""
    d = c.dimension
    facets = c.facets
    if any(len(f) != d + 1 for f in facets):
        return False
    ridge_count: dict[Face, list[int]] = {}
    for fi, f in enumerate(facets):
        for drop in range(d + 1):
            ridge = f[:drop] + f[drop + 1 :]
            ridge_count.setdefault(ridge, []).append(fi)
    if any(len(fs) != 2 for fs in ridge_count.values()):
        return False
    seen = {0}
    frontier = [0]
    neighbors: dict[int, set[int]] = {i: set() for i in range(len(facets))}
    for fs in ridge_count.values():
        neighbors[fs[0]].add(fs[1])
        neighbors[fs[1]].add(fs[0])
    while frontier:
        cur = frontier.pop()
        for nb in neighbors[cur]:
            if nb not in seen:
                seen.add(nb)
                frontier.append(nb)
    return len(seen) == len(facets)


def _is_single_cycle(edges: list[Face], vertices: set[int]) -> bool:
    if any(len(e) != 2 for e in edges):
        return False
    if len(edges) != len(vertices) or len(vertices) < 3:
        return False
    degree: dict[int, int] = {v: 0 for v in vertices}
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    if any(deg != 2 for deg in degree.values()):
        return False
    start = next(iter(vertices))
    seen = {start}
    frontier = [start]
    while frontier:
        cur = frontier.pop()
        for nb in adj[cur]:
            if nb not in seen:
                seen.add(nb)
                frontier.append(nb)
    return seen == vertices


def vertex_link_edges(c: SimplicialComplex, v: int) -> list[Face]:
    """Edges of the link of v in a 2-dimensional pure complex."""
    return [tuple(u for u in f if u != v) for f in c.facets if v in f]


def ground_truth_sphere(
    c: SimplicialComplex, witnesses: tuple[PointConfiguration, ...] = ()
) -> bool | None:
    """Definitive sphere answer where one is available; None if undetermined.

    Dimensions 0..2 are decided combinatorially.  In higher dimension a
    witness point configuration whose boundary complex equals `c` decides
    positively; failing the pseudomanifold or homology necessary
    conditions decides negatively; anything else stays undetermined.
    """
    d = c.dimension
    if d == 0:
        return c.m == 2 and len(c.facets) == 2
    if d == 1:
        return _is_single_cycle(list(c.facets), set(range(1, c.m + 1)))
    if d == 2:
        if not is_pseudomanifold(c) or euler_characteristic(c) != 2:
            return False
        for v in range(1, c.m + 1):
            edges = vertex_link_edges(c, v)
            if not _is_single_cycle(edges, {u for e in edges for u in e}):
                return False
        return True
    for w in witnesses:
        if boundary_complex(w) == c:
            return True
    if not is_pseudomanifold(c):
        return False
    if betti_mod2(c) != sphere_betti_profile(d):
        return False
    return None
