"""Exact hull, homology, and pseudomanifold ground truth."""

import itertools
import random
from fractions import Fraction

import pytest

from tests_shared import random_fraction, random_points

from oddsphere.complexes import (
    NonFaceFamily,
    SimplicialComplex,
    complex_from_nonfaces,
    euler_characteristic,
)
from oddsphere.oracle import (
    InteriorPoint,
    NonSimplicial,
    NotFullDimensional,
    PointConfiguration,
    betti_mod2,
    boundary_complex,
    ground_truth_sphere,
    hull_facets,
    is_pseudomanifold,
    is_vertex,
)

UNIT_SIMPLEX_3D = PointConfiguration((
    (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
))


def test_hull_facets_unit_simplex():
    assert hull_facets(UNIT_SIMPLEX_3D) == tuple(itertools.combinations(range(1, 5), 3))


def test_hull_facets_planar_triangle_with_interior_point():
    pc = PointConfiguration(((0, 0), (4, 0), (0, 4), (1, 1)))
    assert hull_facets(pc) == ((1, 2), (1, 3), (2, 3))


def test_hull_facets_rejects_flat_configurations():
    with pytest.raises(NotFullDimensional):
        hull_facets(PointConfiguration(((0, 0), (1, 1), (2, 2))))


def test_hull_facets_reports_non_simplicial_support():
    # three collinear points on the supporting line y = 0
    pc = PointConfiguration(((0, 0), (1, 0), (2, 0), (1, 1)))
    with pytest.raises(NonSimplicial):
        hull_facets(pc)


def test_is_vertex_simplex_and_centroid():
    for label in range(1, 5):
        assert is_vertex(UNIT_SIMPLEX_3D, label)
    centroid = tuple(Fraction(1, 4) for _ in range(3))
    pc = PointConfiguration(UNIT_SIMPLEX_3D.points + (centroid,))
    assert not is_vertex(pc, 5)
    for label in range(1, 5):
        assert is_vertex(pc, label)


def test_boundary_complex_unit_simplex():
    c = boundary_complex(UNIT_SIMPLEX_3D)
    assert c == SimplicialComplex(4, tuple(itertools.combinations(range(1, 5), 3)))


def test_boundary_complex_rejects_interior_point():
    centroid = tuple(Fraction(1, 4) for _ in range(3))
    pc = PointConfiguration(UNIT_SIMPLEX_3D.points + (centroid,))
    with pytest.raises(InteriorPoint):
        boundary_complex(pc)


def test_betti_profiles():
    octa = complex_from_nonfaces(NonFaceFamily(6, ((1, 2), (3, 4), (5, 6))))
    assert betti_mod2(octa) == (0, 0, 0, 1)
    pent = SimplicialComplex(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5)))
    assert betti_mod2(pent) == (0, 0, 1)
    two_edges = SimplicialComplex(4, ((1, 2), (3, 4)))
    assert betti_mod2(two_edges)[1] == 1  # reduced b_0: two components


def test_pseudomanifold():
    octa = complex_from_nonfaces(NonFaceFamily(6, ((1, 2), (3, 4), (5, 6))))
    assert is_pseudomanifold(octa)
    pent = SimplicialComplex(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5)))
    assert is_pseudomanifold(pent)
    impure = SimplicialComplex(5, ((1, 2), (2, 3), (1, 3), (4,), (5,)))
    assert not is_pseudomanifold(impure)


def test_ground_truth_small_dimensions():
    pent = SimplicialComplex(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5)))
    assert ground_truth_sphere(pent) is True
    hexa = SimplicialComplex(6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)))
    assert ground_truth_sphere(hexa) is True  # d=1 oracle works beyond d+4
    octa = complex_from_nonfaces(NonFaceFamily(6, ((1, 2), (3, 4), (5, 6))))
    assert ground_truth_sphere(octa) is True
    path = SimplicialComplex(3, ((1, 2), (2, 3)))
    assert ground_truth_sphere(path) is False
    two_points = SimplicialComplex(2, ((1,), (2,)))
    assert ground_truth_sphere(two_points) is True


def test_ground_truth_by_witness():
    big_simplex = tuple(itertools.combinations(range(1, 7), 5))
    c = SimplicialComplex(6, big_simplex)  # boundary of the 5-simplex, d=4
    pts = PointConfiguration((
        (0, 0, 0, 0, 0), (1, 0, 0, 0, 0), (0, 1, 0, 0, 0),
        (0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1),
    ))
    assert ground_truth_sphere(c, witnesses=(pts,)) is True


def test_ground_truth_undetermined_without_witness():
    big_simplex = tuple(itertools.combinations(range(1, 7), 5))
    c = SimplicialComplex(6, big_simplex)
    assert ground_truth_sphere(c) is None  # necessary checks pass, no witness


def test_euler_relation_for_simplicial_hulls():
    rng = random.Random(90125)
    tried = 0
    for _ in range(60):
        dim = rng.choice((2, 3))
        pc = random_points(rng, dim + 3, dim)
        try:
            c = boundary_complex(pc)
        except (NonSimplicial, NotFullDimensional, InteriorPoint):
            continue
        tried += 1
        assert euler_characteristic(c) == 1 + (-1) ** (dim - 1)
    assert tried >= 20


def test_hull_affine_invariance():
    rng = random.Random(90126)
    checked = 0
    for _ in range(40):
        dim = rng.choice((2, 3))
        pc = random_points(rng, dim + 2, dim)
        # random invertible rational affine map
        while True:
            mat = [[random_fraction(rng, 4) for _ in range(dim)] for _ in range(dim)]
            from oddsphere.linalg import matrix_rank

            if matrix_rank(mat) == dim:
                break
        shift = [random_fraction(rng, 4) for _ in range(dim)]
        mapped = PointConfiguration(tuple(
            tuple(sum(mat[r][c] * p[c] for c in range(dim)) + shift[r] for r in range(dim))
            for p in pc.points
        ))
        try:
            facets = hull_facets(pc)
        except (NonSimplicial, NotFullDimensional):
            continue
        checked += 1
        assert hull_facets(mapped) == facets
        for label in range(1, pc.n + 1):
            assert is_vertex(mapped, label) == is_vertex(pc, label)
    assert checked >= 15


def test_oracle_recognizer_agreement_on_random_complexes():
    """Where the oracle decides, it must agree with the recognizer (m - d <= 4)."""
    import random as _random

    from tests_shared import random_family

    from oddsphere.recognizer import Sphere, recognize

    rng = _random.Random(271828)
    decided = 0
    for _ in range(400):
        m = rng.randint(3, 8)
        c = complex_from_nonfaces(random_family(rng, m))
        if c.m - c.dimension > 4:
            continue
        truth = ground_truth_sphere(c)
        if truth is None:
            continue
        decided += 1
        assert truth == isinstance(recognize(c), Sphere), c
    assert decided >= 100


def test_oracle_recognizer_agreement_on_graph_zoo():
    import itertools as _it

    from oddsphere.recognizer import Sphere, recognize

    edges = list(_it.combinations(range(1, 6), 2))
    for picks in _it.product((0, 1), repeat=10):
        chosen = [e for e, p in zip(edges, picks) if p]
        if not chosen:
            continue  # dimension 0: m - d = 5, outside the recognizer's scope
        covered = {v for e in chosen for v in e}
        facets = tuple(chosen) + tuple((v,) for v in range(1, 6) if v not in covered)
        c = SimplicialComplex(5, facets)
        truth = ground_truth_sphere(c)
        assert truth is not None  # dimension <= 2 is always decided
        assert truth == isinstance(recognize(c), Sphere)


def test_oracle_agreement_on_witnessed_catalog_spheres():
    from oddsphere.catalog import catalog
    from oddsphere.gale import diagram_from_certificate, realize_gale_vectors, reconstruct_points
    from oddsphere.recognizer import Sphere, recognize

    for m in (7, 8):
        for cls in catalog(m, verify=False).classes:
            pts = reconstruct_points(
                realize_gale_vectors(diagram_from_certificate(cls.certificate))
            )
            truth = ground_truth_sphere(cls.complex, witnesses=(pts,))
            assert truth is True
            assert isinstance(recognize(cls.complex), Sphere)
