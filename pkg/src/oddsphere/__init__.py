"""oddsphere: simplicial spheres on few vertices, exactly.

Recognizes, certifies, constructs, and catalogs simplicial d-spheres on at
most d+4 vertices from the intersection pattern of their minimal non-faces,
and independently verifies every positive answer by exact-rational polytope
realization through Gale duality.
"""

from .catalog import (
    Bracelet,
    CatalogReport,
    SphereClass,
    are_isomorphic,
    canonical_bracelet,
    catalog,
    enumerate_bracelets,
    instantiate,
)
from .complexes import (
    Face,
    InvariantError,
    NonFaceFamily,
    SimplicialComplex,
    complex_from_nonfaces,
    euler_characteristic,
    f_vector,
    is_face,
    minimal_nonfaces,
)
from .gale import (
    CombinatorialDiagram,
    DiagramDirection,
    GaleConfiguration,
    NotAffinelySpanning,
    ToleranceExhausted,
    coface_test,
    dependence_from_direction,
    diagram_from_certificate,
    direction_from_dependence,
    gale_transform,
    rational_polygon,
    realize_gale_vectors,
    reconstruct_points,
    recover_nonfaces,
    relint_origin_test,
)
from .oracle import (
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
    sphere_betti_profile,
)
from .recognizer import (
    Certificate,
    MaxOddCycle,
    NotSphere,
    NotSphereReason,
    OutOfScope,
    SimplexBoundary,
    Sphere,
    TwoPartition,
    Verdict,
    alternating_blocks,
    find_max_odd_cycle,
    recognize,
    validate_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "Bracelet",
    "CatalogReport",
    "Certificate",
    "CombinatorialDiagram",
    "DiagramDirection",
    "Face",
    "GaleConfiguration",
    "InteriorPoint",
    "InvariantError",
    "MaxOddCycle",
    "NonFaceFamily",
    "NonSimplicial",
    "NotAffinelySpanning",
    "NotFullDimensional",
    "NotSphere",
    "NotSphereReason",
    "OutOfScope",
    "PointConfiguration",
    "SimplexBoundary",
    "SimplicialComplex",
    "Sphere",
    "SphereClass",
    "ToleranceExhausted",
    "TwoPartition",
    "Verdict",
    "alternating_blocks",
    "are_isomorphic",
    "betti_mod2",
    "boundary_complex",
    "canonical_bracelet",
    "catalog",
    "coface_test",
    "complex_from_nonfaces",
    "dependence_from_direction",
    "diagram_from_certificate",
    "direction_from_dependence",
    "enumerate_bracelets",
    "euler_characteristic",
    "f_vector",
    "find_max_odd_cycle",
    "gale_transform",
    "ground_truth_sphere",
    "hull_facets",
    "instantiate",
    "is_face",
    "is_pseudomanifold",
    "is_vertex",
    "minimal_nonfaces",
    "rational_polygon",
    "realize_gale_vectors",
    "recognize",
    "reconstruct_points",
    "recover_nonfaces",
    "relint_origin_test",
    "sphere_betti_profile",
    "validate_certificate",
]
