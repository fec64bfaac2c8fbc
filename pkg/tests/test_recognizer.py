"""Recognizer: the three characterizations and their certificates."""

import itertools
import random

import pytest

from oddsphere.complexes import (
    NonFaceFamily,
    SimplicialComplex,
    complex_from_nonfaces,
    minimal_nonfaces,
    permuted,
)
from oddsphere.recognizer import (
    EvenLength,
    MaxOddCycle,
    NotSphere,
    NotSphereReason,
    OutOfScope,
    SimplexBoundary,
    Sphere,
    TooShort,
    TwoPartition,
    alternating_blocks,
    canonical_certificate,
    find_max_odd_cycle,
    recognize,
    validate_certificate,
)

PENTAGON_F = ((1, 4), (2, 5), (1, 3), (2, 4), (3, 5))


def brute_force_max_odd_cycle_exists(f: NonFaceFamily) -> bool:
    """Oracle: try every cyclic ordering of the members directly."""
    members = list(f.members)
    n = len(members)
    if n < 3 or n % 2 == 0:
        return False
    for perm in itertools.permutations(members):
        if any(set(perm[i]) & set(perm[(i + 1) % n]) for i in range(n)):
            continue
        blocks = alternating_blocks(perm)
        union = set().union(*[set(b) for b in blocks])
        if (
            all(blocks)
            and sum(len(b) for b in blocks) == f.m
            and union == set(range(1, f.m + 1))
            and (n > 3 or all(len(b) >= 2 for b in blocks))
        ):
            return True
    return False


def test_alternating_blocks_pentagon():
    assert alternating_blocks(PENTAGON_F) == ((1,), (2,), (3,), (4,), (5,))


def test_alternating_blocks_three_cycle_is_identity():
    o = ((1, 2), (3, 4), (5, 6))
    assert alternating_blocks(o) == o


def test_alternating_blocks_rejects_bad_lengths():
    with pytest.raises(EvenLength):
        alternating_blocks(((1, 2), (3, 4), (5, 6), (1, 7)))
    with pytest.raises(TooShort):
        alternating_blocks(((1, 2),))


def test_find_max_odd_cycle_pentagon():
    cert = find_max_odd_cycle(NonFaceFamily(5, PENTAGON_F))
    assert cert is not None
    assert cert.blocks == ((1,), (2,), (3,), (4,), (5,))
    assert cert.ordering == PENTAGON_F


def test_find_max_odd_cycle_octahedron():
    cert = find_max_odd_cycle(NonFaceFamily(6, ((1, 2), (3, 4), (5, 6))))
    assert cert is not None
    assert cert.blocks == ((1, 2), (3, 4), (5, 6))
    assert cert.ordering == cert.blocks


def test_find_max_odd_cycle_even_family_absent():
    f = NonFaceFamily(6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)))
    assert find_max_odd_cycle(f) is None


def test_find_max_odd_cycle_absent_despite_odd_size():
    f = NonFaceFamily(6, ((1, 2), (3, 4), (5, 6), (1, 3, 5), (2, 4, 6)))
    assert not brute_force_max_odd_cycle_exists(f)
    assert find_max_odd_cycle(f) is None


def test_search_agrees_with_brute_force_on_random_families():
    from tests_shared import random_family  # local helper below

    rng = random.Random(77)
    for _ in range(150):
        m = rng.randint(4, 7)
        f = random_family(rng, m)
        if len(f.members) > 7:
            continue
        assert (find_max_odd_cycle(f) is not None) == brute_force_max_odd_cycle_exists(f)


def test_recognize_five_cycle_graph():
    c = SimplicialComplex(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5)))
    v = recognize(c)
    assert isinstance(v, Sphere) and v.d == 1
    assert isinstance(v.certificate, MaxOddCycle)
    assert v.certificate.blocks == ((1,), (2,), (3,), (4,), (5,))


def test_recognize_octahedron():
    c = complex_from_nonfaces(NonFaceFamily(6, ((1, 2), (3, 4), (5, 6))))
    v = recognize(c)
    assert isinstance(v, Sphere) and v.d == 2
    assert isinstance(v.certificate, MaxOddCycle) and v.certificate.n == 3


def test_recognize_simplex_boundary():
    c = SimplicialComplex(4, tuple(itertools.combinations(range(1, 5), 3)))
    v = recognize(c)
    assert isinstance(v, Sphere) and v.d == 2
    assert isinstance(v.certificate, SimplexBoundary)


def test_recognize_four_cycle_two_partition():
    c = SimplicialComplex(4, ((1, 2), (2, 3), (3, 4), (1, 4)))
    assert minimal_nonfaces(c).members == ((1, 3), (2, 4))
    v = recognize(c)
    assert isinstance(v, Sphere) and v.d == 1
    assert isinstance(v.certificate, TwoPartition)


def test_recognize_triangle_with_isolated_vertices():
    c = SimplicialComplex(5, ((1, 2), (2, 3), (1, 3), (4,), (5,)))
    v = recognize(c)
    assert isinstance(v, NotSphere)
    assert v.reason is NotSphereReason.NON_ODD_FAMILY_SIZE  # brute force: |F| = 8


def test_recognize_six_cycle_out_of_scope():
    c = SimplicialComplex(6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)))
    v = recognize(c)
    assert v == OutOfScope(m=6, d=1)


def test_recognize_full_simplex():
    c = SimplicialComplex(3, ((1, 2, 3),))
    assert recognize(c) == NotSphere(NotSphereReason.FULL_SIMPLEX)


def test_recognize_wrong_shape_single_member():
    c = complex_from_nonfaces(NonFaceFamily(3, ((1, 2),)))
    assert recognize(c) == NotSphere(NotSphereReason.WRONG_FAMILY_SHAPE)


def test_recognize_two_members_not_partition():
    c = complex_from_nonfaces(NonFaceFamily(4, ((1, 2), (2, 3))))
    assert recognize(c) == NotSphere(NotSphereReason.WRONG_FAMILY_SHAPE)


def test_recognize_no_cyclic_ordering():
    # three pairwise-intersecting members: the disjointness graph has no edges
    f = NonFaceFamily(5, ((1, 2), (2, 3), (1, 3)))
    c = complex_from_nonfaces(f)
    v = recognize(c)
    assert v == NotSphere(NotSphereReason.NO_CYCLIC_ORDERING)


def test_recognize_blocks_not_partition():
    # three pairwise disjoint members whose union misses vertex 7
    f = NonFaceFamily(7, ((1, 2), (3, 4), (5, 6)))
    c = complex_from_nonfaces(f)
    assert minimal_nonfaces(c) == f
    assert recognize(c) == NotSphere(NotSphereReason.BLOCKS_NOT_PARTITION)


def test_recognize_odd_family_without_cycle():
    # the disjointness graph has a degree-1 member, so no cyclic ordering exists
    f = NonFaceFamily(6, ((1, 2), (3, 4), (5, 6), (1, 3, 5), (2, 4, 6)))
    c = complex_from_nonfaces(f)
    assert minimal_nonfaces(c) == f
    assert recognize(c) == NotSphere(NotSphereReason.NO_CYCLIC_ORDERING)


# -- certificate properties ---------------------------------------------------

def test_certificate_revalidates():
    for f in (
        NonFaceFamily(5, PENTAGON_F),
        NonFaceFamily(6, ((1, 2), (3, 4), (5, 6))),
        NonFaceFamily(7, ((1, 2), (3, 4), (5, 6, 7))),
    ):
        cert = find_max_odd_cycle(f)
        assert cert is not None
        validate_certificate(cert, f.m)


def test_dihedral_invariance_and_canonical_uniqueness():
    cert = find_max_odd_cycle(NonFaceFamily(5, PENTAGON_F))
    n = cert.n
    seqs = []
    fwd, rev = list(cert.ordering), list(reversed(cert.ordering))
    for seq in (fwd, rev):
        for r in range(n):
            seqs.append(tuple(seq[r:] + seq[:r]))
    for seq in seqs:
        rotated = MaxOddCycle(ordering=seq, blocks=alternating_blocks(seq))
        validate_certificate(rotated, 5)  # validity is dihedral-invariant
        assert canonical_certificate(seq) == cert  # one representative per orbit


def test_eq1_readback_and_telescoping():
    for f in (
        NonFaceFamily(5, PENTAGON_F),
        NonFaceFamily(7, ((1, 2), (3, 4), (5, 6, 7))),
        NonFaceFamily(9, tuple(
            tuple(sorted(((i + 2 * j) % 9) + 1 for j in range(4))) for i in range(9)
        )),
    ):
        cert = find_max_odd_cycle(f)
        assert cert is not None
        n, k = cert.n, cert.k
        a, b = cert.ordering, cert.blocks
        for i in range(n):
            union = set()
            for j in range(k):
                union |= set(b[(i - 2 * j) % n])
            assert tuple(sorted(union)) == a[i]
        for i in range(n):
            for j in range(1, k + 1):
                inter = set(a[i])
                for t in range(1, j):
                    inter &= set(a[(i + 2 * t) % n])
                expected = set()
                for r in range(k - j + 1):
                    expected |= set(b[(i - 2 * r) % n])
                assert inter == expected


def test_recognize_relabeling_invariance():
    rng = random.Random(4242)
    base = [
        SimplicialComplex(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5))),
        complex_from_nonfaces(NonFaceFamily(6, ((1, 2), (3, 4), (5, 6)))),
        SimplicialComplex(5, ((1, 2), (2, 3), (1, 3), (4,), (5,))),
        SimplicialComplex(4, tuple(itertools.combinations(range(1, 5), 3))),
    ]
    for c in base:
        v0 = recognize(c)
        for _ in range(10):
            image = list(range(1, c.m + 1))
            rng.shuffle(image)
            perm = {v: image[v - 1] for v in range(1, c.m + 1)}
            v1 = recognize(permuted(c, perm))
            assert type(v1) is type(v0)
            if isinstance(v0, Sphere):
                assert v1.d == v0.d
                assert type(v1.certificate) is type(v0.certificate)
