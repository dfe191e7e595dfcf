import pytest

from pachner.catalog import CATALOG, get
from pachner.errors import (
    FaceSelfGluing,
    IndexOutOfRange,
    NonInvolution,
    PermutationNotFixingFace,
)
from pachner.perm4 import Perm4
from pachner.triangulation import Classification, Triangulation

import oracles

ID = Perm4.identity()


def test_single_tetrahedron_is_valid():
    tri = Triangulation([[None] * 4])
    assert tri.n == 1
    assert not tri.is_closed()
    assert tri.boundary_face_count() == 4
    assert tri.classify() is Classification.HAS_BOUNDARY_FACES


def test_from_gluings_figure_eight_fixture(fig8):
    # Rebuild from explicit entries and validate the involution with the
    # independent checking script.
    entries = []
    for t in range(fig8.n):
        for f in range(4):
            gl = fig8.gluings[t][f]
            if gl is not None and (t, f) <= (gl[0], gl[1][f]):
                entries.append((t, f, gl[0], gl[1][f], gl[1]))
    rebuilt = Triangulation.from_gluings(2, entries)
    assert rebuilt == fig8
    assert rebuilt.is_closed()
    # independent involution check
    for t in range(rebuilt.n):
        for f in range(4):
            t2, p = rebuilt.gluings[t][f]
            assert p[f] != f or t2 != t
            back = rebuilt.gluings[t2][p[f]]
            assert back == (t, p.inverse())


def test_face_self_gluing_rejected():
    with pytest.raises(FaceSelfGluing):
        Triangulation.from_gluings(1, [(0, 0, 0, 0, Perm4((0, 1, 2, 3)))])


def test_permutation_must_carry_face_to_face():
    with pytest.raises(PermutationNotFixingFace):
        Triangulation.from_gluings(2, [(0, 0, 1, 1, ID)])


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        Triangulation.from_gluings(1, [(0, 0, 3, 0, ID)])
    with pytest.raises(IndexOutOfRange):
        Triangulation.from_gluings(0, [])


def test_conflicting_duplicate_entries_rejected():
    p = Perm4((1, 0, 2, 3))
    q = Perm4((1, 0, 3, 2))
    with pytest.raises(NonInvolution):
        Triangulation.from_gluings(2, [(0, 2, 1, 2, p), (0, 2, 1, 3, q)])


def test_redundant_consistent_entries_accepted():
    p = Perm4((1, 0, 2, 3))
    tri = Triangulation.from_gluings(2, [(0, 2, 1, 2, p), (1, 2, 0, 2, p.inverse())])
    assert tri.gluings[0][2] == (1, p)


def test_broken_involution_rejected():
    p = Perm4((1, 0, 2, 3))
    table = [[None, None, (1, p), None], [None] * 4]
    with pytest.raises(NonInvolution):
        Triangulation(table)


def test_classifications():
    assert get("fig8").classify() is Classification.IDEAL
    assert get("gieseking").classify() is Classification.IDEAL
    assert get("s3_two_tet").classify() is Classification.CLOSED_ONE_VERTEX
    assert get("s3_one_tet").classify() is Classification.CLOSED_ONE_VERTEX
    assert get("s2xs1").classify() is Classification.CLOSED_ONE_VERTEX


def test_dual_graph_counts(catalog_tri):
    name, tri = catalog_tri
    n, arcs = tri.dual_graph()
    assert n == tri.n
    unglued = tri.boundary_face_count()
    assert len(arcs) == (4 * tri.n - unglued) // 2


def test_dual_graph_figure_eight(fig8):
    n, arcs = fig8.dual_graph()
    assert n == 2
    assert arcs == [(0, 1)] * 4  # two nodes, four parallel arcs


def test_dual_graph_single_tet():
    assert Triangulation([[None] * 4]).dual_graph() == (1, [])


def test_equality_and_hash_are_table_level(fig8):
    same = Triangulation(fig8.gluings)
    assert same == fig8 and hash(same) == hash(fig8)
    swapped = get("fig8_sister")
    assert swapped != fig8
