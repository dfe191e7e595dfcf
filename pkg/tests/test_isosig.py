import random

import pytest

from pachner.catalog import CATALOG, get
from pachner.errors import DisconnectedTriangulation, FormatError
from pachner.isosig import decode, encode, iso_sig
from pachner.perm4 import PERMS4, Perm4
from pachner.triangulation import Triangulation


def relabel(tri, tet_order, vertex_perms):
    """Apply an explicit relabelling: tetrahedron t goes to position
    tet_order.index(t) with vertex permutation vertex_perms[t]."""
    new_of_old = {t: i for i, t in enumerate(tet_order)}
    table = [[None] * 4 for _ in range(tri.n)]
    for t in range(tri.n):
        rho = vertex_perms[t]
        for f in range(4):
            gl = tri.gluings[t][f]
            if gl is None:
                table[new_of_old[t]][rho[f]] = None
            else:
                t2, p = gl
                table[new_of_old[t]][rho[f]] = (
                    new_of_old[t2],
                    vertex_perms[t2] * p * rho.inverse(),
                )
    return Triangulation(table)


def test_invariance_under_relabelling(catalog_tri):
    name, tri = catalog_tri
    sig = iso_sig(tri)
    rng = random.Random(hash(name) & 0xFFFF)
    for _ in range(10):
        order = list(range(tri.n))
        rng.shuffle(order)
        perms = [PERMS4[rng.randrange(24)] for _ in range(tri.n)]
        assert iso_sig(relabel(tri, order, perms)) == sig


def test_tet_swap_figure_eight(fig8):
    swapped = relabel(fig8, [1, 0], [Perm4.identity()] * 2)
    assert iso_sig(swapped) == iso_sig(fig8)


def test_decode_then_encode_is_identity(catalog_tri):
    name, tri = catalog_tri
    sig = iso_sig(tri)
    again = decode(sig)
    assert iso_sig(again) == sig
    # A canonical signature decodes to a triangulation whose plain encoding
    # is the signature itself.
    assert encode(again) == sig


def test_distinct_fixtures_have_distinct_signatures():
    sigs = {}
    for name in CATALOG:
        sigs[name] = iso_sig(get(name))
    assert len(set(sigs.values())) == len(sigs)


def test_edge_degree_multiset_separates():
    # Any two catalog entries with different edge-degree multisets must get
    # different signatures (the multiset is an isomorphism invariant).
    data = {}
    for name in CATALOG:
        tri = get(name)
        data[name] = (tuple(sorted(e.degree for e in tri.skeleton.edges)), iso_sig(tri))
    names = sorted(data)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            if data[a][0] != data[b][0]:
                assert data[a][1] != data[b][1]


def test_disconnected_rejected():
    tri = Triangulation([[None] * 4, [None] * 4])
    with pytest.raises(DisconnectedTriangulation):
        iso_sig(tri)


def test_decode_rejects_malformed():
    for text in ("", "2|", "1|b,b,b", "1|b,b,b,b,b", "x|b,b,b,b", "1|0/0012,b,b,b"):
        with pytest.raises(FormatError):
            decode(text)


def test_unglued_faces_roundtrip():
    tri = Triangulation([[None] * 4])
    assert decode(iso_sig(tri)).n == 1
    assert iso_sig(decode(iso_sig(tri))) == iso_sig(tri)
