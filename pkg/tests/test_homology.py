import random

import pytest

from pachner.catalog import CATALOG, get
from pachner.errors import HasBoundaryFaces
from pachner.homology import HomologyGroup, homology_h1
from pachner.moves import apply_move, enumerate_moves
from pachner.triangulation import Triangulation

import oracles

# Frozen from the independent Smith-normal-form oracle (max-slot
# representatives, recursive reduction) run over the catalog.
EXPECTED = {
    "fig8": (0, ()),
    "fig8_sister": (0, (5,)),
    "s3_two_tet": (0, ()),
    "s3_one_tet": (0, ()),
    "gieseking": (0, ()),
    "lens_4_1": (0, (4,)),
    "lens_5_2": (0, (5,)),
    "s2xs1": (1, ()),
}


def test_frozen_oracle_values(catalog_tri):
    name, tri = catalog_tri
    h = homology_h1(tri)
    assert (h.rank, h.torsion) == EXPECTED[name]


def test_live_oracle_agreement(catalog_tri):
    name, tri = catalog_tri
    h = homology_h1(tri)
    assert oracles.homology_oracle(tri) == (h.rank, h.torsion)


def test_requires_closed():
    with pytest.raises(HasBoundaryFaces):
        homology_h1(Triangulation([[None] * 4]))


def test_invariant_under_single_moves(catalog_tri):
    name, tri = catalog_tri
    h = homology_h1(tri)
    for move in enumerate_moves(tri, ("23", "32", "14", "41", "02", "20")):
        assert homology_h1(apply_move(tri, move)) == h, (name, move)


def test_invariant_under_random_sequences():
    rng = random.Random(402)
    for name in ("fig8", "s3_two_tet", "lens_5_2"):
        tri = get(name)
        h = homology_h1(tri)
        for _ in range(20):
            cur = tri
            for _ in range(rng.randrange(1, 6)):
                moves = [
                    m
                    for m in enumerate_moves(cur, ("23", "32", "02", "20"))
                    if m.kind in ("32", "20") or cur.n < 5
                ]
                if not moves:
                    break
                cur = apply_move(cur, rng.choice(moves))
            assert homology_h1(cur) == h


def test_group_formatting():
    assert str(HomologyGroup(0, ())) == "0"
    assert str(HomologyGroup(1, ())) == "Z"
    assert str(HomologyGroup(2, (3, 6))) == "Z + Z + Z/3 + Z/6"


def test_smith_oracle_basics():
    assert oracles.smith_oracle([[2, 0], [0, 3]]) == [1, 6]
    assert oracles.smith_oracle([[0, 0], [0, 0]]) == []
    assert oracles.smith_oracle([[6]]) == [6]
