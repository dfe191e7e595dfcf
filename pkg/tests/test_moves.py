import random

import pytest

from pachner.catalog import CATALOG, get
from pachner.errors import MoveNotApplicable, ParameterOutOfRange
from pachner.homology import homology_h1
from pachner.isosig import iso_sig
from pachner.moves import (
    Move,
    apply_move,
    apply_move_ex,
    can_apply,
    enumerate_moves,
    move_02,
    move_14,
    move_20,
    move_23,
    move_32,
    move_41,
)
from pachner.triangulation import Classification, EDGE_INDEX as OPP_EDGE


def fixture_set():
    """Catalog plus one 2-3 growth of each 2-tet entry (n up to 3)."""
    out = [(name, get(name)) for name in sorted(CATALOG)]
    for name in ("fig8", "s3_two_tet"):
        tri = get(name)
        grown = apply_move(tri, enumerate_moves(tri, ("23",))[0])
        out.append((name + "+23", grown))
    return out


FIXTURES = fixture_set()


def edge_degrees(tri):
    return sorted(e.degree for e in tri.skeleton.edges)


# -- 2-3 / 3-2 ---------------------------------------------------------------


def test_23_32_inverse_pairs():
    for name, tri in FIXTURES:
        sig = iso_sig(tri)
        for move in enumerate_moves(tri, ("23",)):
            grown = apply_move(tri, move)
            assert grown.n == tri.n + 1
            # The move creates the central degree-3 edge: edge (2,3) of the
            # first new tetrahedron.
            base = grown.n - 3
            central, _ = grown.skeleton.edge_lookup[(base, 5)]
            assert grown.skeleton.edges[central].degree == 3
            back = move_32(grown, central)
            assert iso_sig(back) == sig


def test_32_23_inverse_pairs():
    for name, tri in FIXTURES:
        sig = iso_sig(tri)
        for move in enumerate_moves(tri, ("32",)):
            shrunk, info = apply_move_ex(tri, move)
            assert shrunk.n == tri.n - 1
            # The two replacement tetrahedra share their face 3.
            base = shrunk.n - 2
            back = move_23(shrunk, base, 3)
            assert iso_sig(back) == sig


def test_23_ledger_on_figure_eight(fig8):
    # Degree ledger: each edge of the shared face loses one, each of the
    # six apex edges (face vertex to either apex) gains one, and the new
    # central edge appears with degree 3.  Old classes never split, so the
    # expected multiset is computable from the fixture's skeleton.
    sk = fig8.skeleton
    t, f = 0, 0
    dest, p = fig8.gluings[t][f]
    face_vertices = [x for x in range(4) if x != f]
    deltas = {}
    for i, a in enumerate(face_vertices):
        for b in face_vertices[i + 1 :]:
            cls, _ = sk.edge_lookup[(t, OPP_EDGE[a][b])]
            deltas[cls] = deltas.get(cls, 0) - 1
    for a in face_vertices:
        for tet, pole, other in ((t, f, a), (dest, p[f], p[a])):
            cls, _ = sk.edge_lookup[(tet, OPP_EDGE[pole][other])]
            deltas[cls] = deltas.get(cls, 0) + 1
    expected = sorted(
        [3] + [ec.degree + deltas.get(ec.index, 0) for ec in sk.edges]
    )
    grown = move_23(fig8, t, f)
    assert edge_degrees(fig8) == [6, 6]
    assert edge_degrees(grown) == expected == [3, 6, 9]
    assert grown.classify() is fig8.classify()
    assert homology_h1(grown) == homology_h1(fig8)


def test_23_requires_distinct_tetrahedra():
    tri = get("s3_two_tet")  # has self-gluings on tetrahedron 0
    ok, reason = can_apply(tri, Move("23", (0, 0)))
    assert not ok and "same tetrahedron" in reason
    with pytest.raises(MoveNotApplicable):
        move_23(tri, 0, 0)


def test_32_requires_degree_3_distinct():
    fig8 = get("fig8")
    for e in range(len(fig8.skeleton.edges)):
        ok, reason = can_apply(fig8, Move("32", (e,)))
        assert not ok and "degree" in reason
    # lens_5_2 has degree-3 edges but only one tetrahedron.
    lens = get("lens_5_2")
    for e, ec in enumerate(lens.skeleton.edges):
        assert ec.degree == 3
        ok, reason = can_apply(lens, Move("32", (e,)))
        assert not ok and "not distinct" in reason


# -- 1-4 / 4-1 ---------------------------------------------------------------


def test_14_41_inverse_pairs():
    for name, tri in FIXTURES:
        sig = iso_sig(tri)
        nv = len(tri.skeleton.vertices)
        for t in range(tri.n):
            grown, info = apply_move_ex(tri, Move("14", (t,)))
            assert grown.n == tri.n + 3
            sk = grown.skeleton
            assert len(sk.vertices) == nv + 1
            # The cone vertex sits at corner (first new tet, vertex 0).
            base = grown.n - 4
            vid = sk.vertex_lookup[(base, 0)]
            assert sk.vertices[vid].degree == 4
            back = move_41(grown, vid)
            assert iso_sig(back) == sig


def test_14_on_closed_one_vertex_gives_other_closed():
    tri = get("s3_two_tet")
    grown = move_14(tri, 0)
    assert grown.n == 5
    assert len(grown.skeleton.vertices) == 2
    assert grown.classify() is Classification.OTHER_CLOSED


def test_41_rejects_wrong_vertices(fig8):
    ok, reason = can_apply(fig8, Move("41", (0,)))
    assert not ok  # degree-8 ideal vertex
    with pytest.raises(MoveNotApplicable):
        move_41(fig8, 0)


# -- 0-2 / 2-0 ---------------------------------------------------------------


def test_02_20_inverse_pairs_all_placements():
    for name, tri in FIXTURES:
        if tri.n > 3:
            continue
        sig = iso_sig(tri)
        for move in enumerate_moves(tri, ("02",)):
            grown, info = apply_move_ex(tri, move)
            assert grown.n == tri.n + 2
            u, v = info.new_tets
            pid, _ = grown.skeleton.edge_lookup[(u, 5)]
            assert grown.skeleton.edges[pid].degree == 2
            back = move_20(grown, pid)
            assert iso_sig(back) == sig, (name, move)


def test_02_ledger(fig8):
    sk = fig8.skeleton
    links = sorted((v.link_euler, v.link_orientable) for v in sk.vertices)
    for move in enumerate_moves(fig8, ("02",)):
        e, a, b = move.params
        grown = move_02(fig8, e, (a, b))
        sk2 = grown.skeleton
        # exactly one class lives entirely inside the pillow: degree 2
        inside = [x for x in sk2.edges if all(w.tet >= fig8.n for w in x.wedges)]
        assert len(inside) == 1 and inside[0].degree == 2
        # the chosen edge's slots split over at most two classes and gain
        # the two new 01-slots of the pillow
        old_slots = {(w.tet, w.edge_index) for w in sk.edges[e].wedges}
        parts = {sk2.edge_lookup[s][0] for s in old_slots}
        assert len(parts) <= 2
        covered = [
            (w.tet, w.edge_index) for p in parts for w in sk2.edges[p].wedges
        ]
        grown_slots = [
            s for s in covered if s in old_slots or (s[0] >= fig8.n and s[1] == 0)
        ]
        assert len(grown_slots) == sk.edges[e].degree + 2
        # vertex classes and links preserved
        assert len(sk2.vertices) == len(sk.vertices)
        assert sorted((v.link_euler, v.link_orientable) for v in sk2.vertices) == links
        assert homology_h1(grown) == homology_h1(fig8)


def test_02_rejects_equal_or_same_face_slots(fig8):
    ok, reason = can_apply(fig8, Move("02", (0, 2, 2)))
    assert not ok and "coincide" in reason
    # Find a pair of slots whose exit faces lie in one face class.
    sk = fig8.skeleton
    lookup = sk.face_lookup
    ec = sk.edges[0]
    same = None
    for a in range(ec.degree):
        for b in range(a + 1, ec.degree):
            wa, wb = ec.wedges[a], ec.wedges[b]
            if lookup[(wa.tet, wa.exit_face)] == lookup[(wb.tet, wb.exit_face)]:
                same = (a, b)
    assert same is not None
    ok, reason = can_apply(fig8, Move("02", (0,) + same))
    assert not ok and "same face" in reason
    with pytest.raises(ParameterOutOfRange):
        can_apply(fig8, Move("02", (0, 0, 97)))


def test_20_requires_degree_2_distinct_tets():
    lens = get("lens_4_1")  # degree-2 edge inside a single tetrahedron
    eid = next(e for e, ec in enumerate(lens.skeleton.edges) if ec.degree == 2)
    ok, reason = can_apply(lens, Move("20", (eid,)))
    assert not ok and "one tetrahedron" in reason
    fig8 = get("fig8")
    for e in range(len(fig8.skeleton.edges)):
        ok, reason = can_apply(fig8, Move("20", (e,)))
        assert not ok and "degree" in reason


def test_20_requires_distinct_opposite_edges():
    # Flattening identifies the two edges opposite the degree-2 edge; a
    # configuration where they coincide must be rejected (it would change
    # the manifold).  Such configurations occur in the 2-3/3-2 orbit of
    # the two-tetrahedron sphere.
    import oracles
    from pachner import explorer
    from pachner.isosig import decode

    g = explorer.explore(get("s3_two_tet"), 4)
    found = 0
    for sig in g.nodes:
        tri = decode(sig)
        sk = tri.skeleton
        for e, ec in enumerate(sk.edges):
            if ec.degree != 2 or ec.is_boundary:
                continue
            wu, wv = ec.wedges
            if wu.tet == wv.tet:
                continue
            opp_u = sk.edge_lookup[(wu.tet, OPP_EDGE[wu.enter][wu.exit])][0]
            opp_v = sk.edge_lookup[(wv.tet, OPP_EDGE[wv.enter][wv.exit])][0]
            ok, reason = can_apply(tri, Move("20", (e,)))
            if opp_u == opp_v:
                assert not ok and "opposite" in reason
                found += 1
            else:
                assert ok
                result = move_20(tri, e)
                assert len(result.skeleton.vertices) == len(sk.vertices)
    assert found > 0


# -- generic properties -------------------------------------------------------


def test_enumerate_is_deterministic_and_applicable():
    for name, tri in FIXTURES:
        moves = enumerate_moves(tri, ("23", "32", "14", "41", "02", "20"))
        assert moves == enumerate_moves(tri, ("23", "32", "14", "41", "02", "20"))
        kinds = [m.kind for m in moves]
        assert kinds == sorted(kinds, key=("23", "32", "14", "41", "02", "20").index)
        for m in moves:
            ok, _ = can_apply(tri, m)
            assert ok, (name, m)


def test_enumerate_figure_eight(fig8):
    moves = enumerate_moves(fig8, ("23", "32"))
    assert [str(m) for m in moves] == ["23 0 0", "23 0 1", "23 0 2", "23 0 3"]


def test_enumerate_single_unglued_tet():
    from pachner.triangulation import Triangulation

    tri = Triangulation([[None] * 4])
    assert enumerate_moves(tri, ("23", "32")) == []


def test_tet_and_vertex_count_deltas():
    deltas = {"23": 1, "32": -1, "14": 3, "41": -3, "02": 2, "20": -2}
    vertex_deltas = {"23": 0, "32": 0, "14": 1, "41": -1, "02": 0, "20": 0}
    for name, tri in FIXTURES:
        nv = len(tri.skeleton.vertices)
        for m in enumerate_moves(tri, ("23", "32", "14", "41", "02", "20")):
            result = apply_move(tri, m)
            assert result.n == tri.n + deltas[m.kind], (name, m)
            assert len(result.skeleton.vertices) == nv + vertex_deltas[m.kind], (name, m)


def test_random_sequences_preserve_h1_and_validity():
    rng = random.Random(77)
    for name, tri in FIXTURES:
        if not tri.is_closed():
            continue
        h = homology_h1(tri)
        classification = tri.classify()
        for _ in range(10):
            cur = tri
            for _ in range(6):
                moves = [
                    m
                    for m in enumerate_moves(cur, ("23", "32", "02", "20"))
                    if apply_move(cur, m).n <= 6
                ]
                if not moves:
                    break
                cur = apply_move(cur, rng.choice(moves))
            assert homology_h1(cur) == h, name
            assert cur.classify() is classification, name


def test_moves_never_break_the_gluing_invariants():
    # Post-validation is built into the Triangulation constructor; applying
    # every enumerated move must therefore simply succeed.
    for name, tri in FIXTURES:
        for m in enumerate_moves(tri, ("23", "32", "14", "41", "02", "20")):
            result = apply_move(tri, m)
            assert result.is_closed() == tri.is_closed()


def test_move_parse_roundtrip():
    for text in ("23 0 1", "32 4", "14 2", "41 0", "02 3 1 2", "20 5"):
        assert str(Move.parse(text)) == text
    with pytest.raises(ParameterOutOfRange):
        Move.parse("99 1")
    with pytest.raises(ParameterOutOfRange):
        Move.parse("23 1")
