"""Scratch: exercise all moves on the found fixtures."""
import random
from pachner.isosig import decode, iso_sig
from pachner.homology import homology_h1
from pachner.moves import (
    Move, apply_move, apply_move_ex, can_apply, enumerate_moves,
    move_02, move_20, move_23, move_32, move_14, move_41,
)
from pachner.errors import TriangulationError

FIG8 = "2|1/0123,1/1203,1/1032,1/3021;0/0123,0/1320,0/2013,0/1032"
SISTER = "2|1/0123,1/0231,1/3210,1/2013;0/0123,0/3210,0/0312,0/1203"
S3_2T = "2|0/1023,0/1023,1/0123,1/2301;1/3012,0/2301,0/0123,1/1230"
S3_1T = "1|0/1023,0/1023,0/1230,0/3012"
GIESEKING = "1|0/1203,0/2013,0/0231,0/0312"
L4 = "1|0/1230,0/3012,0/1230,0/3012"
L5 = "1|0/1230,0/3012,0/2031,0/1302"
S2XS1 = "2|0/1230,0/3012,1/0123,1/0123;1/1230,1/3012,0/0123,0/0123"

fixtures = {
    "fig8": FIG8, "sister": SISTER, "s3_2t": S3_2T, "s3_1t": S3_1T,
    "gieseking": GIESEKING, "l4": L4, "l5": L5, "s2xs1": S2XS1,
}

for name, sig in fixtures.items():
    T = decode(sig)
    sk = T.skeleton
    print("=== %s: n=%d degrees=%s vertices=%d %s H1=%s" % (
        name, T.n, sorted(e.degree for e in sk.edges), len(sk.vertices),
        T.classify().value, homology_h1(T)))

    # 2-3 then 3-2 on the new central edge must restore the signature.
    for mv in enumerate_moves(T, {"23"}):
        T2 = apply_move(T, mv)
        assert T2.n == T.n + 1
        # central edge has degree 3; find a 3-2 returning to T
        back = [m for m in enumerate_moves(T2, {"32"})]
        restored = False
        for m2 in back:
            T3 = apply_move(T2, m2)
            if iso_sig(T3) == iso_sig(T):
                restored = True
        assert restored, (name, mv)
        assert homology_h1(T2) == homology_h1(T), (name, mv)
        assert len(T2.skeleton.vertices) == len(sk.vertices)
    print("   23/32 inverses ok (%d moves)" % len(enumerate_moves(T, {"23"})))

    # 0-2 then 2-0.
    cnt = 0
    for mv in enumerate_moves(T, {"02"}):
        e, a, b = mv.params
        T2 = move_02(T, e, (a, b))
        assert T2.n == T.n + 2
        sk2 = T2.skeleton
        assert len(sk2.vertices) == len(sk.vertices), (name, mv, len(sk2.vertices), len(sk.vertices))
        assert homology_h1(T2) == homology_h1(T), (name, mv)
        # ledger: one new degree-2 class; chosen edge +2
        degs_old = sorted(x.degree for x in sk.edges)
        degs_new = sorted(x.degree for x in sk2.edges)
        assert len(degs_new) == len(degs_old) + 1
        # find the degree-2 edge whose removal restores
        restored = False
        for e2, ec2 in enumerate(sk2.edges):
            ok, _ = can_apply(T2, Move("20", (e2,)))
            if not ok:
                continue
            T3 = move_20(T2, e2)
            if iso_sig(T3) == iso_sig(T):
                restored = True
        assert restored, (name, mv)
        cnt += 1
    print("   02/20 inverses ok (%d placements)" % cnt)

    # 1-4 / 4-1.
    T2 = move_14(T, 0)
    assert T2.n == T.n + 3
    sk2 = T2.skeleton
    assert len(sk2.vertices) == len(sk.vertices) + 1
    assert homology_h1(T2) == homology_h1(T)
    restored = False
    for v in range(len(sk2.vertices)):
        ok, why = can_apply(T2, Move("41", (v,)))
        if ok:
            T3 = move_41(T2, v)
            if iso_sig(T3) == iso_sig(T):
                restored = True
    assert restored, name
    print("   14/41 inverse ok")

print("ALL MOVE CHECKS PASSED")
