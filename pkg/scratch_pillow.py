"""Search for the correct triangular pillow and attachment maps for 0-2."""
import itertools
from pachner.perm4 import PERMS4, Perm4
from pachner.triangulation import Triangulation, EDGE_VERTICES
from pachner.errors import TriangulationError
from pachner.homology import homology_h1
from pachner.catalog import get, CATALOG
from pachner.isosig import iso_sig


def pillow_candidates():
    """2-tet complexes: three U-V gluings, one boundary face on each tet,
    exactly one interior edge (degree 2), three vertex classes."""
    for bu in range(4):
        for bv in range(4):
            u_faces = [f for f in range(4) if f != bu]
            for matching in itertools.permutations([f for f in range(4) if f != bv]):
                for perms in itertools.product(PERMS4, repeat=3):
                    table = [[None] * 4, [None] * 4]
                    ok = True
                    for uf, vf, p in zip(u_faces, matching, perms):
                        if p[uf] != vf:
                            ok = False
                            break
                        table[0][uf] = (1, p)
                        back = (0, p.inverse())
                        if table[1][vf] is not None:
                            ok = False
                            break
                        table[1][vf] = back
                    if not ok:
                        continue
                    try:
                        tri = Triangulation(table)
                        sk = tri.skeleton
                    except TriangulationError:
                        continue
                    if len(sk.vertices) != 3:
                        continue
                    interior = [e for e in sk.edges if not e.is_boundary]
                    if len(interior) != 1 or interior[0].degree != 2:
                        continue
                    if any(v.link_closed for v in sk.vertices):
                        continue
                    yield table, bu, bv


def try_insert(tri, edge_id, pos, table_p, bu, bv, m1, m2):
    """Insert the pillow at the given cut; m1: slit1 verts -> pillow-U labels
    applied as (tail, head, exit); m2 for slit2 as (tail, head, enter)."""
    ec = tri.skeleton.edges[edge_id]
    d = ec.degree
    wi = ec.wedges[pos]
    wj = ec.wedges[(pos + 1) % d]
    n = tri.n
    U, V = n, n + 1
    table = [list(row) for row in tri.gluings] + [
        [(V if t == 1 else U, p) if gl is not None else None for gl in row for t, p in [gl]] if False else None
        for row in []
    ]
    table = [list(row) for row in tri.gluings]
    for row in table_p:
        new_row = []
        for gl in row:
            if gl is None:
                new_row.append(None)
            else:
                t, p = gl
                new_row.append((U if t == 0 else V, p))
        table.append(new_row)

    def set_gluing(t, f, t2, p):
        table[t][f] = (t2, p)
        table[t2][p[f]] = (t, p.inverse())

    # slit side 1 -> boundary face bu of U
    tri1 = [x for x in range(4) if x != bu]
    r1 = {wi.tail: m1[0], wi.head: m1[1], wi.exit: m1[2], wi.enter: bu}
    r1 = Perm4.from_images(r1)
    # slit side 2 -> boundary face bv of V
    r2 = {wj.tail: m2[0], wj.head: m2[1], wj.enter: m2[2], wj.exit: bv}
    r2 = Perm4.from_images(r2)
    set_gluing(wi.tet, wi.exit_face, U, r1)
    set_gluing(wj.tet, wj.enter_face, V, r2)
    return Triangulation(table)


def certify(tri, result, edge_id, pos):
    sk, sk2 = tri.skeleton, result.skeleton
    if len(sk2.vertices) != len(sk.vertices):
        return False
    if sorted((v.link_euler, v.link_orientable, v.link_closed) for v in sk2.vertices) != \
       sorted((v.link_euler, v.link_orientable, v.link_closed) for v in sk.vertices):
        return False
    if len(sk2.edges) != len(sk.edges) + 1:
        return False
    if tri.is_closed():
        if homology_h1(result) != homology_h1(tri):
            return False
    # chosen edge +2
    w = sk.edges[edge_id].wedges[pos]
    nid, _ = sk2.edge_lookup[(w.tet, w.edge_index)]
    if sk2.edges[nid].degree != sk.edges[edge_id].degree + 2:
        return False
    return True


def main():
    # certification set: every placement on two small fixtures
    fixtures = [get('lens_4_1'), get('fig8')]
    cand_count = 0
    winners = []
    for table_p, bu, bv in pillow_candidates():
        cand_count += 1
        tri_verts_u = [x for x in range(4) if x != bu]
        tri_verts_v = [x for x in range(4) if x != bv]
        for m1 in itertools.permutations(tri_verts_u):
            for m2 in itertools.permutations(tri_verts_v):
                good = True
                for T in fixtures:
                    for e, ec in enumerate(T.skeleton.edges):
                        for pos in range(ec.degree if not ec.is_boundary else ec.degree - 1):
                            try:
                                R = try_insert(T, e, pos, table_p, bu, bv, m1, m2)
                                if not certify(T, R, e, pos):
                                    good = False
                                    break
                            except TriangulationError:
                                good = False
                                break
                        if not good:
                            break
                    if not good:
                        break
                if good:
                    winners.append((table_p, bu, bv, m1, m2))
                    if len(winners) <= 5:
                        print("WINNER: bu=%d bv=%d m1=%s m2=%s" % (bu, bv, m1, m2))
                        for t in range(2):
                            print("   tet", t, [(gl[0], str(gl[1])) if gl else None for gl in table_p[t]])
    print("candidates tried:", cand_count, " winners:", len(winners))


if __name__ == "__main__":
    main()
