"""Targeted pillow search with wedge-aligned labels.

U and V are labelled 0=edge tail, 1=edge head, 2=enter-side, 3=exit-side.
The slit attachments are forced by the wedge walk:
    slit X (exit face of wedge i)   <->  (U, face 3)  [triangle 0,1,2]
    slit Y (enter face of wedge i+1 or j+1) <-> (V, face 2)  [triangle 0,1,3]
And U's exit face (2) glues to V's enter face (3) in the single-cut
variant; in the two-cut variant U's faces 2,3 take slit i's two sides and
V's faces 2,3 take slit j's.  The remaining faces 0,1 of U glue to faces
0,1 of V; this script searches those two permutations.
"""
import itertools
from pachner.perm4 import PERMS4, Perm4
from pachner.triangulation import Triangulation
from pachner.errors import TriangulationError
from pachner.homology import homology_h1
from pachner.catalog import get

ID = Perm4.identity()


def insert_single(tri, edge_id, pos, p01):
    """Single-cut insertion; p01 = (perm for U0<->V?, perm for U1<->V?)."""
    ec = tri.skeleton.edges[edge_id]
    d = ec.degree
    wi = ec.wedges[pos]
    wj = ec.wedges[(pos + 1) % d]
    n = tri.n
    U, V = n, n + 1
    table = [list(row) for row in tri.gluings] + [[None] * 4, [None] * 4]

    def set_gluing(t, f, t2, p):
        table[t][f] = (t2, p)
        table[t2][p[f]] = (t, p.inverse())

    r1 = Perm4.from_images({wi.tail: 0, wi.head: 1, wi.exit: 2, wi.enter: 3})
    r2 = Perm4.from_images({0: wj.tail, 1: wj.head, 3: wj.enter, 2: wj.exit})
    g = Perm4((0, 1, 3, 2))
    set_gluing(wi.tet, wi.exit_face, U, r1)
    set_gluing(U, 2, V, g)
    set_gluing(V, 2, wj.tet, r2)
    pa, pb = p01
    set_gluing(U, 0, V, pa)
    set_gluing(U, 1, V, pb)
    return Triangulation(table)


def insert_double(tri, edge_id, pos_i, pos_j, p01):
    ec = tri.skeleton.edges[edge_id]
    d = ec.degree
    wi, wi2 = ec.wedges[pos_i], ec.wedges[(pos_i + 1) % d]
    wj, wj2 = ec.wedges[pos_j], ec.wedges[(pos_j + 1) % d]
    n = tri.n
    U, V = n, n + 1
    table = [list(row) for row in tri.gluings] + [[None] * 4, [None] * 4]

    def set_gluing(t, f, t2, p):
        table[t][f] = (t2, p)
        table[t2][p[f]] = (t, p.inverse())

    # U fills cut i: enter face 3 from X_i, exit face 2 to Y_i.
    set_gluing(wi.tet, wi.exit_face, U,
               Perm4.from_images({wi.tail: 0, wi.head: 1, wi.exit: 2, wi.enter: 3}))
    set_gluing(U, 2, wi2.tet,
               Perm4.from_images({0: wi2.tail, 1: wi2.head, 3: wi2.enter, 2: wi2.exit}))
    # V fills cut j.
    set_gluing(wj.tet, wj.exit_face, V,
               Perm4.from_images({wj.tail: 0, wj.head: 1, wj.exit: 2, wj.enter: 3}))
    set_gluing(V, 2, wj2.tet,
               Perm4.from_images({0: wj2.tail, 1: wj2.head, 3: wj2.enter, 2: wj2.exit}))
    pa, pb = p01
    set_gluing(U, 0, V, pa)
    set_gluing(U, 1, V, pb)
    return Triangulation(table)


def certify(tri, result, edge_id, rep_slot):
    sk, sk2 = tri.skeleton, result.skeleton
    if len(sk2.vertices) != len(sk.vertices):
        return "vcount"
    if sorted((v.link_euler, v.link_orientable, v.link_closed) for v in sk2.vertices) != \
       sorted((v.link_euler, v.link_orientable, v.link_closed) for v in sk.vertices):
        return "links"
    if len(sk2.edges) != len(sk.edges) + 1:
        return "ecount"
    new_classes = [e for e in sk2.edges
                   if all(w.tet >= tri.n for w in e.wedges)]
    if len(new_classes) != 1 or new_classes[0].degree != 2:
        return "newedge"
    nid, _ = sk2.edge_lookup[rep_slot]
    if sk2.edges[nid].degree != sk.edges[edge_id].degree + 2:
        return "plus2"
    if tri.is_closed() and homology_h1(result) != homology_h1(tri):
        return "h1"
    return None


def sweep(kind, p01):
    fails = {}
    for name in ("lens_4_1", "fig8", "s3_two_tet"):
        T = get(name)
        for e, ec in enumerate(T.skeleton.edges):
            d = ec.degree
            w0 = ec.wedges[0]
            rep = (w0.tet, w0.edge_index)
            positions = range(d) if not ec.is_boundary else range(d - 1)
            if kind == "single":
                cuts = [(pos, None) for pos in positions]
            else:
                cuts = [(i, j) for i in positions for j in positions if i != j]
            for i, j in cuts:
                try:
                    R = insert_single(T, e, i, p01) if kind == "single" else insert_double(T, e, i, j, p01)
                    why = certify(T, R, e, rep)
                except TriangulationError as exc:
                    why = "invalid"
                if why:
                    fails[why] = fails.get(why, 0) + 1
    return fails


perm0 = [p for p in PERMS4 if p[0] == 0]
perm1 = [p for p in PERMS4 if p[1] == 1]
print("=== single-cut variants ===")
for pa in perm0:
    for pb in perm1:
        fails = sweep("single", (pa, pb))
        if not fails:
            print("WINNER single:", pa, pb)
print("=== double-cut variants ===")
for pa in perm0:
    for pb in perm1:
        fails = sweep("double", (pa, pb))
        if not fails:
            print("WINNER double:", pa, pb)
print("done")
