"""Double-cut pillow with crossed panels: U fills X_i -> Y_j, V fills X_j -> Y_i."""
import itertools
from pachner.perm4 import PERMS4, Perm4
from pachner.triangulation import Triangulation
from pachner.errors import TriangulationError
from pachner.homology import homology_h1
from pachner.catalog import get


def insert(tri, edge_id, pos_i, pos_j, p01):
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

    # U: enter from cut i's exit side, leave into cut j's enter side.
    set_gluing(wi.tet, wi.exit_face, U,
               Perm4.from_images({wi.tail: 0, wi.head: 1, wi.exit: 2, wi.enter: 3}))
    set_gluing(U, 2, wj2.tet,
               Perm4.from_images({0: wj2.tail, 1: wj2.head, 3: wj2.enter, 2: wj2.exit}))
    # V: enter from cut j's exit side, leave into cut i's enter side.
    set_gluing(wj.tet, wj.exit_face, V,
               Perm4.from_images({wj.tail: 0, wj.head: 1, wj.exit: 2, wj.enter: 3}))
    set_gluing(V, 2, wi2.tet,
               Perm4.from_images({0: wi2.tail, 1: wi2.head, 3: wi2.enter, 2: wi2.exit}))
    pa, pb = p01
    set_gluing(U, 0, V, pa)
    set_gluing(U, 1, V, pb)
    return Triangulation(table)


def certify(tri, result):
    sk, sk2 = tri.skeleton, result.skeleton
    if len(sk2.vertices) != len(sk.vertices):
        return "vcount"
    if sorted((v.link_euler, v.link_orientable, v.link_closed) for v in sk2.vertices) != \
       sorted((v.link_euler, v.link_orientable, v.link_closed) for v in sk.vertices):
        return "links"
    if tri.is_closed() and homology_h1(result) != homology_h1(tri):
        return "h1"
    return None


def sweep(p01, names=("lens_4_1", "fig8", "s3_two_tet")):
    fails = {}
    total = 0
    for name in names:
        T = get(name)
        for e, ec in enumerate(T.skeleton.edges):
            d = ec.degree
            if ec.is_boundary:
                continue
            for i in range(d):
                for j in range(d):
                    if i == j:
                        continue
                    total += 1
                    try:
                        R = insert(T, e, i, j, p01)
                        why = certify(T, R)
                    except TriangulationError:
                        why = "invalid"
                    if why:
                        fails[why] = fails.get(why, 0) + 1
    return fails, total


perm0 = [p for p in PERMS4 if p[0] == 0]
perm1 = [p for p in PERMS4 if p[1] == 1]
results = []
for pa in perm0:
    for pb in perm1:
        fails, total = sweep((pa, pb))
        results.append((sum(fails.values()), str(pa), str(pb), fails))
results.sort()
for r in results[:8]:
    print(r)
