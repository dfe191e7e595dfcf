"""Scratch: search small gluing tables for the bundled fixtures."""
import itertools
from pachner.perm4 import PERMS4, Perm4
from pachner.triangulation import Triangulation
from pachner.errors import TriangulationError
from pachner.homology import homology_h1
from pachner.isosig import iso_sig, encode


def perms_sending_face(f, f2):
    return [p for p in PERMS4 if p[f] == f2]


def two_tet_cross_tables():
    """All tables where each face of tet 0 is glued to a face of tet 1."""
    for sigma in itertools.permutations(range(4)):
        choices = [perms_sending_face(f, sigma[f]) for f in range(4)]
        for ps in itertools.product(*choices):
            table = [[None] * 4 for _ in range(2)]
            ok = True
            for f in range(4):
                table[0][f] = (1, ps[f])
                back = (0, ps[f].inverse())
                if table[1][sigma[f]] is not None and table[1][sigma[f]] != back:
                    ok = False
                    break
                table[1][sigma[f]] = back
            if ok:
                yield table


def main():
    seen = {}
    for table in two_tet_cross_tables():
        try:
            T = Triangulation(table)
            sk = T.skeleton
        except TriangulationError:
            continue
        degs = sorted(e.degree for e in sk.edges)
        if degs != [6, 6]:
            continue
        if len(sk.vertices) != 1:
            continue
        v = sk.vertices[0]
        if not (v.link_closed and v.link_euler == 0 and v.link_orientable):
            continue
        sig = iso_sig(T)
        if sig in seen:
            continue
        h1 = homology_h1(T)
        seen[sig] = (T, h1)
        print("iso class: H1(quotient) =", h1)
        print("  sig:", sig)
        print("  table:", encode(T))
    print(len(seen), "iso classes")


if __name__ == "__main__":
    main()
