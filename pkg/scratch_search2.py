"""Scratch: closed 2-tet one-vertex fixtures and 1-tet fixtures."""
import itertools
from pachner.perm4 import PERMS4
from pachner.triangulation import Triangulation
from pachner.errors import TriangulationError
from pachner.homology import homology_h1
from pachner.isosig import iso_sig


def pairings(slots):
    if not slots:
        yield []
        return
    a = slots[0]
    for i in range(1, len(slots)):
        b = slots[i]
        rest = slots[1:i] + slots[i + 1 :]
        for rec in pairings(rest):
            yield [(a, b)] + rec


def tables(n):
    slots = [(t, f) for t in range(n) for f in range(4)]
    for pairing in pairings(slots):
        perm_choices = []
        for (t, f), (t2, f2) in pairing:
            perm_choices.append([p for p in PERMS4 if p[f] == f2])
        for ps in itertools.product(*perm_choices):
            table = [[None] * 4 for _ in range(n)]
            for ((t, f), (t2, f2)), p in zip(pairing, ps):
                table[t][f] = (t2, p)
                table[t2][f2] = (t, p.inverse())
            yield table


def scan(n, want):
    seen = {}
    for table in tables(n):
        try:
            T = Triangulation(table)
            sk = T.skeleton
        except TriangulationError:
            continue
        if not want(T, sk):
            continue
        sig = iso_sig(T)
        if sig in seen:
            continue
        seen[sig] = T
    return seen


print("=== 2-tet closed one-vertex, sphere link ===")
found = scan(
    2,
    lambda T, sk: len(sk.vertices) == 1 and sk.vertices[0].link_is_sphere,
)
for sig, T in sorted(found.items()):
    print(homology_h1(T), sorted(e.degree for e in sk_degs(T) if False) if False else sorted(e.degree for e in T.skeleton.edges_degs) if False else sorted(e.degree for e in T.skeleton.edges), "  ", sig)

print()
print("=== 1-tet all glued ===")
found1 = scan(1, lambda T, sk: True)
for sig, T in sorted(found1.items()):
    sk = T.skeleton
    links = [
        ("S2" if v.link_is_sphere else "T2" if v.link_is_torus else "K" if v.link_is_klein else "chi%d%s" % (v.link_euler, "c" if v.link_closed else "b"))
        for v in sk.vertices
    ]
    print(
        homology_h1(T),
        "degs", sorted(e.degree for e in sk.edges),
        "verts", len(sk.vertices),
        links,
        T.classify().value,
        " ",
        sig,
    )
