"""First homology of the quotient cell complex of a closed triangulation.

The quotient CW structure keeps every vertex class as a 0-cell (ideal
vertices are included as cone points), so the value computed here need not
equal H1 of the open manifold underlying an ideal triangulation.  What
matters for this package is that the group is invariant under all moves,
which makes it a cheap correctness oracle for :mod:`pachner.moves`.
"""

from dataclasses import dataclass

from .errors import HasBoundaryFaces
from .exact import rank, smith_invariant_factors
from .triangulation import EDGE_INDEX, EDGE_VERTICES

__all__ = ["HomologyGroup", "homology_h1"]


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group: free rank plus invariant factors."""

    rank: int
    torsion: tuple  # invariant factors d1 | d2 | ..., each > 1

    def __str__(self):
        parts = ["Z"] * self.rank + ["Z/%d" % d for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def _boundary_1(tri, sk):
    """Matrix of d1: C1 -> C0, one column per edge class."""
    V, E = len(sk.vertices), len(sk.edges)
    mat = [[0] * E for _ in range(V)]
    for j, ec in enumerate(sk.edges):
        w = ec.wedges[0]
        mat[sk.vertex_lookup[(w.tet, w.head)]][j] += 1
        mat[sk.vertex_lookup[(w.tet, w.tail)]][j] -= 1
    return mat


def _boundary_2(tri, sk):
    """Matrix of d2: C2 -> C1, one column per face class."""
    E, F = len(sk.edges), len(sk.face_classes)
    mat = [[0] * F for _ in range(E)]
    for j, fc in enumerate(sk.face_classes):
        t, f = fc[0]
        a, b, c = sorted(x for x in range(4) if x != f)
        # Simplicial boundary of [a,b,c]: +[b,c] - [a,c] + [a,b].
        for sign, (x, y) in ((1, (b, c)), (-1, (a, c)), (1, (a, b))):
            cls, slot_sign = sk.edge_lookup[(t, EDGE_INDEX[x][y])]
            mat[cls][j] += sign * slot_sign
    return mat


def homology_h1(tri):
    """H1 of the quotient complex, from Smith normal form of the boundaries."""
    if not tri.is_closed():
        raise HasBoundaryFaces("homology requires all faces glued")
    sk = tri.skeleton
    d1 = _boundary_1(tri, sk)
    d2 = _boundary_2(tri, sk)
    r1 = rank(d1)
    factors = smith_invariant_factors(d2)
    free_rank = len(sk.edges) - r1 - len(factors)
    torsion = tuple(d for d in factors if d > 1)
    return HomologyGroup(free_rank, torsion)
