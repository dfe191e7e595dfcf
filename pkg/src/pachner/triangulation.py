"""Triangulations of 3-manifolds as face-pairings of abstract tetrahedra.

A triangulation is a collection of n abstract tetrahedra, labelled 0..n-1,
with some or all of their 4n faces affinely identified in pairs.  Face f of
a tetrahedron is the triangle omitting vertex f; a gluing of face f of
tetrahedron t to face f' of t' is recorded by the Perm4 carrying vertex
labels of t to vertex labels of t' (so the permutation sends f to f').

Triangulations are immutable values: all operations, including the Pachner
moves in :mod:`pachner.moves`, return new objects.  Consequently skeleta and
signatures may be cached on the instance and shared freely across threads.

Edge indices 0..5 within a tetrahedron enumerate the vertex pairs in the
fixed order 01, 02, 03, 12, 13, 23.
"""

from enum import Enum

from .errors import (
    FaceSelfGluing,
    IndexOutOfRange,
    NonInvolution,
    PermutationNotFixingFace,
)
from .perm4 import Perm4

__all__ = [
    "EDGE_VERTICES",
    "EDGE_INDEX",
    "OPPOSITE_PAIR",
    "PAIR_EDGES",
    "Classification",
    "Triangulation",
]

# Vertex pairs of the six edges, in the fixed order 01,02,03,12,13,23.
EDGE_VERTICES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

# EDGE_INDEX[a][b] = index of the edge joining distinct vertices a and b.
EDGE_INDEX = tuple(
    tuple(
        EDGE_VERTICES.index((min(a, b), max(a, b))) if a != b else -1
        for b in range(4)
    )
    for a in range(4)
)

# Opposite-edge pair of each edge: pair 0 = edges 01 & 23, pair 1 = 02 & 13,
# pair 2 = 03 & 12.
OPPOSITE_PAIR = (0, 1, 2, 2, 1, 0)

# The two edge indices forming each opposite pair.
PAIR_EDGES = ((0, 5), (1, 4), (2, 3))


class Classification(Enum):
    """Coarse type of a triangulation, from face gluings and vertex links."""

    CLOSED_ONE_VERTEX = "ClosedOneVertex"
    IDEAL = "Ideal"
    OTHER_CLOSED = "OtherClosed"
    MIXED = "Mixed"
    HAS_BOUNDARY_FACES = "HasBoundaryFaces"

    def __str__(self):
        return self.value


class Triangulation:
    """An immutable face-pairing of ``n`` abstract tetrahedra.

    The gluing table is a tuple of length n; entry t is a 4-tuple whose
    entry f is either None (face unglued) or a pair ``(t', p)`` with p a
    Perm4 satisfying the involution conditions: the entry at (t', p[f]) is
    ``(t, p.inverse())``, and no face is glued to itself.
    """

    __slots__ = ("gluings", "_skeleton", "_iso_sig", "_hash")

    def __init__(self, gluings):
        table = tuple(tuple(row) for row in gluings)
        if len(table) < 1:
            raise IndexOutOfRange("a triangulation needs at least one tetrahedron")
        n = len(table)
        for t, row in enumerate(table):
            if len(row) != 4:
                raise IndexOutOfRange("tetrahedron %d does not have 4 faces" % t)
            for f, gl in enumerate(row):
                if gl is None:
                    continue
                t2, p = gl
                if not (0 <= t2 < n):
                    raise IndexOutOfRange("gluing (%d,%d) points to tetrahedron %d" % (t, f, t2))
                if not isinstance(p, Perm4):
                    raise PermutationNotFixingFace("gluing (%d,%d) has no permutation" % (t, f))
                f2 = p[f]
                if t2 == t and f2 == f:
                    raise FaceSelfGluing("face (%d,%d) is glued to itself" % (t, f))
                back = table[t2][f2]
                if back is None or back[0] != t or back[1] != p.inverse():
                    raise NonInvolution(
                        "gluing (%d,%d)->(%d,%d) lacks a consistent inverse entry" % (t, f, t2, f2)
                    )
        self.gluings = table
        self._skeleton = None
        self._iso_sig = None
        self._hash = None

    @classmethod
    def from_gluings(cls, n, entries):
        """Build from explicit gluing entries ``(t, f, t2, f2, perm)``.

        Each glued pair may be given once (either direction) or twice;
        duplicate entries must agree exactly.  perm may be a Perm4 or a
        4-tuple of images.
        """
        if n < 1:
            raise IndexOutOfRange("n must be at least 1")
        table = [[None] * 4 for _ in range(n)]

        def set_entry(t, f, t2, p):
            if not (0 <= t < n and 0 <= f < 4 and 0 <= t2 < n):
                raise IndexOutOfRange("entry (%d,%d)->%d out of range" % (t, f, t2))
            new = (t2, p)
            old = table[t][f]
            if old is not None and old != new:
                raise NonInvolution("conflicting gluings for face (%d,%d)" % (t, f))
            table[t][f] = new

        for t, f, t2, f2, p in entries:
            if not isinstance(p, Perm4):
                p = Perm4(p)
            if not (0 <= f < 4 and 0 <= f2 < 4):
                raise IndexOutOfRange("face index out of range in entry (%d,%d)" % (t, f))
            if p[f] != f2:
                raise PermutationNotFixingFace(
                    "permutation %s sends face %d to %d, not %d" % (p, f, p[f], f2)
                )
            if (t, f) == (t2, f2):
                raise FaceSelfGluing("face (%d,%d) is glued to itself" % (t, f))
            set_entry(t, f, t2, p)
            set_entry(t2, f2, t, p.inverse())
        return cls(table)

    @property
    def n(self):
        """Number of tetrahedra."""
        return len(self.gluings)

    def gluing(self, t, f):
        """The gluing of face f of tetrahedron t: ``(t', perm)`` or None."""
        if not (0 <= t < self.n and 0 <= f < 4):
            raise IndexOutOfRange("face (%d,%d) out of range" % (t, f))
        return self.gluings[t][f]

    def is_closed(self):
        """True when every face is glued."""
        return all(gl is not None for row in self.gluings for gl in row)

    def boundary_face_count(self):
        return sum(1 for row in self.gluings for gl in row if gl is None)

    def is_connected(self):
        seen = {0}
        stack = [0]
        while stack:
            t = stack.pop()
            for gl in self.gluings[t]:
                if gl is not None and gl[0] not in seen:
                    seen.add(gl[0])
                    stack.append(gl[0])
        return len(seen) == self.n

    @property
    def skeleton(self):
        """The edge/vertex class structure; computed once and cached."""
        if self._skeleton is None:
            from .skeleton import compute_skeleton

            self._skeleton = compute_skeleton(self)
        return self._skeleton

    def classify(self):
        """Coarse classification from face gluings and vertex links."""
        if not self.is_closed():
            return Classification.HAS_BOUNDARY_FACES
        sk = self.skeleton
        links = sk.vertices
        if all(v.link_is_sphere for v in links):
            if len(links) == 1:
                return Classification.CLOSED_ONE_VERTEX
            return Classification.OTHER_CLOSED
        if all(v.link_closed and v.link_euler <= 0 for v in links):
            return Classification.IDEAL
        return Classification.MIXED

    def dual_graph(self):
        """Dual multigraph: one node per tetrahedron, one arc per glued pair.

        Returns ``(n, arcs)`` where arcs is a sorted list of (t, t') pairs
        with t <= t', one entry per glued face pair (loops allowed).
        """
        arcs = []
        for t, row in enumerate(self.gluings):
            for f, gl in enumerate(row):
                if gl is None:
                    continue
                t2, p = gl
                if (t, f) <= (t2, p[f]):
                    arcs.append((min(t, t2), max(t, t2)))
        arcs.sort()
        return self.n, arcs

    def iso_sig(self):
        """Canonical isomorphism signature; see :mod:`pachner.isosig`."""
        if self._iso_sig is None:
            from .isosig import iso_sig

            self._iso_sig = iso_sig(self)
        return self._iso_sig

    def __eq__(self, other):
        """Table-level equality (not isomorphism; compare iso_sig for that)."""
        return isinstance(other, Triangulation) and self.gluings == other.gluings

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.gluings)
        return self._hash

    def __repr__(self):
        glued = sum(1 for row in self.gluings for gl in row if gl is not None)
        return "<Triangulation: %d tetrahedra, %d glued face pairs>" % (self.n, glued // 2)
