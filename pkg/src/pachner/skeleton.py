"""Edge classes, vertex classes and vertex links of a triangulation.

Edge classes are built by walking around each edge: starting from an
unvisited edge slot, repeatedly cross the gluing on the far side of the
current dihedral wedge.  The walk yields the slots of the class in cyclic
order (or linear order, for an edge meeting an unglued face) together with
orientation signs.  An edge slot that returns to itself with reversed
orientation is rejected: such identifications do not occur in triangulations
of 3-manifolds and would corrupt the angle and normal-surface systems built
on top of the skeleton.

Vertex links are assembled from the corner triangles of the tetrahedra and
classified by Euler characteristic and orientability.
"""

from dataclasses import dataclass, field

from .errors import InvalidEdgeIdentification
from .perm4 import Perm4
from .triangulation import EDGE_INDEX, EDGE_VERTICES

__all__ = ["Wedge", "EdgeClass", "VertexClass", "Skeleton", "compute_skeleton"]


@dataclass(frozen=True)
class Wedge:
    """One dihedral wedge of an edge class.

    tet:  the tetrahedron;
    tail, head:  the edge's endpoints as vertex labels of tet, ordered by
        the orientation of the class;
    enter, exit:  the remaining two vertex labels; walking around the edge
        we enter this wedge through the face omitting ``exit`` (the triangle
        tail-head-enter) and leave through the face omitting ``enter``.
    """

    tet: int
    tail: int
    head: int
    enter: int
    exit: int

    @property
    def edge_index(self):
        a, b = self.tail, self.head
        return EDGE_INDEX[a][b]

    @property
    def sign(self):
        """+1 when (tail, head) is in ascending order."""
        return 1 if self.tail < self.head else -1

    @property
    def exit_face(self):
        """Face index crossed when leaving this wedge."""
        return self.enter

    @property
    def enter_face(self):
        """Face index crossed when arriving at this wedge."""
        return self.exit


@dataclass
class EdgeClass:
    """An equivalence class of tetrahedron edges."""

    index: int
    wedges: list  # of Wedge, in cyclic (or linear) walk order
    is_boundary: bool

    @property
    def slots(self):
        """(tet, edge-index, sign) per wedge, in walk order."""
        return [(w.tet, w.edge_index, w.sign) for w in self.wedges]

    @property
    def degree(self):
        return len(self.wedges)


@dataclass
class VertexClass:
    """An equivalence class of tetrahedron vertices, with its link surface."""

    index: int
    slots: list  # of (tet, vertex)
    link_euler: int
    link_orientable: bool
    link_closed: bool

    @property
    def degree(self):
        return len(self.slots)

    @property
    def link_is_sphere(self):
        return self.link_closed and self.link_euler == 2

    @property
    def link_is_torus(self):
        return self.link_closed and self.link_euler == 0 and self.link_orientable

    @property
    def link_is_klein(self):
        return self.link_closed and self.link_euler == 0 and not self.link_orientable

    @property
    def link_is_disc(self):
        return not self.link_closed and self.link_euler == 1


@dataclass
class Skeleton:
    """Edge, vertex and face class data of a triangulation."""

    edges: list  # of EdgeClass
    vertices: list  # of VertexClass
    face_classes: list  # of ((t,f),) or ((t,f),(t',f')) with rep first
    edge_lookup: dict = field(repr=False)  # (t, edge-index) -> (class id, sign)
    vertex_lookup: dict = field(repr=False)  # (t, vertex) -> class id
    face_lookup: dict = field(repr=False)  # (t, f) -> face class id

    @property
    def face_count(self):
        return len(self.face_classes)

    def edge_degrees(self):
        return [e.degree for e in self.edges]


def _walk_wedges(tri, start_tet, start_edge):
    """Walk around one edge; returns (wedges, is_boundary)."""
    a, b = EDGE_VERTICES[start_edge]
    c, d = (x for x in range(4) if x not in (a, b))
    start = Wedge(start_tet, a, b, c, d)

    def step(w):
        """Cross the exit face of w; None when unglued."""
        gl = tri.gluings[w.tet][w.exit_face]
        if gl is None:
            return None
        t2, p = gl
        tail, head, enter = p[w.tail], p[w.head], p[w.exit]
        exit_ = 6 - tail - head - enter
        return Wedge(t2, tail, head, enter, exit_)

    wedges = [start]
    w = start
    while True:
        nxt = step(w)
        if nxt is None:
            break
        if nxt.tet == start.tet and {nxt.tail, nxt.head} == {start.tail, start.head}:
            if (nxt.tail, nxt.head) != (start.tail, start.head) or nxt.enter != start.enter:
                raise InvalidEdgeIdentification(
                    "edge %d of tetrahedron %d is identified with itself reversed"
                    % (start_edge, start_tet)
                )
            return wedges, False
        wedges.append(nxt)
        w = nxt
        if len(wedges) > 6 * tri.n:
            raise InvalidEdgeIdentification("edge walk failed to close")

    # Hit a boundary face: walk backwards from the start to find the far end.
    back = []
    w = Wedge(start.tet, start.head, start.tail, start.exit, start.enter)
    while True:
        nxt = step(w)
        if nxt is None:
            break
        if nxt.tet == start.tet and {nxt.tail, nxt.head} == {start.tail, start.head}:
            raise InvalidEdgeIdentification(
                "edge %d of tetrahedron %d closes up on one side only"
                % (start_edge, start_tet)
            )
        back.append(Wedge(nxt.tet, nxt.head, nxt.tail, nxt.exit, nxt.enter))
        w = nxt
        if len(back) > 6 * tri.n:
            raise InvalidEdgeIdentification("edge walk failed to terminate")
    back.reverse()
    return back + wedges, True


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _vertex_link(tri, slots, side_gluing):
    """Euler characteristic, orientability and closedness of one link."""
    corners = set(slots)
    # Link faces: one triangle per corner.  Link edges: corner sides, i.e.
    # (t, v, f) with f != v, glued in pairs via the face gluings.  Link
    # vertices: corner-triangle corners (t, v, x) with x a third vertex.
    sides = [(t, v, f) for (t, v) in corners for f in range(4) if f != v]
    boundary_sides = 0
    interior_pairs = set()
    for t, v, f in sides:
        img = side_gluing.get((t, v, f))
        if img is None:
            boundary_sides += 1
        else:
            interior_pairs.add(frozenset(((t, v, f), img)))
    E = boundary_sides + len(interior_pairs)

    lv = [(t, v, x) for (t, v) in corners for x in range(4) if x != v]
    uf = _UnionFind(lv)
    for t, v, f in sides:
        img = side_gluing.get((t, v, f))
        if img is None:
            continue
        t2, v2, f2 = img
        _, p = tri.gluings[t][f]
        for x in range(4):
            if x != v and x != f:
                uf.union((t, v, x), (t2, v2, p[x]))
    V = len({uf.find(x) for x in lv})
    F = len(corners)
    chi = V - E + F
    closed = boundary_sides == 0

    # Orientability: propagate corner-triangle orientations across glued
    # sides; each interior link edge must be traversed in opposite
    # directions by its two sides.
    orient = {}
    orientable = True
    for seed in sorted(corners):
        if seed in orient:
            continue
        orient[seed] = 1
        stack = [seed]
        while stack and orientable:
            t, v = stack.pop()
            o = orient[(t, v)]
            S = [x for x in range(4) if x != v]
            cyc = (S[0], S[1], S[2]) if o == 1 else (S[0], S[2], S[1])
            for f in S:
                img = side_gluing.get((t, v, f))
                if img is None:
                    continue
                t2, v2, f2 = img
                _, p = tri.gluings[t][f]
                # Directed traversal of side f under orientation o.
                for k in range(3):
                    x, y = cyc[k], cyc[(k + 1) % 3]
                    if f not in (x, y):
                        break
                # The neighbour must traverse p(y) -> p(x).
                S2 = [z for z in range(4) if z != v2]
                want = (p[y], p[x])
                cyc2 = (S2[0], S2[1], S2[2])
                fwd = {(cyc2[k], cyc2[(k + 1) % 3]) for k in range(3)}
                o2 = 1 if want in fwd else -1
                if (t2, v2) in orient:
                    if orient[(t2, v2)] != o2:
                        orientable = False
                        break
                else:
                    orient[(t2, v2)] = o2
                    stack.append((t2, v2))
        if not orientable:
            break
    return chi, orientable, closed


def compute_skeleton(tri):
    """Compute all edge, vertex and face classes of a triangulation."""
    n = tri.n

    # Edge classes via the wedge walk, in first-encounter slot order.
    edge_classes = []
    edge_lookup = {}
    for t in range(n):
        for e in range(6):
            if (t, e) in edge_lookup:
                continue
            wedges, is_boundary = _walk_wedges(tri, t, e)
            idx = len(edge_classes)
            for w in wedges:
                key = (w.tet, w.edge_index)
                if key in edge_lookup and edge_lookup[key][0] != idx:
                    raise InvalidEdgeIdentification(
                        "edge walk visited a slot of another class"
                    )
                edge_lookup.setdefault(key, (idx, w.sign))
            edge_classes.append(EdgeClass(idx, wedges, is_boundary))
    if sum(ec.degree for ec in edge_classes) != 6 * n:
        raise InvalidEdgeIdentification("edge slots do not partition into classes")

    # Vertex classes via union-find over corners.
    corners = [(t, v) for t in range(n) for v in range(4)]
    uf = _UnionFind(corners)
    side_gluing = {}
    for t in range(n):
        for f in range(4):
            gl = tri.gluings[t][f]
            if gl is None:
                continue
            t2, p = gl
            for v in range(4):
                if v != f:
                    uf.union((t, v), (t2, p[v]))
                    side_gluing[(t, v, f)] = (t2, p[v], p[f])

    groups = {}
    for c in corners:
        groups.setdefault(uf.find(c), []).append(c)
    vertex_classes = []
    vertex_lookup = {}
    for rep in sorted(groups):
        slots = sorted(groups[rep])
        chi, orientable, closed = _vertex_link(tri, slots, side_gluing)
        idx = len(vertex_classes)
        vertex_classes.append(VertexClass(idx, slots, chi, orientable, closed))
        for c in slots:
            vertex_lookup[c] = idx

    # Face classes: glued pairs count once, unglued slots are singletons.
    face_classes = []
    face_lookup = {}
    for t in range(n):
        for f in range(4):
            if (t, f) in face_lookup:
                continue
            gl = tri.gluings[t][f]
            idx = len(face_classes)
            if gl is None:
                face_classes.append(((t, f),))
                face_lookup[(t, f)] = idx
            else:
                t2, p = gl
                face_classes.append(((t, f), (t2, p[f])))
                face_lookup[(t, f)] = idx
                face_lookup[(t2, p[f])] = idx

    return Skeleton(
        edges=edge_classes,
        vertices=vertex_classes,
        face_classes=face_classes,
        edge_lookup=edge_lookup,
        vertex_lookup=vertex_lookup,
        face_lookup=face_lookup,
    )
