"""The Pachner moves 2-3, 3-2, 1-4, 4-1 and the pillow moves 0-2, 2-0.

Every move takes a triangulation and returns a new one; inputs are never
mutated.  Moves are named by the tetrahedron counts they exchange.  The
2-3/3-2 and 0-2/2-0 moves preserve the vertex classes, so they stay inside
the one-vertex/ideal family; 1-4/4-1 change the vertex count and are
therefore tagged as leaving that family.

Both replacement-style moves (2-3, 3-2, 1-4, 4-1) and flattening-style
moves (2-0) are driven by small generic engines below.  A replacement
removes a set of tetrahedra and installs new ones whose faces either glue
among themselves or inherit an old face slot through an explicit label map;
a flattening removes tetrahedra and identifies selected pairs of their face
slots, re-gluing the outside neighbours along chains of identifications.

The 0-2 move inserts a triangular pillow around a chosen edge: two of the
faces incident to the edge (selected by two slots of its class, and
necessarily distinct) are cut open and two new tetrahedra fill the
cavity, glued to each other along the two faces either side of a new
transverse edge of degree 2.  The exact permutation tables are fixed
here; their correctness is enforced by the move-invariant test suite
(tetrahedron/vertex counts, vertex links, homology, edge-degree ledger,
inverse pairs) rather than by inspection.
"""

from dataclasses import dataclass

from .errors import MoveNotApplicable, ParameterOutOfRange, TriangulationError
from .perm4 import Perm4
from .triangulation import Triangulation

__all__ = [
    "Move",
    "MoveInfo",
    "MOVE_KINDS",
    "can_apply",
    "apply_move",
    "apply_move_ex",
    "enumerate_moves",
    "move_23",
    "move_32",
    "move_14",
    "move_41",
    "move_02",
    "move_20",
]

MOVE_KINDS = ("23", "32", "14", "41", "02", "20")

_ID = Perm4.identity()


@dataclass(frozen=True)
class Move:
    """A move kind with its parameters.

    kind "23": params (tet, face);      kind "32": params (edge class id,)
    kind "14": params (tet,);           kind "41": params (vertex class id,)
    kind "02": params (edge class id, slot, slot)   (consecutive wedge slots)
    kind "20": params (edge class id,)
    """

    kind: str
    params: tuple

    def __str__(self):
        return " ".join([self.kind] + [str(p) for p in self.params])

    @classmethod
    def parse(cls, text):
        parts = text.split()
        if not parts or parts[0] not in MOVE_KINDS:
            raise ParameterOutOfRange("unknown move line %r" % text)
        want = {"23": 2, "32": 1, "14": 1, "41": 1, "02": 3, "20": 1}[parts[0]]
        if len(parts) != 1 + want:
            raise ParameterOutOfRange("move %r takes %d parameters" % (parts[0], want))
        return cls(parts[0], tuple(int(x) for x in parts[1:]))


@dataclass(frozen=True)
class MoveInfo:
    """Index bookkeeping for one applied move.

    survivors maps old tetrahedron indices to new ones (order preserving);
    new_tets lists the indices of the tetrahedra the move created.
    """

    survivors: dict
    new_tets: tuple


@dataclass(frozen=True)
class MoveRecord:
    """One arc of the Pachner graph: a move with before/after signatures."""

    move: Move
    before_sig: str
    after_sig: str


def _replace(tri, doomed, new_count, internal, inherit):
    """Remove the doomed tetrahedra and install new ones.

    internal: iterable of (i, f, j, g, perm) gluing face f of new tet i to
        face g of new tet j (local indices; perm maps labels of i to j).
    inherit: dict (i, f) -> ((old_t, old_f), phi) declaring that face f of
        new tet i takes over the old face slot, phi being the Perm4 from
        new labels of i to old labels of old_t with phi(f) = old_f.
    """
    doomed_set = set(doomed)
    survivors = [t for t in range(tri.n) if t not in doomed_set]
    old2new = {t: i for i, t in enumerate(survivors)}
    base = len(survivors)
    table = [[None] * 4 for _ in range(base + new_count)]
    rev_inherit = {}
    for (i, f), (slot, phi) in inherit.items():
        if slot in rev_inherit:
            raise MoveNotApplicable("old slot %r inherited twice" % (slot,))
        rev_inherit[slot] = (i, f, phi)

    def set_gluing(t, f, t2, p):
        entry = (t2, p)
        if table[t][f] is not None and table[t][f] != entry:
            raise MoveNotApplicable("conflicting gluings in replaced region")
        if (t, f) == (t2, p[f]):
            raise MoveNotApplicable("replacement would glue a face to itself")
        table[t][f] = entry
        table[t2][p[f]] = (t, p.inverse())

    for s in survivors:
        for f in range(4):
            gl = tri.gluings[s][f]
            if gl is None:
                continue
            t2, q = gl
            if t2 not in doomed_set:
                table[old2new[s]][f] = (old2new[t2], q)
            else:
                target = (t2, q[f])
                if target not in rev_inherit:
                    raise MoveNotApplicable("region boundary does not match the move")
                j, g, phi = rev_inherit[target]
                set_gluing(old2new[s], f, base + j, phi.inverse() * q)

    for i, f, j, g, perm in internal:
        if perm[f] != g:
            raise AssertionError("internal gluing table is inconsistent")
        set_gluing(base + i, f, base + j, perm)

    for (i, f), ((dt, df), phi) in inherit.items():
        gl = tri.gluings[dt][df]
        if gl is None:
            continue
        s, q = gl
        if s not in doomed_set:
            set_gluing(base + i, f, old2new[s], q * phi)
        else:
            target = (s, q[df])
            j, g, phi2 = rev_inherit[target]
            set_gluing(base + i, f, base + j, phi2.inverse() * q * phi)

    info = MoveInfo(old2new, tuple(range(base, base + new_count)))
    return Triangulation(table), info


def _flatten(tri, doomed, merge):
    """Remove the doomed tetrahedra, identifying merged face-slot pairs.

    merge maps each merged slot (t, f) to (partner slot, m) where m is the
    Perm4 from labels of t to labels of the partner with m(f) = partner
    face.  Both directions must be present.  Outside neighbours are
    re-glued along chains through the merged slots; chains that close up
    without reaching the outside make the move inapplicable.
    """
    doomed_set = set(doomed)
    survivors = [t for t in range(tri.n) if t not in doomed_set]
    if not survivors:
        raise MoveNotApplicable("flattening would remove the whole triangulation")
    old2new = {t: i for i, t in enumerate(survivors)}
    table = [[None] * 4 for _ in survivors]
    consumed = set()

    def chase(slot, perm):
        """Follow merge/gluing chains from a doomed slot; returns the far
        anchor (survivor slot or None for boundary) and the total perm."""
        local = set()
        while True:
            if slot not in merge:
                raise MoveNotApplicable("chain left the flattened region")
            if slot in local:
                raise MoveNotApplicable("flattening chain closed on itself")
            local.add(slot)
            partner, m = merge[slot]
            local.add(partner)
            consumed.add(slot)
            consumed.add(partner)
            perm = m * perm
            gl = tri.gluings[partner[0]][partner[1]]
            if gl is None:
                return None, None
            t2, q = gl
            perm = q * perm
            if t2 not in doomed_set:
                return (t2, q[partner[1]]), perm
            slot = (t2, q[partner[1]])

    for s in survivors:
        for f in range(4):
            gl = tri.gluings[s][f]
            if gl is None:
                continue
            t2, q = gl
            if t2 not in doomed_set:
                table[old2new[s]][f] = (old2new[t2], q)
                continue
            if table[old2new[s]][f] is not None:
                continue  # already set by the chain from its far end
            anchor, perm = chase((t2, q[f]), q)
            if anchor is None:
                continue  # the face becomes boundary
            a_t, a_f = anchor
            if (a_t, a_f) == (s, f):
                raise MoveNotApplicable("flattening would glue a face to itself")
            table[old2new[s]][f] = (old2new[a_t], perm)
            table[old2new[a_t]][a_f] = (old2new[s], perm.inverse())

    for slot in merge:
        if slot not in consumed:
            gl = tri.gluings[slot[0]][slot[1]]
            if gl is not None and gl[0] in doomed_set:
                raise MoveNotApplicable("flattening chain closed on itself")
            # Both ends unglued: the merged pair simply disappears.

    info = MoveInfo(old2new, ())
    return Triangulation(table), info


def _edge_class(tri, edge_id):
    sk = tri.skeleton
    if not (0 <= edge_id < len(sk.edges)):
        raise ParameterOutOfRange("no edge class %d" % edge_id)
    return sk.edges[edge_id]


def _vertex_class(tri, vertex_id):
    sk = tri.skeleton
    if not (0 <= vertex_id < len(sk.vertices)):
        raise ParameterOutOfRange("no vertex class %d" % vertex_id)
    return sk.vertices[vertex_id]


# -- 2-3 -------------------------------------------------------------------


def _check_23(tri, t, f):
    if not (0 <= t < tri.n and 0 <= f < 4):
        raise ParameterOutOfRange("no face (%d,%d)" % (t, f))
    gl = tri.gluings[t][f]
    if gl is None:
        return "face (%d,%d) is unglued" % (t, f)
    if gl[0] == t:
        return "both sides of face (%d,%d) are the same tetrahedron" % (t, f)
    return None


def move_23(tri, t, f):
    """Replace the two tetrahedra sharing face (t, f) by three around a new
    degree-3 edge."""
    reason = _check_23(tri, t, f)
    if reason:
        raise MoveNotApplicable(reason)
    return _move_23_ex(tri, t, f)[0]


def _move_23_ex(tri, t, f):
    t1, p = tri.gluings[t][f]
    f1 = p[f]
    A = [x for x in range(4) if x != f]
    internal = [(i, 0, (i + 1) % 3, 1, Perm4((1, 0, 2, 3))) for i in range(3)]
    inherit = {}
    for i in range(3):
        lo = {0: A[(i + 1) % 3], 1: A[(i + 2) % 3], 2: f, 3: A[i]}
        inherit[(i, 3)] = ((t, A[i]), Perm4.from_images(lo))
        hi = {0: p[A[(i + 1) % 3]], 1: p[A[(i + 2) % 3]], 3: f1, 2: p[A[i]]}
        inherit[(i, 2)] = ((t1, p[A[i]]), Perm4.from_images(hi))
    return _replace(tri, [t, t1], 3, internal, inherit)


# -- 3-2 -------------------------------------------------------------------


def _check_32(tri, edge_id):
    ec = _edge_class(tri, edge_id)
    if ec.is_boundary:
        return "edge %d is a boundary edge" % edge_id
    if ec.degree != 3:
        return "edge %d has degree %d, not 3" % (edge_id, ec.degree)
    tets = [w.tet for w in ec.wedges]
    if len(set(tets)) != 3:
        return "the tetrahedra around edge %d are not distinct" % edge_id
    return None


def move_32(tri, edge_id):
    """Collapse a degree-3 edge, replacing its three tetrahedra by two."""
    reason = _check_32(tri, edge_id)
    if reason:
        raise MoveNotApplicable(reason)
    return _move_32_ex(tri, edge_id)[0]


def _move_32_ex(tri, edge_id):
    ws = _edge_class(tri, edge_id).wedges
    internal = [(0, 3, 1, 3, _ID)]
    inherit = {}
    for i in range(3):
        w = ws[(i + 1) % 3]
        lo = {(i + 1) % 3: w.enter, (i + 2) % 3: w.exit, 3: w.tail, i: w.head}
        inherit[(0, i)] = ((w.tet, w.head), Perm4.from_images(lo))
        hi = {(i + 1) % 3: w.enter, (i + 2) % 3: w.exit, 3: w.head, i: w.tail}
        inherit[(1, i)] = ((w.tet, w.tail), Perm4.from_images(hi))
    return _replace(tri, [w.tet for w in ws], 2, internal, inherit)


# -- 1-4 -------------------------------------------------------------------


def move_14(tri, t):
    """Cone tetrahedron t from a new interior vertex, giving four tetrahedra."""
    if not (0 <= t < tri.n):
        raise ParameterOutOfRange("no tetrahedron %d" % t)
    return _move_14_ex(tri, t)[0]


def _move_14_ex(tri, t):
    internal = [
        (f, g, g, f, Perm4.transposition(f, g))
        for f in range(4)
        for g in range(f + 1, 4)
    ]
    inherit = {(f, f): ((t, f), _ID) for f in range(4)}
    return _replace(tri, [t], 4, internal, inherit)


# -- 4-1 -------------------------------------------------------------------


def _setup_41(tri, vertex_id):
    """Match the star of the vertex against the 1-4 model; returns the
    (tet, label map) table or an inapplicability reason string."""
    vc = _vertex_class(tri, vertex_id)
    if vc.degree != 4:
        return None, "vertex %d has degree %d, not 4" % (vertex_id, vc.degree)
    if not vc.link_is_sphere:
        return None, "vertex %d does not have a sphere link" % vertex_id
    tets = [t for t, _ in vc.slots]
    if len(set(tets)) != 4:
        return None, "the tetrahedra around vertex %d are not distinct" % vertex_id
    center = dict(vc.slots)
    t0, c0 = vc.slots[0]
    f0 = c0
    star = {f0: (t0, _ID)}  # model label -> (tet, mu: model labels -> tet labels)
    for g in range(4):
        if g == f0:
            continue
        gl = tri.gluings[t0][g]
        if gl is None:
            return None, "the star of vertex %d meets the boundary" % vertex_id
        s, p = gl
        if s not in center or s == t0:
            return None, "the star of vertex %d is not embedded" % vertex_id
        if p[c0] != center[s]:
            return None, "the star of vertex %d is not a cone" % vertex_id
        star[g] = (s, p * Perm4.transposition(f0, g))
    if len({s for s, _ in star.values()}) != 4:
        return None, "the star of vertex %d is not embedded" % vertex_id
    # The model star glues K_g face h to K_h face g by the transposition
    # (g h); verify every pair not involving the base tetrahedron.
    for g in range(4):
        for h in range(g + 1, 4):
            if f0 in (g, h):
                continue
            tg, mug = star[g]
            th, muh = star[h]
            want = (th, muh * Perm4.transposition(g, h) * mug.inverse())
            if tri.gluings[tg][mug[h]] != want:
                return None, "the star of vertex %d is not the 1-4 cone" % vertex_id
    return star, None


def move_41(tri, vertex_id):
    """Remove a degree-4 vertex, replacing its four tetrahedra by one."""
    star, reason = _setup_41(tri, vertex_id)
    if reason:
        raise MoveNotApplicable(reason)
    return _move_41_ex(tri, star)[0]


def _move_41_ex(tri, star):
    inherit = {}
    for k in range(4):
        tk, muk = star[k]
        inherit[(0, k)] = ((tk, muk[k]), muk)
    return _replace(tri, [s for s, _ in star.values()], 1, [], inherit)


# -- 0-2 -------------------------------------------------------------------


def _positions_02(ec, tri=None):
    """Valid slot pairs for pillow insertion on this edge.

    Each slot selects the face crossed on leaving its wedge; the pillow is
    inserted along the two selected faces, which must be distinct face
    classes (an edge of degree >= 2 away from the boundary always has at
    least one such pair unless every incident face position repeats one
    face class).
    """
    d = ec.degree
    cuts = range(d - 1) if ec.is_boundary else range(d)
    if tri is None:
        return [(a, b) for a in cuts for b in cuts if a < b]
    lookup = tri.skeleton.face_lookup
    out = []
    for a in cuts:
        wa = ec.wedges[a]
        fa = lookup[(wa.tet, wa.exit_face)]
        for b in cuts:
            if b <= a:
                continue
            wb = ec.wedges[b]
            if lookup[(wb.tet, wb.exit_face)] != fa:
                out.append((a, b))
    return out


def _check_02(tri, edge_id, slot_a, slot_b):
    ec = _edge_class(tri, edge_id)
    d = ec.degree
    if not (0 <= slot_a < d and 0 <= slot_b < d):
        raise ParameterOutOfRange("edge %d has no slot pair (%d,%d)" % (edge_id, slot_a, slot_b))
    if slot_a == slot_b:
        return "the two chosen slots of edge %d coincide" % edge_id
    cuts = set(range(d - 1) if ec.is_boundary else range(d))
    if slot_a not in cuts or slot_b not in cuts:
        return "slot pair (%d,%d) of edge %d meets the boundary" % (slot_a, slot_b, edge_id)
    wa, wb = ec.wedges[slot_a], ec.wedges[slot_b]
    lookup = tri.skeleton.face_lookup
    if lookup[(wa.tet, wa.exit_face)] == lookup[(wb.tet, wb.exit_face)]:
        return (
            "slots (%d,%d) of edge %d select the same face class"
            % (slot_a, slot_b, edge_id)
        )
    return None


def move_02(tri, edge_id, slot_pair):
    """Insert a triangular pillow along two faces incident to an edge.

    slot_pair selects two slots of the edge class, hence two distinct faces
    incident to it.  Both faces are cut open and the two new tetrahedra
    fill the resulting cavity, each spanning one side of each cut.  One new
    edge class of degree 2 appears inside the pillow, the chosen edge's
    slot count grows by two (its class splits into the two arcs between
    the cuts; the 2-0 move on the new edge merges them back), and no
    vertex is created.
    """
    slot_a, slot_b = slot_pair
    reason = _check_02(tri, edge_id, slot_a, slot_b)
    if reason:
        raise MoveNotApplicable(reason)
    return _move_02_ex(tri, edge_id, slot_a, slot_b)[0]


def _move_02_ex(tri, edge_id, slot_a, slot_b):
    ec = _edge_class(tri, edge_id)
    d = ec.degree
    wa, wa2 = ec.wedges[slot_a], ec.wedges[(slot_a + 1) % d]
    wb, wb2 = ec.wedges[slot_b], ec.wedges[(slot_b + 1) % d]
    n = tri.n
    U, V = n, n + 1
    table = [list(row) for row in tri.gluings] + [[None] * 4, [None] * 4]

    # New tetrahedron labels: 0,1 = the edge's tail,head; 2 = the side
    # vertex of the wall behind, 3 = ahead.  The pillow's transverse edge
    # is 23; faces 0,1 glue the two tetrahedra to each other.
    def enter_map(w):
        return Perm4.from_images({w.tail: 0, w.head: 1, w.exit: 2, w.enter: 3})

    def exit_map(w):
        return Perm4.from_images({0: w.tail, 1: w.head, 3: w.enter, 2: w.exit})

    def set_gluing(t, f, t2, p):
        table[t][f] = (t2, p)
        table[t2][p[f]] = (t, p.inverse())

    flip = Perm4((0, 1, 3, 2))
    # U crosses from cut a to cut b, V from cut b back to cut a.
    set_gluing(wa.tet, wa.exit_face, U, enter_map(wa))
    set_gluing(U, 2, wb2.tet, exit_map(wb2))
    set_gluing(wb.tet, wb.exit_face, V, enter_map(wb))
    set_gluing(V, 2, wa2.tet, exit_map(wa2))
    set_gluing(U, 0, V, flip)
    set_gluing(U, 1, V, flip)
    info = MoveInfo({t: t for t in range(n)}, (U, V))
    return Triangulation(table), info


# -- 2-0 -------------------------------------------------------------------


def _check_20(tri, edge_id):
    ec = _edge_class(tri, edge_id)
    if ec.is_boundary:
        return "edge %d is a boundary edge" % edge_id
    if ec.degree != 2:
        return "edge %d has degree %d, not 2" % (edge_id, ec.degree)
    wu, wv = ec.wedges
    if wu.tet == wv.tet:
        return "both wedges of edge %d lie in one tetrahedron" % edge_id
    # Flattening identifies the two edges opposite the degree-2 edge; when
    # they already coincide the move would change the manifold.
    from .triangulation import EDGE_INDEX

    opp_u = tri.skeleton.edge_lookup[(wu.tet, EDGE_INDEX[wu.enter][wu.exit])][0]
    opp_v = tri.skeleton.edge_lookup[(wv.tet, EDGE_INDEX[wv.enter][wv.exit])][0]
    if opp_u == opp_v:
        return "the edges opposite edge %d coincide" % edge_id
    return None


def move_20(tri, edge_id):
    """Flatten the pillow around a degree-2 edge, removing two tetrahedra."""
    reason = _check_20(tri, edge_id)
    if reason:
        raise MoveNotApplicable(reason)
    tri2, _ = _move_20_ex(tri, edge_id)
    return tri2


def _move_20_ex(tri, edge_id):
    wu, wv = _edge_class(tri, edge_id).wedges
    m = Perm4.from_images(
        {wu.tail: wv.tail, wu.head: wv.head, wu.enter: wv.exit, wu.exit: wv.enter}
    )
    merge = {}
    for fu in (wu.tail, wu.head):
        fv = m[fu]
        merge[(wu.tet, fu)] = ((wv.tet, fv), m)
        merge[(wv.tet, fv)] = ((wu.tet, fu), m.inverse())
    if tri.n <= 2:
        raise MoveNotApplicable("flattening would remove the whole triangulation")
    return _flatten(tri, [wu.tet, wv.tet], merge)


# -- dispatch ---------------------------------------------------------------


def can_apply(tri, move):
    """Whether the move applies, with a reason when it does not."""
    kind, params = move.kind, move.params
    if kind == "23":
        reason = _check_23(tri, *params)
    elif kind == "32":
        reason = _check_32(tri, *params)
    elif kind == "14":
        if not (0 <= params[0] < tri.n):
            raise ParameterOutOfRange("no tetrahedron %d" % params[0])
        reason = None
    elif kind == "41":
        _, reason = _setup_41(tri, *params)
    elif kind == "02":
        reason = _check_02(tri, params[0], params[1], params[2])
    elif kind == "20":
        reason = _check_20(tri, *params)
        if reason is None:
            try:
                _move_20_ex(tri, params[0])
            except TriangulationError as exc:
                reason = str(exc)
    else:
        raise ParameterOutOfRange("unknown move kind %r" % kind)
    return reason is None, reason


def apply_move_ex(tri, move):
    """Apply a move, returning the result and its index bookkeeping."""
    ok, reason = can_apply(tri, move)
    if not ok:
        raise MoveNotApplicable(reason)
    kind, params = move.kind, move.params
    if kind == "23":
        return _move_23_ex(tri, *params)
    if kind == "32":
        return _move_32_ex(tri, *params)
    if kind == "14":
        return _move_14_ex(tri, *params)
    if kind == "41":
        star, _ = _setup_41(tri, *params)
        return _move_41_ex(tri, star)
    if kind == "02":
        return _move_02_ex(tri, params[0], params[1], params[2])
    return _move_20_ex(tri, *params)


def apply_move(tri, move):
    """Apply a move described by a :class:`Move` value."""
    return apply_move_ex(tri, move)[0]


def enumerate_moves(tri, kinds=("23", "32")):
    """All applicable moves of the requested kinds, deterministically ordered
    by kind (in the order 23, 32, 14, 41, 02, 20), then by parameters."""
    kinds = set(kinds)
    for k in kinds:
        if k not in MOVE_KINDS:
            raise ParameterOutOfRange("unknown move kind %r" % k)
    sk = tri.skeleton
    out = []
    if "23" in kinds:
        for t in range(tri.n):
            for f in range(4):
                gl = tri.gluings[t][f]
                if gl is None or gl[0] == t:
                    continue
                if (gl[0], gl[1][f]) < (t, f):
                    continue  # one move per face class
                out.append(Move("23", (t, f)))
    if "32" in kinds:
        for e in range(len(sk.edges)):
            if _check_32(tri, e) is None:
                out.append(Move("32", (e,)))
    if "14" in kinds:
        for t in range(tri.n):
            out.append(Move("14", (t,)))
    if "41" in kinds:
        for v in range(len(sk.vertices)):
            if _setup_41(tri, v)[1] is None:
                out.append(Move("41", (v,)))
    if "02" in kinds:
        for e, ec in enumerate(sk.edges):
            for a, b in _positions_02(ec, tri):
                out.append(Move("02", (e, a, b)))
    if "20" in kinds:
        for e in range(len(sk.edges)):
            if can_apply(tri, Move("20", (e,)))[0]:
                out.append(Move("20", (e,)))
    return out
