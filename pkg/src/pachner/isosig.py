"""Canonical isomorphism signatures.

Two triangulations receive the same signature exactly when they differ by a
relabelling of tetrahedra and of vertex labels within tetrahedra.  The
canonical form is found by trying every (start tetrahedron, start labelling)
pair: tetrahedra are renumbered in BFS first-visit order scanning faces
0..3, each newly discovered tetrahedron inherits the vertex labelling
induced by the discovering gluing (making the tree gluing the identity
permutation), and the lexicographically smallest encoding wins.

Line format: ``n|field,field,field,field;...`` with one 4-field group per
tetrahedron in face order; a field is ``b`` for an unglued face or
``<destination>/<p0><p1><p2><p3>`` for a glued one.
"""

from .errors import DisconnectedTriangulation, FormatError
from .perm4 import PERMS4, Perm4
from .triangulation import Triangulation

__all__ = ["iso_sig", "encode", "decode"]


def _relabel_encoding(tri, start, start_perm):
    """Encoding of the BFS relabelling seeded at (start, start_perm)."""
    n = tri.n
    order = [start]  # new index -> old tetrahedron
    new_index = {start: 0}
    rho = {start: start_perm}  # old tet -> (old labels -> new labels)
    fields = []
    head = 0
    while head < len(order):
        old = order[head]
        rho_t = rho[old]
        rho_inv = rho_t.inverse()
        for new_f in range(4):
            gl = tri.gluings[old][rho_inv[new_f]]
            if gl is None:
                fields.append("b")
                continue
            t2, q = gl
            if t2 not in new_index:
                new_index[t2] = len(order)
                order.append(t2)
                rho[t2] = rho_t * q.inverse()
            new_perm = rho[t2] * q * rho_inv
            fields.append("%d/%s" % (new_index[t2], new_perm))
        head += 1
    if len(order) != n:
        raise DisconnectedTriangulation("triangulation is not connected")
    groups = [",".join(fields[4 * i : 4 * i + 4]) for i in range(n)]
    return "%d|%s" % (n, ";".join(groups))


def iso_sig(tri):
    """The canonical signature string of a connected triangulation."""
    best = None
    for start in range(tri.n):
        for p in PERMS4:
            s = _relabel_encoding(tri, start, p)
            if best is None or s < best:
                best = s
    return best


def encode(tri):
    """Encode the triangulation with its current labelling (not canonical)."""
    fields = []
    for t in range(tri.n):
        group = []
        for f in range(4):
            gl = tri.gluings[t][f]
            group.append("b" if gl is None else "%d/%s" % (gl[0], gl[1]))
        fields.append(",".join(group))
    return "%d|%s" % (tri.n, ";".join(fields))


def decode(text):
    """Rebuild a triangulation from a signature/encoding string."""
    text = text.strip()
    try:
        head, body = text.split("|", 1)
        n = int(head)
    except ValueError:
        raise FormatError("malformed signature %r" % text) from None
    groups = body.split(";")
    if n < 1 or len(groups) != n:
        raise FormatError("signature declares %d tetrahedra, found %d groups" % (n, len(groups)))
    table = []
    for t, group in enumerate(groups):
        parts = group.split(",")
        if len(parts) != 4:
            raise FormatError("tetrahedron %d does not have 4 fields" % t)
        row = []
        for f, part in enumerate(parts):
            if part == "b":
                row.append(None)
                continue
            try:
                dest, perm = part.split("/")
                dest = int(dest)
                images = tuple(int(ch) for ch in perm)
            except ValueError:
                raise FormatError("malformed field %r" % part) from None
            if len(images) != 4:
                raise FormatError("malformed permutation in %r" % part)
            try:
                row.append((dest, Perm4(images)))
            except ValueError as exc:
                raise FormatError(str(exc)) from None
        table.append(row)
    try:
        return Triangulation(table)
    except Exception as exc:
        raise FormatError("inconsistent signature: %s" % exc) from None
