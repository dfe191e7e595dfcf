"""Text file formats: .tri gluing tables, census files, move scripts.

.tri format (version 1):
    line 1:            ``tri 1 <n>``
    one line per glued face pair:
        ``g <t> <f> <t'> <f'> <p0><p1><p2><p3>``
    where the four digits are the images of vertex labels 0..3 under the
    gluing permutation.  Unglued faces are simply absent; ``#`` starts a
    comment.  The parser rejects duplicate or inconsistent entries.

Census files hold one isomorphism signature per line, ``#`` comments
allowed.  Move scripts hold one move per line in the syntax of
:meth:`pachner.moves.Move.parse`; path files are move scripts with a
leading ``start <isoSig>`` header.
"""

from .errors import FormatError, TriangulationError
from .isosig import decode
from .moves import Move
from .perm4 import Perm4
from .triangulation import Triangulation

__all__ = [
    "parse_tri",
    "format_tri",
    "read_tri",
    "write_tri",
    "parse_census",
    "format_census",
    "parse_move_script",
    "format_move_script",
    "parse_path_file",
    "format_path_file",
]


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_tri(text):
    """Parse .tri text into a Triangulation."""
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty .tri input")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "tri" or parts[1] != "1":
        raise FormatError("line %d: expected header 'tri 1 <n>'" % lineno)
    try:
        n = int(parts[2])
    except ValueError:
        raise FormatError("line %d: bad tetrahedron count" % lineno) from None
    entries = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 6 or parts[0] != "g":
            raise FormatError("line %d: expected 'g <t> <f> <t2> <f2> <perm>'" % lineno)
        try:
            t, f, t2, f2 = (int(x) for x in parts[1:5])
            images = tuple(int(ch) for ch in parts[5])
        except ValueError:
            raise FormatError("line %d: malformed gluing entry" % lineno) from None
        if len(images) != 4:
            raise FormatError("line %d: permutation needs 4 digits" % lineno)
        try:
            entries.append((t, f, t2, f2, Perm4(images)))
        except ValueError as exc:
            raise FormatError("line %d: %s" % (lineno, exc)) from None
    try:
        return Triangulation.from_gluings(n, entries)
    except TriangulationError as exc:
        raise FormatError("inconsistent gluing table: %s" % exc) from None


def format_tri(tri, comment=None):
    """Render a Triangulation in .tri format (one line per glued pair)."""
    out = []
    if comment:
        for line in comment.splitlines():
            out.append("# " + line)
    out.append("tri 1 %d" % tri.n)
    for t in range(tri.n):
        for f in range(4):
            gl = tri.gluings[t][f]
            if gl is None:
                continue
            t2, p = gl
            if (t, f) <= (t2, p[f]):
                out.append("g %d %d %d %d %s" % (t, f, t2, p[f], p))
    return "\n".join(out) + "\n"


def read_tri(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tri(fh.read())


def write_tri(path, tri, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_tri(tri, comment))


def parse_census(text):
    """Signature strings from a census file, decoded and validated."""
    out = []
    for lineno, line in _content_lines(text):
        try:
            out.append((line, decode(line)))
        except FormatError as exc:
            raise FormatError("line %d: %s" % (lineno, exc)) from None
    return out


def format_census(sigs):
    return "".join(s + "\n" for s in sigs)


def parse_move_script(text):
    moves = []
    for lineno, line in _content_lines(text):
        try:
            moves.append(Move.parse(line))
        except TriangulationError as exc:
            raise FormatError("line %d: %s" % (lineno, exc)) from None
    return moves


def format_move_script(moves):
    return "".join(str(m) + "\n" for m in moves)


def parse_path_file(text):
    """Parse a path file: ``start <isoSig>`` then one move per line."""
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty path file")
    lineno, header = lines[0]
    parts = header.split(None, 1)
    if len(parts) != 2 or parts[0] != "start":
        raise FormatError("line %d: expected 'start <isoSig>'" % lineno)
    try:
        start = decode(parts[1])
    except FormatError as exc:
        raise FormatError("line %d: %s" % (lineno, exc)) from None
    moves = []
    for lineno, line in lines[1:]:
        try:
            moves.append(Move.parse(line))
        except TriangulationError as exc:
            raise FormatError("line %d: %s" % (lineno, exc)) from None
    return start, moves


def format_path_file(start_sig, moves):
    return "start %s\n" % start_sig + format_move_script(moves)
