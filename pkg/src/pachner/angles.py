"""Angle structures: generalised, semi, strict and taut.

An angle vector assigns one rational number (in units of pi) to each of the
three opposite-edge pairs of each tetrahedron; entry (t, k) lives at index
3t + k.  Pair 0 couples edges 01 and 23, pair 1 couples 02 and 13, pair 2
couples 03 and 12.  The defining linear system requires the three angles of
each tetrahedron to sum to 1 and the angles identified into each edge class
to sum to 2.  All arithmetic here is exact; verification is equality, never
tolerance.

Value ranges distinguish the flavours: any reals give a generalised angle
structure, [0,1] a semi-angle structure, (0,1) a strict one and {0,1} a
taut one.  Strict existence is decided by maximizing the margin eps with
constraints eps <= entries <= 1 - eps; a positive optimal margin is the
decidable formulation of the open-interval condition.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import HasBoundaryFaces, LengthMismatch
from .exact import simplex_maximize, solve_particular
from .triangulation import OPPOSITE_PAIR

__all__ = [
    "AngleSystem",
    "StrictResult",
    "angle_system",
    "find_generalised",
    "find_semi",
    "find_strict",
    "find_taut",
    "verify",
]

_ZERO, _ONE = Fraction(0), Fraction(1)


@dataclass(frozen=True)
class AngleSystem:
    """The integer linear system of the angle-structure definition.

    matrix has n tetrahedron rows (rhs 1) followed by one row per edge
    class (rhs 2); columns are the 3n opposite-edge pairs.
    """

    n: int
    matrix: tuple  # of row tuples, ints
    rhs: tuple  # ints


def angle_system(tri):
    """Build the tetrahedron and edge equations for a closed triangulation."""
    if not tri.is_closed():
        raise HasBoundaryFaces("angle structures need all faces glued")
    n = tri.n
    rows = []
    rhs = []
    for t in range(n):
        row = [0] * (3 * n)
        for k in range(3):
            row[3 * t + k] = 1
        rows.append(tuple(row))
        rhs.append(1)
    for ec in tri.skeleton.edges:
        row = [0] * (3 * n)
        for w in ec.wedges:
            row[3 * w.tet + OPPOSITE_PAIR[w.edge_index]] += 1
        rows.append(tuple(row))
        rhs.append(2)
    return AngleSystem(n, tuple(rows), tuple(rhs))


def verify(tri, vector, kind="generalised"):
    """Exact check of the equations plus the range condition of the kind."""
    system = angle_system(tri)
    if len(vector) != 3 * system.n:
        raise LengthMismatch("expected %d entries, got %d" % (3 * system.n, len(vector)))
    vec = [Fraction(x) for x in vector]
    for row, b in zip(system.matrix, system.rhs):
        if sum(c * x for c, x in zip(row, vec) if c) != b:
            return False
    if kind == "generalised":
        return True
    if kind == "semi":
        return all(_ZERO <= x <= _ONE for x in vec)
    if kind == "strict":
        return all(_ZERO < x < _ONE for x in vec)
    if kind == "taut":
        return all(x == _ZERO or x == _ONE for x in vec)
    raise ValueError("unknown angle-structure kind %r" % kind)


def find_generalised(tri):
    """An exact solution with unrestricted entries, or None when the system
    is inconsistent."""
    system = angle_system(tri)
    x = solve_particular(system.matrix, system.rhs)
    if x is None:
        return None
    return tuple(x)


@dataclass(frozen=True)
class StrictResult:
    """Outcome of the strict-angle-structure search.

    margin is the optimal eps (None when even the equalities are
    infeasible); vector is a maximizing angle vector when margin > 0.
    """

    vector: tuple
    margin: Fraction

    @property
    def found(self):
        return self.margin is not None and self.margin > 0


def find_strict(tri):
    """Maximize the margin eps with eps <= entries <= 1 - eps, exactly.

    The entries are substituted as y + eps with y >= 0 and the upper bounds
    carry slacks, so the whole search is one equality-form LP; eps itself is
    split into a difference of nonnegatives since it may be negative.
    """
    system = angle_system(tri)
    m = 3 * system.n
    ncols = 2 * m + 2  # y, s, eps+, eps-
    rows, rhs = [], []
    for row, b in zip(system.matrix, system.rhs):
        deg = sum(row)
        new = list(row) + [0] * m + [deg, -deg]
        rows.append(new)
        rhs.append(b)
    for i in range(m):
        new = [0] * ncols
        new[i] = 1
        new[m + i] = 1
        new[2 * m] = 2
        new[2 * m + 1] = -2
        rows.append(new)
        rhs.append(1)
    c = [0] * ncols
    c[2 * m] = 1
    c[2 * m + 1] = -1
    status, x, value = simplex_maximize(rows, rhs, c)
    if status == "infeasible":
        return StrictResult(None, None)
    assert status == "optimal", "strict-angle LP cannot be unbounded"
    eps = value
    if eps <= 0:
        return StrictResult(None, eps)
    vector = tuple(x[i] + eps for i in range(m))
    return StrictResult(vector, eps)


def find_semi(tri):
    """A solution with entries in [0,1], or None when none exists."""
    system = angle_system(tri)
    m = 3 * system.n
    rows, rhs = [], []
    for row, b in zip(system.matrix, system.rhs):
        rows.append(list(row) + [0] * m)
        rhs.append(b)
    for i in range(m):
        new = [0] * (2 * m)
        new[i] = 1
        new[m + i] = 1
        rows.append(new)
        rhs.append(1)
    status, x, _ = simplex_maximize(rows, rhs, [0] * (2 * m))
    if status != "optimal":
        return None
    return tuple(x[:m])


def find_taut(tri):
    """All taut angle structures, by backtracking over the 3^n choices of
    which opposite-edge pair carries the angle pi in each tetrahedron.

    Partial edge sums prune the search: a sum above 2, or one that cannot
    reach 2 with the remaining tetrahedra, cuts the branch.
    """
    system = angle_system(tri)
    n = system.n
    edge_rows = system.matrix[n:]
    ne = len(edge_rows)
    # coeff[e][t][k], plus per-edge maxima/minima of the per-tet contribution.
    coeff = [[[row[3 * t + k] for k in range(3)] for t in range(n)] for row in edge_rows]
    max_tail = [[0] * (n + 1) for _ in range(ne)]
    min_tail = [[0] * (n + 1) for _ in range(ne)]
    for e in range(ne):
        for t in range(n - 1, -1, -1):
            max_tail[e][t] = max_tail[e][t + 1] + max(coeff[e][t])
            min_tail[e][t] = min_tail[e][t + 1] + min(coeff[e][t])

    results = []
    sums = [0] * ne
    choice = [0] * n

    def recurse(t):
        if t == n:
            if all(s == 2 for s in sums):
                vec = [_ZERO] * (3 * n)
                for tt in range(n):
                    vec[3 * tt + choice[tt]] = _ONE
                results.append(tuple(vec))
            return
        for k in range(3):
            ok = True
            for e in range(ne):
                s = sums[e] + coeff[e][t][k]
                if s > 2 or s + max_tail[e][t + 1] < 2 or s + min_tail[e][t + 1] > 2:
                    ok = False
                    break
            if not ok:
                continue
            for e in range(ne):
                sums[e] += coeff[e][t][k]
            choice[t] = k
            recurse(t + 1)
            for e in range(ne):
                sums[e] -= coeff[e][t][k]

    recurse(0)
    return results
