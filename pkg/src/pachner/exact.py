"""Exact linear algebra over the rationals and the integers.

Everything here works on plain lists of :class:`fractions.Fraction` (or int)
entries.  The matrices arising from triangulations are tiny (tens of rows),
so clarity wins over asymptotics: Gaussian elimination with exact pivots, a
textbook two-phase primal simplex with Bland's rule, and Smith normal form
by repeated pivoting on a smallest nonzero entry.
"""

from fractions import Fraction
from math import gcd

__all__ = [
    "rank",
    "rref",
    "solve_particular",
    "kernel_basis",
    "smith_invariant_factors",
    "integer_ray",
    "simplex_maximize",
]


def rref(matrix):
    """Reduced row echelon form.  Returns (rows, pivot column list)."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix):
    return len(rref(matrix)[1])


def solve_particular(matrix, rhs):
    """One exact solution of A x = b, or None when inconsistent."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    for row in rows:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        if c == ncols:
            return None
        x[c] = rows[r][-1]
    return x


def kernel_basis(matrix):
    """A basis of the rational null space of A, as a list of vectors."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def integer_ray(vector, keep_sign=False):
    """Scale a rational vector to the smallest integer vector on its ray.

    Unless keep_sign is set, the sign is normalized so that the first
    nonzero entry is positive; keep_sign preserves the direction (needed
    when the vector represents a ray of a cone).
    """
    fracs = [Fraction(x) for x in vector]
    lcm = 1
    for x in fracs:
        if x.denominator != 1:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    if not keep_sign:
        lead = next((x for x in ints if x != 0), 0)
        if lead < 0:
            ints = [-x for x in ints]
    return ints


def smith_invariant_factors(matrix):
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    m = [list(map(int, row)) for row in matrix]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    factors = []
    top = 0
    while top < min(nr, nc):
        # Find a smallest-magnitude nonzero entry to pivot on.
        best = None
        for i in range(top, nr):
            for j in range(top, nc):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[top], m[bi] = m[bi], m[top]
        for row in m:
            row[top], row[bj] = row[bj], row[top]
        # Clear the pivot row and column; restart if a remainder appears,
        # since it is strictly smaller than the pivot.
        while True:
            redo = False
            for i in range(top + 1, nr):
                q = m[i][top] // m[top][top]
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[top])]
                if m[i][top] != 0:
                    m[top], m[i] = m[i], m[top]
                    redo = True
                    break
            if redo:
                continue
            for j in range(top + 1, nc):
                q = m[top][j] // m[top][top]
                if q:
                    for row in m:
                        row[j] -= q * row[top]
                if m[top][j] != 0:
                    for row in m:
                        row[top], row[j] = row[j], row[top]
                    redo = True
                    break
            if not redo:
                break
        # Ensure the pivot divides every remaining entry.
        p = abs(m[top][top])
        witness = None
        for i in range(top + 1, nr):
            for j in range(top + 1, nc):
                if m[i][j] % p != 0:
                    witness = i
                    break
            if witness is not None:
                break
        if witness is not None:
            m[top] = [a + b for a, b in zip(m[top], m[witness])]
            continue
        factors.append(p)
        top += 1
    # Fix up the divisibility chain (pivoting order already enforces it,
    # but normalize defensively).
    for i in range(len(factors) - 1):
        for j in range(i + 1, len(factors)):
            a, b = factors[i], factors[j]
            g = gcd(a, b)
            factors[i], factors[j] = g, a * b // g
    return factors


_INFEASIBLE = "infeasible"
_OPTIMAL = "optimal"
_UNBOUNDED = "unbounded"


def _pivot(tableau, basis, row, col):
    pv = tableau[row][col]
    tableau[row] = [x / pv for x in tableau[row]]
    for i, trow in enumerate(tableau):
        if i != row and trow[col] != 0:
            factor = trow[col]
            tableau[i] = [a - factor * b for a, b in zip(trow, tableau[row])]
    basis[row] = col


def _simplex_core(tableau, basis, ncols):
    """Run the simplex method on a tableau whose last row is the objective
    (to be maximized) and last column the rhs.  Bland's rule, exact pivots.
    """
    nrows = len(tableau) - 1
    while True:
        obj = tableau[-1]
        col = next((j for j in range(ncols) if obj[j] > 0), None)
        if col is None:
            return _OPTIMAL
        best = None
        for i in range(nrows):
            if tableau[i][col] > 0:
                ratio = tableau[i][-1] / tableau[i][col]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return _UNBOUNDED
        _pivot(tableau, basis, best[1], col)


def simplex_maximize(A, b, c):
    """Maximize c.x subject to A x = b, x >= 0, exactly.

    Returns (status, x, value); x and value are None unless optimal.
    """
    nrows = len(A)
    ncols = len(A[0]) if nrows else len(c)
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    c = [Fraction(x) for x in c]
    for i in range(nrows):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]

    # Phase 1: artificial variables, minimize their sum.
    width = ncols + nrows
    tableau = []
    for i in range(nrows):
        row = A[i] + [Fraction(1) if j == i else Fraction(0) for j in range(nrows)]
        tableau.append(row + [b[i]])
    # Objective row convention: for feasible x, objective = -row[-1] plus
    # the row's coefficients against x; maximizing -sum(artificials) makes
    # the initial row the column sums of the original part.
    obj = [Fraction(0)] * (width + 1)
    for i in range(nrows):
        for j in range(ncols):
            obj[j] += tableau[i][j]
        obj[-1] += tableau[i][-1]
    tableau.append(obj)
    basis = [ncols + i for i in range(nrows)]
    _simplex_core(tableau, basis, width)
    if tableau[-1][-1] != 0:
        return _INFEASIBLE, None, None
    # Drive remaining artificials out of the basis where possible.
    for i in range(nrows):
        if basis[i] >= ncols:
            col = next((j for j in range(ncols) if tableau[i][j] != 0), None)
            if col is not None:
                _pivot(tableau, basis, i, col)
    keep = [i for i in range(nrows) if basis[i] < ncols]

    # Phase 2 on the original columns only.
    tab2 = [[tableau[i][j] for j in range(ncols)] + [tableau[i][-1]] for i in keep]
    basis2 = [basis[i] for i in keep]
    obj2 = list(c) + [Fraction(0)]
    for i, bv in enumerate(basis2):
        if obj2[bv] != 0:
            factor = obj2[bv]
            obj2 = [a - factor * bbb for a, bbb in zip(obj2, tab2[i])]
    tab2.append(obj2)
    status = _simplex_core(tab2, basis2, ncols)
    if status != _OPTIMAL:
        return status, None, None
    x = [Fraction(0)] * ncols
    for i, bv in enumerate(basis2):
        x[bv] = tab2[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return _OPTIMAL, x, value
