"""Independent oracle implementations used to pin expected values.

Everything here deliberately avoids the corresponding production code
paths: edge/vertex classes come from a parity union-find over slots (the
package walks wedge cycles), homology uses its own boundary conventions and
a recursive Smith reduction (the package pivots on smallest entries), the
taut enumeration is the unpruned 3^n product, the double description oracle
combines all ray pairs and filters by the definitional rank test (the
package prefilters by adjacency), and graph exploration deduplicates by
pairwise isomorphism matching instead of canonical signatures.
"""

import itertools
from fractions import Fraction

from pachner.perm4 import PERMS4
from pachner.triangulation import EDGE_VERTICES

# ---------------------------------------------------------------------------
# parity union-find over edge slots


class SignedUnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.sign = {x: 1 for x in items}
        self.ok = True

    def find(self, x):
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        s = 1
        for y in reversed(path):
            s *= self.sign[y]
            self.parent[y] = x
            self.sign[y] = s
        return x, self.sign[path[0]] if path else 1

    def union(self, x, y, rel_sign):
        rx, sx = self.find(x)
        ry, sy = self.find(y)
        if rx == ry:
            if sx * sy != rel_sign:
                self.ok = False
            return
        self.parent[rx] = ry
        self.sign[rx] = sx * sy * rel_sign


def edge_classes_oracle(tri):
    """Edge classes by union-find with orientation tracking.

    Returns (list of frozensets of slots (t, edge index), valid flag).
    """
    slots = [(t, e) for t in range(tri.n) for e in range(6)]
    uf = SignedUnionFind(slots)
    for t in range(tri.n):
        for f in range(4):
            gl = tri.gluings[t][f]
            if gl is None:
                continue
            t2, p = gl
            for e, (a, b) in enumerate(EDGE_VERTICES):
                if f in (a, b):
                    continue
                x, y = p[a], p[b]
                rel = 1 if x < y else -1
                e2 = EDGE_VERTICES.index((min(x, y), max(x, y)))
                uf.union((t, e), (t2, e2), rel)
    groups = {}
    for s in slots:
        root, _ = uf.find(s)
        groups.setdefault(root, set()).add(s)
    return sorted(frozenset(g) for g in groups.values()), uf.ok


def vertex_classes_oracle(tri):
    """Vertex classes by plain union-find over corners."""
    corners = [(t, v) for t in range(tri.n) for v in range(4)]
    parent = {c: c for c in corners}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for t in range(tri.n):
        for f in range(4):
            gl = tri.gluings[t][f]
            if gl is None:
                continue
            t2, p = gl
            for v in range(4):
                if v != f:
                    ra, rb = find((t, v)), find((t2, p[v]))
                    if ra != rb:
                        parent[ra] = rb
    groups = {}
    for c in corners:
        groups.setdefault(find(c), set()).add(c)
    return sorted(frozenset(g) for g in groups.values())


def link_euler_oracle(tri, vertex_slots, edge_groups):
    """Euler characteristic of a closed vertex link, by pure counting:
    chi = (edge ends at the vertex) - 3/2 corners + corners."""
    corner_count = len(vertex_slots)
    ends = 0
    for group in edge_groups:
        t, e = min(group)
        a, b = EDGE_VERTICES[e]
        for end in (a, b):
            if (t, end) in vertex_slots:
                ends += 1
    assert corner_count % 2 == 0
    return ends - 3 * corner_count // 2 + corner_count


# ---------------------------------------------------------------------------
# homology: independent boundary maps and a recursive Smith reduction


def smith_oracle(matrix):
    """Nonzero Smith invariant factors by recursion on the first nonzero."""
    m = [list(map(int, row)) for row in matrix]

    def reduce(rows):
        rows = [r[:] for r in rows if any(r)]
        if not rows:
            return []
        # Move a first nonzero to (0, 0).
        i, j = next(
            (i, j) for i, row in enumerate(rows) for j, x in enumerate(row) if x
        )
        rows[0], rows[i] = rows[i], rows[0]
        for r in rows:
            r[0], r[j] = r[j], r[0]
        while True:
            # Clear column 0 by row operations.
            again = False
            for i in range(1, len(rows)):
                while rows[i][0]:
                    q = rows[i][0] // rows[0][0]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[0])]
                    if rows[i][0]:
                        rows[0], rows[i] = rows[i], rows[0]
            for j in range(1, len(rows[0])):
                while rows[0][j]:
                    q = rows[0][j] // rows[0][0]
                    for r in rows:
                        r[j] -= q * r[0]
                    if rows[0][j]:
                        for r in rows:
                            r[0], r[j] = r[j], r[0]
                        again = True
            if not again:
                break
        pivot = abs(rows[0][0])
        rest = [r[1:] for r in rows[1:]]
        # Force divisibility: fold offending rows into the pivot row.
        for i, r in enumerate(rest):
            if any(x % pivot for x in r):
                rows[0] = [a + b for a, b in zip(rows[0], rows[1 + i])]
                return reduce(rows)
        return [pivot] + reduce(rest)

    return reduce(m)


def rank_oracle(matrix):
    rows = [[Fraction(x) for x in row] for row in matrix if any(row)]
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def homology_oracle(tri):
    """(free rank, invariant factors > 1) of the quotient complex.

    Uses max-slot representatives and explicit boundary conventions, shared
    with nothing in the package.
    """
    edge_groups, ok = edge_classes_oracle(tri)
    assert ok
    vertex_groups = vertex_classes_oracle(tri)
    uf = SignedUnionFind([(t, e) for t in range(tri.n) for e in range(6)])
    # Rebuild the signed union-find to query slot orientations.
    for t in range(tri.n):
        for f in range(4):
            gl = tri.gluings[t][f]
            if gl is None:
                continue
            t2, p = gl
            for e, (a, b) in enumerate(EDGE_VERTICES):
                if f in (a, b):
                    continue
                x, y = p[a], p[b]
                uf.union((t, e), (t2, EDGE_VERTICES.index((min(x, y), max(x, y)))), 1 if x < y else -1)

    edge_index = {}
    edge_rep_sign = {}
    for i, group in enumerate(edge_groups):
        rep = max(group)
        for slot in group:
            edge_index[slot] = i
        root_rep, s_rep = uf.find(rep)
        for slot in group:
            _, s = uf.find(slot)
            edge_rep_sign[slot] = s * s_rep  # orientation relative to rep
    vertex_index = {}
    for i, group in enumerate(vertex_groups):
        for c in group:
            vertex_index[c] = i

    E, V = len(edge_groups), len(vertex_groups)
    face_pairs = []
    seen = set()
    for t in range(tri.n):
        for f in range(4):
            if (t, f) in seen:
                continue
            gl = tri.gluings[t][f]
            assert gl is not None, "homology oracle needs a closed triangulation"
            t2, p = gl
            seen.add((t, f))
            seen.add((t2, p[f]))
            face_pairs.append((t, f))

    d1 = [[0] * E for _ in range(V)]
    for i, group in enumerate(edge_groups):
        t, e = max(group)
        a, b = EDGE_VERTICES[e]
        s = edge_rep_sign[(t, e)]
        head, tail = (b, a) if s == 1 else (a, b)
        d1[vertex_index[(t, head)]][i] += 1
        d1[vertex_index[(t, tail)]][i] -= 1

    d2 = [[0] * len(face_pairs) for _ in range(E)]
    for j, (t, f) in enumerate(face_pairs):
        a, b, c = [x for x in range(4) if x != f]
        for sgn, (x, y) in ((1, (b, c)), (-1, (a, c)), (1, (a, b))):
            e = EDGE_VERTICES.index((x, y))
            d2[edge_index[(t, e)]][j] += sgn * edge_rep_sign[(t, e)]

    r1 = rank_oracle(d1) if V else 0
    factors = smith_oracle(d2)
    rank = E - r1 - len(factors)
    torsion = tuple(d for d in factors if d > 1)
    return rank, torsion


# ---------------------------------------------------------------------------
# taut structures: the unpruned 3^n brute force


def taut_oracle(tri):
    """All taut assignments by checking every one of the 3^n choices."""
    edge_groups, ok = edge_classes_oracle(tri)
    assert ok
    n = tri.n
    pair_of_edge = (0, 1, 2, 2, 1, 0)
    out = []
    for choice in itertools.product(range(3), repeat=n):
        good = True
        for group in edge_groups:
            total = sum(1 for (t, e) in group if pair_of_edge[e] == choice[t])
            if total != 2:
                good = False
                break
        if good:
            vec = [Fraction(0)] * (3 * n)
            for t, k in enumerate(choice):
                vec[3 * t + k] = Fraction(1)
            out.append(tuple(vec))
    return out


# ---------------------------------------------------------------------------
# normal surfaces: brute-force double description and explicit cell counts


def _kernel_oracle(matrix, width):
    rows = [[Fraction(x) for x in row] for row in matrix]
    pivots = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = [x / rows[r][c] for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * width
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def _scale_oracle(vec):
    from math import gcd

    lcm = 1
    for x in vec:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def dd_oracle(tri):
    """Extreme rays of the standard solution cone, the slow way: combine
    every positive/negative ray pair and keep rays passing the definitional
    rank test (active constraints of rank dim-1)."""
    from pachner.nsurf import matching_system

    system = matching_system(tri)
    width = 7 * tri.n
    kernel = _kernel_oracle([list(r) for r in system.matrix], width)
    d = len(kernel)
    if d == 0:
        return []
    B = [[kernel[j][i] for j in range(d)] for i in range(width)]

    seed = []
    for i in range(width):
        if rank_oracle([B[j] for j in seed + [i]] ) > len(seed):
            seed.append(i)
        if len(seed) == d:
            break
    rays = []
    for j in range(d):
        # Solve seed-matrix * y = e_j.
        aug = [[B[seed[i]][k] for k in range(d)] + [Fraction(1 if i == j else 0)] for i in range(d)]
        for c in range(d):
            piv = next(i for i in range(c, d) if aug[i][c])
            aug[c], aug[piv] = aug[piv], aug[c]
            aug[c] = [x / aug[c][c] for x in aug[c]]
            for i in range(d):
                if i != c and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
        rays.append(tuple(row[-1] for row in aug))

    processed = list(seed)
    for i in range(width):
        if i in seed:
            continue
        values = [sum(b * y for b, y in zip(B[i], r)) for r in rays]
        keep = [r for r, s in zip(rays, values) if s >= 0]
        for (p, sp), (q, sq) in itertools.product(
            [(r, s) for r, s in zip(rays, values) if s > 0],
            [(r, s) for r, s in zip(rays, values) if s < 0],
        ):
            combo = tuple(
                Fraction(x) for x in _scale_oracle([sp * yq - sq * yp for yp, yq in zip(p, q)])
            )
            keep.append(combo)
        processed.append(i)
        pruned = []
        seen = set()
        for r in keep:
            key = tuple(Fraction(x) for x in _scale_oracle(list(r)))
            if key in seen:
                continue
            seen.add(key)
            active = [B[k] for k in processed if sum(b * y for b, y in zip(B[k], r)) == 0]
            if rank_oracle(active) == d - 1:
                pruned.append(key)
        rays = pruned

    out = set()
    for r in rays:
        x = [sum(b * y for b, y in zip(B[i], r)) for i in range(width)]
        ints = _scale_oracle([Fraction(v) for v in x])
        if all(v >= 0 for v in ints) and any(ints):
            out.add(tuple(ints))
    return sorted(out)


def surface_chi_oracle(tri, vec):
    """Euler characteristic by counting the surface's cells per script:
    faces are the pieces, arcs are counted per face slot and halved, and
    vertices are the crossings with the triangulation's edges, walked once
    per edge class of the union-find oracle."""
    n = tri.n
    pair_of_edge = (0, 1, 2, 2, 1, 0)

    def tri_count(t, v):
        return vec[7 * t + v]

    def quad_count(t, k):
        return vec[7 * t + 4 + k]

    F = sum(vec)
    E2 = 0  # arcs, each shared by two pieces across a face
    for t in range(n):
        for f in range(4):
            for v in range(4):
                if v == f:
                    continue
                k = pair_of_edge[EDGE_VERTICES.index((min(f, v), max(f, v)))]
                E2 += tri_count(t, v) + quad_count(t, k)
    assert E2 % 2 == 0
    E = E2 // 2
    # Vertices: points where the surface crosses an edge of the
    # triangulation; walk every edge class and count crossings once.
    edge_groups, ok = edge_classes_oracle(tri)
    assert ok
    V = 0
    for group in edge_groups:
        t, e = min(group)
        a, b = EDGE_VERTICES[e]
        w = tri_count(t, a) + tri_count(t, b)
        for k in range(3):
            if k != pair_of_edge[e]:
                w += quad_count(t, k)
        V += w
    return V - E + F


# ---------------------------------------------------------------------------
# exploration: dedup by explicit isomorphism matching


def isomorphic_oracle(t1, t2):
    """Isomorphism test by propagating a seed correspondence."""
    if t1.n != t2.n:
        return False
    for t0 in range(t2.n):
        for p in PERMS4:
            phi = {0: (t0, p)}
            stack = [0]
            good = True
            while stack and good:
                s = stack.pop()
                s2, rho = phi[s]
                for f in range(4):
                    gl1 = t1.gluings[s][f]
                    gl2 = t2.gluings[s2][rho[f]]
                    if (gl1 is None) != (gl2 is None):
                        good = False
                        break
                    if gl1 is None:
                        continue
                    u, q = gl1
                    u2, q2 = gl2
                    want = q2 * rho * q.inverse()
                    if u in phi:
                        if phi[u] != (u2, want):
                            good = False
                            break
                    else:
                        phi[u] = (u2, want)
                        stack.append(u)
            if good and len(phi) == t1.n:
                return True
    return False


def explore_oracle(start, max_tets):
    """Slow BFS with isomorphism-matching dedup; returns (nodes, arcs)."""
    from pachner.moves import apply_move, enumerate_moves

    reps = [start]
    arcs = set()
    frontier = [0]
    while frontier:
        nxt = []
        for idx in frontier:
            tri = reps[idx]
            for move in enumerate_moves(tri, ("23", "32")):
                result = apply_move(tri, move)
                if result.n > max_tets:
                    continue
                found = None
                for j, rep in enumerate(reps):
                    if isomorphic_oracle(result, rep):
                        found = j
                        break
                if found is None:
                    reps.append(result)
                    found = len(reps) - 1
                    nxt.append(found)
                if found != idx:
                    arcs.add((min(idx, found), max(idx, found)))
        frontier = nxt
    return len(reps), len(arcs)
