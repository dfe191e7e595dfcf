"""Pachner graph exploration, path finding and degree-one-free rewriting.

The Pachner graph has one node per isomorphism class of triangulations
(keyed by canonical signature) and one arc per pair of classes related by a
move; parallel moves between the same pair collapse to a single arc, and
self-moves are dropped.  Exploration works per size bound, since the full
graph is infinite: every report produced here is bounded-size evidence,
never a connectivity proof.

Path rewriting implements the triangular-pillow trick: when a move along a
path is about to create a degree-one edge, a 0-2 pillow is inserted on a
face incident to the endangered edge just before the move, carried along,
and removed by a 2-0 move at the earliest later step where its removal no
longer exposes a degree-one edge.  All pillow placements incident to the
endangered edges are searched, with backtracking.
"""

import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import angles, geom, nsurf
from .errors import (
    BudgetExceeded,
    NotIdeal,
    ParameterOutOfRange,
    RewriteFailed,
    SizeBoundExceeded,
    TriangulationError,
)
from .isosig import decode
from .moves import (
    Move,
    _positions_02,
    apply_move,
    apply_move_ex,
    can_apply,
    enumerate_moves,
)
from .triangulation import EDGE_INDEX

__all__ = [
    "PROPERTIES",
    "PachnerGraph",
    "MovePath",
    "ConnectivityReport",
    "has_degree_one_edge",
    "explore",
    "find_path",
    "connectivity_report",
    "rewrite_path_degree1free",
    "replay",
]

DEFAULT_NODE_BUDGET = 10 ** 6


def has_degree_one_edge(tri):
    """True when some edge class has degree 1."""
    return any(ec.degree == 1 for ec in tri.skeleton.edges)


def _prop_degree1free(tri):
    return not has_degree_one_edge(tri)


def _prop_strict(tri):
    return tri.is_closed() and angles.find_strict(tri).found


def _prop_taut(tri):
    return tri.is_closed() and bool(angles.find_taut(tri))


def _prop_semi(tri):
    return tri.is_closed() and angles.find_semi(tri) is not None


def _prop_geometric(tri):
    try:
        return geom.is_geometric_candidate(tri)
    except (NotIdeal, TriangulationError):
        return False


def _prop_0_efficient(tri):
    return nsurf.check_0_efficient(tri).passed


def _prop_1_efficient(tri):
    return nsurf.check_1_efficient(tri).passed


# Node predicates for subgraph exploration, all vertex-level / bounded-size
# decision procedures from the sibling modules.
PROPERTIES = {
    "Degree1Free": _prop_degree1free,
    "StrictAngle": _prop_strict,
    "TautAngle": _prop_taut,
    "SemiAngle": _prop_semi,
    "GeometricCandidate": _prop_geometric,
    "ZeroEfficient": _prop_0_efficient,
    "OneEfficient": _prop_1_efficient,
}


def resolve_property(name):
    for key, fn in PROPERTIES.items():
        if key.lower() == name.lower():
            return key, fn
    raise ParameterOutOfRange(
        "unknown property %r (known: %s)" % (name, ", ".join(PROPERTIES))
    )


@dataclass
class PachnerGraph:
    """A bounded, deduplicated piece of the Pachner graph.

    nodes maps each signature to {"n", "depth", "props"}; arcs hold
    (source sig, target sig, move) triples where applying the move to the
    decoded source signature yields the target signature.
    """

    max_tets: int
    move_kinds: tuple
    nodes: dict = field(default_factory=dict)
    arcs: list = field(default_factory=list)
    predicate: str = None

    @property
    def node_count(self):
        return len(self.nodes)

    @property
    def arc_count(self):
        return len(self.arcs)

    def neighbours(self):
        adj = {sig: set() for sig in self.nodes}
        for a, b, _ in self.arcs:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def _expand(sig, move_kinds, max_tets):
    tri = decode(sig)
    out = []
    for move in enumerate_moves(tri, move_kinds):
        result = apply_move(tri, move)
        if result.n > max_tets:
            continue
        out.append((move, result.iso_sig(), result))
    return out


def explore(
    start,
    max_tets,
    move_kinds=("23", "32"),
    predicate=None,
    node_budget=DEFAULT_NODE_BUDGET,
    threads=None,
):
    """BFS closure of a triangulation under moves, up to isomorphism.

    Nodes beyond max_tets tetrahedra are never created.  When a predicate
    name is given, every node is tested and only satisfying nodes are
    expanded, so non-satisfying neighbours appear as boundary nodes of the
    explored subgraph.  Raises BudgetExceeded past node_budget nodes.
    """
    if start.n == 1:
        warnings.warn(
            "exploration from a single-tetrahedron triangulation: "
            "2-3/3-2 connectivity excludes this case",
            stacklevel=2,
        )
    if max_tets < start.n:
        raise ParameterOutOfRange("max_tets %d below starting size %d" % (max_tets, start.n))
    prop_fn = None
    prop_name = None
    if predicate is not None:
        prop_name, prop_fn = resolve_property(predicate)
    if threads is None:
        threads = int(os.environ.get("TRI_THREADS", "1"))

    graph = PachnerGraph(max_tets=max_tets, move_kinds=tuple(sorted(move_kinds)), predicate=prop_name)
    start_sig = start.iso_sig()

    def add_node(sig, tri, depth):
        if len(graph.nodes) >= node_budget:
            raise BudgetExceeded("node budget %d exceeded" % node_budget)
        props = {}
        if prop_fn is not None:
            props[prop_name] = bool(prop_fn(tri))
        graph.nodes[sig] = {"n": tri.n, "depth": depth, "props": props}

    add_node(start_sig, start, 0)
    frontier = [start_sig]
    seen_arcs = set()
    depth = 0
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while frontier:
            depth += 1
            expand_now = [
                sig
                for sig in frontier
                if prop_fn is None or graph.nodes[sig]["props"][prop_name]
            ]
            if pool is not None:
                batches = list(
                    pool.map(lambda s: _expand(s, graph.move_kinds, max_tets), expand_now)
                )
            else:
                batches = [_expand(s, graph.move_kinds, max_tets) for s in expand_now]
            next_frontier = []
            for sig, batch in zip(expand_now, batches):
                for move, sig2, result in batch:
                    if sig2 == sig:
                        continue  # self-moves would be loops; the graph is simple
                    if sig2 not in graph.nodes:
                        add_node(sig2, result, depth)
                        next_frontier.append(sig2)
                    key = (sig, sig2) if sig <= sig2 else (sig2, sig)
                    if key not in seen_arcs:
                        seen_arcs.add(key)
                        graph.arcs.append((sig, sig2, move))
            frontier = next_frontier
    finally:
        if pool is not None:
            pool.shutdown()
    return graph


@dataclass(frozen=True)
class MovePath:
    """A concrete move sequence: moves apply literally, one after another,
    starting from ``start``; signatures[i] is the signature after move i."""

    start: object
    moves: tuple
    signatures: tuple

    @property
    def end_sig(self):
        return self.signatures[-1] if self.signatures else self.start.iso_sig()


def replay(start, moves):
    """Apply moves in sequence; returns (states, signatures)."""
    states = [start]
    sigs = []
    tri = start
    for move in moves:
        tri = apply_move(tri, move)
        states.append(tri)
        sigs.append(tri.iso_sig())
    return states, sigs


def make_path(start, moves):
    _, sigs = replay(start, moves)
    return MovePath(start, tuple(moves), tuple(sigs))


def _sig_sequence_to_moves(start, sig_sequence):
    """Turn a signature geodesic into literal moves step by step."""
    moves = []
    tri = start
    for target in sig_sequence:
        found = None
        for move in enumerate_moves(tri, ("23", "32")):
            result = apply_move(tri, move)
            if result.iso_sig() == target:
                found = (move, result)
                break
        assert found is not None, "BFS arc must be replayable"
        moves.append(found[0])
        tri = found[1]
    return moves


def find_path(tri_a, tri_b, max_tets, node_budget=DEFAULT_NODE_BUDGET):
    """Shortest 2-3/3-2 path between two triangulations within the bound.

    Bidirectional BFS over canonical signatures; returns a MovePath
    anchored at tri_a, or None when the bounded graphs do not meet.
    """
    sig_a, sig_b = tri_a.iso_sig(), tri_b.iso_sig()
    if sig_a == sig_b:
        return MovePath(tri_a, (), ())
    parents = ({sig_a: None}, {sig_b: None})
    frontiers = ([sig_a], [sig_b])
    total = 2

    def reconstruct(meet):
        back = []
        cur = meet
        while parents[0][cur] is not None:
            back.append(cur)
            cur = parents[0][cur]
        fwd_sigs = list(reversed(back))  # sig_a ... meet
        cur = meet
        while parents[1][cur] is not None:
            cur = parents[1][cur]
            fwd_sigs.append(cur)
        moves = _sig_sequence_to_moves(tri_a, fwd_sigs)
        return make_path(tri_a, moves)

    side = 0
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = parents[side], parents[1 - side]
        nxt = []
        for sig in frontiers[side]:
            for move, sig2, _ in _expand(sig, ("23", "32"), max_tets):
                if sig2 in mine:
                    continue
                mine[sig2] = sig
                total += 1
                if total > node_budget:
                    raise BudgetExceeded("node budget %d exceeded" % node_budget)
                if sig2 in other:
                    return reconstruct(sig2 if side == 0 else sig2)
                nxt.append(sig2)
        frontiers[side] = nxt
    return None


@dataclass(frozen=True)
class ConnectivityReport:
    """Connected components of a property subgraph, within a size bound.

    Bounded-size evidence only: components may merge beyond the bound, so
    this never proves disconnection of the infinite graph.
    """

    predicate: str
    max_tets: int
    components: tuple  # of tuples of signatures, largest first
    boundary_nodes: int  # satisfying nodes with a non-satisfying neighbour
    satisfying: int
    non_satisfying: int

    @property
    def component_sizes(self):
        return tuple(len(c) for c in self.components)


def connectivity_report(seeds, predicate, max_tets, node_budget=DEFAULT_NODE_BUDGET):
    """Explore the predicate subgraph from every seed and report components."""
    prop_name, _ = resolve_property(predicate)
    if not seeds:
        return ConnectivityReport(prop_name, max_tets, (), 0, 0, 0)
    nodes = {}
    arcs = []
    for seed in seeds:
        g = explore(
            seed,
            max_tets,
            predicate=prop_name,
            node_budget=node_budget - len(nodes),
        )
        known = set(nodes)
        for sig, data in g.nodes.items():
            if sig not in nodes:
                nodes[sig] = data
        arcs.extend(
            (a, b, m) for a, b, m in g.arcs if a not in known or b not in known
        )

    sat = {sig for sig, data in nodes.items() if data["props"][prop_name]}
    parent = {sig: sig for sig in sat}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    boundary = set()
    for a, b, _ in arcs:
        if a in sat and b in sat:
            parent[find(a)] = find(b)
        elif a in sat:
            boundary.add(a)
        elif b in sat:
            boundary.add(b)
    groups = {}
    for sig in sat:
        groups.setdefault(find(sig), []).append(sig)
    components = tuple(
        tuple(sorted(g)) for g in sorted(groups.values(), key=lambda g: (-len(g), sorted(g)))
    )
    return ConnectivityReport(
        prop_name,
        max_tets,
        components,
        len(boundary),
        len(sat),
        len(nodes) - len(sat),
    )


# -- degree-one-free rewriting ----------------------------------------------

_REWRITE_KINDS = {"23", "32", "02", "20"}


def _move_region(tri, move):
    """Tetrahedra a move removes (empty for 0-2 and 1-4)."""
    kind, params = move.kind, move.params
    if kind == "23":
        t, f = params
        return {t, tri.gluings[t][f][0]}
    if kind in ("32", "20"):
        ec = tri.skeleton.edges[params[0]]
        return {w.tet for w in ec.wedges}
    if kind == "41":
        return {t for t, _ in tri.skeleton.vertices[params[0]].slots}
    return set()


def _translate_edge(orig_tri, cur_tri, tet_map, edge_id):
    ec = orig_tri.skeleton.edges[edge_id]
    w = ec.wedges[0]
    return cur_tri.skeleton.edge_lookup[(tet_map[w.tet], w.edge_index)][0]


def _translate_slot(orig_tri, cur_tri, tet_map, edge_id, slot, new_edge_id):
    w = orig_tri.skeleton.edges[edge_id].wedges[slot]
    target = (tet_map[w.tet], w.edge_index)
    for i, w2 in enumerate(cur_tri.skeleton.edges[new_edge_id].wedges):
        if (w2.tet, w2.edge_index) == target:
            return i
    return None


def _translate_move(orig_tri, cur_tri, tet_map, move):
    """Express a move given for orig_tri in the cells of cur_tri; None when
    the translation does not exist (an active pillow is in the way)."""
    kind, params = move.kind, move.params
    if kind == "23":
        return Move("23", (tet_map[params[0]], params[1]))
    if kind in ("32", "20"):
        return Move(kind, (_translate_edge(orig_tri, cur_tri, tet_map, params[0]),))
    if kind == "02":
        e, a, b = params
        e2 = _translate_edge(orig_tri, cur_tri, tet_map, e)
        a2 = _translate_slot(orig_tri, cur_tri, tet_map, e, a, e2)
        b2 = _translate_slot(orig_tri, cur_tri, tet_map, e, b, e2)
        if a2 is None or b2 is None:
            return None
        candidate = Move("02", (e2, a2, b2))
        if not can_apply(cur_tri, candidate)[0]:
            return None
        return candidate
    raise ParameterOutOfRange("move kind %r not allowed in rewriting" % kind)


def _compose_maps(tet_map, info_orig, info_cur):
    """Map tetrahedra of the next original state to the next current state."""
    out = {}
    for old, new in info_orig.survivors.items():
        out[new] = info_cur.survivors[tet_map[old]]
    for j, new in enumerate(info_orig.new_tets):
        out[new] = info_cur.new_tets[j]
    return out


def _dropping_edges(tri, move):
    """Edge classes whose degree the move lowers (shield candidates)."""
    kind, params = move.kind, move.params
    sk = tri.skeleton
    out = set()
    if kind == "23":
        t, f = params
        for a in range(4):
            for b in range(a + 1, 4):
                if a != f and b != f:
                    out.add(sk.edge_lookup[(t, EDGE_INDEX[a][b])][0])
    elif kind in ("32", "20"):
        for w in sk.edges[params[0]].wedges:
            for pole in (w.tail, w.head):
                for side in (w.enter, w.exit):
                    out.add(sk.edge_lookup[(w.tet, EDGE_INDEX[pole][side])][0])
            if kind == "20":
                out.add(sk.edge_lookup[(w.tet, EDGE_INDEX[w.enter][w.exit])][0])
        out.discard(params[0])
    return sorted(out)


def rewrite_path_degree1free(path):
    """Rewrite a path so no intermediate has a degree-one edge.

    The endpoints must be degree-one free and the moves restricted to
    2-3/3-2/0-2/2-0.  Whenever the next move would expose a degree-one
    edge, a pillow is inserted by a 0-2 move at some face incident to an
    edge whose degree the move lowers (every placement is tried, with
    backtracking), carried through subsequent moves, and removed by a 2-0
    move at the earliest step where removal exposes no degree-one edge.
    Raises RewriteFailed when no placement shields the offending step.
    """
    for move in path.moves:
        if move.kind not in _REWRITE_KINDS:
            raise RewriteFailed("move %s is outside the rewriting move set" % move)
    orig_states, orig_sigs = replay(path.start, path.moves)
    if has_degree_one_edge(orig_states[0]) or has_degree_one_edge(orig_states[-1]):
        raise RewriteFailed("path endpoints must be degree-one free")

    k_total = len(path.moves)

    def try_removals(tri, tet_map, pillows, out):
        """Greedily remove every pillow whose removal keeps degree-one
        freedom; earliest-inserted first, repeating until stable."""
        changed = True
        while changed:
            changed = False
            for idx, (u, v) in enumerate(pillows):
                eid_entry = tri.skeleton.edge_lookup.get((u, 5))
                if eid_entry is None:
                    continue
                eid = eid_entry[0]
                ok, _ = can_apply(tri, Move("20", (eid,)))
                if not ok:
                    continue
                candidate, info = apply_move_ex(tri, Move("20", (eid,)))
                if has_degree_one_edge(candidate):
                    continue
                out.append(Move("20", (eid,)))
                tri = candidate
                tet_map = {o: info.survivors[c] for o, c in tet_map.items()}
                pillows = [
                    (info.survivors[a], info.survivors[b])
                    for j, (a, b) in enumerate(pillows)
                    if j != idx
                ]
                changed = True
                break
        return tri, tet_map, pillows, out

    def count_deg1(tri):
        return sum(1 for ec in tri.skeleton.edges if ec.degree == 1)

    def dfs(k, tri, tet_map, pillows, out, allow_removals, deg1_budget):
        if allow_removals:
            tri, tet_map, pillows, out = try_removals(tri, tet_map, pillows, list(out))
        if k == k_total:
            return list(out) if not pillows else None
        move = path.moves[k]
        translated = _translate_move(orig_states[k], tri, tet_map, move)
        if translated is None:
            return None
        region = _move_region(tri, translated)
        pillow_tets = {t for pair in pillows for t in pair}
        if region & pillow_tets:
            return None
        ok, _ = can_apply(tri, translated)
        if not ok:
            return None
        nxt, info_cur = apply_move_ex(tri, translated)
        _, info_orig = apply_move_ex(orig_states[k], move)
        exposed = count_deg1(nxt)
        if exposed == 0:
            new_map = _compose_maps(tet_map, info_orig, info_cur)
            new_pillows = [
                (info_cur.survivors[a], info_cur.survivors[b]) for a, b in pillows
            ]
            return dfs(k + 1, nxt, new_map, new_pillows, out + [translated], True, None)
        # The translated move would expose degree-one edges: shield one of
        # the edges the move lowers, trying every incident placement.  A
        # stacked shield must strictly reduce the exposure, so at most one
        # pillow per endangered edge is ever in flight.
        if deg1_budget is not None and exposed >= deg1_budget:
            return None
        for shield in _dropping_edges(tri, translated):
            for a, b in _positions_02(tri.skeleton.edges[shield], tri):
                ins = Move("02", (shield, a, b))
                shielded, info_ins = apply_move_ex(tri, ins)
                pillows2 = pillows + [info_ins.new_tets]
                result = dfs(
                    k, shielded, dict(tet_map), pillows2, out + [ins], False, exposed
                )
                if result is not None:
                    return result
        return None

    out_moves = dfs(
        0, orig_states[0], {t: t for t in range(path.start.n)}, [], [], True, None
    )
    if out_moves is None:
        raise RewriteFailed("no pillow placement shields the path", step=None)
    new_path = make_path(path.start, out_moves)
    want = orig_sigs[-1] if orig_sigs else path.start.iso_sig()
    if new_path.end_sig != want:
        raise RewriteFailed("rewritten path does not reach the original endpoint")
    return new_path
