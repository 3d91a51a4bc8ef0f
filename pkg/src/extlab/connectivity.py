"""Edge-connectivity invariants: lambda, restricted and cyclic edge-connectivity, and their super variants.

All values come from unit-capacity max-flow computations between vertex sets.
The "super" predicates, which quantify over every minimum cut, enumerate
bonds (minimal edge cuts) of the relevant size; those enumerations are
exponential in the cut size and guarded by a cap.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator

from .graph import (
    Cut,
    Edge,
    Graph,
    GraphError,
    INFINITE,
    boundary,
    components,
    cut_size,
    girth,
    has_cycle,
    induced_cycles,
    is_connected,
    vertex_set,
)
from .matching import CapExceeded

DEFAULT_ENUMERATION_CAP = 2_000_000


# --- max flow ------------------------------------------------------------------


class _Flow:
    """Unit-capacity flow between two vertex sets of an undirected graph."""

    def __init__(self, g: Graph, a: frozenset[int], b: frozenset[int]):
        self.g = g
        self.a = a
        self.b = b
        self.res = [dict.fromkeys(nbrs, 1) for nbrs in g.adj]
        self.value = 0

    def _augment(self) -> bool:
        res = self.res
        parent: dict[int, int] = {v: -1 for v in self.a}
        queue = deque(self.a)
        b = self.b
        while queue:
            u = queue.popleft()
            for w, r in res[u].items():
                if r > 0 and w not in parent:
                    parent[w] = u
                    if w in b:
                        while parent[w] >= 0:
                            p = parent[w]
                            res[p][w] -= 1
                            res[w][p] += 1
                            w = p
                        return True
                    queue.append(w)
        return False

    def run(self, limit: float = INFINITE) -> int:
        while self.value < limit and self._augment():
            self.value += 1
        return self.value

    def reachable(self, start: Iterable[int]) -> set[int]:
        seen = set(start)
        stack = list(seen)
        res = self.res
        while stack:
            u = stack.pop()
            for w, r in res[u].items():
                if r > 0 and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen


def _terminals(g: Graph, a, b) -> tuple[frozenset[int], frozenset[int]]:
    sa, sb = vertex_set(g, a), vertex_set(g, b)
    if not sa or not sb:
        raise GraphError("terminal sets must be nonempty")
    if sa & sb:
        raise GraphError("terminal sets must be disjoint")
    return sa, sb


def max_flow_value(g: Graph, a, b, limit: float = INFINITE) -> int:
    """Number of edge-disjoint ``a``-``b`` paths, stopping early at ``limit``."""
    sa, sb = _terminals(g, a, b)
    return _Flow(g, sa, sb).run(limit)


def min_cut_between(g: Graph, a, b) -> Cut:
    """A minimum edge cut separating ``a`` from ``b``; its side is the least one containing ``a``."""
    sa, sb = _terminals(g, a, b)
    flow = _Flow(g, sa, sb)
    flow.run()
    return boundary(g, flow.reachable(sa))


# --- bonds -------------------------------------------------------------------


def _bridges(n: int, adj_ids: list[list[tuple[int, int]]], removed: set[int]) -> tuple[list[int], bool]:
    """Bridge edge ids of the graph minus ``removed`` edge ids, and whether it is connected."""
    disc = [-1] * n
    low = [0] * n
    bridges = []
    t = 0
    disc[0] = low[0] = 0
    # stack frames: (vertex, id of edge used to enter, iterator position)
    stack = [(0, -1, 0)]
    visited = 1
    while stack:
        v, pe, i = stack[-1]
        nbrs = adj_ids[v]
        if i < len(nbrs):
            stack[-1] = (v, pe, i + 1)
            w, eid = nbrs[i]
            if eid == pe or eid in removed:
                continue
            if disc[w] < 0:
                t += 1
                disc[w] = low[w] = t
                visited += 1
                stack.append((w, eid, 0))
            elif disc[w] < low[v]:
                low[v] = disc[w]
        else:
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] > disc[u]:
                    bridges.append(pe)
    return bridges, visited == n


def bonds(g: Graph, k: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Cut]:
    """Every minimal edge cut with exactly ``k`` edges, once each.

    A bond ``F`` is found from ``F`` minus its largest edge ``e``: that remainder
    leaves the graph connected and ``e`` is a bridge of what is left. The side
    reported is the one containing vertex 0.
    """
    if k < 1:
        return
    if not is_connected(g):
        raise GraphError("bond enumeration needs a connected graph")
    edges = g.edges()
    m = len(edges)
    if math.comb(m, k - 1) > cap:
        raise CapExceeded(f"C({m}, {k - 1}) edge subsets exceeds the enumeration cap {cap}")
    adj_ids: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for eid, (u, v) in enumerate(edges):
        adj_ids[u].append((v, eid))
        adj_ids[v].append((u, eid))
    for rest in itertools.combinations(range(m), k - 1):
        removed = set(rest)
        found, connected = _bridges(g.n, adj_ids, removed)
        if not connected:
            continue
        top = rest[-1] if rest else -1
        for b in found:
            if b <= top:
                continue
            removed.add(b)
            side = _side_of_zero(g.n, adj_ids, removed)
            removed.discard(b)
            if all((edges[e][0] in side) != (edges[e][1] in side) for e in rest):
                yield Cut(frozenset(side), tuple(sorted(edges[e] for e in (*rest, b))))


def _side_of_zero(n: int, adj_ids: list[list[tuple[int, int]]], removed: set[int]) -> set[int]:
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w, eid in adj_ids[u]:
            if eid not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _other_side(g: Graph, cut: Cut) -> frozenset[int]:
    return frozenset(range(g.n)) - cut.side


# --- edge connectivity -------------------------------------------------------


def edge_connectivity(g: Graph) -> int:
    """``lambda(G)``: the minimum number of edges whose removal disconnects ``g``."""
    if g.n < 2:
        raise GraphError("edge connectivity needs at least two vertices")
    if not is_connected(g):
        raise GraphError("edge connectivity is defined for connected graphs")
    best = g.min_degree()
    for v in range(1, g.n):
        best = min(best, max_flow_value(g, {0}, {v}, limit=best))
    return best


def is_super_lambda(g: Graph, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Every minimum edge cut is the star of a vertex."""
    lam = edge_connectivity(g)
    if lam < g.min_degree():
        return False
    return all(min(len(c.side), g.n - len(c.side)) == 1 for c in bonds(g, lam, cap))


def trivial_cuts_only(g: Graph, k: int, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Whether every ``k``-edge bond isolates a single vertex."""
    return all(min(len(c.side), g.n - len(c.side)) == 1 for c in bonds(g, k, cap))


def is_k_vertex_connected(g: Graph, k: int) -> bool:
    """At least ``k + 1`` vertices and no set of fewer than ``k`` vertices disconnects ``g``."""
    if g.n <= k:
        return False
    for size in range(k):
        for removed in itertools.combinations(range(g.n), size):
            if len(components(g, removed)) != 1:
                return False
    return True


# --- restricted edge connectivity --------------------------------------------


def min_edge_degree(g: Graph) -> int | None:
    """``xi_2``: the minimum of ``d(u) + d(v) - 2`` over edges ``uv``."""
    if not g.m:
        return None
    return min(g.degree(u) + g.degree(v) - 2 for u, v in g.edges())


def restricted_edge_connectivity(g: Graph) -> tuple[int, int]:
    """``(lambda2, xi2)``: the minimum ``d(X)`` with an edge inside ``X`` and inside its complement."""
    if not is_connected(g):
        raise GraphError("restricted edge connectivity needs a connected graph")
    edges = g.edges()
    best = INFINITE
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if c in (a, b) or d in (a, b):
                continue
            best = min(best, max_flow_value(g, (a, b), (c, d), limit=best))
    if best == INFINITE:
        raise GraphError("no two vertex-disjoint edges")
    return int(best), min_edge_degree(g)


def is_super_lambda2(g: Graph, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Every minimum restricted edge cut leaves a component that is a single edge."""
    lam2, _ = restricted_edge_connectivity(g)
    for cut in bonds(g, lam2, cap):
        small = min(len(cut.side), g.n - len(cut.side))
        if small < 2:
            continue
        if small != 2:
            return False
    return True


# --- cyclic edge connectivity ------------------------------------------------


def _cycle_sets(g: Graph) -> list[frozenset[int]]:
    cycles = sorted(induced_cycles(g), key=lambda c: (len(c), c))
    return [frozenset(c) for c in cycles]


def cyclic_edge_connectivity(g: Graph, transitive: bool = False) -> tuple[int | None, int | None]:
    """``(c_lambda, zeta)``.

    ``c_lambda`` is the minimum number of edges separating two cycles, found as
    the least max-flow between two vertex-disjoint induced cycles: each side of
    a minimum cyclic cut contains an induced cycle. ``zeta`` is the least
    ``d(X)`` over vertex sets of shortest cycles. Pass ``transitive=True`` only
    for a vertex-transitive graph; one cycle of each pair is then restricted to
    cycles through vertex 0.
    """
    cycles = _cycle_sets(g)
    if not cycles:
        return None, None
    g_len = len(cycles[0])
    zeta = min(cut_size(g, c) for c in cycles if len(c) == g_len)
    if transitive:
        pairs = [(a, b) for a in cycles if 0 in a for b in cycles if not a & b]
    else:
        pairs = [(a, b) for i, a in enumerate(cycles) for b in cycles[i + 1:] if not a & b]
    if not pairs:
        return None, zeta
    best = min(min(cut_size(g, a), cut_size(g, b)) for a, b in pairs)
    for a, b in pairs:
        best = min(best, _Flow(g, a, b).run(best))
    return best, zeta


def is_cyclically_separable(g: Graph) -> bool:
    return cyclic_edge_connectivity(g)[0] is not None


def cyclic_cuts(g: Graph, k: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Cut]:
    """Bonds of size ``k`` with a cycle on both sides."""
    for cut in bonds(g, k, cap):
        if has_cycle(g, cut.side) and has_cycle(g, _other_side(g, cut)):
            yield cut


def is_super_cyclic(g: Graph, cap: int = DEFAULT_ENUMERATION_CAP, transitive: bool = False) -> bool:
    """Every minimum cyclic edge cut has a side that induces a shortest cycle."""
    clam, _ = cyclic_edge_connectivity(g, transitive)
    if clam is None:
        raise GraphError("graph is not cyclically separable")
    g_len = girth(g)
    for cut in cyclic_cuts(g, clam, cap):
        if min(len(cut.side), g.n - len(cut.side)) != g_len:
            return False
    return True


def _in_some_min_cut(flow: _Flow, u: int, v: int) -> bool:
    """Whether the saturated arc ``u -> v`` crosses some minimum cut of ``flow``."""
    closure = flow.reachable(set(flow.a) | {u})
    return v not in closure and not (closure & flow.b)


def removable_edges(g: Graph, k: int) -> frozenset[Edge]:
    """Edges lying in no cyclic ``k``-edge cut; requires ``c_lambda(G) = k``.

    For every pair of disjoint induced cycles whose max-flow equals ``k``, an
    edge belongs to some minimum cut iff it carries flow from ``u`` to ``v`` and
    the residual closure of the source side plus ``u`` excludes ``v`` and the sink.
    """
    clam, _ = cyclic_edge_connectivity(g)
    if clam != k:
        raise GraphError(f"cyclic edge connectivity is {clam}, not {k}")
    cycles = _cycle_sets(g)
    in_cut: set[Edge] = set()
    all_edges = set(g.edges())
    for i, a in enumerate(cycles):
        for b in cycles[i + 1:]:
            if a & b:
                continue
            flow = _Flow(g, a, b)
            if flow.run(k + 1) != k:
                continue
            for u, v in all_edges - in_cut:
                if flow.res[u][v] == 0 and _in_some_min_cut(flow, u, v):
                    in_cut.add((u, v))
                elif flow.res[v][u] == 0 and _in_some_min_cut(flow, v, u):
                    in_cut.add((u, v))
            if len(in_cut) == len(all_edges):
                return frozenset()
    return frozenset(all_edges - in_cut)


def is_uniform_cyclic(g: Graph, k: int) -> bool:
    """``U(k)``: every edge lies in a cyclic ``k``-edge cut (requires ``c_lambda = k``)."""
    return not removable_edges(g, k)


def uniform_cyclic_verdict(g: Graph, k: int) -> bool:
    """``U(k)`` as a total predicate: false whenever ``c_lambda(G) != k``."""
    clam, _ = cyclic_edge_connectivity(g)
    return clam == k and is_uniform_cyclic(g, k)


# --- report --------------------------------------------------------------------


@dataclass(frozen=True)
class ConnectivityReport:
    lambda_: int
    super_lambda: bool | None
    lambda2: int | None
    xi2: int | None
    super_lambda2: bool | None
    clambda: int | None
    zeta: int | None
    super_cyclic: bool | None
    uniform_cyclic: bool | None

    def to_json(self) -> dict:
        data = asdict(self)
        data["lambda"] = data.pop("lambda_")
        return {k: data[k] for k in ("lambda", "super_lambda", "lambda2", "xi2", "super_lambda2",
                                     "clambda", "zeta", "super_cyclic", "uniform_cyclic")}


def connectivity_report(g: Graph, cap: int = DEFAULT_ENUMERATION_CAP,
                        transitive: bool = False) -> ConnectivityReport:
    """All connectivity invariants; super predicates are ``None`` when their enumeration exceeds ``cap``."""

    def guarded(fn, *args):
        try:
            return fn(*args)
        except (CapExceeded, GraphError):
            return None

    lam = edge_connectivity(g)
    try:
        lam2, xi2 = restricted_edge_connectivity(g)
    except GraphError:
        lam2, xi2 = None, min_edge_degree(g)
    clam, zeta = cyclic_edge_connectivity(g, transitive)
    super_cyc = None
    uniform = None
    if clam is not None:
        super_cyc = guarded(is_super_cyclic, g, cap, transitive)
        uniform = guarded(is_uniform_cyclic, g, clam)
    return ConnectivityReport(
        lambda_=lam,
        super_lambda=guarded(is_super_lambda, g, cap),
        lambda2=lam2,
        xi2=xi2,
        super_lambda2=guarded(is_super_lambda2, g, cap) if lam2 is not None else None,
        clambda=clam,
        zeta=zeta,
        super_cyclic=super_cyc,
        uniform_cyclic=uniform,
    )
