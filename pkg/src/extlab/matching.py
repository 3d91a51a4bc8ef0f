"""Matchings: maximum matching, k-extendability, factor-criticality and related certificates."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .graph import (
    Edge,
    Graph,
    GraphError,
    components,
    induced_subgraph,
    is_connected,
    odd_components,
    two_coloring,
)

Matching = tuple[Edge, ...]

DEFAULT_EXHAUSTIVE_CAP = 20


class CapExceeded(RuntimeError):
    """An exponential search was refused because the input exceeds its cap."""


def is_matching(g: Graph, edges: Iterable[Sequence[int]]) -> bool:
    """Pairwise vertex-disjoint edges of ``g``."""
    used: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    return True


def _mates(g: Graph, removed: frozenset[int] | set[int] = frozenset(),
           initial: Iterable[Sequence[int]] = ()) -> list[int]:
    """Mate array of a maximum matching of ``g - removed`` (Edmonds' blossom search)."""
    n = g.n
    adj = g.adj
    alive = [v not in removed for v in range(n)]
    match = [-1] * n
    for u, v in initial:
        match[u], match[v] = v, u
    if not initial:
        for u in range(n):
            if alive[u] and match[u] < 0:
                for v in adj[u]:
                    if alive[v] and match[v] < 0:
                        match[u], match[v] = v, u
                        break

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] < 0:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if not alive[to] or base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if match[to] < 0:
                        # flip the alternating path ending at ``to``
                        while to >= 0:
                            pv = parent[to]
                            nxt = match[pv]
                            match[to], match[pv] = pv, to
                            to = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if alive[v] and match[v] < 0:
            augment_from(v)
    return match


def _as_matching(match: list[int]) -> Matching:
    return tuple((u, v) for u, v in enumerate(match) if u < v)


def max_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching as sorted edges ``(u, v)`` with ``u < v``."""
    return _as_matching(_mates(g))


def matching_number(g: Graph, removed: Iterable[int] = ()) -> int:
    return sum(1 for x in _mates(g, frozenset(removed)) if x >= 0) // 2


def has_perfect_matching(g: Graph, removed: Iterable[int] = ()) -> bool:
    gone = frozenset(removed)
    alive = g.n - len(gone)
    if alive % 2:
        return False
    return all(x >= 0 for v, x in enumerate(_mates(g, gone)) if v not in gone)


def _k_matchings(edges: Sequence[Edge], k: int, start: int = 0,
                 used: frozenset[int] = frozenset()) -> Iterator[tuple[Edge, ...]]:
    """Size-``k`` matchings drawn from ``edges`` in lexicographic order."""
    if k == 0:
        yield ()
        return
    for i in range(start, len(edges) - k + 1):
        u, v = edges[i]
        if u in used or v in used:
            continue
        for rest in _k_matchings(edges, k - 1, i + 1, used | {u, v}):
            yield (edges[i],) + rest


class Extendability(NamedTuple):
    value: bool
    witness: Matching | None


def is_k_extendable(g: Graph, k: int) -> Extendability:
    """Whether every size-``k`` matching of ``g`` extends to a perfect matching.

    On failure ``witness`` is the lexicographically least size-``k`` matching
    that does not extend (or ``None`` if ``g`` has no size-``k`` matching).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g.n % 2:
        raise GraphError("k-extendability needs even order")
    if g.n < 2 * k + 2:
        raise GraphError(f"k-extendability needs at least {2 * k + 2} vertices")
    if not is_connected(g):
        raise GraphError("k-extendability is defined for connected graphs")
    base = _mates(g)
    has_pm = all(x >= 0 for x in base)
    found_any = False
    for m in _k_matchings(g.edges(), k):
        found_any = True
        if not has_pm:
            return Extendability(False, m)
        gone = {v for e in m for v in e}
        start = [(u, v) for u, v in _as_matching(base) if u not in gone and v not in gone]
        mates = _mates(g, gone, start)
        if any(x < 0 for v, x in enumerate(mates) if v not in gone):
            return Extendability(False, m)
    if not found_any:
        return Extendability(False, None)
    return Extendability(True, None)


def is_factor_critical(g: Graph) -> bool:
    """Odd order and ``G - v`` has a perfect matching for every ``v``."""
    if g.n % 2 == 0:
        return False
    return all(has_perfect_matching(g, (v,)) for v in range(g.n))


def is_bicritical(g: Graph) -> bool:
    """``G - {u, v}`` has a perfect matching for every pair of vertices."""
    if g.n % 2:
        raise GraphError("bicriticality needs even order")
    return all(has_perfect_matching(g, pair) for pair in itertools.combinations(range(g.n), 2))


def is_elementary_bipartite(g: Graph) -> bool:
    """Connected, bipartite, and every edge lies in some perfect matching.

    The edgeless single vertex is not counted as elementary.
    """
    if g.m == 0 or not is_connected(g) or two_coloring(g) is None:
        return False
    return all(has_perfect_matching(g, e) for e in g.edges())


def hall_extendability_bipartite(g: Graph, k: int,
                                 cap: int = DEFAULT_EXHAUSTIVE_CAP) -> tuple[bool, frozenset[int] | None]:
    """Neighborhood criterion for k-extendability of a connected bipartite graph.

    Checks ``|U| = |W|`` and ``|N(X)| >= |X| + k`` for every nonempty ``X`` in the
    color class of vertex 0 with ``|X| <= |U| - k``. Returns the smallest (then
    lexicographically least) violating ``X`` on failure.
    """
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds the exhaustive cap {cap}")
    color = two_coloring(g)
    if color is None:
        raise GraphError("hall_extendability_bipartite needs a bipartite graph")
    if not is_connected(g):
        raise GraphError("hall_extendability_bipartite needs a connected graph")
    if not 0 <= k <= (g.n - 2) / 2:
        raise ValueError("need 0 <= k <= (|G| - 2) / 2")
    side_u = [v for v in range(g.n) if color[v] == 0]
    if 2 * len(side_u) != g.n:
        return False, frozenset(side_u)
    for size in range(1, len(side_u) - k + 1):
        for xs in itertools.combinations(side_u, size):
            nbrs = {w for x in xs for w in g.adj[x]}
            if len(nbrs) < size + k:
                return False, frozenset(xs)
    return True, None


@dataclass(frozen=True)
class TutteWitness:
    u: frozenset[int]
    deficiency: int


def tutte_witness(g: Graph, cap: int = DEFAULT_EXHAUSTIVE_CAP) -> TutteWitness | None:
    """Exhaustive search for a set ``U`` with more than ``|U|`` odd components in ``G - U``.

    ``None`` means no such set exists, i.e. ``g`` has a perfect matching.
    Subsets are tried by increasing size, so the witness is a smallest one.
    """
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds the exhaustive cap {cap}")
    for size in range(g.n + 1):
        for us in itertools.combinations(range(g.n), size):
            deficiency = odd_components(g, us) - size
            if deficiency > 0:
                return TutteWitness(frozenset(us), deficiency)
    return None


def neighborhood_matching_size(g: Graph, v: int) -> int:
    """Size of a maximum matching in the subgraph induced by ``N(v)``."""
    if not g.adj[v]:
        return 0
    sub, _ = induced_subgraph(g, g.adj[v])
    return len(max_matching(sub))


def _gallai_edmonds_a(g: Graph) -> tuple[set[int], set[int]]:
    """``(D, A)``: vertices missed by some maximum matching, and their other neighbors."""
    nu = matching_number(g)
    deficient = {v for v in range(g.n) if matching_number(g, (v,)) == nu}
    attached = {w for v in deficient for w in g.adj[v] if w not in deficient}
    return deficient, attached


def _critical_barrier(g: Graph) -> set[int]:
    """A barrier of a graph with a perfect matching leaving only factor-critical components.

    ``{0} | A(G - 0)`` is a barrier whose removal leaves factor-critical odd
    components plus possibly even ones; those are handled recursively.
    """
    sub, back = g.delete_vertices((0,))
    _, attached = _gallai_edmonds_a(sub)
    barrier = {0} | {back[i] for i in attached}
    for comp in components(g, barrier):
        if len(comp) % 2 == 0:
            part, idx = induced_subgraph(g, comp)
            barrier.update(idx[i] for i in _critical_barrier(part))
    return barrier


def factor_critical_partition(g: Graph) -> frozenset[int]:
    """A set ``S`` matchable to ``G - S`` whose removal leaves only factor-critical components.

    ``S`` is the Gallai-Edmonds set ``A(G)`` together with a barrier of every
    even component of ``G - A(G)`` chosen so that only factor-critical pieces remain. Such a graph has a perfect matching
    iff ``|S|`` equals the number of components of ``G - S``.
    """
    deficient, attached = _gallai_edmonds_a(g)
    s = set(attached)
    for comp in components(g, attached):
        if comp[0] in deficient:
            continue
        sub, back = induced_subgraph(g, comp)
        s.update(back[i] for i in _critical_barrier(sub))
    return frozenset(s)
