"""Immutable simple graphs on vertices ``0..n-1`` and their structural primitives."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

INFINITE = math.inf

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph input (loops, parallel edges, bad indices)."""


class Graph:
    """A simple undirected graph with sorted adjacency lists.

    Instances are immutable. Build them with :meth:`from_edges`.
    """

    __slots__ = ("n", "adj", "_edges", "_hash")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        if n < 0 or len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for n={n}")
        rows = []
        for u, nbrs in enumerate(adj):
            row = tuple(nbrs)
            for i, v in enumerate(row):
                if not 0 <= v < n:
                    raise GraphError(f"vertex {v} out of range for n={n}")
                if v == u:
                    raise GraphError(f"loop at vertex {u}")
                if i and row[i - 1] >= v:
                    raise GraphError(f"neighbors of {u} not strictly increasing")
            rows.append(row)
        for u, row in enumerate(rows):
            for v in row:
                if u not in rows[v]:
                    raise GraphError(f"asymmetric adjacency {u}->{v}")
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(rows)
        self._edges: tuple[Edge, ...] = tuple(
            (u, v) for u in range(n) for v in self.adj[u] if u < v
        )
        self._hash = hash((n, self._edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, rejecting loops, duplicates and out-of-range ends."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, [sorted(s) for s in nbrs])

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[Edge, ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else ``None``."""
        ds = set(self.degrees())
        return ds.pop() if len(ds) == 1 else None

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """The graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self._edges))

    def delete_vertices(self, vs: Iterable[int]) -> tuple["Graph", list[int]]:
        drop = set(vs)
        return induced_subgraph(self, [v for v in range(self.n) if v not in drop])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def vertex_set(g: Graph, x: Iterable[int] | int) -> frozenset[int]:
    """Normalize a vertex subset given as an iterable or as an ``int`` bitmask."""
    if isinstance(x, int):
        if x < 0 or x >> g.n:
            raise GraphError(f"bitmask {x:#x} exceeds {g.n} vertices")
        return frozenset(v for v in range(g.n) if x >> v & 1)
    s = frozenset(int(v) for v in x)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    return s


@dataclass(frozen=True)
class Cut:
    """A vertex side ``X`` together with its boundary edges."""

    side: frozenset[int]
    boundary: tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)


def boundary(g: Graph, x: Iterable[int] | int) -> Cut:
    """The edge cut of all edges with exactly one end in ``x``."""
    side = vertex_set(g, x)
    if not side or len(side) == g.n:
        raise GraphError("boundary needs a nonempty proper vertex subset")
    return Cut(side, tuple(e for e in g.edges() if (e[0] in side) != (e[1] in side)))


def cut_size(g: Graph, side: Iterable[int]) -> int:
    """``d(X)``; unlike :func:`boundary` this accepts empty and full sets."""
    s = side if isinstance(side, (set, frozenset)) else set(side)
    return sum(1 for u in s for v in g.adj[u] if v not in s)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``INFINITE`` for a forest."""
    best = INFINITE
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-coloring as a list of 0/1, or ``None`` when an odd cycle exists."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``g`` minus ``removed``, each sorted, ordered by least vertex."""
    seen = [False] * g.n
    for v in removed:
        seen[v] = True
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        parts.append(sorted(comp))
    return parts


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def odd_components(g: Graph, u: Iterable[int] | int = ()) -> int:
    """Number of odd-order components of ``G - U``."""
    return sum(len(c) % 2 for c in components(g, vertex_set(g, u)))


def distances_from(g: Graph, v: int) -> list[int]:
    """BFS distances from ``v``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def second_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Vertices at distance exactly two from ``v``."""
    return frozenset(w for w, d in enumerate(distances_from(g, v)) if d == 2)


def induced_subgraph(g: Graph, x: Iterable[int] | int) -> tuple[Graph, list[int]]:
    """``G[X]`` relabeled to ``0..|X|-1`` plus the map back to original indices."""
    keep = sorted(vertex_set(g, x))
    if not keep:
        raise GraphError("induced subgraph of an empty vertex set")
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(keep), edges), keep


def internal_edge_count(g: Graph, x: Iterable[int]) -> int:
    s = x if isinstance(x, (set, frozenset)) else set(x)
    return sum(1 for u in s for v in g.adj[u] if v in s and u < v)


def has_cycle(g: Graph, x: Iterable[int] | None = None) -> bool:
    """Whether ``G[X]`` (default: ``G``) contains a cycle."""
    verts = range(g.n) if x is None else x
    s = set(verts)
    if not s:
        return False
    edges = internal_edge_count(g, s)
    comps = 0
    seen: set[int] = set()
    for start in s:
        if start in seen:
            continue
        comps += 1
        seen.add(start)
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in s and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return edges > len(s) - comps


def induced_cycles(g: Graph, max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every chordless cycle exactly once, as a vertex tuple starting at its least vertex.

    A cycle is reported with its second vertex smaller than its last, which
    fixes one orientation.
    """
    limit = g.n if max_length is None else max_length
    for s in range(g.n):
        yield from _induced_from(g, s, limit)


def _induced_from(g: Graph, s: int, limit: int) -> Iterator[tuple[int, ...]]:
    adj = g.adj
    n = g.n
    path = [s]
    on_path = [False] * n
    on_path[s] = True
    # count of interior path vertices adjacent to each vertex
    near = [0] * n

    def grow() -> Iterator[tuple[int, ...]]:
        tip = path[-1]
        for w in adj[tip]:
            if w <= s or on_path[w]:
                continue
            if near[w]:
                continue
            if s in adj[w]:
                if path[1] < w:
                    yield tuple(path) + (w,)
                continue
            if len(path) + 1 >= limit:
                continue
            for x in adj[tip]:
                near[x] += 1
            path.append(w)
            on_path[w] = True
            yield from grow()
            path.pop()
            on_path[w] = False
            for x in adj[tip]:
                near[x] -= 1

    # the first step leaves s; s's other neighbors may only close the cycle
    for first in adj[s]:
        if first <= s:
            continue
        path.append(first)
        on_path[first] = True
        yield from grow()
        path.pop()
        on_path[first] = False
