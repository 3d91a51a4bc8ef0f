"""Isomorphism, automorphism orbits and transitivity tests.

The search individualizes one vertex at a time and refines colorings of both
graphs in lockstep (color refinement seeded with degree and distance
profiles). A leaf whose coloring is discrete gives a candidate bijection,
accepted only if it preserves adjacency.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, distances_from, girth, induced_subgraph, second_neighborhood


@dataclass(frozen=True)
class IsoWitness:
    """Outcome of an isomorphism test.

    ``mapping[v]`` is the image of vertex ``v`` when the graphs are isomorphic;
    otherwise ``mapping`` is ``None`` and ``invariant`` names what differs.
    """

    mapping: tuple[int, ...] | None
    invariant: str | None = None

    def __bool__(self) -> bool:
        return self.mapping is not None


def distance_profile(g: Graph, v: int) -> tuple[int, ...]:
    """Number of vertices at distance 0, 1, 2, ... from ``v`` (unreachable last, as -1)."""
    counts = Counter(distances_from(g, v))
    top = max(counts)
    return tuple(counts.get(d, 0) for d in range(top + 1)) + (counts.get(-1, 0),)


def _initial_colors(g: Graph) -> list[tuple]:
    # leading 0 keeps these below the (1, i) colors given to pinned vertices
    return [(0, g.degree(v), distance_profile(g, v)) for v in range(g.n)]


def _refine(g: Graph, h: Graph, cg: list, ch: list) -> tuple[list[int], list[int]] | None:
    """Refine both colorings together; ``None`` if their color class sizes diverge."""
    while True:
        sig_g = [(cg[v], tuple(sorted(cg[w] for w in g.adj[v]))) for v in range(g.n)]
        sig_h = [(ch[v], tuple(sorted(ch[w] for w in h.adj[v]))) for v in range(h.n)]
        count_g = Counter(sig_g)
        if count_g != Counter(sig_h):
            return None
        order = {s: i for i, s in enumerate(sorted(count_g))}
        new_g = [order[s] for s in sig_g]
        new_h = [order[s] for s in sig_h]
        if len(order) == len(set(cg)):
            return new_g, new_h
        cg, ch = new_g, new_h


def _search(g: Graph, h: Graph, cg: list[int], ch: list[int]) -> tuple[int, ...] | None:
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(cg):
        classes.setdefault(c, []).append(v)
    if len(classes) == g.n:
        where = {c: w for w, c in enumerate(ch)}
        mapping = tuple(where[c] for c in cg)
        if all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges()):
            return mapping
        return None
    cell = min((c for c in classes if len(classes[c]) > 1), key=lambda c: (len(classes[c]), c))
    v = classes[cell][0]
    fresh = len(classes)
    for w in (x for x, c in enumerate(ch) if c == cell):
        ng = list(cg)
        nh = list(ch)
        ng[v] = nh[w] = fresh
        refined = _refine(g, h, ng, nh)
        if refined is None:
            continue
        found = _search(g, h, *refined)
        if found is not None:
            return found
    return None


def _quick_invariants(g: Graph, h: Graph) -> str | None:
    if g.n != h.n:
        return "order"
    if g.m != h.m:
        return "size"
    if sorted(g.degrees()) != sorted(h.degrees()):
        return "degree sequence"
    if girth(g) != girth(h):
        return "girth"
    if sorted(_initial_colors(g)) != sorted(_initial_colors(h)):
        return "distance profiles"
    return None


def _constrained(g: Graph, h: Graph, pins: Sequence[tuple[int, int]]) -> tuple[int, ...] | None:
    """Search for an isomorphism sending ``pins[i][0]`` to ``pins[i][1]``."""
    cg = _initial_colors(g)
    ch = _initial_colors(h)
    for i, (a, b) in enumerate(pins):
        if cg[a] != ch[b]:
            return None
        cg[a] = ch[b] = (1, i)
    refined = _refine(g, h, cg, ch)
    if refined is None:
        return None
    return _search(g, h, *refined)


def is_isomorphic(g: Graph, h: Graph) -> IsoWitness:
    """Exact isomorphism test with a witness bijection or a distinguishing invariant."""
    reason = _quick_invariants(g, h)
    if reason is not None:
        return IsoWitness(None, reason)
    mapping = _constrained(g, h, ())
    if mapping is None:
        return IsoWitness(None, "no bijection survives refinement search")
    return IsoWitness(mapping)


def find_automorphism(g: Graph, pins: Sequence[tuple[int, int]]) -> tuple[int, ...] | None:
    """An automorphism of ``g`` extending the partial map ``pins``, if one exists."""
    return _constrained(g, g, pins)


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    return sorted(perm) == list(range(g.n)) and all(g.has_edge(perm[u], perm[v]) for u, v in g.edges())


@dataclass(frozen=True)
class Orbits:
    """Vertex orbits of the automorphism group, each sorted, ordered by least vertex."""

    parts: tuple[tuple[int, ...], ...]

    @property
    def transitive(self) -> bool:
        return len(self.parts) == 1


def vertex_orbits(g: Graph) -> Orbits:
    """Exact orbit partition; each automorphism found merges all of its cycles."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    colors = _initial_colors(g)
    for v in range(1, g.n):
        for r in range(v):
            if find(r) != r or colors[r] != colors[v]:
                continue
            if find(v) == find(r):
                break
            auto = find_automorphism(g, [(r, v)])
            if auto is not None:
                for x, y in enumerate(auto):
                    a, b = find(x), find(y)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
                break
    parts: dict[int, list[int]] = {}
    for v in range(g.n):
        parts.setdefault(find(v), []).append(v)
    return Orbits(tuple(tuple(p) for p in sorted(parts.values())))


def is_vertex_transitive(g: Graph) -> tuple[bool, Orbits]:
    """Whether one automorphism orbit covers all vertices, with the orbit partition."""
    if g.n <= 1:
        return True, Orbits((tuple(range(g.n)),))
    if g.regular_degree() is None:
        return False, vertex_orbits(g)
    # fast path: an automorphism 0 -> v for every v; stop at the first unreachable target
    for v in range(1, g.n):
        if find_automorphism(g, [(0, v)]) is None:
            return False, vertex_orbits(g)
    return True, Orbits((tuple(range(g.n)),))


def is_edge_transitive(g: Graph) -> bool:
    """Whether vertex automorphisms act transitively on edges."""
    edges = g.edges()
    if len(edges) <= 1:
        return True
    a, b = edges[0]
    for u, v in edges[1:]:
        if find_automorphism(g, [(a, u), (b, v)]) is None and find_automorphism(g, [(a, v), (b, u)]) is None:
            return False
    return True


def n2_distinguisher(g: Graph, u: int, v: int) -> bool:
    """Whether ``G[N_2(u)]`` and ``G[N_2(v)]`` are isomorphic (false certifies no automorphism maps u to v)."""
    nu, nv = second_neighborhood(g, u), second_neighborhood(g, v)
    if len(nu) != len(nv):
        return False
    if not nu:
        return True
    return bool(is_isomorphic(induced_subgraph(g, nu)[0], induced_subgraph(g, nv)[0]))


def invariant_key(g: Graph) -> tuple:
    """A hashable isomorphism invariant used to bucket graphs before exact tests."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    spectrum = tuple(np.round(np.linalg.eigvalsh(a), 6) + 0.0) if g.n else ()
    return (g.n, g.m, tuple(sorted(g.degrees())), girth(g),
            tuple(sorted(Counter(_initial_colors(g)).items())), spectrum)
