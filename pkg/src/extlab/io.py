"""JSON interchange for graphs and group tables.

Graph JSON is ``{"n": <int>, "edges": [[u, v], ...]}`` with ``u < v`` and the
edge list sorted. Reading accepts any edge order but rejects loops, repeated
edges and out-of-range vertices, each with its own error code.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import IO, Any

from .families import FamilyError, GroupTable
from .graph import Graph


class InputError(ValueError):
    """Malformed input; ``code`` names the specific problem."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


MALFORMED = "malformed-json"
BAD_SHAPE = "bad-shape"
LOOP = "loop"
DUPLICATE = "duplicate-edge"
OUT_OF_RANGE = "out-of-range"
BAD_GROUP = "bad-group"


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_json(data: Any) -> Graph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise InputError(BAD_SHAPE, 'expected an object with "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError(BAD_SHAPE, '"n" must be a nonnegative integer')
    edges = data["edges"]
    if not isinstance(edges, list):
        raise InputError(BAD_SHAPE, '"edges" must be a list')
    seen = set()
    for e in edges:
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise InputError(BAD_SHAPE, f"edge {e!r} is not a pair of integers")
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(OUT_OF_RANGE, f"edge {e!r} leaves 0..{n - 1}")
        if u == v:
            raise InputError(LOOP, f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(DUPLICATE, f"edge {list(key)} listed twice")
        seen.add(key)
    return Graph.from_edges(n, sorted(seen))


def loads_graph(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(MALFORMED, str(exc)) from None
    return graph_from_json(data)


def dumps_graph(g: Graph) -> str:
    return json.dumps(graph_to_json(g), separators=(", ", ": "))


def read_graph(source: str | Path | IO[str] | None = None) -> Graph:
    """Read Graph JSON from a path, an open file, or standard input (``None`` or ``"-"``)."""
    if source is None or source == "-":
        return loads_graph(sys.stdin.read())
    if isinstance(source, (str, Path)):
        try:
            return loads_graph(Path(source).read_text())
        except OSError as exc:
            raise InputError("unreadable", str(exc)) from None
    return loads_graph(source.read())


def write_graph(g: Graph, dest: str | Path | IO[str] | None = None) -> None:
    text = dumps_graph(g) + "\n"
    if dest is None or dest == "-":
        sys.stdout.write(text)
    elif isinstance(dest, (str, Path)):
        Path(dest).write_text(text)
    else:
        dest.write(text)


def group_from_json(data: Any) -> GroupTable:
    try:
        return GroupTable.from_json(data)
    except (FamilyError, KeyError, TypeError, ValueError) as exc:
        raise InputError(BAD_GROUP, str(exc)) from None
