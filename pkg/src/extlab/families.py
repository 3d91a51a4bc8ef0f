"""Constructors for the graph families used throughout the package.

Every constructor fixes a vertex labeling so that outputs are reproducible:

* ``circulant(n, s)``: vertex ``i`` is the residue ``i``.
* ``cayley(t, s)``: vertex ``i`` is group element ``i`` of the table.
* ``gp(n, k)``: outer rim ``u_i = i``, inner ``v_i = n + i``.
* ``double_ladder``: ``a_1..a_k`` first, then the ``b`` path, then the ``c`` path
  (see :func:`ladder_labels`).
* ``t_m(m, choice)``: ``x_{i,j}`` (rows ``i = 1..4``, columns ``j = 1..m``)
  is vertex ``4 * (j - 1) + (i - 1)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError


class FamilyError(ValueError):
    """Parameters outside a constructor's domain."""


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its multiplication table.

    ``product[a][b]`` is the index of ``a * b``. Construction validates closure,
    associativity, the identity and inverses.
    """

    order: int
    product: tuple[tuple[int, ...], ...]
    identity: int = 0
    name: str = ""

    def __post_init__(self):
        g = self.order
        if g < 1 or len(self.product) != g or any(len(r) != g for r in self.product):
            raise FamilyError("group table must be order x order")
        if not 0 <= self.identity < g:
            raise FamilyError("identity index out of range")
        for row in self.product:
            if any(not 0 <= x < g for x in row):
                raise FamilyError("group table entry out of range")
        e = self.identity
        for a in range(g):
            if self.product[e][a] != a or self.product[a][e] != a:
                raise FamilyError(f"{e} is not a two-sided identity")
        for a in range(g):
            if e not in self.product[a]:
                raise FamilyError(f"element {a} has no inverse")
        p = self.product
        for a, b, c in itertools.product(range(g), repeat=3):
            if p[p[a][b]][c] != p[a][p[b][c]]:
                raise FamilyError(f"not associative at ({a}, {b}, {c})")

    def mul(self, a: int, b: int) -> int:
        return self.product[a][b]

    def inverse(self, a: int) -> int:
        return self.product[a].index(self.identity)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.product[x][a]
            k += 1
        return k

    def generated(self, s: Iterable[int]) -> frozenset[int]:
        """The subgroup generated by ``s``."""
        gens = list(s)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for a in gens:
                y = self.product[x][a]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return frozenset(seen)

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.product], "identity": self.identity}

    @classmethod
    def from_json(cls, data: dict) -> "GroupTable":
        return cls(int(data["order"]), tuple(tuple(int(x) for x in r) for r in data["table"]),
                   int(data.get("identity", 0)), str(data.get("name", "")))


def cyclic_group(n: int) -> GroupTable:
    return GroupTable(n, tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0, f"Z{n}")


def dihedral_group(n: int) -> GroupTable:
    """The dihedral group of order ``2n``; element ``i + n*j`` is ``r^i s^j``."""
    if n < 2:
        raise FamilyError("dihedral group needs n >= 2")

    def mul(x: int, y: int) -> int:
        i, a = x % n, x // n
        j, b = y % n, y // n
        return (i + (j if a == 0 else -j)) % n + n * ((a + b) % 2)

    g = 2 * n
    return GroupTable(g, tuple(tuple(mul(x, y) for y in range(g)) for x in range(g)), 0, f"D{n}")


def direct_product(a: GroupTable, b: GroupTable) -> GroupTable:
    """``A x B`` with element ``(x, y)`` at index ``x * |B| + y``."""
    nb = b.order
    g = a.order * nb
    rows = tuple(
        tuple(a.product[x // nb][y // nb] * nb + b.product[x % nb][y % nb] for y in range(g))
        for x in range(g)
    )
    return GroupTable(g, rows, a.identity * nb + b.identity, f"{a.name}x{b.name}")


def circulant(n: int, s: Iterable[int]) -> Graph:
    """The Cayley graph of ``Z_n`` with connection set ``s``."""
    if n < 3:
        raise FamilyError("circulant needs n >= 3")
    conn = {a % n for a in s}
    if 0 in conn:
        raise FamilyError("0 is not allowed in the connection set")
    if any((-a) % n not in conn for a in conn):
        raise FamilyError("connection set is not closed under negation")
    edges = {tuple(sorted((i, (i + a) % n))) for i in range(n) for a in conn}
    return Graph.from_edges(n, sorted(edges))


def cycle(n: int) -> Graph:
    """The cycle ``C_n`` as the circulant ``Z_n(1, n-1)``."""
    return circulant(n, [1, n - 1])


EXCEPTIONAL = ("(i)", "(ii)", "(iii)", "(iv)", "(v)")


def exceptional_circulant(family: str, n: int) -> Graph:
    """Member ``n`` of one of the five exceptional circulant families (i)-(v).

    (i) ``Z_2n(1, 2n-1)``, (ii) ``Z_2n(1, 2, 2n-1, 2n-2)`` (both ``n >= 3``),
    (iii) ``Z_4n(1, 4n-1, 2n)`` (``n >= 2``), (iv) ``Z_4n+2(2, 4n, 2n+1)`` and
    (v) ``Z_4n+2(1, 4n+1, 2n, 2n+2)`` (both ``n >= 1``).
    """
    least = {"(i)": 3, "(ii)": 3, "(iii)": 2, "(iv)": 1, "(v)": 1}
    if family not in least:
        raise FamilyError(f"unknown exceptional family {family!r}")
    if n < least[family]:
        raise FamilyError(f"family {family} needs n >= {least[family]}")
    if family == "(i)":
        return circulant(2 * n, [1, 2 * n - 1])
    if family == "(ii)":
        return circulant(2 * n, [1, 2, 2 * n - 1, 2 * n - 2])
    if family == "(iii)":
        return circulant(4 * n, [1, 4 * n - 1, 2 * n])
    if family == "(iv)":
        return circulant(4 * n + 2, [2, 4 * n, 2 * n + 1])
    return circulant(4 * n + 2, [1, 4 * n + 1, 2 * n, 2 * n + 2])


def is_circulant_connected(n: int, s: Iterable[int]) -> bool:
    return math.gcd(n, *s) == 1


def cayley(t: GroupTable, s: Iterable[int]) -> Graph:
    """``x ~ y`` iff ``x * y^-1`` lies in ``s``; ``s`` must be inverse-closed and generate."""
    conn = set(s)
    if t.identity in conn:
        raise FamilyError("identity is not allowed in the connection set")
    if any(not 0 <= a < t.order for a in conn):
        raise FamilyError("connection set element out of range")
    if any(t.inverse(a) not in conn for a in conn):
        raise FamilyError("connection set is not inverse-closed")
    if len(t.generated(conn)) != t.order:
        raise FamilyError("connection set does not generate the group")
    # neighbors of y are s*y
    edges = {tuple(sorted((y, t.mul(a, y)))) for y in range(t.order) for a in conn}
    return Graph.from_edges(t.order, sorted(edges))


def gp(n: int, k: int) -> Graph:
    """Generalized Petersen graph ``GP(n, k)``."""
    if n < 3 or not 1 <= k or 2 * k >= n:
        raise FamilyError("GP(n, k) needs n >= 3 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


# --- double ladders ---------------------------------------------------------


def ladder_labels(parity: str, k: int) -> dict[str, int]:
    """Map names like ``"a1"``, ``"b7"``, ``"c4"`` to vertex indices."""
    if parity not in ("odd", "even"):
        raise FamilyError("parity must be 'odd' or 'even'")
    nb = 2 * k + 1 if parity == "odd" else 2 * k
    nc = k + 1 if parity == "odd" else k
    labels = {f"a{i}": i - 1 for i in range(1, k + 1)}
    labels.update({f"b{i}": k + i - 1 for i in range(1, nb + 1)})
    labels.update({f"c{i}": k + nb + i - 1 for i in range(1, nc + 1)})
    return labels


def ladder_ends(parity: str, k: int) -> tuple[tuple[str, str, str], tuple[str, str, str]]:
    if parity == "odd":
        return ("a1", "b1", "c1"), (f"a{k}", f"b{2 * k + 1}", f"c{k + 1}")
    return ("a1", "b1", "c1"), (f"a{k}", f"b{2 * k}", f"c{k}")


def ladder_matchings(parity: str, k: int) -> list[tuple[tuple[str, str], ...]]:
    """The six bijections between the near and far end triples."""
    near, far = ladder_ends(parity, k)
    return [tuple(zip(near, p)) for p in itertools.permutations(far)]


def parse_matching(text: str) -> tuple[tuple[str, str], ...]:
    """Parse ``"a1c3,b1b5,c1a2"`` into name pairs."""
    pairs = []
    for item in text.split(","):
        item = item.strip().lower()
        cut = next((i for i in range(1, len(item)) if item[i].isalpha()), None)
        if cut is None:
            raise FamilyError(f"cannot parse matching pair {item!r}")
        pairs.append((item[:cut], item[cut:]))
    return tuple(pairs)


def double_ladder(parity: str, k: int, matching: Sequence[tuple[str, str]] | str) -> Graph:
    """Odd (order ``4k+2``) or even (order ``4k``) double ladder of length ``k``.

    ``matching`` pairs each of ``a1, b1, c1`` with one of the far ends. A pair
    that duplicates a ladder edge would create a multigraph and is rejected.
    """
    if k < 2:
        raise FamilyError("double ladder needs k >= 2")
    if isinstance(matching, str):
        matching = parse_matching(matching)
    lab = ladder_labels(parity, k)
    near, far = ladder_ends(parity, k)
    pairs = []
    for x, y in matching:
        if x in far and y in near:
            x, y = y, x
        pairs.append((x, y))
    if sorted(p[0] for p in pairs) != sorted(near) or sorted(p[1] for p in pairs) != sorted(far):
        raise FamilyError(f"matching must be a bijection between {near} and {far}")

    nb = 2 * k + 1 if parity == "odd" else 2 * k
    nc = k + 1 if parity == "odd" else k
    edges = [(lab[f"a{i}"], lab[f"b{2 * i}"]) for i in range(1, k + 1)]
    edges += [(lab[f"c{i}"], lab[f"b{2 * i - 1}"]) for i in range(1, nc + 1)]
    edges += [(lab[f"a{i}"], lab[f"a{i + 1}"]) for i in range(1, k)]
    edges += [(lab[f"b{i}"], lab[f"b{i + 1}"]) for i in range(1, nb)]
    edges += [(lab[f"c{i}"], lab[f"c{i + 1}"]) for i in range(1, nc)]
    edges += [(lab[x], lab[y]) for x, y in pairs]
    try:
        return Graph.from_edges(len(lab), edges)
    except GraphError as exc:
        raise FamilyError(f"matching {pairs} does not give a simple graph: {exc}") from exc


# --- T_m ---------------------------------------------------------------------


def _x(i: int, j: int) -> int:
    return 4 * (j - 1) + ((i - 1) % 4)


def t_m(m: int, choice: str = "straight") -> Graph:
    """The cubic graph ``T_m`` on ``4m`` vertices built from ``m`` quadrangle columns.

    Column ``j`` is the 4-cycle ``x_{1,j} x_{2,j} x_{3,j} x_{4,j}``. Rows 1 and 3
    join columns ``2j-1, 2j``; rows 2 and 4 join columns ``2j, 2j+1``. The two
    remaining ends of the chain are closed by ``M``: ``choice="straight"`` is the
    first listed option, ``"crossed"`` the second.
    """
    if m < 2:
        raise FamilyError("T_m needs m >= 2")
    if choice not in ("straight", "crossed"):
        raise FamilyError("choice must be 'straight' or 'crossed'")
    k = m // 2
    edges = [(_x(i, j), _x(i + 1, j)) for i in range(1, 5) for j in range(1, m + 1)]
    edges += [(_x(1, 2 * j - 1), _x(1, 2 * j)) for j in range(1, k + 1)]
    edges += [(_x(3, 2 * j - 1), _x(3, 2 * j)) for j in range(1, k + 1)]
    # odd m pairs columns 2j, 2j+1 for j <= k; even m stops at j = k-1
    last = k if m % 2 else k - 1
    edges += [(_x(2, 2 * j), _x(2, 2 * j + 1)) for j in range(1, last + 1)]
    edges += [(_x(4, 2 * j), _x(4, 2 * j + 1)) for j in range(1, last + 1)]
    if m % 2:
        if choice == "straight":
            edges += [(_x(1, m), _x(2, 1)), (_x(3, m), _x(4, 1))]
        else:
            edges += [(_x(1, m), _x(4, 1)), (_x(3, m), _x(2, 1))]
    else:
        if choice == "straight":
            edges += [(_x(2, m), _x(2, 1)), (_x(4, m), _x(4, 1))]
        else:
            edges += [(_x(2, m), _x(4, 1)), (_x(4, m), _x(2, 1))]
    return Graph.from_edges(4 * m, edges)


# --- named graphs --------------------------------------------------------------

# Dodecahedron from its LCF code [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2 on a
# Hamiltonian cycle 0..19; this is independent of the GP(10, 2) construction.
_DODECAHEDRON_LCF = (10, 7, 4, -4, -7, 10, -4, 7, -7, 4) * 2

# A pentagonal face of the LCF dodecahedron; deleting it leaves the rosette.
ROSETTE_FACE = (0, 1, 2, 3, 19)


def lcf(n: int, code: Sequence[int]) -> Graph:
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    for i in range(n):
        edges.add(tuple(sorted((i, (i + code[i % len(code)]) % n))))
    return Graph.from_edges(n, sorted(edges))


def named(which: str) -> Graph:
    """``petersen``, ``dodecahedron`` or ``rosette``.

    The rosette is the dodecahedron with the five vertices of one face deleted:
    15 vertices, exactly five of them of degree two.
    """
    key = which.lower()
    if key == "petersen":
        return gp(5, 2)
    if key == "dodecahedron":
        return lcf(20, _DODECAHEDRON_LCF)
    if key == "rosette":
        dod = lcf(20, _DODECAHEDRON_LCF)
        sub, _ = dod.delete_vertices(ROSETTE_FACE)
        return sub
    raise FamilyError(f"unknown named graph {which!r}")


# --- family parameters ------------------------------------------------------------


def build(params: dict) -> Graph:
    """Construct a graph from a parameter dict such as ``{"family": "gp", "n": 5, "k": 2}``."""
    fam = params["family"]
    if fam == "circulant":
        return circulant(params["n"], params["s"])
    if fam == "cayley":
        return cayley(GroupTable.from_json(params["group"]), params["s"])
    if fam == "gp":
        return gp(params["n"], params["k"])
    if fam == "dl":
        return double_ladder(params["parity"], params["k"], params["matching"])
    if fam == "tm":
        return t_m(params["m"], params.get("choice", "straight"))
    if fam == "named":
        return named(params["which"])
    if fam == "cycle":
        return cycle(params["n"])
    if fam == "exceptional":
        return exceptional_circulant(params["which"], params["n"])
    raise FamilyError(f"unknown family {fam!r}")
