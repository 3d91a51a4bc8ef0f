import networkx as nx
import pytest
from hypothesis import strategies as st

from extlab import families
from extlab.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, min_n=1, max_n=9, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


@pytest.fixture(scope="session")
def petersen():
    return families.named("petersen")


@pytest.fixture(scope="session")
def dodecahedron():
    return families.named("dodecahedron")


@pytest.fixture(scope="session")
def k33():
    return families.cayley(families.dihedral_group(3), [3, 4, 5])


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
