"""Small named graphs used as fixtures and CLI shortcuts."""

from __future__ import annotations

from reembed.graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph.from_edges([(i, j) for i in range(n) for j in range(i + 1, n)], n=n)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges([(i, a + j) for i in range(a) for j in range(b)], n=a + b)


def path_graph(n: int) -> Graph:
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], n=n)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], n=n)


def prism_graph(k: int) -> Graph:
    """``C_k x K_2``: outer cycle ``0..k-1``, inner cycle ``k..2k-1``, spokes ``i -- k+i``."""
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((k + i, k + (i + 1) % k))
        edges.append((i, k + i))
    return Graph.from_edges(edges, n=2 * k)


def cube_graph() -> Graph:
    return prism_graph(4)


def dodecahedron_graph() -> Graph:
    # outer 5-cycle, middle 10-cycle, inner 5-cycle
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, 5 + 2 * i))
        edges.append((15 + i, 15 + (i + 1) % 5))
        edges.append((15 + i, 6 + 2 * i))
    for j in range(10):
        edges.append((5 + j, 5 + (j + 1) % 10))
    return Graph.from_edges(edges, n=20)


def petersen_graph() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, 5 + i))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(edges, n=10)


def triangular_prism_labelled() -> Graph:
    """Triangular prism with faces (2,3,4,5), (1,2,5,6), (1,2,3), (1,3,4,6), (4,5,6), 1-based."""
    pairs = [(1, 2), (1, 3), (1, 6), (2, 3), (2, 5), (3, 4), (4, 5), (4, 6), (5, 6)]
    return Graph.from_edges([(u - 1, v - 1) for u, v in pairs], n=6)


NAMED = {
    "k4": lambda: complete_graph(4),
    "prism": lambda: prism_graph(3),
    "triangular-prism": triangular_prism_labelled,
    "cube": cube_graph,
    "dodecahedron": dodecahedron_graph,
    "k33": lambda: complete_bipartite(3, 3),
    "petersen": petersen_graph,
}
