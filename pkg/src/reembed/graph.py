"""Simple undirected graphs with stable edge indices.

Vertices are ``0..n-1``. Edges are stored as ``(u, v)`` pairs with ``u < v``
and are referred to everywhere else in the package by their position in
``Graph.edges``. Edge subsets are plain ``int`` bitmasks over those indices.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Iterator, Sequence

from reembed.errors import ParseError

EdgeSet = int
"""Bitmask over edge indices of a host graph (bit ``i`` set = edge ``i`` in set)."""


def edge_mask(indices: Iterable[int]) -> EdgeSet:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def mask_indices(mask: EdgeSet) -> list[int]:
    """Edge indices present in ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class Graph:
    """Immutable simple undirected graph.

    ``adjacency[v]`` is the list of ``(neighbor, edge_index)`` pairs of ``v``
    sorted by neighbor.
    """

    __slots__ = ("n", "edges", "adjacency", "_index")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        norm: list[tuple[int, int]] = []
        index: dict[tuple[int, int], int] = {}
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise ValueError(f"parallel edge {key}")
            index[key] = len(norm)
            norm.append(key)
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(norm):
            adjacency[u].append((v, i))
            adjacency[v].append((u, i))
        for lst in adjacency:
            lst.sort()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adjacency))
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> "Graph":
        """Build a graph with edge indices in lexicographic ``(u < v)`` order."""
        pairs = sorted({(min(u, v), max(u, v)) for u, v in edges})
        if n is None:
            n = 1 + max((v for _, v in pairs), default=-1)
        return cls(n, pairs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge ``{u, v}``; raises ``KeyError`` if absent."""
        return self._index[(min(u, v), max(u, v))]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v} is not on edge {e}")

    def is_cubic(self) -> bool:
        return all(len(a) == 3 for a in self.adjacency)

    def is_connected(self, removed: Iterable[int] = ()) -> bool:
        """Connectivity of the graph after deleting the vertices in ``removed``."""
        gone = set(removed)
        alive = [v for v in range(self.n) if v not in gone]
        if not alive:
            return True
        seen = {alive[0]}
        stack = [alive[0]]
        while stack:
            v = stack.pop()
            for w, _ in self.adjacency[v]:
                if w not in gone and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(alive)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``; edge order is re-sorted."""
        return Graph.from_edges(((perm[u], perm[v]) for u, v in self.edges), n=self.n)


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

_HEADER = ">>graph6<<"


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line.

    Edge indices come out in lexicographic order of ``(u, v)`` with ``u < v``.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    line = text.strip()
    base = 0
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
        base = len(_HEADER)
    if not line:
        raise ParseError("empty graph6 input", base)
    data = []
    for i, ch in enumerate(line):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", base + i)
        data.append(c - 63)

    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated 8-byte vertex count", base + len(data))
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        if len(data) < 4:
            raise ParseError("truncated 4-byte vertex count", base + len(data))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise ParseError(f"expected {need} data bytes, found {len(body)}", base + len(data))
    if len(body) > need:
        raise ParseError("trailing bytes after graph6 data", base + pos + need)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, bit = divmod(k, 6)
            if (body[byte] >> (5 - bit)) & 1:
                edges.append((i, j))
            k += 1
    if need and nbits % 6:
        pad = 6 - nbits % 6
        if body[-1] & ((1 << pad) - 1):
            raise ParseError("non-zero padding bits", base + pos + need - 1)
    return Graph.from_edges(edges, n=n)


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, (n >> 12) & 63, (n >> 6) & 63, n & 63]
        out[1:] = [x + 63 for x in out[1:]]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        out.append(x + 63)
    return "".join(map(chr, out))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def is_k_connected(g: Graph, k: int) -> bool:
    """Vertex ``k``-connectivity by exhaustive search over cuts of size ``< k``."""
    if not 1 <= k <= 3:
        raise ValueError("k must be in 1..3")
    if g.n <= k:
        return False
    for size in range(k):
        for cut in itertools.combinations(range(g.n), size):
            if not g.is_connected(cut):
                return False
    return True


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in g.adjacency[v]:
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def _cyclic_components(g: Graph, removed: set[int]) -> int:
    """Number of components containing a cycle once ``removed`` edges are deleted."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cyclic = set()
    for i, (u, v) in enumerate(g.edges):
        if i in removed:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            cyclic.add(ru)
        else:
            parent[ru] = rv
            if ru in cyclic:
                cyclic.discard(ru)
                cyclic.add(rv)
    return len({find(r) for r in cyclic})


def cyclically_k_edge_connected(g: Graph, k: int) -> bool:
    """True iff no set of at most ``k - 1`` edges separates two cyclic components.

    Graphs without two vertex-disjoint cycles satisfy this vacuously.
    """
    if k < 1:
        raise ValueError("k must be positive")
    for size in range(k):
        for cut in itertools.combinations(range(g.m), size):
            if _cyclic_components(g, set(cut)) >= 2:
                return False
    return True


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------

def _refine(g: Graph, color: list[int]) -> list[int]:
    """Equitable refinement; returns colors ranked ``0..k-1`` in an invariant order."""
    ncolors = len(set(color))
    while True:
        keys = [
            (color[v], tuple(sorted(color[w] for w, _ in g.adjacency[v])))
            for v in range(g.n)
        ]
        ranks = {key: r for r, key in enumerate(sorted(set(keys)))}
        color = [ranks[key] for key in keys]
        if len(ranks) == ncolors:
            return color
        ncolors = len(ranks)


def _certificate(g: Graph, color: list[int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(
        (min(color[u], color[v]), max(color[u], color[v])) for u, v in g.edges
    ))


def canonical_labeling(g: Graph) -> list[int]:
    """A permutation ``perm`` such that ``g.relabel(perm)`` is canonical.

    Individualisation-refinement without automorphism pruning; adequate for
    the few-dozen-vertex graphs handled here.
    """
    best: list = [None, None]

    def search(color: list[int]) -> None:
        color = _refine(g, color)
        k = max(color, default=-1) + 1
        if k == g.n:
            cert = _certificate(g, color)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, color
            return
        sizes = [0] * k
        for c in color:
            sizes[c] += 1
        target = min((s, c) for c, s in enumerate(sizes) if s > 1)[1]
        for v in range(g.n):
            if color[v] == target:
                child = [2 * c + (1 if c >= target and u != v else 0) for u, c in enumerate(color)]
                search(child)

    search([len(a) for a in g.adjacency])
    return best[1] if best[1] is not None else []


def canonical_form(g: Graph) -> bytes:
    """Relabelling-invariant byte string; equal iff the graphs are isomorphic."""
    return emit_graph6(g.relabel(canonical_labeling(g))).encode("ascii")
