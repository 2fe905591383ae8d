"""Enumeration of the twisted-subgraph pattern families in a dual graph.

Patterns are matched as edge subsets of the host: extra host edges among the
chosen vertices are allowed and are exactly what the non-adjacency flags on
``K_{2,m}`` inspect. Results are deduplicated by edge set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from reembed.graph import EdgeSet, Graph, edge_mask
from reembed.planar import DualGraph

Parity = Literal["even", "odd", "any"]

SURFACES = ("projective", "torus", "klein")
_SURFACE_ALIASES = {
    "projective": "projective",
    "projective-plane": "projective",
    "torus": "torus",
    "klein": "klein",
    "klein-bottle": "klein",
}


def normalize_surface(surface: str) -> str:
    try:
        return _SURFACE_ALIASES[surface.lower()]
    except KeyError:
        raise ValueError(f"unknown surface {surface!r}; expected one of {SURFACES}") from None


@dataclass(frozen=True)
class PatternKind:
    """Pattern family tag with its parameters.

    ``m`` is set for ``K11m`` and ``K2m``; ``nonadjacent`` only for ``K2m``
    and records whether every partition class of size two is independent in
    the host.
    """

    tag: str
    m: int | None = None
    nonadjacent: bool | None = None

    def __str__(self) -> str:
        if self.tag == "K11m":
            return f"K_{{1,1,{self.m}}}"
        if self.tag == "K2m":
            return f"K_{{2,{self.m}}}"
        if self.tag == "K222":
            return "K_{2,2,2}"
        return self.tag


@dataclass(frozen=True, eq=False)
class TwistedSubgraph:
    """A subgraph of the dual given by its edge set.

    Two instances are equal iff their edge sets are equal. ``parts`` holds the
    partition classes for multipartite kinds, in the order of the kind's name.
    """

    vertices: frozenset[int]
    edges: frozenset[int]
    kind: PatternKind | None = None
    parts: tuple[frozenset[int], ...] = ()

    def __eq__(self, other) -> bool:
        return isinstance(other, TwistedSubgraph) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    @property
    def mask(self) -> EdgeSet:
        return edge_mask(self.edges)

    def sort_key(self) -> tuple:
        return (self.mask,)


def _host(d: DualGraph | Graph) -> Graph:
    return d.graph if isinstance(d, DualGraph) else d


def subgraph_from_edges(host: DualGraph | Graph, edges: Iterable[int], kind: PatternKind | None = None,
                        parts: tuple[frozenset[int], ...] = ()) -> TwistedSubgraph:
    g = _host(host)
    es = frozenset(edges)
    vs = frozenset(v for e in es for v in g.edges[e])
    return TwistedSubgraph(vs, es, kind, parts)


def subgraph_from_mask(host: DualGraph | Graph, mask: EdgeSet) -> TwistedSubgraph:
    from reembed.graph import mask_indices
    return subgraph_from_edges(host, mask_indices(mask))


class _Collector:
    def __init__(self, g: Graph):
        self.g = g
        self.seen: set[frozenset[int]] = set()
        self.out: list[TwistedSubgraph] = []

    def add(self, pairs: Iterable[tuple[int, int]], kind: PatternKind, parts=()) -> None:
        es = frozenset(self.g.edge_index(u, v) for u, v in pairs)
        if es in self.seen:
            return
        self.seen.add(es)
        vs = frozenset(v for e in es for v in self.g.edges[e])
        self.out.append(TwistedSubgraph(vs, es, kind, tuple(frozenset(p) for p in parts)))

    def result(self) -> list[TwistedSubgraph]:
        return sorted(self.out, key=TwistedSubgraph.sort_key)


def _nbrs(g: Graph) -> list[set[int]]:
    return [set(g.neighbors(v)) for v in range(g.n)]


def _parity_ok(k: int, parity: Parity) -> bool:
    return parity == "any" or (k % 2 == 0) == (parity == "even")


def _k4_sets(g: Graph) -> list[tuple[int, int, int, int]]:
    nb = _nbrs(g)
    out = []
    for a in range(g.n):
        for b in sorted(w for w in nb[a] if w > a):
            ab = nb[a] & nb[b]
            for c in sorted(w for w in ab if w > b):
                for x in sorted(w for w in ab & nb[c] if w > c):
                    out.append((a, b, c, x))
    return out


def _clique_pairs(vs: Iterable[int]) -> list[tuple[int, int]]:
    return list(itertools.combinations(sorted(vs), 2))


def find_k2(d: DualGraph | Graph) -> list[TwistedSubgraph]:
    g = _host(d)
    col = _Collector(g)
    for u, v in g.edges:
        col.add([(u, v)], PatternKind("K2"))
    return col.result()


def find_k4(d: DualGraph | Graph) -> list[TwistedSubgraph]:
    g = _host(d)
    col = _Collector(g)
    for quad in _k4_sets(g):
        col.add(_clique_pairs(quad), PatternKind("K4"))
    return col.result()


def find_k2m(d: DualGraph | Graph, m_parity: Parity = "any", min_m: int = 2,
             max_m: int | None = None) -> list[TwistedSubgraph]:
    """All ``K_{2,m}`` with ``min_m <= m <= max_m`` and the requested parity of ``m``.

    ``parts`` is ``({u, v}, W)`` with ``W`` the class of size ``m``. For
    ``m = 2`` both classes have size two and both are checked for adjacency.
    """
    g = _host(d)
    nb = _nbrs(g)
    col = _Collector(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = sorted(nb[u] & nb[v])
            hi = len(common) if max_m is None else min(max_m, len(common))
            for k in range(max(min_m, 1), hi + 1):
                if not _parity_ok(k, m_parity):
                    continue
                for w in itertools.combinations(common, k):
                    nonadj = v not in nb[u]
                    if k == 2:
                        nonadj = nonadj and w[1] not in nb[w[0]]
                    pairs = [(u, x) for x in w] + [(v, x) for x in w]
                    col.add(pairs, PatternKind("K2m", k, nonadj), ({u, v}, set(w)))
    return col.result()


def find_k11m(d: DualGraph | Graph, m_parity: Parity = "any") -> list[TwistedSubgraph]:
    """All ``K_{1,1,m}``: an edge ``{x, y}`` plus ``m >= 1`` common neighbours."""
    g = _host(d)
    nb = _nbrs(g)
    col = _Collector(g)
    for x, y in g.edges:
        common = sorted(nb[x] & nb[y])
        for k in range(1, len(common) + 1):
            if not _parity_ok(k, m_parity):
                continue
            for w in itertools.combinations(common, k):
                pairs = [(x, y)] + [(x, z) for z in w] + [(y, z) for z in w]
                col.add(pairs, PatternKind("K11m", k), ({x}, {y}, set(w)))
    return col.result()


def find_k222(d: DualGraph | Graph) -> list[TwistedSubgraph]:
    """All octahedral subgraphs: three vertex pairs with all 12 cross edges."""
    g = _host(d)
    nb = _nbrs(g)
    col = _Collector(g)
    for a in range(g.n):
        for a2 in range(a + 1, g.n):
            common = sorted(nb[a] & nb[a2])
            for b, b2 in itertools.combinations(common, 2):
                inner = sorted((nb[b] & nb[b2] & set(common)) - {b, b2})
                for c, c2 in itertools.combinations(inner, 2):
                    four = (b, b2, c, c2)
                    pairs = [(a, x) for x in four] + [(a2, x) for x in four]
                    pairs += [(b, c), (b, c2), (b2, c), (b2, c2)]
                    col.add(pairs, PatternKind("K222"), ({a, a2}, {b, b2}, {c, c2}))
    return col.result()


def _a6(g: Graph, col: _Collector) -> None:
    nb = _nbrs(g)
    for c in range(g.n):
        for c2 in range(c + 1, g.n):
            common = sorted(nb[c] & nb[c2])
            inner = [(x, y) for x, y in itertools.combinations(common, 2) if y in nb[x]]
            for (a, b), (e, f) in itertools.combinations(inner, 2):
                if {a, b} & {e, f}:
                    continue
                pairs = [(a, b), (e, f)] + [(z, x) for z in (c, c2) for x in (a, b, e, f)]
                col.add(pairs, PatternKind("A6"), ({a, b}, {c, c2}, {e, f}))


def find_A(d: DualGraph | Graph, which: str) -> list[TwistedSubgraph]:
    """Klein-bottle patterns ``A1`` .. ``A6``.

    A1: two disjoint edges. A2: an edge and a disjoint K4. A3: two disjoint
    K4. A4: K4 plus a pendant edge. A5: two K4 sharing one vertex. A6: two
    copies of K4 minus an edge glued along the missing pair.
    """
    g = _host(d)
    col = _Collector(g)
    kind = PatternKind(which)
    k4s = [frozenset(q) for q in _k4_sets(g)]
    if which == "A1":
        for (u, v), (x, y) in itertools.combinations(g.edges, 2):
            if not {u, v} & {x, y}:
                col.add([(u, v), (x, y)], kind)
    elif which == "A2":
        for q in k4s:
            for u, v in g.edges:
                if u not in q and v not in q:
                    col.add(_clique_pairs(q) + [(u, v)], kind, (q, {u, v}))
    elif which == "A3":
        for q1, q2 in itertools.combinations(k4s, 2):
            if not q1 & q2:
                col.add(_clique_pairs(q1) + _clique_pairs(q2), kind, (q1, q2))
    elif which == "A4":
        for q in k4s:
            for u, v in g.edges:
                if (u in q) != (v in q):
                    col.add(_clique_pairs(q) + [(u, v)], kind, (q, {u, v}))
    elif which == "A5":
        for q1, q2 in itertools.combinations(k4s, 2):
            if len(q1 & q2) == 1:
                col.add(_clique_pairs(q1) + _clique_pairs(q2), kind, (q1, q2))
    elif which == "A6":
        _a6(g, col)
    else:
        raise ValueError(f"unknown A-pattern {which!r}")
    return col.result()


def _family(d, surface: str, strong_only: bool) -> Iterator[list[TwistedSubgraph]]:
    if surface == "projective":
        if not strong_only:
            yield find_k2(d)
        yield find_k4(d)
    elif surface == "torus":
        yield find_k222(d)
        k2m = find_k2m(d, "even")
        yield [h for h in k2m if h.kind.nonadjacent] if strong_only else k2m
        if not strong_only:
            yield find_k11m(d, "odd")
    else:
        for a in (("A3", "A5", "A6") if strong_only else ("A1", "A2", "A3", "A4", "A5", "A6")):
            yield find_A(d, a)
        if strong_only:
            yield [h for h in find_k2m(d, "odd", min_m=3) if h.kind.nonadjacent]
        else:
            yield find_k2m(d, "odd", min_m=1)
            yield find_k11m(d, "even")


def enumerate_twisted_subgraphs(d: DualGraph | Graph, surface: str, strong_only: bool = False) -> list[TwistedSubgraph]:
    """Every dual subgraph whose twist set re-embeds on ``surface``.

    With ``strong_only`` only the families that give strong re-embeddings are
    returned. Output is sorted by edge bitmask.
    """
    surface = normalize_surface(surface)
    out = [h for batch in _family(d, surface, strong_only) for h in batch]
    return sorted(out, key=TwistedSubgraph.sort_key)


# ---------------------------------------------------------------------------
# Independent structural check (used by tests and the verifier)
# ---------------------------------------------------------------------------

def _model(kind: PatternKind) -> Graph:
    from reembed import named
    tag = kind.tag
    if tag == "K2":
        return named.complete_graph(2)
    if tag == "K4":
        return named.complete_graph(4)
    if tag == "K2m":
        return named.complete_bipartite(2, kind.m)
    if tag == "K11m":
        m = kind.m
        return Graph.from_edges([(0, 1)] + [(0, 2 + i) for i in range(m)] + [(1, 2 + i) for i in range(m)])
    if tag == "K222":
        return Graph.from_edges([(i, j) for i in range(6) for j in range(i + 1, 6) if j != i + 3])
    k4 = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    if tag == "A1":
        return Graph.from_edges([(0, 1), (2, 3)])
    if tag == "A2":
        return Graph.from_edges(k4 + [(4, 5)])
    if tag == "A3":
        return Graph.from_edges(k4 + [(i + 4, j + 4) for i, j in k4])
    if tag == "A4":
        return Graph.from_edges(k4 + [(3, 4)])
    if tag == "A5":
        return Graph.from_edges(k4 + [(3 if i == 0 else i + 3, 3 if j == 0 else j + 3) for i, j in k4])
    if tag == "A6":
        return Graph.from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)])
    raise ValueError(f"no model for {kind}")


def edge_induced_graph(host: DualGraph | Graph, edges: Iterable[int]) -> Graph:
    g = _host(host)
    es = sorted(edges)
    vs = sorted({v for e in es for v in g.edges[e]})
    pos = {v: i for i, v in enumerate(vs)}
    return Graph.from_edges([(pos[g.edges[e][0]], pos[g.edges[e][1]]) for e in es], n=len(vs))


def matches_kind(host: DualGraph | Graph, h: TwistedSubgraph) -> bool:
    """Isomorphism check of ``h`` against its kind, plus the non-adjacency flag."""
    from reembed.graph import canonical_form
    g = _host(host)
    if h.kind is None:
        return False
    sub = edge_induced_graph(g, h.edges)
    if canonical_form(sub) != canonical_form(_model(h.kind)):
        return False
    if h.kind.tag == "K2m":
        classes = _bipartition(g, h.edges)
        small = [c for c in classes if len(c) == 2]
        nonadj = all(not g.has_edge(*sorted(c)) for c in small)
        return nonadj == h.kind.nonadjacent
    return True


def _bipartition(g: Graph, edges: Iterable[int]) -> list[set[int]]:
    adj: dict[int, set[int]] = {}
    for e in edges:
        u, v = g.edges[e]
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    side: dict[int, int] = {}
    for s in adj:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    stack.append(y)
    return [{v for v, s in side.items() if s == t} for t in (0, 1)]
