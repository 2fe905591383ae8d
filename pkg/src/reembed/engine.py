"""Re-embedding a planar cubic graph by twisting edges, and deciding strongness.

Two independent routes decide whether a re-embedding is strong:

* direct: trace every facial walk of the twisted scheme and check that each
  one is a cycle (``reembed``);
* dual: trace the facial walks of the twisted subgraph of the dual, annotate
  them with visited edges, and apply the mutual-visit criterion
  (``dual_facial_walks`` + ``strong_by_dual_criterion``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from reembed.errors import Not3Connected, NotCubic, NotEdgeSimple
from reembed.graph import EdgeSet, Graph, edge_mask, is_k_connected, mask_indices
from reembed.patterns import (
    TwistedSubgraph,
    enumerate_twisted_subgraphs,
    normalize_surface,
    subgraph_from_edges,
)
from reembed.planar import DualGraph, PlanarEmbedding, dual, planar_embed
from reembed.scheme import (
    EmbeddingScheme,
    FacialWalk,
    SurfaceClass,
    all_facial_walks,
    classify_surface,
)

_SURFACE_NAMES = {"projective": "projective-plane", "torus": "torus", "klein": "klein-bottle"}


@dataclass(frozen=True)
class ReEmbedding:
    twist_set: EdgeSet
    walks: tuple[FacialWalk, ...]
    surface: SurfaceClass
    strong: bool
    source: TwistedSubgraph | None = field(default=None, compare=False)

    @property
    def twists(self) -> list[int]:
        return mask_indices(self.twist_set)

    def to_json(self, g: Graph, one_based: bool = True) -> dict:
        off = 1 if one_based else 0
        return {
            "twists": self.twists,
            "twist_edges": [[g.edges[e][0] + off, g.edges[e][1] + off] for e in self.twists],
            "pattern": str(self.source.kind) if self.source is not None and self.source.kind else None,
            "surface": self.surface.name,
            "chi": self.surface.euler_characteristic,
            "orientable": self.surface.orientable,
            "strong": self.strong,
            "walks": [[v + off for v in w.canonical()] for w in self.walks],
        }

    @classmethod
    def from_json(cls, g: Graph, data: dict, one_based: bool = True) -> "ReEmbedding":
        """Inverse of ``to_json`` (the pattern label is not restored)."""
        off = 1 if one_based else 0
        walks = []
        for seq in data["walks"]:
            vs = tuple(v - off for v in seq)
            es = tuple(g.edge_index(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))
            walks.append(FacialWalk(vs, es))
        surface = SurfaceClass(data["chi"], data["orientable"])
        return cls(edge_mask(data["twists"]), tuple(walks), surface, data["strong"])


@dataclass(frozen=True)
class Prepared:
    """A validated 3-connected cubic planar graph with its embedding and dual."""

    graph: Graph
    embedding: PlanarEmbedding
    dual: DualGraph


def check_cubic_3connected(g: Graph) -> None:
    if not g.is_cubic():
        bad = next(v for v in range(g.n) if g.degree(v) != 3)
        raise NotCubic(f"vertex {bad} has degree {g.degree(bad)}")
    if not is_k_connected(g, 3):
        raise Not3Connected("graph is not 3-connected")


def prepare(g: Graph) -> Prepared:
    """Validate preconditions and build the spherical embedding and the dual.

    Raises:
        NotCubic, Not3Connected, NotPlanar
    """
    check_cubic_3connected(g)
    pe = planar_embed(g)
    return Prepared(g, pe, dual(g, pe))


# ---------------------------------------------------------------------------
# Direct route
# ---------------------------------------------------------------------------

def twisted_set(h: TwistedSubgraph, d: DualGraph) -> EdgeSet:
    return edge_mask(d.primal_edge[e] for e in h.edges)


def twisted_subgraph_of(d: DualGraph, t: EdgeSet) -> TwistedSubgraph:
    """The subgraph of the dual formed by the duals of the edges in ``t``."""
    return subgraph_from_edges(d, (d.edge_dual[e] for e in mask_indices(t)))


def reembed(g: Graph, pe: PlanarEmbedding, t: EdgeSet, source: TwistedSubgraph | None = None) -> ReEmbedding:
    scheme = EmbeddingScheme(pe.rotation, t)
    walks = tuple(all_facial_walks(scheme))
    surface = classify_surface(scheme, walks)
    strong = all(w.is_cycle for w in walks)
    return ReEmbedding(t, walks, surface, strong, source)


def adjacent_twist_filter(pe: PlanarEmbedding, t: EdgeSet) -> bool:
    """True if some face has exactly two twisted edges and they share a vertex.

    A true result guarantees the re-embedding is not strong; false says nothing.
    """
    g = pe.graph
    for f in range(len(pe.faces)):
        tw = [e for e in pe.face_edges(f) if (t >> e) & 1]
        if len(tw) == 2 and set(g.edges[tw[0]]) & set(g.edges[tw[1]]):
            return True
    return False


def _has_bridge(pairs: list[tuple[int, int]]) -> bool:
    for skip in range(len(pairs)):
        u, v = pairs[skip]
        adj: dict[int, list[int]] = {}
        for i, (a, b) in enumerate(pairs):
            if i != skip:
                adj.setdefault(a, []).append(b)
                adj.setdefault(b, []).append(a)
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if v not in seen:
            return True
    return False


def _is_k11m(pairs: list[tuple[int, int]]) -> bool:
    deg: dict[int, int] = {}
    adj: dict[int, set[int]] = {}
    for a, b in pairs:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    m = len(deg) - 2
    if m < 1 or len(pairs) != 2 * m + 1:
        return False
    for x, y in pairs:
        rest = set(deg) - {x, y}
        if deg[x] == deg[y] == m + 1 and all(adj[z] == {x, y} for z in rest):
            return True
    return False


def never_strong_shape(h: TwistedSubgraph, d: DualGraph | Graph) -> bool:
    """True if ``h`` has a bridge (in particular a degree-one vertex) or is a ``K_{1,1,m}``."""
    host = d.graph if isinstance(d, DualGraph) else d
    pairs = [host.edges[e] for e in sorted(h.edges)]
    if not pairs:
        return False
    return _has_bridge(pairs) or _is_k11m(pairs)


# ---------------------------------------------------------------------------
# Dual route
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DualFacialWalk:
    """A facial walk ``w_1 .. w_n`` of the twisted subgraph, annotated.

    ``twisted[i]`` is the dual edge from ``vertices[i]`` to ``vertices[i+1]``;
    ``visited_edges[i]`` are the untwisted dual edges met at ``vertices[i]``
    between the incoming and outgoing twisted edge, in encounter order, and
    ``visited[i]`` their far endpoints. ``kappas[i]`` is the orientation in
    force at ``vertices[i]``.
    """

    vertices: tuple[int, ...]
    twisted: tuple[int, ...]
    visited: tuple[tuple[int, ...], ...]
    visited_edges: tuple[tuple[int, ...], ...]
    kappas: tuple[int, ...]

    def primal_edges(self, d: DualGraph) -> tuple[int, ...]:
        """Primal edge sequence of the corresponding walk of the re-embedding."""
        out = []
        for ms, tw in zip(self.visited_edges, self.twisted):
            out.extend(d.primal_edge[x] for x in ms)
            out.append(d.primal_edge[tw])
        return tuple(out)

    def primal_walk(self, d: DualGraph) -> FacialWalk:
        """Reconstructed facial walk of the re-embedded primal graph.

        Consecutive primal edges are distinct edges of a simple graph, so the
        vertex between them is their unique common endpoint.
        """
        g = d.primal.graph
        es = self.primal_edges(d)
        vs = []
        for i, e in enumerate(es):
            nxt = set(g.edges[es[(i + 1) % len(es)]])
            a, b = g.edges[e]
            vs.append(a if b in nxt else b)
        return FacialWalk(tuple(vs), es)

    def labelled(self, names=None) -> list[tuple]:
        names = names or (lambda x: x)
        return [(names(w), tuple(names(v) for v in vs)) for w, vs in zip(self.vertices, self.visited)]


def restricted_scheme(d: DualGraph, h: TwistedSubgraph) -> tuple[EmbeddingScheme, tuple[int, ...]]:
    """Scheme of ``h`` with the inherited dual rotation and every edge twisted.

    Returns the scheme and the map from its edge indices to dual edge indices.
    """
    emap = tuple(sorted(h.edges))
    sub = Graph(d.graph.n, [d.graph.edges[e] for e in emap])
    rot = d.rotation.restricted(sub, emap)
    return EmbeddingScheme(rot, (1 << len(emap)) - 1), emap


def dual_facial_walks(d: DualGraph, h: TwistedSubgraph) -> list[DualFacialWalk]:
    """Annotated facial walks of the twisted subgraph ``h``.

    Raises:
        NotEdgeSimple: if some facial walk of ``h`` repeats an edge; the
            re-embedding is then not strong.
    """
    if not h.edges:
        raise ValueError("twisted subgraph must have at least one edge")
    scheme, emap = restricted_scheme(d, h)
    rot = d.rotation.order
    g = d.graph
    out = []
    for walk in all_facial_walks(scheme):
        host_edges = [emap[e] for e in walk.edges]
        seen = set()
        for e in host_edges:
            if e in seen:
                raise NotEdgeSimple(e)
            seen.add(e)
        n = len(host_edges)
        visited_edges, visited = [], []
        for i in range(n):
            w = walk.vertices[i]
            e_in, e_out = host_edges[i - 1], host_edges[i]
            k = walk.kappas[i]
            ring = rot[w]
            pos = ring.index(e_in)
            ms = []
            step = 1 if k == 1 else -1
            j = (pos + step) % len(ring)
            while ring[j] != e_out:
                ms.append(ring[j])
                j = (j + step) % len(ring)
            visited_edges.append(tuple(ms))
            visited.append(tuple(g.other(x, w) for x in ms))
        out.append(DualFacialWalk(walk.vertices, tuple(host_edges), tuple(visited),
                                  tuple(visited_edges), walk.kappas))
    return out


def strong_by_dual_criterion(walks: Iterable[DualFacialWalk]) -> bool:
    """False iff some walk has positions l != m with w_l visited at m and w_m visited at l."""
    for walk in walks:
        ws = walk.vertices
        vis = [set(v) for v in walk.visited]
        for a in range(len(ws)):
            for b in range(a + 1, len(ws)):
                if ws[a] in vis[b] and ws[b] in vis[a]:
                    return False
    return True


def strong_via_dual(d: DualGraph, h: TwistedSubgraph) -> bool:
    if not h.edges:
        return True
    try:
        walks = dual_facial_walks(d, h)
    except NotEdgeSimple:
        return False
    return strong_by_dual_criterion(walks)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def enumerate_reembeddings(g: Graph, surface: str, strong_only: bool = False,
                           prepared: Prepared | None = None) -> list[ReEmbedding]:
    """One re-embedding per twisted subgraph of the requested family.

    Results are sorted by twist-set bitmask. The strongness and surface of each
    result are computed by the direct route, not assumed from the pattern.
    """
    p = prepared or prepare(g)
    surface = normalize_surface(surface)
    out = []
    for h in enumerate_twisted_subgraphs(p.dual, surface, strong_only):
        out.append(reembed(g, p.embedding, twisted_set(h, p.dual), source=h))
    out.sort(key=lambda r: r.twist_set)
    return out


def surface_name(surface: str) -> str:
    return _SURFACE_NAMES[normalize_surface(surface)]


# ---------------------------------------------------------------------------
# Automorphism folding (optional post-processing)
# ---------------------------------------------------------------------------

def map_automorphisms(pe: PlanarEmbedding) -> list[tuple[int, ...]]:
    """Edge permutations induced by automorphisms of the embedded graph.

    For 3-connected planar graphs these are all graph automorphisms
    (orientation-preserving and reversing).
    """
    g = pe.graph
    rot = pe.rotation
    ndarts = 2 * g.m
    sigma = [rot.cw_next[d ^ 1] for d in range(ndarts)]
    sigma_inv = [rot.ccw_next[d ^ 1] for d in range(ndarts)]
    result = []
    for target in range(ndarts):
        for flip in (False, True):
            f = [-1] * ndarts
            f[0] = target
            stack = [0]
            ok = True
            while stack and ok:
                d = stack.pop()
                img = f[d]
                for src, dst in ((d ^ 1, img ^ 1),
                                 (sigma[d], sigma_inv[img] if flip else sigma[img])):
                    if f[src] < 0:
                        f[src] = dst
                        stack.append(src)
                    elif f[src] != dst:
                        ok = False
                        break
            if ok and -1 not in f and len(set(f)) == ndarts:
                result.append(tuple(f[2 * e] >> 1 for e in range(g.m)))
    return sorted(set(result))


def fold_by_automorphisms(pe: PlanarEmbedding, results: list[ReEmbedding]) -> list[ReEmbedding]:
    """Keep one re-embedding per automorphism orbit of twist sets."""
    perms = map_automorphisms(pe)
    seen = set()
    out = []
    for r in results:
        edges = mask_indices(r.twist_set)
        key = min(edge_mask(p[e] for e in edges) for p in perms)
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


def dual_agreement(g: Graph, surface: str, prepared: Prepared | None = None) -> list[TwistedSubgraph]:
    """Pattern subgraphs on which the dual criterion and the direct route disagree."""
    p = prepared or prepare(g)
    bad = []
    for h in enumerate_twisted_subgraphs(p.dual, surface, strong_only=False):
        direct = reembed(g, p.embedding, twisted_set(h, p.dual)).strong
        if strong_via_dual(p.dual, h) != direct:
            bad.append(h)
    return bad
