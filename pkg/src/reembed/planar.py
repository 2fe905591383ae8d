"""Rotation systems, the spherical embedding of a planar graph, and its dual.

Darts: edge ``e = (a, b)`` (``a < b``) owns darts ``2e`` (``a -> b``) and
``2e + 1`` (``b -> a``). ``dart ^ 1`` is the reverse dart.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from reembed.errors import DualNotSimple, NotPlanar
from reembed.graph import Graph


def dart_tail(g: Graph, d: int) -> int:
    return g.edges[d >> 1][d & 1]


def dart_head(g: Graph, d: int) -> int:
    return g.edges[d >> 1][1 - (d & 1)]


def dart_from(g: Graph, v: int, e: int) -> int:
    """The dart of edge ``e`` leaving ``v``."""
    return 2 * e + (0 if g.edges[e][0] == v else 1)


class RotationSystem:
    """Clockwise cyclic order of incident edge indices at every vertex.

    ``cw_next[d]`` / ``ccw_next[d]`` give, for a dart ``d`` arriving at ``w``
    along ``e``, the dart leaving ``w`` along ``rho_w(e)`` / ``rho_w^{-1}(e)``.
    """

    __slots__ = ("graph", "order", "cw_next", "ccw_next")

    def __init__(self, graph: Graph, order: Sequence[Sequence[int]]):
        order = tuple(tuple(o) for o in order)
        if len(order) != graph.n:
            raise ValueError("rotation must list every vertex")
        cw_next = [0] * (2 * graph.m)
        ccw_next = [0] * (2 * graph.m)
        for w, rot in enumerate(order):
            inc = sorted(e for _, e in graph.adjacency[w])
            if sorted(rot) != inc:
                raise ValueError(f"rotation at {w} is not a permutation of its incident edges")
            k = len(rot)
            for i, e in enumerate(rot):
                arriving = dart_from(graph, graph.other(e, w), e)
                cw_next[arriving] = dart_from(graph, w, rot[(i + 1) % k])
                ccw_next[arriving] = dart_from(graph, w, rot[(i - 1) % k])
        self.graph = graph
        self.order = order
        self.cw_next = cw_next
        self.ccw_next = ccw_next

    def __eq__(self, other) -> bool:
        return (isinstance(other, RotationSystem) and self.graph == other.graph
                and self.encoding() == other.encoding())

    def __hash__(self) -> int:
        return hash(self.encoding())

    def __repr__(self) -> str:
        return f"RotationSystem({list(map(list, self.order))})"

    def succ(self, v: int, e: int) -> int:
        """Clockwise successor of ``e`` around ``v``."""
        rot = self.order[v]
        return rot[(rot.index(e) + 1) % len(rot)]

    def pred(self, v: int, e: int) -> int:
        rot = self.order[v]
        return rot[(rot.index(e) - 1) % len(rot)]

    def reversed_at(self, v: int) -> "RotationSystem":
        order = list(self.order)
        order[v] = tuple(reversed(order[v]))
        return RotationSystem(self.graph, order)

    def mirrored(self) -> "RotationSystem":
        return RotationSystem(self.graph, [tuple(reversed(o)) for o in self.order])

    def encoding(self) -> tuple[tuple[int, ...], ...]:
        """Neighbour sequences, each rotated to start at its smallest neighbour."""
        g = self.graph
        out = []
        for v, rot in enumerate(self.order):
            nbrs = [g.other(e, v) for e in rot]
            if nbrs:
                i = nbrs.index(min(nbrs))
                nbrs = nbrs[i:] + nbrs[:i]
            out.append(tuple(nbrs))
        return tuple(out)

    def restricted(self, sub: Graph, edge_map: Sequence[int]) -> "RotationSystem":
        """Rotation induced on ``sub`` whose edge ``i`` is host edge ``edge_map[i]``."""
        back = {h: i for i, h in enumerate(edge_map)}
        order = [tuple(back[e] for e in rot if e in back) for rot in self.order]
        return RotationSystem(sub, order)


def face_orbits(rot: RotationSystem) -> list[list[int]]:
    """Dart cycles of ``d -> cw_next[d]``, each starting at its smallest dart."""
    seen = [False] * len(rot.cw_next)
    orbits = []
    for start in range(len(seen)):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = rot.cw_next[d]
        orbits.append(orbit)
    return orbits


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation of ``seq`` or of its reversal."""
    seq = tuple(seq)
    if not seq:
        return seq
    k = len(seq)
    rev = seq[::-1]
    return min(min(s[i:] + s[:i] for i in range(k)) for s in (seq, rev))


@dataclass(frozen=True)
class PlanarEmbedding:
    """Spherical embedding: rotation, faces and the edge/face incidence.

    ``face_darts[f]`` is the dart cycle of face ``f`` in traversal order;
    ``faces[f]`` is its canonical vertex cycle. ``edge_faces[e]`` is the pair
    ``(face of dart 2e, face of dart 2e+1)``.
    """

    graph: Graph
    rotation: RotationSystem
    faces: tuple[tuple[int, ...], ...]
    face_darts: tuple[tuple[int, ...], ...]
    edge_faces: tuple[tuple[int, int], ...]
    dart_face: tuple[int, ...] = field(repr=False)

    def face_edges(self, f: int) -> tuple[int, ...]:
        return tuple(d >> 1 for d in self.face_darts[f])

    def dart_in_face(self, f: int, e: int) -> int:
        return 2 * e if self.dart_face[2 * e] == f else 2 * e + 1

    def to_json(self, one_based: bool = True) -> dict:
        off = 1 if one_based else 0
        return {
            "faces": [[v + off for v in face] for face in self.faces],
            "rotation": {str(v + off): list(rot) for v, rot in enumerate(self.rotation.order)},
        }


def embedding_from_rotation(rot: RotationSystem) -> PlanarEmbedding:
    """Faces of the orientable embedding given by ``rot``, indexed by canonical vertex cycle."""
    g = rot.graph
    orbits = face_orbits(rot)
    keyed = sorted(
        (canonical_cycle([dart_tail(g, d) for d in orbit]), tuple(orbit)) for orbit in orbits
    )
    faces = tuple(k for k, _ in keyed)
    face_darts = tuple(o for _, o in keyed)
    dart_face = [0] * (2 * g.m)
    for f, orbit in enumerate(face_darts):
        for d in orbit:
            dart_face[d] = f
    edge_faces = tuple((dart_face[2 * e], dart_face[2 * e + 1]) for e in range(g.m))
    return PlanarEmbedding(g, rot, faces, face_darts, edge_faces, tuple(dart_face))


def planar_embed(g: Graph) -> PlanarEmbedding:
    """Embedding of a connected planar graph on the sphere.

    Of the two mirror-image rotation systems, the one with the smaller
    ``encoding()`` is returned.

    Raises:
        NotPlanar: if ``g`` is not planar.
    """
    if not g.is_connected():
        raise ValueError("planar_embed requires a connected graph")
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    ok, emb = nx.check_planarity(nxg)
    if not ok:
        raise NotPlanar(f"graph with n={g.n}, m={g.m} is not planar")
    order = []
    for v in range(g.n):
        order.append(tuple(g.edge_index(v, w) for w in emb.neighbors_cw_order(v)) if g.degree(v) else ())
    rot = RotationSystem(g, order)
    mirror = rot.mirrored()
    if mirror.encoding() < rot.encoding():
        rot = mirror
    pe = embedding_from_rotation(rot)
    if g.n - g.m + len(pe.faces) != 2:
        raise NotPlanar("rotation system does not satisfy Euler's formula")
    return pe


@dataclass(frozen=True)
class DualGraph:
    """Dual of a spherical embedding.

    Dual vertex ``f`` is primal face ``f``. Dual edge ``i`` crosses primal edge
    ``primal_edge[i]``; ``edge_dual[e]`` is the inverse map. ``rotation`` is
    the dual rotation: at face ``f``, its boundary edges in traversal order.
    """

    primal: PlanarEmbedding
    graph: Graph
    edge_dual: tuple[int, ...]
    primal_edge: tuple[int, ...]
    rotation: RotationSystem

    @property
    def n(self) -> int:
        return self.graph.n


def dual(g: Graph, pe: PlanarEmbedding) -> DualGraph:
    """Dual graph with edge ``i`` crossing primal edge ``i``.

    Raises:
        DualNotSimple: if an edge has the same face on both sides or two faces
            share more than one edge.
    """
    if pe.graph != g:
        raise ValueError("embedding belongs to a different graph")
    pairs = []
    seen = {}
    for e, (f1, f2) in enumerate(pe.edge_faces):
        if f1 == f2:
            raise DualNotSimple(f"edge {e} has face {f1} on both sides")
        key = (min(f1, f2), max(f1, f2))
        if key in seen:
            raise DualNotSimple(f"faces {key} share edges {seen[key]} and {e}")
        seen[key] = e
        pairs.append((f1, f2))
    dg = Graph(len(pe.faces), pairs)
    ident = tuple(range(g.m))
    rot = RotationSystem(dg, [pe.face_edges(f) for f in range(len(pe.faces))])
    return DualGraph(pe, dg, ident, ident, rot)


def faces_of_walk_length_histogram(pe: PlanarEmbedding) -> dict[int, int]:
    return dict(sorted(Counter(len(f) for f in pe.face_darts).items()))
