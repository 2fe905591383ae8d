"""Signed embedding schemes and facial walk tracing.

A traversal state is ``2 * dart + k`` where ``k = 0`` means kappa = +1
(take the clockwise successor) and ``k = 1`` means kappa = -1. The successor
map on the ``4|E|`` states is a permutation; its orbits are the facial walks,
each appearing twice (once per direction).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from reembed.errors import InconsistentSurface
from reembed.graph import EdgeSet, Graph, edge_mask
from reembed.planar import RotationSystem, canonical_cycle, dart_from, dart_tail


@dataclass(frozen=True)
class EmbeddingScheme:
    """Rotation system plus the set of twisted edges (signature -1)."""

    rotation: RotationSystem
    twists: EdgeSet = 0

    def __post_init__(self):
        if self.twists >> self.rotation.graph.m:
            raise ValueError("twist set references edges outside the graph")

    @property
    def graph(self) -> Graph:
        return self.rotation.graph

    def sign(self, e: int) -> int:
        return -1 if (self.twists >> e) & 1 else 1

    def signature(self) -> list[int]:
        return [self.sign(e) for e in range(self.graph.m)]

    @classmethod
    def from_signature(cls, rotation: RotationSystem, signature: Sequence[int]) -> "EmbeddingScheme":
        return cls(rotation, edge_mask(e for e, s in enumerate(signature) if s == -1))


@dataclass(frozen=True)
class FacialWalk:
    """Closed walk ``vertices[i] --edges[i]--> vertices[i+1]``.

    ``kappas[i]`` is the orientation in force when ``edges[i]`` is chosen at
    ``vertices[i]``; it is bookkeeping and does not take part in equality.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    kappas: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_edge_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    @property
    def is_cycle(self) -> bool:
        return self.is_edge_simple and len(set(self.vertices)) == len(self.vertices)

    def canonical(self) -> tuple[int, ...]:
        return canonical_cycle(self.vertices)

    def canonical_edges(self) -> tuple[int, ...]:
        return canonical_cycle(self.edges)

    def one_based(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self.vertices)


_NAMES = {
    (2, True): "sphere",
    (1, False): "projective-plane",
    (0, True): "torus",
    (0, False): "klein-bottle",
}


@dataclass(frozen=True)
class SurfaceClass:
    euler_characteristic: int
    orientable: bool

    def __post_init__(self):
        if self.orientable and self.euler_characteristic % 2:
            raise InconsistentSurface(
                f"orientable surface with odd Euler characteristic {self.euler_characteristic}"
            )

    @property
    def name(self) -> str:
        key = (self.euler_characteristic, self.orientable)
        if key in _NAMES:
            return _NAMES[key]
        kind = "orientable" if self.orientable else "non-orientable"
        return f"other(chi={self.euler_characteristic}, {kind})"

    def __str__(self) -> str:
        return self.name


def _successor(rot: RotationSystem, twists: int, s: int) -> int:
    d = s >> 1
    k = (s & 1) ^ ((twists >> (d >> 1)) & 1)
    return 2 * (rot.ccw_next[d] if k else rot.cw_next[d]) + k


def _reverse_state(twists: int, s: int) -> int:
    d = s >> 1
    return 2 * (d ^ 1) + ((s & 1) ^ 1 ^ ((twists >> (d >> 1)) & 1))


def _orbits(rot: RotationSystem, twists: int) -> list[list[int]]:
    """One state orbit per facial walk (mirror orbits removed)."""
    cw, ccw = rot.cw_next, rot.ccw_next
    nstates = 2 * len(cw)
    orbit_of = [-1] * nstates
    orbits: list[list[int]] = []
    for start in range(nstates):
        if orbit_of[start] >= 0:
            continue
        oid = len(orbits)
        orbit = []
        s = start
        while orbit_of[s] < 0:
            orbit_of[s] = oid
            orbit.append(s)
            d = s >> 1
            k = (s & 1) ^ ((twists >> (d >> 1)) & 1)
            s = 2 * (ccw[d] if k else cw[d]) + k
        orbits.append(orbit)
    kept = []
    dropped = set()
    for oid, orbit in enumerate(orbits):
        if oid in dropped:
            continue
        kept.append(orbit)
        dropped.add(orbit_of[_reverse_state(twists, orbit[0])])
    return kept


def _walk_from_states(g: Graph, states: Iterable[int]) -> FacialWalk:
    vs, es, ks = [], [], []
    for s in states:
        d = s >> 1
        vs.append(dart_tail(g, d))
        es.append(d >> 1)
        ks.append(-1 if s & 1 else 1)
    return FacialWalk(tuple(vs), tuple(es), tuple(ks))


def face_traversal(s: EmbeddingScheme, start_vertex: int, start_edge: int, kappa: int = 1) -> FacialWalk:
    """Trace one facial walk from ``start_vertex`` along ``start_edge``.

    Stops when the traversal is about to leave ``start_vertex`` along
    ``start_edge`` with the starting ``kappa`` again.
    """
    g = s.graph
    d = dart_from(g, start_vertex, start_edge)
    first = 2 * d + (0 if kappa == 1 else 1)
    states = [first]
    cur = _successor(s.rotation, s.twists, first)
    while cur != first:
        states.append(cur)
        cur = _successor(s.rotation, s.twists, cur)
    return _walk_from_states(g, states)


def all_facial_walks(s: EmbeddingScheme) -> list[FacialWalk]:
    """Every facial walk of the scheme, one per mirror pair of traversals."""
    return [_walk_from_states(s.graph, orbit) for orbit in _orbits(s.rotation, s.twists)]


def canonical_walk_multiset(walks: Iterable[FacialWalk]) -> list[tuple[int, ...]]:
    return sorted(w.canonical() for w in walks)


def local_change(s: EmbeddingScheme, v: int) -> EmbeddingScheme:
    """Reverse the rotation at ``v`` and toggle the twist flag of its edges."""
    flips = edge_mask(e for _, e in s.graph.adjacency[v])
    return EmbeddingScheme(s.rotation.reversed_at(v), s.twists ^ flips)


def is_orientable(s: EmbeddingScheme) -> bool:
    """False iff some cycle carries an odd number of twisted edges."""
    g = s.graph
    parity = [-1] * g.n
    for root in range(g.n):
        if parity[root] >= 0:
            continue
        parity[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w, e in g.adjacency[v]:
                p = parity[v] ^ ((s.twists >> e) & 1)
                if parity[w] < 0:
                    parity[w] = p
                    stack.append(w)
                elif parity[w] != p:
                    return False
    return True


def classify_surface(s: EmbeddingScheme, walks: Sequence[FacialWalk] | None = None) -> SurfaceClass:
    if walks is None:
        nfaces = len(_orbits(s.rotation, s.twists))
    else:
        nfaces = len(walks)
    g = s.graph
    return SurfaceClass(g.n - g.m + nfaces, is_orientable(s))


def face_count_and_strong(rot: RotationSystem, twists: int) -> tuple[int, bool]:
    """Number of facial walks and whether all of them are cycles.

    Same result as ``all_facial_walks`` without building walk objects; used by
    exhaustive sweeps.
    """
    g = rot.graph
    edges = g.edges
    cw, ccw = rot.cw_next, rot.ccw_next
    nstates = 2 * len(cw)
    seen = bytearray(nstates)
    orbits = 0
    strong = True
    for start in range(nstates):
        if seen[start]:
            continue
        orbits += 1
        s = start
        visited = set()
        while not seen[s]:
            seen[s] = 1
            d = s >> 1
            if strong:
                v = edges[d >> 1][d & 1]
                e = ~(d >> 1)
                if v in visited or e in visited:
                    strong = False
                visited.add(v)
                visited.add(e)
            k = (s & 1) ^ ((twists >> (d >> 1)) & 1)
            s = 2 * (ccw[d] if k else cw[d]) + k
    return orbits // 2, strong
