"""Census of 3-connected cubic planar graphs, the exhaustive twist-set oracle,
the census tables, and the cyclic-connectivity existence predicates.

Generation grows maps from K4 by joining the midpoints of two edges that lie
on a common face. In the dual this is a vertex split of a simple
triangulation, the inverse of contracting an edge that lies in no separating
triangle, so every 3-connected cubic planar graph on ``n + 2`` vertices arises
from one on ``n``. Isomorphs are removed with a canonical code of the map
(min over starting darts and both orientations of a BFS numbering); by
Whitney's theorem map isomorphism up to reflection is graph isomorphism here.
"""

from __future__ import annotations

import csv
import itertools
import io
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from reembed.engine import Prepared, enumerate_reembeddings, prepare
from reembed.errors import SweepTooLarge
from reembed.graph import (
    Graph,
    cyclically_k_edge_connected,
    edge_mask,
    is_bipartite,
    is_k_connected,
)
from reembed.named import prism_graph
from reembed.planar import PlanarEmbedding, RotationSystem, embedding_from_rotation
from reembed.scheme import EmbeddingScheme, SurfaceClass, face_count_and_strong, is_orientable

# n -> (all graphs, with strong projective, torus, Klein-bottle re-embedding)
KNOWN_COUNTS = {
    4: (1, 1, 0, 0),
    6: (1, 1, 0, 1),
    8: (2, 1, 1, 2),
    10: (5, 4, 2, 5),
    12: (14, 12, 7, 14),
    14: (50, 45, 26, 50),
    16: (233, 222, 140, 233),
    18: (1249, 1219, 815, 1249),
    20: (7595, 7485, 5484, 7594),
}
DEFAULT_MAX_N = 16
DEFAULT_SWEEP_EDGES = 24

# A map is stored as a tuple of neighbour triples in clockwise order.
Map = tuple[tuple[int, ...], ...]

_K4: Map = ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1))


def _succ(rot: Map, w: int, v: int) -> int:
    r = rot[w]
    return r[(r.index(v) + 1) % 3]


def _faces(rot: Map) -> list[list[tuple[int, int]]]:
    seen = set()
    faces = []
    for v in range(len(rot)):
        for w in rot[v]:
            if (v, w) in seen:
                continue
            face = []
            a, b = v, w
            while (a, b) not in seen:
                seen.add((a, b))
                face.append((a, b))
                a, b = b, _succ(rot, b, a)
            faces.append(face)
    return faces


def _code(rot: Map, v0: int, w0: int, step: int, best: list[int] | None) -> list[int] | None:
    """BFS code from dart ``v0 -> w0``; None as soon as it exceeds ``best``."""
    n = len(rot)
    num = [-1] * n
    num[v0] = 0
    first = [(v0, w0)]
    code = []
    smaller = best is None
    pos = 0
    for i in range(n):
        v, s = first[i]
        r = rot[v]
        j = r.index(s)
        for _ in range(3):
            w = r[j]
            if num[w] < 0:
                num[w] = len(first)
                first.append((w, v))
            x = num[w]
            if not smaller:
                b = best[pos]
                if x > b:
                    return None
                if x < b:
                    smaller = True
            code.append(x)
            pos += 1
            j = (j + step) % 3
    return code if smaller else None


def canonical_map_code(rot: Map) -> tuple[tuple[int, ...], tuple[int, int, int]]:
    """Canonical code of a cubic map up to reflection, and the start that attains it."""
    flen = {}
    for face in _faces(rot):
        for dart in face:
            flen[dart] = len(face)
    starts = []
    for v in range(len(rot)):
        for w in rot[v]:
            starts.append(((flen[(v, w)], flen[(w, v)]), v, w, 1))
            starts.append(((flen[(w, v)], flen[(v, w)]), v, w, 2))
    key = min(s[0] for s in starts)
    best = None
    arg = None
    for k, v, w, step in starts:
        if k != key:
            continue
        c = _code(rot, v, w, step, best)
        if c is not None:
            best, arg = c, (v, w, step)
    return tuple(best), arg


def _relabel_map(rot: Map, start: tuple[int, int, int]) -> Map:
    """Renumber vertices in the BFS order of ``start``; keeps the orientation."""
    v0, w0, step = start
    n = len(rot)
    num = [-1] * n
    num[v0] = 0
    first = [(v0, w0)]
    for i in range(n):
        v, s = first[i]
        r = rot[v]
        j = r.index(s)
        for _ in range(3):
            w = r[j]
            if num[w] < 0:
                num[w] = len(first)
                first.append((w, v))
            j = (j + step) % 3
    out = [None] * n
    for v in range(n):
        r = tuple(num[w] for w in rot[v])
        out[num[v]] = r if step == 1 else r[::-1]
    return tuple(out)


def _children(rot: Map):
    for face in _faces(rot):
        k = len(face)
        for i in range(k):
            for j in range(i + 1, k):
                (a1, b1), (a2, b2) = face[i], face[j]
                x, y = len(rot), len(rot) + 1
                new = [list(r) for r in rot]
                new[a1][new[a1].index(b1)] = x
                new[b1][new[b1].index(a1)] = x
                new[a2][new[a2].index(b2)] = y
                new[b2][new[b2].index(a2)] = y
                new.append([a1, y, b1])
                new.append([a2, x, b2])
                yield tuple(tuple(r) for r in new)


def map_to_graph(rot: Map) -> tuple[Graph, PlanarEmbedding]:
    edges = sorted({(min(v, w), max(v, w)) for v in range(len(rot)) for w in rot[v]})
    g = Graph(len(rot), edges)
    order = [tuple(g.edge_index(v, w) for w in rot[v]) for v in range(len(rot))]
    return g, embedding_from_rotation(RotationSystem(g, order))


@lru_cache(maxsize=None)
def _census_maps(n: int) -> tuple[Map, ...]:
    if n < 4 or n % 2:
        raise ValueError("census is defined for even n >= 4")
    if n == 4:
        return (_relabel_map(_K4, canonical_map_code(_K4)[1]),)
    found: dict[tuple[int, ...], Map] = {}
    for parent in _census_maps(n - 2):
        for child in _children(parent):
            code, start = canonical_map_code(child)
            if code not in found:
                found[code] = _relabel_map(child, start)
    return tuple(found[c] for c in sorted(found))


def generate_census(n: int, check: bool = False) -> list[Graph]:
    """All 3-connected cubic planar graphs on ``n`` vertices, up to isomorphism.

    Order is deterministic (sorted by canonical map code). With ``check``,
    every graph is re-verified to be cubic and 3-connected.
    """
    out = []
    for rot in _census_maps(n):
        g, _ = map_to_graph(rot)
        if check:
            assert g.is_cubic() and is_k_connected(g, 3)
        out.append(g)
    return out


def census_embedded(n: int) -> list[tuple[Graph, PlanarEmbedding]]:
    return [map_to_graph(rot) for rot in _census_maps(n)]


# ---------------------------------------------------------------------------
# Oracle
# ---------------------------------------------------------------------------

@dataclass
class OracleReport:
    """Surface and strong flag for every examined twist set."""

    n_edges: int
    rows: dict[int, tuple[SurfaceClass, bool]] = field(default_factory=dict)

    def counts(self) -> dict[tuple[str, bool], int]:
        c = Counter((s.name, strong) for s, strong in self.rows.values())
        return dict(sorted(c.items()))

    def twist_sets(self, surface: str, strong: bool | None = None) -> set[int]:
        return {t for t, (s, st) in self.rows.items()
                if s.name == surface and (strong is None or st == strong)}

    def to_json(self) -> dict:
        return {
            "edges": self.n_edges,
            "rows": len(self.rows),
            "counts": [{"surface": s, "strong": st, "count": c} for (s, st), c in self.counts().items()],
        }


def oracle_sweep(g: Graph, pe: PlanarEmbedding, max_twists: int | None = None,
                 allow_large: bool = False) -> OracleReport:
    """Classify every twist set (optionally only those of size <= ``max_twists``).

    Uses only the direct face traversal.

    Raises:
        SweepTooLarge: more than ``DEFAULT_SWEEP_EDGES`` edges with neither a
            size cap nor ``allow_large``.
    """
    m = g.m
    if m > DEFAULT_SWEEP_EDGES and max_twists is None and not allow_large:
        raise SweepTooLarge(f"2^{m} twist sets; pass a size cap or allow_large")
    rot = pe.rotation
    report = OracleReport(m)
    if max_twists is None:
        masks = range(1 << m)
    else:
        masks = (edge_mask(c) for k in range(min(max_twists, m) + 1)
                 for c in itertools.combinations(range(m), k))
    for t in masks:
        faces, strong = face_count_and_strong(rot, t)
        orientable = is_orientable(EmbeddingScheme(rot, t))
        report.rows[t] = (SurfaceClass(g.n - m + faces, orientable), strong)
    return report


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CensusRow:
    n: int
    g_count: int
    p_count: int
    r_count: int
    k_count: int

    def __post_init__(self):
        assert max(self.p_count, self.r_count, self.k_count) <= self.g_count

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.g_count, self.p_count, self.r_count, self.k_count)


def strong_surfaces(g: Graph, prepared: Prepared | None = None) -> tuple[bool, bool, bool]:
    """Whether ``g`` has a strong re-embedding on (projective, torus, klein)."""
    p = prepared or prepare(g)
    out = []
    for surface in ("projective", "torus", "klein"):
        res = enumerate_reembeddings(g, surface, strong_only=True, prepared=p)
        out.append(any(r.strong for r in res))
    return tuple(out)


def _graph_flags(rot: Map) -> tuple[bool, bool, bool]:
    from reembed.planar import dual

    g, pe = map_to_graph(rot)
    return strong_surfaces(g, Prepared(g, pe, dual(g, pe)))


def build_row(n: int, jobs: int = 1) -> CensusRow:
    maps = _census_maps(n)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            flags = list(ex.map(_graph_flags, maps, chunksize=16))
    else:
        flags = [_graph_flags(rot) for rot in maps]
    p, r, k = (sum(f[i] for f in flags) for i in range(3))
    return CensusRow(n, len(maps), p, r, k)


def build_tables(n_max: int = 12, allow_large: bool = False, jobs: int = 1) -> list[CensusRow]:
    if n_max > DEFAULT_MAX_N and not allow_large:
        raise SweepTooLarge(f"n_max={n_max} exceeds {DEFAULT_MAX_N}; pass allow_large")
    return [build_row(n, jobs) for n in range(4, n_max + 1, 2)]


def tables_csv(rows: list[CensusRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "g", "p", "r", "k"])
    for row in rows:
        w.writerow([row.n, *row.as_tuple()])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Existence predicates and the exponential family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExistencePredicates:
    no_strong_projective_guaranteed: bool
    no_strong_torus_guaranteed: bool
    strong_torus_guaranteed: bool
    no_strong_klein_guaranteed: bool


def existence_predicates(g: Graph) -> ExistencePredicates:
    """Verdicts that follow from bipartiteness and cyclic edge connectivity alone."""
    if g.n < 5:
        return ExistencePredicates(False, False, False, False)
    c4 = cyclically_k_edge_connected(g, 4)
    c5 = c4 and cyclically_k_edge_connected(g, 5)
    return ExistencePredicates(
        no_strong_projective_guaranteed=is_bipartite(g) or c4,
        no_strong_torus_guaranteed=c5,
        strong_torus_guaranteed=c4 and not c5,
        no_strong_klein_guaranteed=c5,
    )


def prism_family(n: int) -> Graph:
    """Two ``2n``-cycles joined by a perfect matching (``C_{2n} x K_2``).

    The dual contains ``K_{2,2n}`` (the two cycle faces against the ``2n``
    quadrilaterals) plus the ring of quadrilateral adjacencies.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    return prism_graph(2 * n)


def central_binomial(n: int) -> int:
    return math.comb(2 * n, n)


# ---------------------------------------------------------------------------
# Verification: oracle sweep against the pattern families
# ---------------------------------------------------------------------------

_ORACLE_NAMES = {"projective": "projective-plane", "torus": "torus", "klein": "klein-bottle"}


@dataclass(frozen=True)
class Mismatch:
    surface: str
    strong_only: bool
    twist_set: int
    in_oracle: bool


def verify_graph(g: Graph, pe: PlanarEmbedding, report: OracleReport | None = None) -> list[Mismatch]:
    """Compare the exhaustive sweep with the pattern families on every surface.

    Returns all mismatching twist sets, smallest first; empty means agreement.
    """
    from reembed.engine import twisted_set
    from reembed.patterns import enumerate_twisted_subgraphs
    from reembed.planar import dual

    report = report or oracle_sweep(g, pe)
    d = dual(g, pe)
    out = []
    for surface, name in _ORACLE_NAMES.items():
        for strong_only in (False, True):
            oracle = report.twist_sets(name, True if strong_only else None)
            predicted = {twisted_set(h, d) for h in enumerate_twisted_subgraphs(d, surface, strong_only)}
            for t in sorted(oracle ^ predicted):
                out.append(Mismatch(surface, strong_only, t, t in oracle))
    empty = report.rows.get(0)
    if empty is not None and empty != (SurfaceClass(2, True), True):
        out.append(Mismatch("sphere", True, 0, True))
    return out
