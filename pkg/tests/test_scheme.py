import itertools

import pytest
from hypothesis import given, settings, strategies as st

from reembed.census import census_embedded
from reembed.errors import InconsistentSurface
from reembed.graph import edge_mask
from reembed.named import complete_graph, prism_graph, triangular_prism_labelled
from reembed.planar import canonical_cycle, planar_embed
from reembed.scheme import (
    EmbeddingScheme,
    SurfaceClass,
    all_facial_walks,
    canonical_walk_multiset,
    classify_surface,
    face_count_and_strong,
    face_traversal,
    is_orientable,
    local_change,
)

K4 = complete_graph(4)
K4_PE = planar_embed(K4)


def k4_scheme(*pairs):
    return EmbeddingScheme(K4_PE.rotation, edge_mask(K4.edge_index(u - 1, v - 1) for u, v in pairs))


def one_based(walks):
    return sorted(tuple(v + 1 for v in w.canonical()) for w in walks)


def test_example_k4_single_twist_walks():
    s = k4_scheme((1, 2))
    walks = all_facial_walks(s)
    expected = sorted(canonical_cycle(w) for w in [(1, 2, 4, 1, 2, 3), (1, 3, 4), (2, 3, 4)])
    assert one_based(walks) == expected
    surface = classify_surface(s, walks)
    assert (surface.euler_characteristic, surface.orientable, surface.name) == (1, False, "projective-plane")


def test_face_traversal_from_vertex_one():
    s = k4_scheme((1, 2))
    w = face_traversal(s, 0, K4.edge_index(0, 1))
    assert w.vertices[0] == 0 and w.edges[0] == K4.edge_index(0, 1)
    assert canonical_cycle(w.one_based()) == canonical_cycle((1, 2, 4, 1, 2, 3))
    assert not w.is_cycle


def test_empty_twist_set_reproduces_planar_faces():
    for g in (K4, prism_graph(3), prism_graph(6)):
        pe = planar_embed(g)
        s = EmbeddingScheme(pe.rotation)
        assert canonical_walk_multiset(all_facial_walks(s)) == sorted(pe.faces)
        assert classify_surface(s).name == "sphere"
        for f, darts in enumerate(pe.face_darts):
            d = darts[0]
            w = face_traversal(s, g.edges[d >> 1][d & 1], d >> 1)
            assert w.canonical() == pe.faces[f]


def test_all_twisted_k4():
    s = EmbeddingScheme(K4_PE.rotation, (1 << 6) - 1)
    walks = all_facial_walks(s)
    assert len(walks) == 3 and all(w.is_cycle for w in walks)
    assert classify_surface(s, walks).name == "projective-plane"
    start = face_traversal(s, 0, K4.edge_index(0, 1))
    assert start.is_edge_simple


def test_prism_four_twists_contains_long_walk():
    g = triangular_prism_labelled()
    pe = planar_embed(g)
    t = edge_mask(g.edge_index(u - 1, v - 1) for u, v in [(1, 2), (1, 3), (4, 6), (5, 6)])
    s = EmbeddingScheme(pe.rotation, t)
    walks = all_facial_walks(s)
    assert canonical_cycle((2, 3, 1, 6, 4, 5, 6, 1)) in one_based(walks)
    assert is_orientable(s)
    assert classify_surface(s, walks).name == "torus"


def test_surface_class_names_and_inconsistency():
    assert SurfaceClass(2, True).name == "sphere"
    assert SurfaceClass(1, False).name == "projective-plane"
    assert SurfaceClass(0, True).name == "torus"
    assert SurfaceClass(0, False).name == "klein-bottle"
    assert SurfaceClass(-2, True).name == "other(chi=-2, orientable)"
    with pytest.raises(InconsistentSurface):
        SurfaceClass(1, True)


def test_orientability_examples():
    assert is_orientable(k4_scheme())
    assert not is_orientable(k4_scheme((1, 2)))


def test_local_change_examples():
    s = k4_scheme((1, 2))
    twice = local_change(local_change(s, 2), 2)
    assert twice.rotation == s.rotation and twice.twists == s.twists
    once = local_change(s, 2)
    assert canonical_walk_multiset(all_facial_walks(once)) == canonical_walk_multiset(all_facial_walks(s))
    every = s
    for v in range(K4.n):
        every = local_change(every, v)
    assert every.twists == s.twists
    assert every.rotation == s.rotation.mirrored()


_GRAPHS = [item for n in (4, 6, 8, 10) for item in census_embedded(n)]


@st.composite
def graph_and_twists(draw):
    g, pe = draw(st.sampled_from(_GRAPHS))
    t = draw(st.integers(0, (1 << g.m) - 1))
    return g, pe, t


@settings(max_examples=300, deadline=None)
@given(graph_and_twists(), st.lists(st.integers(0, 9), max_size=6))
def test_local_change_invariance(data, verts):
    g, pe, t = data
    s = EmbeddingScheme(pe.rotation, t)
    ref = canonical_walk_multiset(all_facial_walks(s))
    ref_surface = classify_surface(s)
    for v in verts:
        s = local_change(s, v % g.n)
    assert canonical_walk_multiset(all_facial_walks(s)) == ref
    assert classify_surface(s) == ref_surface


@settings(max_examples=500, deadline=None)
@given(graph_and_twists())
def test_walk_lengths_and_fast_path(data):
    g, pe, t = data
    s = EmbeddingScheme(pe.rotation, t)
    walks = all_facial_walks(s)
    assert sum(w.length for w in walks) == 2 * g.m
    surface = classify_surface(s, walks)
    assert surface.euler_characteristic <= 2
    assert not (surface.orientable and surface.euler_characteristic % 2)
    assert face_count_and_strong(pe.rotation, t) == (len(walks), all(w.is_cycle for w in walks))
    if surface.euler_characteristic == 2:
        assert canonical_walk_multiset(walks) == sorted(pe.faces)


def _orientable_brute(g, t):
    # every even subgraph is an edge-disjoint union of cycles, so checking all of them
    # is the same as checking all cycles
    for r in range(1, g.m + 1):
        for sub in itertools.combinations(range(g.m), r):
            deg = [0] * g.n
            for e in sub:
                for v in g.edges[e]:
                    deg[v] += 1
            if all(x % 2 == 0 for x in deg) and sum((t >> e) & 1 for e in sub) % 2:
                return False
    return True


def test_orientability_brute_force():
    for g in (K4, prism_graph(3)):
        pe = planar_embed(g)
        for t in range(1 << g.m):
            assert is_orientable(EmbeddingScheme(pe.rotation, t)) == _orientable_brute(g, t)


def test_twist_mask_out_of_range():
    with pytest.raises(ValueError):
        EmbeddingScheme(K4_PE.rotation, 1 << 6)


def test_signature_roundtrip():
    s = k4_scheme((1, 2), (3, 4))
    assert EmbeddingScheme.from_signature(s.rotation, s.signature()) == s
    assert s.signature().count(-1) == 2
