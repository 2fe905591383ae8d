import json

import pytest

from reembed.census import oracle_sweep
from reembed.engine import (
    Prepared,
    ReEmbedding,
    adjacent_twist_filter,
    dual_agreement,
    dual_facial_walks,
    enumerate_reembeddings,
    fold_by_automorphisms,
    map_automorphisms,
    never_strong_shape,
    prepare,
    reembed,
    strong_by_dual_criterion,
    strong_via_dual,
    twisted_set,
    twisted_subgraph_of,
)
from reembed.errors import Not3Connected, NotCubic, NotEdgeSimple, NotPlanar
from reembed.graph import Graph, edge_mask, mask_indices
from reembed.named import (
    complete_graph,
    cube_graph,
    dodecahedron_graph,
    petersen_graph,
    prism_graph,
    triangular_prism_labelled,
)
from reembed.patterns import enumerate_twisted_subgraphs, find_k2, find_k4, find_k11m, subgraph_from_edges
from reembed.planar import canonical_cycle, dual

K4 = complete_graph(4)
K4P = prepare(K4)


def twist(g, *pairs):
    return edge_mask(g.edge_index(u - 1, v - 1) for u, v in pairs)


def walks_1(r):
    return sorted(tuple(v + 1 for v in w.canonical()) for w in r.walks)


# -- triangular prism, four twists -------------------------------------------------------------

EX = triangular_prism_labelled()
EXP = prepare(EX)
EX_T = twist(EX, (1, 2), (1, 3), (4, 6), (5, 6))
FACE_NAMES = {(2, 3, 4, 5): "a", (1, 2, 5, 6): "b", (1, 2, 3): "c", (1, 3, 4, 6): "d", (4, 5, 6): "e"}


def face_letter(f):
    return FACE_NAMES[tuple(v + 1 for v in EXP.embedding.faces[f])]


def test_twisted_set_roundtrip_example():
    h = twisted_subgraph_of(EXP.dual, EX_T)
    letters = {frozenset(face_letter(x) for x in EXP.dual.graph.edges[e]) for e in h.edges}
    assert letters == {frozenset(p) for p in ("bc", "cd", "de", "be")}
    assert twisted_set(h, EXP.dual) == EX_T


def test_dual_facial_walk_annotation_example():
    h = twisted_subgraph_of(EXP.dual, EX_T)
    walks = dual_facial_walks(EXP.dual, h)
    annotated = []
    for w in walks:
        seq = [(face_letter(x), tuple(face_letter(y) for y in vs)) for x, vs in zip(w.vertices, w.visited)]
        annotated.append(seq)
    target = [("c", ("a",)), ("d", ("b",)), ("e", ("a",)), ("b", ("d",))]
    rotations = []
    for seq in (target, target[::-1]):
        rotations += [seq[i:] + seq[:i] for i in range(len(seq))]
    assert any(seq in rotations for seq in annotated)
    assert not strong_by_dual_criterion(walks)


def test_reconstructed_walk_example():
    h = twisted_subgraph_of(EXP.dual, EX_T)
    walks = dual_facial_walks(EXP.dual, h)
    rebuilt = {canonical_cycle(w.primal_walk(EXP.dual).one_based()) for w in walks}
    assert canonical_cycle((2, 3, 1, 6, 4, 5, 6, 1)) in rebuilt
    r = reembed(EX, EXP.embedding, EX_T)
    assert r.surface.name == "torus" and not r.strong


def test_walk_reconstruction_matches_direct(census_upto_14):
    # the re-embedding's walks through twisted edges are exactly the rebuilt ones
    for g, pe in census_upto_14[:30]:
        d = dual(g, pe)
        for h in enumerate_twisted_subgraphs(d, "torus") + enumerate_twisted_subgraphs(d, "klein", True):
            try:
                walks = dual_facial_walks(d, h)
            except NotEdgeSimple:
                continue
            t = twisted_set(h, d)
            r = reembed(g, pe, t)
            direct = sorted(w.canonical_edges() for w in r.walks if any((t >> e) & 1 for e in w.edges))
            rebuilt = sorted(w.primal_walk(d).canonical_edges() for w in walks)
            assert direct == rebuilt


# -- reembed -----------------------------------------------------------------

def test_reembed_k4_examples():
    r = reembed(K4, K4P.embedding, twist(K4, (1, 2)))
    assert walks_1(r) == sorted([canonical_cycle((1, 2, 4, 1, 2, 3)), (1, 3, 4), (2, 3, 4)])
    assert r.surface.name == "projective-plane" and not r.strong
    r0 = reembed(K4, K4P.embedding, 0)
    assert walks_1(r0) == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    assert r0.surface.name == "sphere" and r0.strong
    rall = reembed(K4, K4P.embedding, (1 << 6) - 1)
    assert len(rall.walks) == 3 and rall.strong
    assert (rall.surface.euler_characteristic, rall.surface.orientable) == (1, False)


def test_untouched_faces_survive(census_small):
    for g, pe in census_small:
        for t in (1, 0b101, (1 << g.m) - 1, 0b110011):
            t &= (1 << g.m) - 1
            r = reembed(g, pe, t)
            kept = {w.canonical() for w in r.walks}
            for f, face in enumerate(pe.faces):
                if not any((t >> e) & 1 for e in pe.face_edges(f)):
                    assert face in kept


def test_twisted_set_examples():
    (h,) = find_k4(K4P.dual)
    assert twisted_set(h, K4P.dual) == (1 << 6) - 1
    e = find_k2(K4P.dual)[0]
    assert len(mask_indices(twisted_set(e, K4P.dual))) == 1


# -- filters -----------------------------------------------------------------

def test_adjacent_twist_filter_examples():
    assert adjacent_twist_filter(K4P.embedding, twist(K4, (1, 2), (1, 3)))
    assert not adjacent_twist_filter(K4P.embedding, 0)
    assert not adjacent_twist_filter(K4P.embedding, (1 << 6) - 1)


def test_never_strong_shape_examples():
    d = K4P.dual
    assert never_strong_shape(find_k2(d)[0], d)
    cycle = subgraph_from_edges(d, mask_indices(twisted_set(
        [h for h in enumerate_twisted_subgraphs(d, "torus") if h.kind.tag == "K2m"][0], d)))
    assert not never_strong_shape(cycle, d)
    assert all(never_strong_shape(h, d) for h in find_k11m(d))
    assert not never_strong_shape(find_k4(d)[0], d)
    # K4 plus a pendant edge, in a host with room for it
    host = Graph.from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    assert never_strong_shape(subgraph_from_edges(host, range(7)), host)


def test_filters_sound_on_small_sweeps(census_upto_14):
    for g, pe in [x for x in census_upto_14 if x[0].n <= 8]:
        d = dual(g, pe)
        report = oracle_sweep(g, pe)
        for t, (_, strong) in report.rows.items():
            if adjacent_twist_filter(pe, t):
                assert not strong
            if t and never_strong_shape(twisted_subgraph_of(d, t), d):
                assert not strong


# -- dual route --------------------------------------------------------------

def test_dual_walks_not_edge_simple():
    d = K4P.dual
    with pytest.raises(NotEdgeSimple) as info:
        dual_facial_walks(d, find_k2(d)[0])
    assert info.value.edge in find_k2(d)[0].edges
    tri = [h for h in find_k11m(d) if h.kind.m == 1][0]
    with pytest.raises(NotEdgeSimple):
        dual_facial_walks(d, tri)


def test_dual_criterion_k4_and_trivial():
    d = K4P.dual
    assert strong_by_dual_criterion(dual_facial_walks(d, find_k4(d)[0]))
    assert strong_by_dual_criterion([])


def test_dual_criterion_agrees_with_direct(census_small):
    for g, pe in census_small:
        p = Prepared(g, pe, dual(g, pe))
        for surface in ("projective", "torus", "klein"):
            assert dual_agreement(g, surface, p) == []


def test_dual_criterion_on_random_subgraphs():
    import random
    rng = random.Random(11)
    for g in (cube_graph(), prism_graph(5), dodecahedron_graph()):
        p = prepare(g)
        for _ in range(150):
            t = rng.getrandbits(g.m) & rng.getrandbits(g.m) or 1
            h = twisted_subgraph_of(p.dual, t)
            assert strong_via_dual(p.dual, h) == reembed(g, p.embedding, t).strong


# -- enumerate ---------------------------------------------------------------

def test_enumerate_examples():
    res = enumerate_reembeddings(K4, "projective", strong_only=True)
    assert len(res) == 1 and res[0].twist_set == (1 << 6) - 1 and res[0].strong
    assert enumerate_reembeddings(prism_graph(3), "torus", True) == []
    (r,) = enumerate_reembeddings(prism_graph(3), "klein", True)
    assert str(r.source.kind) == "K_{2,3}" and r.strong and r.surface.name == "klein-bottle"
    assert enumerate_reembeddings(K4, "torus", True) == []


def test_enumerate_sorted_and_distinct(census_small):
    for g, pe in census_small:
        p = Prepared(g, pe, dual(g, pe))
        for surface in ("projective", "torus", "klein"):
            res = enumerate_reembeddings(g, surface, prepared=p)
            masks = [r.twist_set for r in res]
            assert masks == sorted(set(masks))
            strong = enumerate_reembeddings(g, surface, True, prepared=p)
            assert all(r.strong for r in strong)


@pytest.mark.parametrize("g,exc", [
    (petersen_graph(), NotPlanar),
    (Graph.from_edges([(0, 1), (1, 2), (2, 0)]), NotCubic),
])
def test_preconditions(g, exc):
    with pytest.raises(exc):
        enumerate_reembeddings(g, "torus")


def test_not_3_connected():
    # two K4-minus-an-edge pieces joined by two edges: cubic, planar, 2-connected
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (0, 4), (3, 7)]
    with pytest.raises(Not3Connected):
        prepare(Graph.from_edges(edges))


def test_json_roundtrip():
    for g in (K4, prism_graph(3), cube_graph()):
        for surface in ("projective", "torus", "klein"):
            for r in enumerate_reembeddings(g, surface):
                data = json.loads(json.dumps(r.to_json(g)))
                back = ReEmbedding.from_json(g, data)
                assert back.to_json(g) | {"pattern": data["pattern"]} == data
                assert back.twist_set == r.twist_set and back.surface == r.surface


def test_automorphisms_and_folding():
    assert len(map_automorphisms(K4P.embedding)) == 24
    assert len(map_automorphisms(prepare(cube_graph()).embedding)) == 48
    assert len(map_automorphisms(prepare(dodecahedron_graph()).embedding)) == 120
    res = enumerate_reembeddings(K4, "projective")
    folded = fold_by_automorphisms(K4P.embedding, res)
    assert len(res) == 7 and len(folded) == 2
