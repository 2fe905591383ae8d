"""Strong re-embeddings of 3-connected cubic planar graphs.

Twisting a set of edges of the spherical rotation system re-embeds a cubic
planar graph on a non-spherical surface. The twist sets that land on the
projective plane, torus or Klein bottle correspond to a handful of subgraph
patterns in the dual; this package finds them, decides which give strong
(all faces are cycles) embeddings, and checks everything against an
exhaustive sweep.
"""

from reembed.engine import (
    DualFacialWalk,
    ReEmbedding,
    adjacent_twist_filter,
    dual_facial_walks,
    enumerate_reembeddings,
    never_strong_shape,
    prepare,
    reembed,
    strong_by_dual_criterion,
    twisted_set,
)
from reembed.graph import Graph, canonical_form, emit_graph6, parse_graph6
from reembed.planar import dual, planar_embed
from reembed.scheme import EmbeddingScheme, FacialWalk, SurfaceClass, all_facial_walks, classify_surface

__all__ = [
    "DualFacialWalk", "EmbeddingScheme", "FacialWalk", "Graph", "ReEmbedding", "SurfaceClass",
    "adjacent_twist_filter", "all_facial_walks", "canonical_form", "classify_surface", "dual",
    "dual_facial_walks", "emit_graph6", "enumerate_reembeddings", "never_strong_shape",
    "parse_graph6", "planar_embed", "prepare", "reembed", "strong_by_dual_criterion", "twisted_set",
]
