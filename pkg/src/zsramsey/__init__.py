"""Constructive zero-sum embeddings of degenerate graphs in Z_p edge-colorings."""

from .coloring import EdgeColoring, edge_sum, make_coloring, parse_coloring
from .embedder import Embedding, EmbeddingTriple, run_pipeline, zero_sum_embed
from .errors import (
    HypothesisViolation,
    HostTooSmall,
    InsufficientBlueprint,
    TheoremViolation,
    ZeroSumError,
)
from .graph import (
    Blueprint,
    DegeneracyOrdering,
    Graph,
    degeneracy_order,
    extract_blueprint,
    gen_degenerate_graph,
    parse_graph,
)
from .zp import ChoicePair, ZpElement, reachable_sums, select_sequence

__version__ = "0.1.0"
