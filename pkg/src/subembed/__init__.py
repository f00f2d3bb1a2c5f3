"""Node embeddings for large undirected graphs via a representative subgraph.

The pipeline samples a degree-representative node set, approximates the
subgraph's random-walk polynomial, factorizes the truncated-log information
matrix with a randomized SVD, and projects every node through the subgraph
factors. A dense small-graph oracle provides the exact reference used
throughout the test suite.
"""

from .embed import (EmbeddingMatrix, cross_info_matrix, dense_info_matrix,
                    project_embedding, read_embedding_binary,
                    read_embedding_text, reference_embedding,
                    subgraph_info_matrix, write_embedding_binary,
                    write_embedding_text)
from .factor import FactorPair, exact_tsvd, randomized_tsvd
from .graph import (EdgeListError, Graph, from_adjacency, load_cache,
                    load_edge_list, load_labels, save_cache, write_edge_list)
from .pipeline import (PipelineConfig, PipelineError, RunReport, run,
                       timing_sweep)
from .sampling import (SubgraphSample, build_sample, top_degree_nodes,
                       uniform_nodes)
from .walkpoly import (KERNEL_BACKEND, EdgelessSubgraphError, SparsePolynomial,
                       WalkConfig, default_sample_count,
                       exact_walk_polynomial, exact_walk_polynomials,
                       sampled_walk_polynomial, sampled_walk_polynomials)

__version__ = "0.1.0"

__all__ = [
    "EdgeListError", "EdgelessSubgraphError", "EmbeddingMatrix", "FactorPair",
    "Graph", "KERNEL_BACKEND", "PipelineConfig", "PipelineError", "RunReport",
    "SparsePolynomial", "SubgraphSample", "WalkConfig", "build_sample",
    "cross_info_matrix", "default_sample_count", "dense_info_matrix",
    "exact_tsvd", "exact_walk_polynomial", "exact_walk_polynomials",
    "from_adjacency", "load_cache", "load_edge_list", "load_labels",
    "project_embedding", "randomized_tsvd", "read_embedding_binary",
    "read_embedding_text", "reference_embedding", "run", "sampled_walk_polynomial",
    "sampled_walk_polynomials", "save_cache", "subgraph_info_matrix",
    "timing_sweep", "top_degree_nodes", "uniform_nodes", "write_edge_list",
    "write_embedding_binary", "write_embedding_text",
]
