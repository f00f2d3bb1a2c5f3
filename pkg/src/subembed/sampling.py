"""Representative-node selection and normalized subgraph extraction.

A sample holds the selected node set c, the row-normalized subgraph
adjacency (a random-walk transition matrix over the subgraph) and the
related matrix linking every graph node to the selected set, with each
column scaled by the reciprocal of that node's full-graph degree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graph import Graph


@dataclass(frozen=True)
class SubgraphSample:
    """Extraction of a node-induced subgraph plus its link to the full graph.

    ``nodes`` are the k selected indices in ascending order. ``adj`` is the
    k-by-k row-normalized subgraph adjacency (zero rows stay zero),
    ``related`` the k-by-n matrix whose row i is the full adjacency row of
    node i scaled columnwise by 1/degree, and ``sub_degrees`` the raw
    within-subgraph degree of each selected node.
    """

    nodes: np.ndarray
    adj: sp.csr_matrix
    related: sp.csr_matrix
    sub_degrees: np.ndarray

    @property
    def k(self) -> int:
        return len(self.nodes)


def _check_k(k: int, n: int) -> None:
    if k <= 0:
        raise ValueError(f"sample size must be positive, got {k}")
    if k > n:
        raise ValueError(f"sample size {k} exceeds node count {n}")


def top_degree_nodes(g: Graph, k: int) -> np.ndarray:
    """Indices of the k highest-degree nodes, ties at the boundary broken
    by ascending node index; returned sorted ascending."""
    _check_k(k, g.n)
    deg = g.degrees
    # Partition once, then resolve ties at the k-th rank explicitly so the
    # result is independent of partition order.
    part = np.argpartition(-deg, k - 1)[:k]
    threshold = deg[part].min()
    above = np.flatnonzero(deg > threshold)
    at = np.flatnonzero(deg == threshold)
    chosen = np.concatenate([above, at[: k - len(above)]])
    return np.sort(chosen)


def uniform_nodes(g: Graph, k: int, seed: int) -> np.ndarray:
    """k distinct node indices drawn uniformly without replacement."""
    _check_k(k, g.n)
    rng = np.random.default_rng(seed)
    return np.sort(rng.choice(g.n, size=k, replace=False))


def build_sample(g: Graph, nodes: np.ndarray) -> SubgraphSample:
    """Extract and normalize the subgraph and related matrices for ``nodes``.

    Rows of the subgraph adjacency are scaled to sum to one (nodes isolated
    within the subgraph keep an all-zero row); related-matrix columns are
    scaled by the reciprocal full-graph degree, so restricted to the sampled
    columns its transpose matches rows of the full transition matrix.
    """
    nodes = np.asarray(nodes, dtype=np.int64)
    if len(np.unique(nodes)) != len(nodes):
        raise ValueError("sampled nodes must be distinct")
    if nodes.min() < 0 or nodes.max() >= g.n:
        raise ValueError("sampled node index out of range")

    rows = g.adjacency[nodes]                      # k x n, raw 0/1
    sub = rows[:, nodes].tocsr()                   # k x k, raw 0/1
    sub_degrees = np.asarray(sub.sum(axis=1)).ravel().astype(np.int64)

    inv_sub = np.divide(1.0, sub_degrees, where=sub_degrees > 0,
                        out=np.zeros(len(nodes)))
    adj = sp.diags(inv_sub) @ sub

    inv_deg = np.divide(1.0, g.degrees, where=g.degrees > 0,
                        out=np.zeros(g.n))
    related = (rows @ sp.diags(inv_deg)).tocsr()

    return SubgraphSample(nodes=nodes, adj=adj.tocsr(), related=related,
                          sub_degrees=sub_degrees)


def dump_sample(sample: SubgraphSample, path) -> None:
    """Debug dump of c, subgraph and related matrices as sparse triplets."""
    with open(path, "w") as fh:
        fh.write(f"# sample k={sample.k}\n")
        fh.write("nodes " + " ".join(str(i) for i in sample.nodes) + "\n")
        for name, mat in (("subgraph", sample.adj), ("related", sample.related)):
            coo = mat.tocoo()
            fh.write(f"matrix {name} {coo.shape[0]} {coo.shape[1]} {coo.nnz}\n")
            for i, j, v in zip(coo.row, coo.col, coo.data):
                fh.write(f"{i} {j} {v:.17g}\n")
