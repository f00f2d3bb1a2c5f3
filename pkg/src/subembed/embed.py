"""Information-matrix assembly, embedding projection, and file formats.

The information matrices apply the entrywise truncated logarithm
log_+(x) = max(log x, 0) to a scaled walk polynomial; scaled values at or
below one map to zero and are not stored, which preserves sparsity. The
final embedding projects every node's cross row through the subgraph's
right singular factors:

    embedding = cross @ V_d diag(sigma_d)^(-1/2)

A dense small-graph construction of the full information matrix and its
exact factorization serve as the reference oracle for tests.
"""

from __future__ import annotations

import struct
import warnings
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .factor import FactorPair, exact_tsvd
from .graph import Graph
from .walkpoly import SparsePolynomial

EMBED_MAGIC = b"SEMB"
EMBED_VERSION = 1
SIGMA_TOL = 1e-12
DENSE_LIMIT = 1000


@dataclass(frozen=True)
class EmbeddingMatrix:
    """Dense per-node embedding; row i belongs to graph index i."""

    data: np.ndarray

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def dim(self) -> int:
        return self.data.shape[1]


def scaled_log_positive(matrix, scale: float):
    """Entrywise max(log(scale * x), 0) on a sparse matrix, dropping the
    entries that truncate to zero."""
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")
    out = matrix.tocsr().copy()
    scaled = out.data * scale
    logged = np.zeros_like(scaled)
    np.log(scaled, out=logged, where=scaled > 1.0)
    out.data = logged
    out.eliminate_zeros()
    return out


def _scale(volume: float, window: int, negatives: int) -> float:
    if volume <= 0:
        raise ValueError(f"graph volume must be positive, got {volume}")
    return volume / (window * negatives)


def subgraph_info_matrix(poly: SparsePolynomial, volume: float,
                         window: int, negatives: int):
    """k-by-k truncated-log information matrix of the subgraph."""
    return scaled_log_positive(poly.matrix, _scale(volume, window, negatives))


def cross_info_matrix(related, hop: SparsePolynomial, volume: float,
                      window: int, negatives: int):
    """n-by-k information matrix linking every node to the subgraph.

    The leading walk step is the related-matrix transpose (one hop from any
    node into the sampled set); the hop polynomial supplies the remaining
    0..T-1 steps. With a full sample this reproduces the dense information
    matrix exactly.
    """
    hop_m = hop.matrix
    if related.shape[0] != hop_m.shape[0]:
        raise ValueError(
            f"related matrix is {related.shape}, walk polynomial {hop_m.shape}"
        )
    product = (related.T @ hop_m).tocsr()
    return scaled_log_positive(product, _scale(volume, window, negatives))


def project_embedding(cross, factors: FactorPair,
                      sigma_tol: float = SIGMA_TOL) -> EmbeddingMatrix:
    """Project cross rows through V diag(sigma)^(-1/2).

    Factor columns whose singular value is at or below ``sigma_tol`` are
    dropped (with a warning) instead of blowing up the inverse square root;
    the effective dimension shrinks accordingly.
    """
    keep = factors.sigma > sigma_tol
    if not np.all(keep):
        warnings.warn(
            f"dropping {int((~keep).sum())} near-zero singular value(s); "
            f"effective dimension {int(keep.sum())}",
            RuntimeWarning,
            stacklevel=2,
        )
    V = factors.V[:, keep]
    inv_sqrt = factors.sigma[keep] ** -0.5
    data = cross @ (V * inv_sqrt[None, :])
    return EmbeddingMatrix(data=np.asarray(data, dtype=np.float64))


def dense_info_matrix(g: Graph, window: int, negatives: int) -> np.ndarray:
    """Dense full-graph information matrix (small-n oracle)."""
    if g.n > DENSE_LIMIT:
        raise ValueError(f"dense oracle limited to n <= {DENSE_LIMIT}, got {g.n}")
    A = g.adjacency.toarray()
    deg = g.degrees.astype(np.float64)
    inv = np.divide(1.0, deg, where=deg > 0, out=np.zeros_like(deg))
    P = A * inv[:, None]

    acc = np.zeros_like(A)
    power = np.eye(g.n)
    for _ in range(window):
        power = power @ P
        acc += power * inv[None, :]
    scaled = _scale(g.volume, window, negatives) * acc
    logged = np.zeros_like(scaled)
    np.log(scaled, out=logged, where=scaled > 1.0)
    return logged


def reference_embedding(g: Graph, d: int, window: int,
                        negatives: int) -> EmbeddingMatrix:
    """Exact small-graph embedding: U_d diag(sigma_d)^(1/2) of the dense
    information matrix."""
    M = dense_info_matrix(g, window, negatives)
    factors = exact_tsvd(M, min(d, g.n))
    return EmbeddingMatrix(data=factors.U * np.sqrt(factors.sigma)[None, :])


def write_embedding_text(path, emb: EmbeddingMatrix, node_ids) -> None:
    """Text format: first line 'n d', then one 'id v1 .. vd' row per node
    with six significant digits."""
    node_ids = np.asarray(node_ids)
    with open(path, "w") as fh:
        fh.write(f"{emb.rows} {emb.dim}\n")
        for i in range(emb.rows):
            vals = " ".join(f"{x:.6g}" for x in emb.data[i])
            fh.write(f"{node_ids[i]} {vals}\n" if emb.dim else f"{node_ids[i]}\n")


def read_embedding_text(path):
    """Returns (node_ids, matrix) from the text format."""
    with open(path) as fh:
        header = fh.readline().split()
        n, d = int(header[0]), int(header[1])
        ids = np.empty(n, dtype=np.int64)
        data = np.empty((n, d))
        for i in range(n):
            parts = fh.readline().split()
            ids[i] = int(parts[0])
            data[i] = [float(x) for x in parts[1:]]
    return ids, data


def write_embedding_binary(path, emb: EmbeddingMatrix) -> None:
    """Binary format: magic, version byte, n and d as little-endian int64,
    then row-major float64 data. Round-trips bit-exactly."""
    with open(path, "wb") as fh:
        fh.write(EMBED_MAGIC)
        fh.write(struct.pack("<B", EMBED_VERSION))
        fh.write(struct.pack("<qq", emb.rows, emb.dim))
        fh.write(np.ascontiguousarray(emb.data, dtype=np.float64).tobytes())


def read_embedding_binary(path) -> EmbeddingMatrix:
    with open(path, "rb") as fh:
        if fh.read(4) != EMBED_MAGIC:
            raise ValueError("not an embedding file (bad magic)")
        (version,) = struct.unpack("<B", fh.read(1))
        if version != EMBED_VERSION:
            raise ValueError(f"unsupported embedding version {version}")
        n, d = struct.unpack("<qq", fh.read(16))
        data = np.frombuffer(fh.read(8 * n * d), dtype=np.float64)
    return EmbeddingMatrix(data=data.reshape(n, d).copy())
