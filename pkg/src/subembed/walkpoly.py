"""Sparse approximation of the random-walk polynomial of a subgraph.

Target quantity, for transition matrix P (row-normalized subgraph
adjacency) and within-subgraph degree vector d:

    sum over r = 1..T of  P^r diag(1/d)

computed either densely (small subgraphs) or by Monte-Carlo path sampling.
Each path sample draws a length r uniformly from {1..T} and a start node
proportional to subgraph degree, walks r steps, and deposits a calibrated
weight on the (start, end) entry so the estimator is unbiased:

    weight = T * vol_sub / (samples * d[start] * d[end])

Alongside the T-window polynomial the sampler can produce the "hop"
polynomial covering walk lengths 0..T-1 (the length-0 term is the
diag(1/d) shift); the cross information matrix combines it with a leading
one-step hop supplied by the related matrix.

The inner loop lives in a compiled extension when available; a numpy
fallback with identical arithmetic is selected at import otherwise.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from ._walk_np import walk_ends as _walk_ends_py

if os.environ.get("SUBEMBED_PURE_PYTHON"):
    _walk_ends = _walk_ends_py
    KERNEL_BACKEND = "python"
else:
    try:
        from ._walk_kernel import walk_ends as _walk_ends

        KERNEL_BACKEND = "compiled"
    except ImportError:
        _walk_ends = _walk_ends_py
        KERNEL_BACKEND = "python"

DEFAULT_EXACT_THRESHOLD = 512
_BLOCK = 1 << 18


class EdgelessSubgraphError(ValueError):
    pass


@dataclass(frozen=True)
class WalkConfig:
    """Path-sampling parameters: window T, total sample count, RNG seed,
    dense-path threshold, and static worker partition count."""

    window: int
    samples: int
    seed: int = 0
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD
    workers: int = 1

    def __post_init__(self):
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class SparsePolynomial:
    matrix: sp.csr_matrix

    @property
    def nnz(self) -> int:
        return int(self.matrix.nnz)


def default_sample_count(window: int, nnz: int) -> int:
    """Default path-sample budget: 25 walks per window step per stored edge."""
    return max(1, 25 * window * nnz)


def _inv_degrees(sub_degrees: np.ndarray) -> np.ndarray:
    return np.divide(1.0, sub_degrees, where=sub_degrees > 0,
                     out=np.zeros(len(sub_degrees), dtype=np.float64))


def exact_walk_polynomials(adj, sub_degrees, window, *,
                           include_inverse_degree=True,
                           exact_threshold=DEFAULT_EXACT_THRESHOLD,
                           force=False):
    """Dense-path (full polynomial, hop polynomial) pair.

    O(k^3 T); guarded by ``exact_threshold`` unless ``force`` is set. The
    hop polynomial sums lengths 0..T-1, the full one lengths 1..T.
    """
    k = adj.shape[0]
    if k > exact_threshold and not force:
        raise ValueError(
            f"subgraph size {k} exceeds exact threshold {exact_threshold}; "
            "use the sampled polynomial or pass force=True"
        )
    sub_degrees = np.asarray(sub_degrees, dtype=np.float64)
    inv = _inv_degrees(sub_degrees)
    P = adj.toarray() if sp.issparse(adj) else np.asarray(adj, dtype=np.float64)

    shift = np.diag(inv) if include_inverse_degree else np.eye(k)
    full = np.zeros((k, k))
    hop = shift.copy()
    power = np.eye(k)
    for r in range(1, window + 1):
        power = power @ P
        term = power * inv[None, :] if include_inverse_degree else power
        full += term
        if r <= window - 1:
            hop += term
    return (SparsePolynomial(sp.csr_matrix(full)),
            SparsePolynomial(sp.csr_matrix(hop)))


def exact_walk_polynomial(adj, sub_degrees, window, **kwargs):
    """Dense-path T-window polynomial (see exact_walk_polynomials)."""
    return exact_walk_polynomials(adj, sub_degrees, window, **kwargs)[0]


def _partition_sizes(total: int, parts: int) -> list[int]:
    base, rem = divmod(total, parts)
    return [base + (1 if i < rem else 0) for i in range(parts)]


def _sample_pairs_partition(indptr, indices, cumdeg, window, count, seed_seq):
    """Walk ``count`` paths; returns (start, end, length) arrays."""
    rng = np.random.default_rng(seed_seq)
    vol = cumdeg[-1]
    us, vs, rs = [], [], []
    remaining = count
    while remaining > 0:
        nb = min(_BLOCK, remaining)
        r = rng.integers(1, window + 1, size=nb)
        u = np.searchsorted(cumdeg, rng.random(nb) * vol, side="right")
        steps = rng.random((window, nb))
        v = _walk_ends(indptr, indices, u.astype(np.int64), r, steps)
        us.append(u)
        vs.append(v)
        rs.append(r)
        remaining -= nb
    return np.concatenate(us), np.concatenate(vs), np.concatenate(rs)


def _sample_pairs(adj, sub_degrees, cfg: WalkConfig, include_inverse_degree):
    sub_degrees = np.asarray(sub_degrees, dtype=np.int64)
    if sub_degrees.sum() == 0:
        raise EdgelessSubgraphError("cannot walk on edgeless subgraph")
    csr = adj.tocsr()
    indptr = csr.indptr.astype(np.int64)
    indices = csr.indices.astype(np.int64)
    cumdeg = np.cumsum(sub_degrees).astype(np.float64)

    sizes = _partition_sizes(cfg.samples, cfg.workers)
    seqs = np.random.SeedSequence(cfg.seed).spawn(cfg.workers)
    if cfg.workers == 1:
        parts = [_sample_pairs_partition(indptr, indices, cumdeg,
                                         cfg.window, sizes[0], seqs[0])]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [
                pool.submit(_sample_pairs_partition, indptr, indices, cumdeg,
                            cfg.window, sz, sq)
                for sz, sq in zip(sizes, seqs)
            ]
            parts = [f.result() for f in futures]

    u = np.concatenate([p[0] for p in parts])
    v = np.concatenate([p[1] for p in parts])
    r = np.concatenate([p[2] for p in parts])
    d = sub_degrees.astype(np.float64)
    vol = d.sum()
    # Start node is drawn ~ d[u]/vol and length uniform over T choices, so
    # dividing both out leaves the walk-probability mass; the d[v] factor
    # realizes the trailing diag(1/d) when requested.
    w = cfg.window * vol / (cfg.samples * d[u])
    if include_inverse_degree:
        w = w / d[v]
    return u, v, r, w


def sampled_walk_polynomials(adj, sub_degrees, cfg: WalkConfig, *,
                             include_inverse_degree=True):
    """Monte-Carlo (full polynomial, hop polynomial) pair from one sample
    stream; both unbiased for their dense counterparts."""
    k = adj.shape[0]
    u, v, r, w = _sample_pairs(adj, sub_degrees, cfg, include_inverse_degree)
    full = sp.coo_matrix((w, (u, v)), shape=(k, k)).tocsr()

    mask = r < cfg.window
    hop = sp.coo_matrix((w[mask], (u[mask], v[mask])), shape=(k, k)).tocsr()
    if include_inverse_degree:
        shift = sp.diags(_inv_degrees(np.asarray(sub_degrees)))
    else:
        shift = sp.identity(k)
    return SparsePolynomial(full), SparsePolynomial((hop + shift).tocsr())


def sampled_walk_polynomial(adj, sub_degrees, cfg: WalkConfig, *,
                            include_inverse_degree=True):
    """Monte-Carlo T-window polynomial; nnz is at most cfg.samples."""
    k = adj.shape[0]
    u, v, _, w = _sample_pairs(adj, sub_degrees, cfg, include_inverse_degree)
    return SparsePolynomial(sp.coo_matrix((w, (u, v)), shape=(k, k)).tocsr())
