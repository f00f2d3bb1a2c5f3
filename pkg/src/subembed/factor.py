"""Truncated SVD: randomized range-finder path plus a dense exact oracle.

Factor signs are fixed deterministically (largest-magnitude entry of each
right-singular vector made non-negative) so repeated runs and platforms
produce identical factors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

DENSE_ORACLE_LIMIT = 1000


@dataclass(frozen=True)
class FactorPair:
    """Rank-d factors U diag(sigma) V^T with column-orthonormal U, V and
    sigma sorted non-increasing."""

    U: np.ndarray
    sigma: np.ndarray
    V: np.ndarray

    @property
    def d(self) -> int:
        return len(self.sigma)


def _fix_signs(U: np.ndarray, V: np.ndarray):
    anchor = np.abs(V).argmax(axis=0)
    flip = V[anchor, np.arange(V.shape[1])] < 0
    V = V.copy()
    U = U.copy()
    V[:, flip] *= -1.0
    U[:, flip] *= -1.0
    return U, V


def _check_finite(M) -> None:
    data = M.data if sp.issparse(M) else np.asarray(M)
    if not np.all(np.isfinite(data)):
        raise ValueError("matrix has non-finite entries")


def exact_tsvd(M, d: int) -> FactorPair:
    """Top-d factors from a full dense SVD (oracle path, small matrices)."""
    if sp.issparse(M):
        M = M.toarray()
    M = np.asarray(M, dtype=np.float64)
    if max(M.shape) > DENSE_ORACLE_LIMIT:
        raise ValueError(
            f"dense SVD oracle limited to {DENSE_ORACLE_LIMIT}, got {M.shape}"
        )
    if d < 1 or d > min(M.shape):
        raise ValueError(f"rank {d} out of range for shape {M.shape}")
    _check_finite(M)
    U, s, Vt = np.linalg.svd(M, full_matrices=False)
    U, V = _fix_signs(U[:, :d], Vt[:d].T)
    return FactorPair(U=U, sigma=s[:d].copy(), V=V)


def randomized_tsvd(M, d: int, oversample: int = 10, power_iters: int = 2,
                    seed: int = 0) -> FactorPair:
    """Randomized truncated SVD via a Gaussian range finder.

    Draws d + oversample probe vectors, runs ``power_iters`` orthonormalized
    power iterations to sharpen the captured subspace, then solves the small
    projected SVD. Deterministic for a given seed.
    """
    if d < 1 or d > min(M.shape):
        raise ValueError(f"rank {d} out of range for shape {M.shape}")
    _check_finite(M)
    rng = np.random.default_rng(seed)
    p = min(min(M.shape), d + oversample)

    omega = rng.standard_normal((M.shape[1], p))
    Q, _ = np.linalg.qr(M @ omega)
    for _ in range(power_iters):
        Q, _ = np.linalg.qr(M.T @ Q)
        Q, _ = np.linalg.qr(M @ Q)

    B = (M.T @ Q).T          # p x n, works for sparse and dense M
    Ub, s, Vt = np.linalg.svd(B, full_matrices=False)
    U = Q @ Ub
    U, V = _fix_signs(U[:, :d], Vt[:d].T)
    return FactorPair(U=U, sigma=s[:d].copy(), V=V)
