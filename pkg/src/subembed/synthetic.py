"""Synthetic graph generators for benchmarks and tests."""

from __future__ import annotations

import numpy as np

from .graph import Graph, _from_index_pairs


def random_graph(n: int, avg_degree: float, seed: int = 0) -> Graph:
    """Erdos-Renyi style graph with roughly n * avg_degree / 2 edges."""
    rng = np.random.default_rng(seed)
    target = int(n * avg_degree / 2)
    pairs = rng.integers(0, n, size=(int(target * 1.15) + 8, 2))
    pairs = pairs[pairs[:, 0] != pairs[:, 1]][:target]
    return _from_index_pairs(pairs, np.arange(n, dtype=np.int64))


def power_law_graph(n: int, attach: int = 4, seed: int = 0) -> Graph:
    """Preferential-attachment graph with a heavy-tailed degree profile."""
    rng = np.random.default_rng(seed)
    if n < attach + 1:
        raise ValueError("need more nodes than attachment edges")
    edges = []
    # Repeated-endpoint pool realizes degree-proportional target choice.
    pool = list(range(attach))
    for v in range(attach, n):
        targets = {int(pool[i]) for i in rng.integers(0, len(pool), size=attach)}
        for t in targets:
            edges.append((v, t))
            pool.append(t)
        pool.extend([v] * len(targets))
    pairs = np.asarray(edges, dtype=np.int64)
    return _from_index_pairs(pairs, np.arange(n, dtype=np.int64))
