"""Immutable sparse undirected graph with degree and volume queries.

Graphs are loaded from whitespace-separated edge lists. Input node ids may
be arbitrary non-negative integers; they are remapped to a contiguous
0..n-1 range and the original ids are kept so results can be joined back.
Self-loops are dropped, duplicate edges collapse to one, and the adjacency
is stored symmetric in compressed sparse row form.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

CACHE_MAGIC = b"SBGR"
CACHE_VERSION = 1


class EdgeListError(ValueError):
    """Raised for malformed edge-list input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over nodes 0..n-1.

    ``adjacency`` is a symmetric 0/1 CSR matrix, ``degrees`` its row entry
    counts and ``volume`` the sum of all degrees (2m for a simple graph).
    ``node_ids`` maps each internal index to the id used in the input.
    """

    n: int
    m: int
    adjacency: sp.csr_matrix
    degrees: np.ndarray
    node_ids: np.ndarray
    volume: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "volume", float(self.degrees.sum()))

    @property
    def directed_entry_count(self) -> int:
        """Number of stored adjacency entries (2m); Table-style edge counts
        in published datasets are sometimes this and sometimes m."""
        return int(self.adjacency.nnz)

    def index_of(self, original_id: int) -> int:
        idx = np.searchsorted(self.node_ids, original_id)
        if idx >= self.n or self.node_ids[idx] != original_id:
            raise KeyError(f"unknown node id {original_id}")
        return int(idx)


def _parse_edge_array(text: str) -> np.ndarray:
    """Parse edge-list text into an (e, 2) int array, reporting the line
    number of the first malformed line."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise EdgeListError(
                f"line {lineno}: expected two node ids, got {len(parts)} fields"
            )
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer node id in {stripped!r}")
    return np.asarray(rows, dtype=np.int64).reshape(-1, 2)


def _read_text(source) -> str:
    """Fetch text from a path (str/PathLike), bytes, or file-like object."""
    if hasattr(source, "read"):
        data = source.read()
    elif isinstance(source, bytes):
        data = source
    else:
        with open(source, "rb") as fh:
            data = fh.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def load_edge_list(source) -> Graph:
    """Load a Graph from a path, byte string, or file-like stream.

    Lines hold two whitespace-separated integer node ids; '#' starts a
    comment line. Duplicate edges are collapsed, self-loops dropped, and
    the result is independent of input line order.
    """
    data = _read_text(source)

    edges = _parse_edge_array(data)
    if edges.size == 0:
        raise EdgeListError("no edges")

    ids, remapped = np.unique(edges.reshape(-1), return_inverse=True)
    remapped = remapped.reshape(-1, 2)
    return _from_index_pairs(remapped, ids)


def _from_index_pairs(pairs: np.ndarray, node_ids: np.ndarray) -> Graph:
    """Build a Graph from 0-based index pairs (may contain dups/loops)."""
    n = len(node_ids)
    keep = pairs[:, 0] != pairs[:, 1]
    pairs = pairs[keep]
    if pairs.size == 0:
        raise EdgeListError("no edges")
    lo = np.minimum(pairs[:, 0], pairs[:, 1])
    hi = np.maximum(pairs[:, 0], pairs[:, 1])
    und = np.unique(np.stack([lo, hi], axis=1), axis=0)
    m = und.shape[0]

    row = np.concatenate([und[:, 0], und[:, 1]])
    col = np.concatenate([und[:, 1], und[:, 0]])
    adj = sp.csr_matrix(
        (np.ones(2 * m, dtype=np.float64), (row, col)), shape=(n, n)
    )
    degrees = np.diff(adj.indptr).astype(np.int64)
    return Graph(n=n, m=m, adjacency=adj, degrees=degrees, node_ids=node_ids)


def from_adjacency(adj: sp.spmatrix, node_ids=None) -> Graph:
    """Wrap an existing symmetric 0/1 adjacency matrix as a Graph."""
    adj = sp.csr_matrix(adj, dtype=np.float64)
    adj.setdiag(0)
    adj.eliminate_zeros()
    adj.data[:] = 1.0
    n = adj.shape[0]
    if (adj != adj.T).nnz != 0:
        raise ValueError("adjacency must be symmetric")
    if node_ids is None:
        node_ids = np.arange(n, dtype=np.int64)
    degrees = np.diff(adj.indptr).astype(np.int64)
    return Graph(n=n, m=adj.nnz // 2, adjacency=adj, degrees=degrees,
                 node_ids=np.asarray(node_ids, dtype=np.int64))


def write_edge_list(g: Graph, path) -> None:
    """Write one 'u v' line per undirected edge, using original ids."""
    coo = sp.triu(g.adjacency, k=1).tocoo()
    with open(path, "w") as fh:
        for i, j in zip(coo.row, coo.col):
            fh.write(f"{g.node_ids[i]} {g.node_ids[j]}\n")


def load_labels(source, graph: Graph | None = None) -> dict[int, list[int]]:
    """Parse a multi-label file: 'node_id label_id [label_id ...]' per line.

    Keys are original node ids; when ``graph`` is given they are remapped to
    internal indices and unknown ids raise.
    """
    text = _read_text(source)
    labels: dict[int, list[int]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) < 2:
            raise EdgeListError(f"line {lineno}: need a node id and one label")
        try:
            node = int(parts[0])
            labs = [int(p) for p in parts[1:]]
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer field in {stripped!r}")
        key = graph.index_of(node) if graph is not None else node
        labels.setdefault(key, []).extend(labs)
    return labels


def save_cache(g: Graph, path) -> None:
    """Serialize the CSR structure to a binary cache for fast reload."""
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack("<B", CACHE_VERSION))
        fh.write(struct.pack("<qq", g.n, g.m))
        indptr = g.adjacency.indptr.astype(np.int64)
        indices = g.adjacency.indices.astype(np.int64)
        fh.write(indptr.tobytes())
        fh.write(indices.tobytes())
        fh.write(g.node_ids.astype(np.int64).tobytes())


def load_cache(path) -> Graph:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != CACHE_MAGIC:
            raise EdgeListError("not a graph cache file (bad magic)")
        (version,) = struct.unpack("<B", fh.read(1))
        if version != CACHE_VERSION:
            raise EdgeListError(f"unsupported cache version {version}")
        n, m = struct.unpack("<qq", fh.read(16))
        indptr = np.frombuffer(fh.read(8 * (n + 1)), dtype=np.int64)
        indices = np.frombuffer(fh.read(8 * 2 * m), dtype=np.int64)
        node_ids = np.frombuffer(fh.read(8 * n), dtype=np.int64)
    adj = sp.csr_matrix(
        (np.ones(2 * m, dtype=np.float64), indices.copy(), indptr.copy()),
        shape=(n, n),
    )
    degrees = np.diff(adj.indptr).astype(np.int64)
    return Graph(n=n, m=m, adjacency=adj, degrees=degrees, node_ids=node_ids.copy())
