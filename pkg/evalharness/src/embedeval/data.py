"""Readers for the embedding text format and multi-label files.

Embedding files: first line "n d", then one "node_id v1 .. vd" row per
node. Label files: "node_id label_id [label_id ...]" per line, '#'
comments allowed. Node order in either file is irrelevant; everything is
joined on node id.
"""

from __future__ import annotations

import numpy as np


class DataFormatError(ValueError):
    pass


class IdMismatchError(ValueError):
    def __init__(self, missing_in_labels, missing_in_embedding):
        self.missing_in_labels = sorted(missing_in_labels)
        self.missing_in_embedding = sorted(missing_in_embedding)
        parts = []
        if self.missing_in_labels:
            parts.append(f"ids without labels: {_preview(self.missing_in_labels)}")
        if self.missing_in_embedding:
            parts.append(
                f"labeled ids without embeddings: {_preview(self.missing_in_embedding)}")
        super().__init__("; ".join(parts))


def _preview(ids, limit=10):
    head = ", ".join(str(i) for i in ids[:limit])
    return head + (f", ... ({len(ids)} total)" if len(ids) > limit else "")


def read_embedding(path):
    """Returns (node_ids, matrix) from an embedding text file."""
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise DataFormatError(f"{path}: bad header line")
        n, d = int(header[0]), int(header[1])
        ids = np.empty(n, dtype=np.int64)
        data = np.empty((n, d))
        for i in range(n):
            parts = fh.readline().split()
            if len(parts) != d + 1:
                raise DataFormatError(f"{path}: row {i + 2} has {len(parts)} fields")
            ids[i] = int(parts[0])
            data[i] = [float(x) for x in parts[1:]]
    return ids, data


def read_labels(path):
    """Returns {node_id: sorted list of label ids}."""
    labels: dict[int, set[int]] = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split()
            if len(parts) < 2:
                raise DataFormatError(f"{path}:{lineno}: need node id and a label")
            try:
                node = int(parts[0])
                labs = [int(p) for p in parts[1:]]
            except ValueError:
                raise DataFormatError(f"{path}:{lineno}: non-integer field")
            labels.setdefault(node, set()).update(labs)
    return {node: sorted(labs) for node, labs in labels.items()}


def align(ids, matrix, labels):
    """Join embeddings and labels on node id (sorted id order).

    Returns (features, indicator matrix, label universe). Raises
    IdMismatchError listing ids present on only one side.
    """
    id_set = set(int(i) for i in ids)
    label_set = set(labels)
    if id_set != label_set:
        raise IdMismatchError(id_set - label_set, label_set - id_set)

    order = np.argsort(ids, kind="stable")
    ids_sorted = ids[order]
    X = matrix[order]

    universe = sorted({lab for labs in labels.values() for lab in labs})
    col = {lab: j for j, lab in enumerate(universe)}
    Y = np.zeros((len(ids_sorted), len(universe)), dtype=np.int8)
    for i, node in enumerate(ids_sorted):
        for lab in labels[int(node)]:
            Y[i, col[lab]] = 1
    return X, Y, universe
