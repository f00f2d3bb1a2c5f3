import numpy as np
import pytest


def write_embedding_file(path, ids, matrix):
    matrix = np.asarray(matrix, dtype=float)
    with open(path, "w") as fh:
        fh.write(f"{matrix.shape[0]} {matrix.shape[1]}\n")
        for nid, row in zip(ids, matrix):
            fh.write(f"{nid} " + " ".join(f"{x:.6g}" for x in row) + "\n")
    return str(path)


def write_label_file(path, labels):
    with open(path, "w") as fh:
        for nid, labs in labels.items():
            fh.write(f"{nid} " + " ".join(str(lab) for lab in labs) + "\n")
    return str(path)


@pytest.fixture
def separable_case(tmp_path, request):
    """Two clusters in feature space, label = cluster; linearly separable."""
    rng = np.random.default_rng(0)
    n = 80
    y = np.repeat([0, 1], n // 2)
    X = rng.normal(size=(n, 4)) + y[:, None] * 8.0
    ids = np.arange(n)
    emb = write_embedding_file(tmp_path / "sep.emb.txt", ids, X)
    lab = write_label_file(tmp_path / "sep.labels",
                           {int(i): [int(y[i])] for i in ids})
    return emb, lab
