import numpy as np
import pytest

from embedeval import (DegenerateSplitError, EvalConfig, compare_sampling,
                       evaluate, top_count_predict, write_gain_table,
                       write_score_table)

from conftest import write_embedding_file, write_label_file


def test_top_count_predict_rule():
    scores = np.array([[0.9, 0.1, 0.5], [0.2, 0.8, 0.7]])
    pred = top_count_predict(scores, np.array([1, 2]))
    assert pred.tolist() == [[1, 0, 0], [0, 1, 1]]


def test_perfectly_separable_scores_one(separable_case):
    emb, lab = separable_case
    cfg = EvalConfig(embedding_path=emb, label_path=lab,
                     ratios=[0.5], repetitions=3, seed=0)
    rows = evaluate(cfg)
    assert rows[0].micro_f1 == pytest.approx(1.0)
    assert rows[0].macro_f1 == pytest.approx(1.0)


def test_deterministic_given_seed(separable_case):
    emb, lab = separable_case
    cfg = EvalConfig(embedding_path=emb, label_path=lab,
                     ratios=[0.3, 0.6], repetitions=4, seed=9)
    a = evaluate(cfg)
    b = evaluate(cfg)
    assert [(r.micro_f1, r.macro_f1) for r in a] == \
           [(r.micro_f1, r.macro_f1) for r in b]


def test_scores_lie_in_unit_interval(separable_case):
    emb, lab = separable_case
    rows = evaluate(EvalConfig(embedding_path=emb, label_path=lab,
                               ratios=[0.2, 0.8], repetitions=2, seed=1))
    for r in rows:
        assert 0.0 <= r.micro_f1 <= 1.0
        assert 0.0 <= r.macro_f1 <= 1.0


def test_shuffled_embedding_rows_score_identically(tmp_path, rng=None):
    rng = np.random.default_rng(5)
    n = 60
    y = rng.integers(0, 3, size=n)
    X = rng.normal(size=(n, 5)) + y[:, None] * 2.0
    ids = np.arange(n)
    labels = {int(i): [int(y[i])] for i in ids}
    lab = write_label_file(tmp_path / "l.txt", labels)
    emb_a = write_embedding_file(tmp_path / "a.txt", ids, X)
    perm = rng.permutation(n)
    emb_b = write_embedding_file(tmp_path / "b.txt", ids[perm], X[perm])

    kwargs = dict(label_path=lab, ratios=[0.4], repetitions=3, seed=2)
    rows_a = evaluate(EvalConfig(embedding_path=emb_a, **kwargs))
    rows_b = evaluate(EvalConfig(embedding_path=emb_b, **kwargs))
    assert rows_a[0].micro_f1 == pytest.approx(rows_b[0].micro_f1)
    assert rows_a[0].macro_f1 == pytest.approx(rows_b[0].macro_f1)


def test_micro_f1_equals_accuracy_on_single_label_data(tmp_path):
    # top-1 prediction on single-label rows makes micro-F1 an accuracy
    rng = np.random.default_rng(3)
    n = 80
    y = rng.integers(0, 4, size=n)
    X = rng.normal(size=(n, 6)) + np.eye(4)[y] @ rng.normal(size=(4, 6)) * 1.5
    ids = np.arange(n)
    emb = write_embedding_file(tmp_path / "e.txt", ids, X)
    lab = write_label_file(tmp_path / "l.txt", {int(i): [int(y[i])] for i in ids})

    from embedeval.data import align, read_embedding, read_labels
    from embedeval.evaluate import _splits, score_split

    Xa, Y, _ = align(*read_embedding(emb), read_labels(lab))
    (train_idx, test_idx), = _splits(n, [0.5], 1, seed=7)[0.5]
    micro, _ = score_split(Xa, Y, train_idx, test_idx, seed=7)

    from embedeval.evaluate import _fit_scores

    scores = _fit_scores(Xa[train_idx], Y[train_idx], Xa[test_idx], 7)
    accuracy = float(np.mean(scores.argmax(axis=1) == Y[test_idx].argmax(axis=1)))
    assert micro == pytest.approx(accuracy)


def test_degenerate_split_raises(tmp_path):
    rng = np.random.default_rng(0)
    n = 20
    ids = np.arange(n)
    emb = write_embedding_file(tmp_path / "e.txt", ids, rng.normal(size=(n, 3)))
    labels = {int(i): [0] for i in ids}
    labels[19] = [1]  # a single node carries label 1
    lab = write_label_file(tmp_path / "l.txt", labels)
    cfg = EvalConfig(embedding_path=emb, label_path=lab,
                     ratios=[0.5], repetitions=5, seed=0)
    with pytest.raises(DegenerateSplitError, match="single-class"):
        evaluate(cfg)


def test_identical_embeddings_gain_zero(separable_case):
    emb, lab = separable_case
    kwargs = dict(label_path=lab, ratios=[0.3, 0.5], repetitions=2, seed=4)
    gains = compare_sampling(EvalConfig(embedding_path=emb, **kwargs),
                             EvalConfig(embedding_path=emb, **kwargs))
    for g in gains:
        assert g.micro_gain == 0.0
        assert g.macro_gain == 0.0


def test_compare_requires_matching_protocol(separable_case):
    emb, lab = separable_case
    a = EvalConfig(embedding_path=emb, label_path=lab, ratios=[0.5], seed=1)
    b = EvalConfig(embedding_path=emb, label_path=lab, ratios=[0.5], seed=2)
    with pytest.raises(ValueError, match="matching"):
        compare_sampling(a, b)


def test_config_validation(separable_case):
    emb, lab = separable_case
    with pytest.raises(ValueError, match="ratios"):
        EvalConfig(embedding_path=emb, label_path=lab, ratios=[1.2]).validate()
    with pytest.raises(ValueError, match="ratios"):
        EvalConfig(embedding_path=emb, label_path=lab, ratios=[]).validate()
    with pytest.raises(ValueError, match="repetitions"):
        EvalConfig(embedding_path=emb, label_path=lab,
                   repetitions=0).validate()


def test_tables_written(tmp_path, separable_case):
    emb, lab = separable_case
    kwargs = dict(label_path=lab, ratios=[0.5], repetitions=2, seed=0)
    rows = evaluate(EvalConfig(embedding_path=emb, **kwargs))
    score_path = tmp_path / "scores.tsv"
    write_score_table(rows, score_path)
    lines = score_path.read_text().splitlines()
    assert lines[0].startswith("ratio\tmicro_f1")
    assert len(lines) == 2

    gains = compare_sampling(EvalConfig(embedding_path=emb, **kwargs),
                             EvalConfig(embedding_path=emb, **kwargs))
    gain_path = tmp_path / "gains.tsv"
    write_gain_table(gains, gain_path)
    assert "micro_gain" in gain_path.read_text().splitlines()[0]
