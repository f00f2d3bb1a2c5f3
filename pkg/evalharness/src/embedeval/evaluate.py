"""Multi-label classification scoring over training-ratio sweeps.

Protocol: random split at each ratio, one-vs-rest logistic regression
(liblinear solver), and the standard top-count decision rule where each
test node predicts as many labels as it truly has. Micro and macro F1 are
averaged over repetitions; everything is deterministic given the seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sklearn.linear_model import LogisticRegression
from sklearn.metrics import f1_score

from .data import align, read_embedding, read_labels


class DegenerateSplitError(ValueError):
    pass


@dataclass
class EvalConfig:
    embedding_path: str
    label_path: str
    ratios: list[float] = field(default_factory=lambda: [i / 10 for i in range(1, 10)])
    repetitions: int = 10
    seed: int = 0

    def validate(self):
        if not self.ratios:
            raise ValueError("no training ratios given")
        if any(not 0 < r < 1 for r in self.ratios):
            raise ValueError("training ratios must lie in (0, 1)")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")


@dataclass
class RatioScore:
    ratio: float
    micro_f1: float
    macro_f1: float
    micro_std: float
    macro_std: float
    repetitions: int


def top_count_predict(scores: np.ndarray, counts: np.ndarray) -> np.ndarray:
    """Select each row's top-`counts[i]` scoring labels as its prediction."""
    pred = np.zeros(scores.shape, dtype=np.int8)
    order = np.argsort(-scores, axis=1)
    for i, c in enumerate(counts):
        pred[i, order[i, :c]] = 1
    return pred


def _fit_scores(X_train, Y_train, X_test, seed):
    """Per-label logistic decision scores on the test rows."""
    n_labels = Y_train.shape[1]
    scores = np.empty((X_test.shape[0], n_labels))
    for j in range(n_labels):
        y = Y_train[:, j]
        positives = int(y.sum())
        if positives == 0 or positives == len(y):
            raise DegenerateSplitError(
                f"label column {j} is single-class in this training split "
                f"({positives}/{len(y)} positive)")
        clf = LogisticRegression(solver="liblinear", random_state=seed)
        clf.fit(X_train, y)
        scores[:, j] = clf.decision_function(X_test)
    return scores


def score_split(X, Y, train_idx, test_idx, seed):
    """(micro, macro) F1 of one split under the top-count rule."""
    scores = _fit_scores(X[train_idx], Y[train_idx], X[test_idx], seed)
    counts = Y[test_idx].sum(axis=1).astype(int)
    pred = top_count_predict(scores, counts)
    true = Y[test_idx]
    return (f1_score(true, pred, average="micro", zero_division=0),
            f1_score(true, pred, average="macro", zero_division=0))


def _splits(n, ratios, repetitions, seed):
    """Deterministic shuffled splits, identical for equal (n, cfg) values."""
    rng = np.random.default_rng(seed)
    out = {}
    for ratio in ratios:
        n_train = int(round(ratio * n))
        if n_train < 1 or n_train >= n:
            raise ValueError(f"ratio {ratio} leaves an empty side for n={n}")
        reps = []
        for _ in range(repetitions):
            perm = rng.permutation(n)
            reps.append((perm[:n_train], perm[n_train:]))
        out[ratio] = reps
    return out


def evaluate(cfg: EvalConfig) -> list[RatioScore]:
    """Mean micro/macro F1 per training ratio."""
    cfg.validate()
    ids, matrix = read_embedding(cfg.embedding_path)
    labels = read_labels(cfg.label_path)
    X, Y, _ = align(ids, matrix, labels)

    results = []
    splits = _splits(len(X), cfg.ratios, cfg.repetitions, cfg.seed)
    for ratio in cfg.ratios:
        micro, macro = [], []
        for train_idx, test_idx in splits[ratio]:
            mi, ma = score_split(X, Y, train_idx, test_idx, cfg.seed)
            micro.append(mi)
            macro.append(ma)
        results.append(RatioScore(
            ratio=ratio,
            micro_f1=float(np.mean(micro)), macro_f1=float(np.mean(macro)),
            micro_std=float(np.std(micro)), macro_std=float(np.std(macro)),
            repetitions=cfg.repetitions,
        ))
    return results


@dataclass
class SamplingGain:
    ratio: float
    micro_first: float
    micro_second: float
    macro_first: float
    macro_second: float

    @property
    def micro_gain(self) -> float:
        return _relative(self.micro_first, self.micro_second)

    @property
    def macro_gain(self) -> float:
        return _relative(self.macro_first, self.macro_second)


def _relative(a, b):
    return (a - b) / b if b else 0.0


def compare_sampling(cfg_first: EvalConfig, cfg_second: EvalConfig):
    """Relative micro/macro gains of the first embedding over the second,
    evaluated on identical splits (same seed, ratios, repetitions)."""
    if (cfg_first.ratios != cfg_second.ratios
            or cfg_first.repetitions != cfg_second.repetitions
            or cfg_first.seed != cfg_second.seed):
        raise ValueError("comparison requires matching ratios/repetitions/seed")
    first = evaluate(cfg_first)
    second = evaluate(cfg_second)
    return [
        SamplingGain(ratio=a.ratio,
                     micro_first=a.micro_f1, micro_second=b.micro_f1,
                     macro_first=a.macro_f1, macro_second=b.macro_f1)
        for a, b in zip(first, second)
    ]


def write_score_table(rows: list[RatioScore], path) -> None:
    with open(path, "w") as fh:
        fh.write("ratio\tmicro_f1\tmacro_f1\tmicro_std\tmacro_std\treps\n")
        for r in rows:
            fh.write(f"{r.ratio:.2f}\t{r.micro_f1:.6f}\t{r.macro_f1:.6f}\t"
                     f"{r.micro_std:.6f}\t{r.macro_std:.6f}\t{r.repetitions}\n")


def write_gain_table(rows: list[SamplingGain], path) -> None:
    with open(path, "w") as fh:
        fh.write("ratio\tmicro_first\tmicro_second\tmicro_gain\t"
                 "macro_first\tmacro_second\tmacro_gain\n")
        for r in rows:
            fh.write(f"{r.ratio:.2f}\t{r.micro_first:.6f}\t{r.micro_second:.6f}\t"
                     f"{r.micro_gain:+.4f}\t{r.macro_first:.6f}\t"
                     f"{r.macro_second:.6f}\t{r.macro_gain:+.4f}\n")
