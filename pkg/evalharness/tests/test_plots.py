import os

import pytest

from embedeval import EvalConfig, evaluate, plot_f1_vs_ratio, plot_sample_size_sweep


def test_single_point_plot(tmp_path, separable_case):
    emb, lab = separable_case
    rows = evaluate(EvalConfig(embedding_path=emb, label_path=lab,
                               ratios=[0.5], repetitions=1, seed=0))
    paths = plot_f1_vs_ratio({"toy": rows}, str(tmp_path / "toy"))
    assert len(paths) == 2
    for path in paths:
        assert os.path.exists(path) and os.path.getsize(path) > 0


def test_two_figures_for_sweep(tmp_path, separable_case):
    emb, lab = separable_case
    rows = evaluate(EvalConfig(embedding_path=emb, label_path=lab,
                               ratios=[0.2, 0.5, 0.8], repetitions=2, seed=0))
    micro_path, macro_path = plot_f1_vs_ratio(
        {"run": rows}, str(tmp_path / "sweep"))
    assert micro_path.endswith("micro_f1.png")
    assert macro_path.endswith("macro_f1.png")


def test_empty_table_rejected(tmp_path):
    with pytest.raises(ValueError, match="empty"):
        plot_f1_vs_ratio({}, str(tmp_path / "x"))
    with pytest.raises(ValueError, match="empty"):
        plot_sample_size_sweep([], str(tmp_path / "y.png"))


def test_sample_size_sweep_figure(tmp_path):
    rows = [(500, 0.55, 1.2), (1000, 0.61, 2.1), (2000, 0.63, 4.4)]
    path = plot_sample_size_sweep(rows, str(tmp_path / "k_sweep.png"))
    assert os.path.exists(path) and os.path.getsize(path) > 0
