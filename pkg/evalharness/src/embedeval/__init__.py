"""Scoring harness for node-embedding files: multi-label one-vs-rest
classification over training-ratio sweeps, sampling-mode comparisons, and
result plots."""

from .data import (DataFormatError, IdMismatchError, align, read_embedding,
                   read_labels)
from .evaluate import (DegenerateSplitError, EvalConfig, RatioScore,
                       SamplingGain, compare_sampling, evaluate, score_split,
                       top_count_predict, write_gain_table, write_score_table)
from .plots import plot_f1_vs_ratio, plot_sample_size_sweep

__version__ = "0.1.0"

__all__ = [
    "DataFormatError", "DegenerateSplitError", "EvalConfig", "IdMismatchError",
    "RatioScore", "SamplingGain", "align", "compare_sampling", "evaluate",
    "plot_f1_vs_ratio", "plot_sample_size_sweep", "read_embedding",
    "read_labels", "score_split", "top_count_predict", "write_gain_table",
    "write_score_table",
]
