"""Figure rendering for score tables: F1 vs training ratio, and the
sample-size sweep with its dual time axis."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def plot_f1_vs_ratio(curves, out_prefix):
    """One figure per metric (micro, macro); a curve per labeled series.

    ``curves`` maps series name -> list of RatioScore. Returns the two
    written paths.
    """
    if not curves or all(not rows for rows in curves.values()):
        raise ValueError("empty score table")
    paths = []
    for metric in ("micro", "macro"):
        fig, ax = plt.subplots(figsize=(5, 3.5))
        for name, rows in curves.items():
            xs = [100 * r.ratio for r in rows]
            ys = [getattr(r, f"{metric}_f1") for r in rows]
            ax.plot(xs, ys, marker="o", label=name)
        ax.set_xlabel("labeled data (%)")
        ax.set_ylabel(f"{metric}-F1")
        ax.legend()
        ax.grid(alpha=0.3)
        fig.tight_layout()
        path = f"{out_prefix}.{metric}_f1.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        paths.append(path)
    return paths


def plot_sample_size_sweep(rows, out_path):
    """F1 and wall time against sample size on twin axes.

    ``rows`` holds (k, f1, seconds) triples.
    """
    if not rows:
        raise ValueError("empty sweep table")
    ks = [r[0] for r in rows]
    f1s = [r[1] for r in rows]
    secs = [r[2] for r in rows]

    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(ks, f1s, marker="o", color="tab:blue", label="micro-F1")
    ax.set_xlabel("sample size k")
    ax.set_ylabel("micro-F1", color="tab:blue")
    twin = ax.twinx()
    twin.plot(ks, secs, marker="s", color="tab:red", label="time")
    twin.set_ylabel("training time (s)", color="tab:red")
    fig.tight_layout()
    fig.savefig(out_path, dpi=120)
    plt.close(fig)
    return out_path
