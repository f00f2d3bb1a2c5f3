"""Throughput comparison of the compiled walk kernel vs the numpy fallback.

Both backends consume identical pre-drawn uniforms, so outputs are checked
bit-equal before timing. Usage: python benchmarks/bench_walker.py
"""

import argparse
import time

import numpy as np

from subembed import build_sample, top_degree_nodes
from subembed.synthetic import random_graph
from subembed import _walk_np

try:
    from subembed import _walk_kernel
except ImportError:
    _walk_kernel = None


def make_inputs(n, k, window, samples, seed):
    g = random_graph(n, 12.0, seed=seed)
    s = build_sample(g, top_degree_nodes(g, k))
    rng = np.random.default_rng(seed)
    d = s.sub_degrees.astype(float)
    cum = np.cumsum(d)
    starts = np.searchsorted(cum, rng.random(samples) * cum[-1], side="right")
    lengths = rng.integers(1, window + 1, size=samples)
    steps = rng.random((window, samples))
    return (s.adj.indptr.astype(np.int64), s.adj.indices.astype(np.int64),
            starts.astype(np.int64), lengths, steps)


def bench(fn, args, repeats):
    best = np.inf
    for _ in range(repeats):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return out, best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nodes", type=int, default=20_000)
    ap.add_argument("--k", type=int, default=2_000)
    ap.add_argument("--window", type=int, default=10)
    ap.add_argument("--samples", type=int, default=2_000_000)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    inputs = make_inputs(args.nodes, args.k, args.window, args.samples, seed=1)
    total_steps = int(inputs[3].sum())
    print(f"{args.samples:,} walks, {total_steps:,} steps "
          f"(k={args.k}, window={args.window})")

    out_py, t_py = bench(_walk_np.walk_ends, inputs, args.repeats)
    rows = [("numpy fallback", t_py, total_steps / t_py / 1e6)]

    if _walk_kernel is not None:
        out_cy, t_cy = bench(_walk_kernel.walk_ends, inputs, args.repeats)
        assert np.array_equal(out_py, out_cy), "backends disagree"
        rows.append(("compiled kernel", t_cy, total_steps / t_cy / 1e6))
        rows.append(("speedup", t_py / t_cy, float("nan")))
    else:
        print("compiled kernel not built; timing fallback only")

    print(f"{'backend':<18}{'seconds':>10}{'Msteps/s':>12}")
    for name, secs, rate in rows:
        rate_s = f"{rate:11.1f}" if np.isfinite(rate) else "        x"
        print(f"{name:<18}{secs:>10.3f} {rate_s}")


if __name__ == "__main__":
    main()
