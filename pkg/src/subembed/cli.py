"""Command-line entry points: `subembed run` and `subembed sweep`.

Options may also come from a key=value config file (--config); explicit
flags win over file values. SUBEMBED_WORKERS overrides the worker count.
"""

from __future__ import annotations

import argparse
import os
import sys

from .pipeline import (DEFAULT_SEED, PipelineConfig, PipelineError, run,
                       timing_sweep, write_sweep_table)

_CONFIG_KEYS = {
    "input": str, "k": int, "dim": int, "window": int, "negatives": int,
    "samples": int, "sampling_mode": str, "seed": int, "workers": int,
    "polynomial": str, "factorization": str, "exact_threshold": int,
    "output_prefix": str, "label_path": str, "report_path": str,
}


def _parse_config_file(path) -> dict:
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" in stripped:
                key, _, val = stripped.partition("=")
            else:
                key, _, val = stripped.partition(" ")
            key = key.strip().replace("-", "_")
            val = val.strip()
            if key not in _CONFIG_KEYS or not val:
                raise SystemExit(
                    f"config {path}:{lineno}: unknown or empty option {key!r}")
            values[key] = _CONFIG_KEYS[key](val)
    return values


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="edge-list file")
    p.add_argument("--config", help="key=value config file; flags override")
    p.add_argument("--labels", dest="label_path",
                   help="label file, recorded for the evaluation harness")
    p.add_argument("--d", "--dim", dest="dim", type=int)
    p.add_argument("--window", type=int, help="context window size")
    p.add_argument("--negatives", type=int, help="negative-sample count")
    p.add_argument("--samples", type=int,
                   help="path samples (default 25 * window * subgraph nnz)")
    p.add_argument("--sampling-mode", choices=("degree", "uniform"))
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--polynomial", choices=("auto", "exact", "sampled"))
    p.add_argument("--factorization", choices=("randomized", "exact"))
    p.add_argument("--exact-threshold", type=int)
    p.add_argument("--output-prefix")
    p.add_argument("--report", dest="report_path")


def _build_config(args, require_k=True) -> PipelineConfig:
    values = _parse_config_file(args.config) if args.config else {}
    for key in _CONFIG_KEYS:
        flag_val = getattr(args, key, None)
        if flag_val is not None:
            values[key] = flag_val
    env_workers = os.environ.get("SUBEMBED_WORKERS")
    if env_workers:
        values["workers"] = int(env_workers)
    if require_k and "k" not in values:
        raise SystemExit("error: sample size k is required (--k or config file)")
    if "input" not in values:
        raise SystemExit("error: --input is required")
    try:
        return PipelineConfig(**values)
    except (TypeError, ValueError) as exc:
        raise SystemExit(f"error: {exc}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="subembed",
        description="Graph node embeddings from a representative subgraph",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="embed one graph end to end")
    p_run.add_argument("--k", type=int, help="representative sample size")
    _add_common(p_run)

    p_sweep = sub.add_parser("sweep", help="time the pipeline over a k grid")
    p_sweep.add_argument("--k-grid", required=True,
                         help="comma-separated sample sizes")
    p_sweep.add_argument("--table", required=True, help="output table path")
    _add_common(p_sweep)

    args = parser.parse_args(argv)

    try:
        if args.command == "run":
            report = run(_build_config(args))
            sys.stdout.write(report.pretty())
            if args.report_path:
                sys.stdout.write(f"report written to {args.report_path}\n")
        else:
            grid = [int(x) for x in args.k_grid.split(",") if x.strip()]
            if not grid:
                raise SystemExit("error: empty --k-grid")
            args.k = grid[0]
            rows = timing_sweep(_build_config(args), grid)
            write_sweep_table(rows, args.table)
            sys.stdout.write(f"{len(rows)} runs; table written to {args.table}\n")
    except PipelineError as exc:
        sys.stderr.write(f"error in {exc.stage} stage: {exc.cause}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
