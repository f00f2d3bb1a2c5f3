"""Command-line scoring: `embedeval score` and `embedeval compare`."""

from __future__ import annotations

import argparse
import sys

from .evaluate import (EvalConfig, compare_sampling, evaluate,
                       write_gain_table, write_score_table)
from .plots import plot_f1_vs_ratio


def _ratios(text):
    return [float(x) for x in text.split(",") if x.strip()]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="embedeval",
        description="Score embedding files on multi-label node classification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser("score", help="micro/macro F1 over a ratio sweep")
    p_score.add_argument("--embedding", required=True)
    p_score.add_argument("--labels", required=True)
    p_score.add_argument("--ratios", type=_ratios,
                         default=[i / 10 for i in range(1, 10)])
    p_score.add_argument("--reps", type=int, default=10)
    p_score.add_argument("--seed", type=int, default=0)
    p_score.add_argument("--out", required=True, help="TSV table path")
    p_score.add_argument("--plots", help="figure path prefix")

    p_cmp = sub.add_parser(
        "compare", help="relative gain of one embedding over another")
    p_cmp.add_argument("--embedding", required=True, help="first embedding")
    p_cmp.add_argument("--baseline", required=True, help="second embedding")
    p_cmp.add_argument("--labels", required=True)
    p_cmp.add_argument("--ratios", type=_ratios,
                       default=[i / 10 for i in range(1, 10)])
    p_cmp.add_argument("--reps", type=int, default=10)
    p_cmp.add_argument("--seed", type=int, default=0)
    p_cmp.add_argument("--out", required=True, help="TSV gain table path")

    args = parser.parse_args(argv)

    try:
        if args.command == "score":
            cfg = EvalConfig(embedding_path=args.embedding,
                             label_path=args.labels, ratios=args.ratios,
                             repetitions=args.reps, seed=args.seed)
            rows = evaluate(cfg)
            write_score_table(rows, args.out)
            if args.plots:
                for path in plot_f1_vs_ratio({"embedding": rows}, args.plots):
                    print(f"wrote {path}")
            print(f"wrote {args.out}")
        else:
            base = dict(label_path=args.labels, ratios=args.ratios,
                        repetitions=args.reps, seed=args.seed)
            gains = compare_sampling(
                EvalConfig(embedding_path=args.embedding, **base),
                EvalConfig(embedding_path=args.baseline, **base))
            write_gain_table(gains, args.out)
            mean_gain = sum(g.micro_gain for g in gains) / len(gains)
            print(f"wrote {args.out} (mean micro-F1 gain {mean_gain:+.2%})")
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
