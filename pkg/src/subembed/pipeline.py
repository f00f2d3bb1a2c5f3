"""End-to-end driver: load, sample, sparsify, factorize, project, write.

Every stage is wall-clock timed; the report keeps the per-stage breakdown
plus the two-way split between node sampling and everything after it.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field, replace

from . import embed, factor, sampling, walkpoly
from .graph import Graph, load_edge_list

DEFAULT_SEED = 97

STAGES = ("sampling", "sparsify", "subgraph_matrix", "factorize",
          "cross_matrix", "embed", "io")


class PipelineError(RuntimeError):
    """Stage failure; carries the stage name for CLI reporting."""

    def __init__(self, stage: str, cause: BaseException):
        super().__init__(f"stage '{stage}': {cause}")
        self.stage = stage
        self.cause = cause


@dataclass
class PipelineConfig:
    k: int
    input: str | None = None
    dim: int = 128
    window: int = 10
    negatives: int = 1
    samples: int | None = None
    sampling_mode: str = "degree"
    seed: int = DEFAULT_SEED
    workers: int = 1
    polynomial: str = "auto"          # auto | exact | sampled
    factorization: str = "randomized"  # randomized | exact
    exact_threshold: int = walkpoly.DEFAULT_EXACT_THRESHOLD
    oversample: int = 10
    power_iters: int = 2
    sigma_tol: float = embed.SIGMA_TOL
    output_prefix: str | None = None
    label_path: str | None = None
    report_path: str | None = None

    def validate(self) -> None:
        if self.k <= 0:
            raise ValueError("k must be positive")
        for name in ("dim", "window", "negatives", "workers"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.sampling_mode not in ("degree", "uniform"):
            raise ValueError(f"unknown sampling mode {self.sampling_mode!r}")
        if self.polynomial not in ("auto", "exact", "sampled"):
            raise ValueError(f"unknown polynomial mode {self.polynomial!r}")
        if self.factorization not in ("randomized", "exact"):
            raise ValueError(f"unknown factorization {self.factorization!r}")


@dataclass
class RunReport:
    timings_ms: dict[str, float]
    config: dict
    n: int
    m: int
    k: int
    effective_dim: int
    polynomial_mode: str
    path_samples: int
    kernel_backend: str
    outputs: dict[str, str] = field(default_factory=dict)

    @property
    def total_ms(self) -> float:
        return sum(self.timings_ms.values())

    @property
    def sample_fraction(self) -> float:
        return self.k / self.n if self.n else 0.0

    @property
    def sampling_share(self) -> float:
        """Fraction of total time spent selecting and extracting the
        subgraph, versus everything downstream."""
        total = self.total_ms
        return self.timings_ms["sampling"] / total if total > 0 else 0.0

    def lines(self) -> list[str]:
        out = [f"nodes\t{self.n}", f"edges\t{self.m}",
               f"adjacency_entries\t{2 * self.m}", f"k\t{self.k}",
               f"sample_fraction\t{self.sample_fraction:.6f}",
               f"effective_dim\t{self.effective_dim}",
               f"polynomial_mode\t{self.polynomial_mode}",
               f"path_samples\t{self.path_samples}",
               f"kernel_backend\t{self.kernel_backend}"]
        for stage in STAGES:
            out.append(f"time_ms.{stage}\t{self.timings_ms[stage]:.3f}")
        out.append(f"time_ms.total\t{self.total_ms:.3f}")
        out.append(f"sampling_share\t{self.sampling_share:.6f}")
        for key, path in self.outputs.items():
            out.append(f"output.{key}\t{path}")
        for key, val in sorted(self.config.items()):
            out.append(f"config.{key}\t{val}")
        return out

    def write(self, path) -> None:
        with open(path, "w") as fh:
            fh.write("\n".join(self.lines()) + "\n")

    def pretty(self) -> str:
        head = (f"graph: n={self.n} m={self.m}  sample k={self.k} "
                f"({100 * self.sample_fraction:.1f}% of nodes)\n"
                f"embedding dim: {self.effective_dim}  "
                f"polynomial: {self.polynomial_mode} "
                f"({self.path_samples} path samples, "
                f"{self.kernel_backend} kernel)\n")
        rows = "".join(
            f"  {stage:<16}{self.timings_ms[stage]:>10.1f} ms\n"
            for stage in STAGES
        )
        split = (f"  {'total':<16}{self.total_ms:>10.1f} ms  "
                 f"(sampling {100 * self.sampling_share:.2f}%, "
                 f"rest {100 * (1 - self.sampling_share):.2f}%)\n")
        return head + rows + split


class _Timer:
    def __init__(self):
        self.timings = {stage: 0.0 for stage in STAGES}
        self.stage = None

    def run(self, stage, fn, *args, **kwargs):
        self.stage = stage
        start = time.perf_counter()
        try:
            result = fn(*args, **kwargs)
        except Exception as exc:
            raise PipelineError(stage, exc) from exc
        self.timings[stage] += (time.perf_counter() - start) * 1000.0
        return result


def run(cfg: PipelineConfig, graph: Graph | None = None) -> RunReport:
    """Execute the full pipeline; returns the timing/config report.

    ``graph`` may be passed directly to skip file loading (library use);
    otherwise ``cfg.input`` is read as an edge list.
    """
    cfg.validate()
    timer = _Timer()

    if graph is None:
        if cfg.input is None:
            raise PipelineError("io", ValueError("no input path or graph given"))
        graph = timer.run("io", load_edge_list, cfg.input)
    if cfg.k > graph.n:
        raise PipelineError("sampling",
                            ValueError(f"k={cfg.k} exceeds n={graph.n}"))

    def select_and_extract():
        if cfg.sampling_mode == "degree":
            nodes = sampling.top_degree_nodes(graph, cfg.k)
        else:
            nodes = sampling.uniform_nodes(graph, cfg.k, cfg.seed)
        return sampling.build_sample(graph, nodes)

    sample = timer.run("sampling", select_and_extract)

    sub_nnz = int(sample.adj.nnz)
    edgeless = sub_nnz == 0
    mode = cfg.polynomial
    if mode == "auto":
        mode = "exact" if sample.k <= cfg.exact_threshold else "sampled"
    if edgeless:
        mode = "exact"  # zero polynomial; nothing to walk on
    path_samples = 0

    def sparsify():
        nonlocal path_samples
        if mode == "exact":
            return walkpoly.exact_walk_polynomials(
                sample.adj, sample.sub_degrees, cfg.window,
                exact_threshold=cfg.exact_threshold, force=True)
        path_samples = cfg.samples or walkpoly.default_sample_count(
            cfg.window, sub_nnz)
        wcfg = walkpoly.WalkConfig(window=cfg.window, samples=path_samples,
                                   seed=cfg.seed, workers=cfg.workers,
                                   exact_threshold=cfg.exact_threshold)
        return walkpoly.sampled_walk_polynomials(
            sample.adj, sample.sub_degrees, wcfg)

    poly, hop = timer.run("sparsify", sparsify)

    info = timer.run("subgraph_matrix", embed.subgraph_info_matrix,
                     poly, graph.volume, cfg.window, cfg.negatives)

    dim = min(cfg.dim, sample.k)

    def factorize():
        if cfg.factorization == "exact":
            return factor.exact_tsvd(info, dim)
        return factor.randomized_tsvd(info, dim, oversample=cfg.oversample,
                                      power_iters=cfg.power_iters,
                                      seed=cfg.seed)

    factors = timer.run("factorize", factorize)

    cross = timer.run("cross_matrix", embed.cross_info_matrix,
                      sample.related, hop, graph.volume,
                      cfg.window, cfg.negatives)

    emb = timer.run("embed", embed.project_embedding, cross, factors,
                    cfg.sigma_tol)

    outputs = {}

    def write_outputs():
        if cfg.output_prefix:
            prefix = str(cfg.output_prefix)
            outputs["text"] = prefix + ".emb.txt"
            embed.write_embedding_text(outputs["text"], emb, graph.node_ids)
            outputs["binary"] = prefix + ".emb.bin"
            embed.write_embedding_binary(outputs["binary"], emb)
            outputs["ids"] = prefix + ".ids.txt"
            with open(outputs["ids"], "w") as fh:
                fh.writelines(f"{nid}\n" for nid in graph.node_ids)

    timer.run("io", write_outputs)

    report = RunReport(
        timings_ms=timer.timings,
        config={k: v for k, v in asdict(cfg).items() if v is not None},
        n=graph.n, m=graph.m, k=sample.k,
        effective_dim=emb.dim,
        polynomial_mode=mode,
        path_samples=path_samples,
        kernel_backend=walkpoly.KERNEL_BACKEND,
        outputs=outputs,
    )
    if cfg.report_path:
        report.write(cfg.report_path)
        report.outputs["report"] = str(cfg.report_path)
    return report


def timing_sweep(cfg: PipelineConfig, k_grid, graph: Graph | None = None):
    """Run the pipeline over a grid of sample sizes.

    Returns rows of (k, embedding text path or empty, wall ms); the table
    leaves score columns to the evaluation harness.
    """
    k_values = list(k_grid)
    if not k_values:
        raise ValueError("empty sample-size grid")
    if graph is None:
        if cfg.input is None:
            raise PipelineError("io", ValueError("no input path or graph given"))
        graph = load_edge_list(cfg.input)

    rows = []
    for k in k_values:
        sub = replace(cfg, k=int(k))
        if cfg.output_prefix:
            sub.output_prefix = f"{cfg.output_prefix}.k{int(k)}"
        report = run(sub, graph=graph)
        rows.append((int(k), report.outputs.get("text", ""), report.total_ms))
    return rows


def write_sweep_table(rows, path) -> None:
    with open(path, "w") as fh:
        fh.write("k\tembedding_path\twall_ms\n")
        for k, emb_path, ms in rows:
            fh.write(f"{k}\t{emb_path}\t{ms:.3f}\n")
