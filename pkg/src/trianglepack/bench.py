"""Runtime scaling measurements against the analytic work term."""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass

from .graph_core import sweep_maximal_cliques
from .instance_gen import GenSpec, generate
from .packing_dp import solve

COLUMNS = ("model", "n", "rep", "seed", "t", "max_clique", "work", "count", "elapsed_ms")


@dataclass
class BenchRow:
    model: str
    n: int
    rep: int
    seed: int
    t: int
    max_clique: int
    work: int
    count: int
    elapsed_ms: float

    def as_tuple(self):
        return tuple(getattr(self, c) for c in COLUMNS)


def run_bench(sizes, model="nested-cliques", seed=0, reps=1, params=None):
    """Yield one row per (size, repetition); repetitions re-solve the same instance."""
    if reps < 1:
        raise ValueError(f"reps must be at least 1, got {reps}")
    if not sizes:
        raise ValueError("no sizes given")
    for n in sizes:
        inst = generate(GenSpec(model, n, seed, dict(params or {})))
        arr = sweep_maximal_cliques(inst)
        work = arr.work_term()
        for rep in range(reps):
            start = time.perf_counter()
            res = solve(arr, check=False)
            elapsed = time.perf_counter() - start
            yield BenchRow(model, n, rep, seed, arr.t, max(arr.sizes()), work, res.count, elapsed * 1e3)


def loglog_slope(xs, ys) -> float:
    fit = statistics.linear_regression([math.log(x) for x in xs], [math.log(y) for y in ys])
    return fit.slope


def summarize(rows):
    """Per-size minimum time, time/work ratios and the log-log slope of time vs n."""
    by_n: dict[int, list[BenchRow]] = {}
    for r in rows:
        by_n.setdefault(r.n, []).append(r)
    ns = sorted(by_n)
    times = [min(r.elapsed_ms for r in by_n[n]) for n in ns]
    ratios = [t / by_n[n][0].work for n, t in zip(ns, times)]
    return {
        "n": ns,
        "elapsed_ms": times,
        "work": [by_n[n][0].work for n in ns],
        "ratio": ratios,
        "ratio_spread": max(ratios) / min(ratios),
        "slope": loglog_slope(ns, times) if len(ns) > 1 else float("nan"),
    }
