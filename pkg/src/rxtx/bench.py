"""Runtime experiment: depth-1 recursive X X^t against a direct Gram
baseline from the same backend family.

Timings are reported, never asserted; the correctness deviation of every
rep is recorded alongside.  Inputs are standard-normal matrices drawn from
a seeded PRNG, so a fixed seed reproduces the exact inputs.
"""

from __future__ import annotations

import json
import math
import random
import statistics
import time
import warnings
from array import array
from dataclasses import dataclass, field

from . import matrix as mx
from .backends import ExternalBackend, NaiveBackend
from .executor import _RXTX, _RXTX_PLANS, _eval_nodes
from .matrix import DenseMatrix, Domain

# random.gauss is the polar (Box-Muller-type) method over Mersenne Twister
RNG_ALGORITHM = "mersenne-twister/gauss-polar"


@dataclass
class BenchConfig:
    n: int = 512
    reps: int = 5
    seed: int = 0
    backend: str = "naive"
    depth: int = 1
    threads: int = 1
    warmup: bool = True
    out: str = None

    def validate(self):
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if self.n < 4:
            raise ValueError("n must be >= 4")
        if self.depth < 1:
            raise ValueError("depth must be >= 1")


@dataclass
class RepResult:
    rxtx_seconds: float
    baseline_seconds: float
    max_abs_deviation: float
    rel_frobenius_deviation: float


@dataclass
class BenchReport:
    config: dict
    reps: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def to_json(self):
        return json.dumps(
            {"config": self.config,
             "reps": [vars(r) for r in self.reps],
             "summary": self.summary},
            indent=2, sort_keys=True) + "\n"


def sample_normal_matrix(n, rng):
    data = array("d", (rng.gauss(0.0, 1.0) for _ in range(n * n)))
    return DenseMatrix(n, n, Domain.FLOAT64, data)


def _gram_fns(backend_name):
    if backend_name == "external":
        ext = ExternalBackend()
        if not ext.available():
            raise RuntimeError("external backend unavailable")

        def gram(x):
            return ext.gemm(x, x.transpose())

        return ext, gram
    return NaiveBackend(), mx.naive_gram


def shallow_rxtx_gram(x, backend, gram_fn, depth=1):
    """Apply the 4x4 scheme ``depth`` times, then compute every remaining
    symmetric product with ``gram_fn`` and the 26 products per level with
    the backend's GEMM."""
    if depth == 0:
        return gram_fn(x)
    n = x.rows
    part = mx.partition(x, 4)
    plan = _RXTX_PLANS["optimized100"]
    env = {f"X{i}": part.block(i) for i in range(1, 17)}
    _eval_nodes(plan.stage1, env, None)
    for k in range(1, 27):
        env[f"m{k}"] = backend.gemm(env[f"L{k}"], env[f"R{k}"].transpose())
    for c, blk_idx in enumerate(_RXTX.calls, start=1):
        env[f"s{c}"] = shallow_rxtx_gram(part.block(blk_idx), backend,
                                         gram_fn, depth - 1)
    _eval_nodes(plan.stage2, env, None)
    upper = {(i, j): env[f"C{i}{j}"]
             for i in range(1, 5) for j in range(i, 5)}
    return mx.assemble_symmetric(upper, n, 4)


def _deviation(got, want):
    max_abs = 0.0
    num = 0.0
    den = 0.0
    dg, dw = got.data, want.data
    for i in range(len(dg)):
        d = dg[i] - dw[i]
        max_abs = max(max_abs, abs(d))
        num += d * d
        den += dw[i] * dw[i]
    rel = math.sqrt(num / den) if den > 0 else math.sqrt(num)
    return max_abs, rel


def run_bench(config):
    """Execute the benchmark and return a BenchReport."""
    config.validate()
    if config.n % 4 != 0:
        warnings.warn(f"n={config.n} not divisible by 4; zero-padding "
                      "applies at each level")
    backend, gram_fn = _gram_fns(config.backend)
    rng = random.Random(config.seed)
    report = BenchReport(config={
        "n": config.n, "reps": config.reps, "seed": config.seed,
        "backend": config.backend, "depth": config.depth,
        "threads": config.threads, "warmup": config.warmup,
        "rng": RNG_ALGORITHM,
    })

    mats = [sample_normal_matrix(config.n, rng) for _ in range(config.reps)]
    if config.warmup:
        w = sample_normal_matrix(min(config.n, 64), random.Random(0))
        shallow_rxtx_gram(w, backend, gram_fn, depth=1)
        gram_fn(w)

    for x in mats:
        t0 = time.perf_counter()
        got = shallow_rxtx_gram(x, backend, gram_fn, depth=config.depth)
        t1 = time.perf_counter()
        want = gram_fn(x)
        t2 = time.perf_counter()
        max_abs, rel = _deviation(got, want)
        report.reps.append(RepResult(t1 - t0, t2 - t1, max_abs, rel))

    rx = [r.rxtx_seconds for r in report.reps]
    base = [r.baseline_seconds for r in report.reps]
    report.summary = {
        "rxtx_mean_seconds": statistics.fmean(rx),
        "rxtx_median_seconds": statistics.median(rx),
        "baseline_mean_seconds": statistics.fmean(base),
        "baseline_median_seconds": statistics.median(base),
        "fraction_rxtx_faster": sum(a < b for a, b in zip(rx, base))
        / len(rx),
        "max_rel_frobenius_deviation": max(r.rel_frobenius_deviation
                                           for r in report.reps),
        "max_abs_deviation": max(r.max_abs_deviation for r in report.reps),
    }
    return report
