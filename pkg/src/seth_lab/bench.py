"""Engine scaling measurements and the log-log exponent fit."""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence

import numpy as np

from . import editdist

ENGINES: Dict[str, Callable[[str, str], int]] = {
    "dp": editdist.edit_distance_dp,
    "bitparallel": editdist.edit_distance_bitparallel,
}


@dataclass(frozen=True)
class BenchRecord:
    engine: str
    n: int
    trial: int
    wall_time: float
    checksum: int


@dataclass(frozen=True)
class ScalingFit:
    engine: str
    exponent: float
    r_squared: float


def _random_pair(n: int, seed: int):
    rng = random.Random(seed)
    x = "".join(rng.choice("0123") for _ in range(n))
    y = "".join(rng.choice("0123") for _ in range(n))
    return x, y


def run_scaling_bench(
    engine: str, sizes: Sequence[int], trials: int, seed: int
) -> List[BenchRecord]:
    """Times one engine on a fixed random pair per size.

    One untimed warm-up call per size absorbs JIT compilation and cache
    effects. Records are raw; fitting happens downstream on medians.
    """
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    if trials < 3:
        raise ValueError("need at least 3 trials per size")
    try:
        fn = ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}") from None
    records: List[BenchRecord] = []
    for n in sizes:
        x, y = _random_pair(n, seed ^ n)
        expected = fn(x, y)  # warm-up
        for trial in range(trials):
            t0 = time.perf_counter()
            checksum = fn(x, y)
            elapsed = time.perf_counter() - t0
            assert checksum == expected
            records.append(
                BenchRecord(
                    engine=engine,
                    n=n,
                    trial=trial,
                    wall_time=elapsed,
                    checksum=checksum,
                )
            )
    return records


def fit_scaling(records: Sequence[BenchRecord]) -> ScalingFit:
    """Least-squares slope of log(median wall time) against log(n)."""
    engines = {r.engine for r in records}
    if len(engines) != 1:
        raise ValueError("fit one engine at a time")
    by_n: Dict[int, List[float]] = {}
    for r in records:
        by_n.setdefault(r.n, []).append(r.wall_time)
    if len(by_n) < 4:
        raise ValueError("need at least 4 distinct sizes for a fit")
    ns = sorted(by_n)
    log_n = np.log([float(n) for n in ns])
    log_t = np.log([float(np.median(by_n[n])) for n in ns])
    slope, intercept = np.polyfit(log_n, log_t, 1)
    fitted = slope * log_n + intercept
    ss_res = float(np.sum((log_t - fitted) ** 2))
    ss_tot = float(np.sum((log_t - np.mean(log_t)) ** 2))
    r2 = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    return ScalingFit(engine=engines.pop(), exponent=float(slope), r_squared=r2)


def synthetic_records(
    engine: str, sizes: Sequence[int], exponent: float, scale: float = 1e-9
) -> List[BenchRecord]:
    """Exact power-law records, for fit self-tests."""
    return [
        BenchRecord(
            engine=engine, n=n, trial=t, wall_time=scale * n**exponent, checksum=0
        )
        for n in sizes
        for t in range(3)
    ]


CSV_HEADER = ["engine", "n", "trial", "wall_time_s", "checksum"]


def write_csv(records: Sequence[BenchRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow([r.engine, r.n, r.trial, f"{r.wall_time:.9f}", r.checksum])
