"""Micro-benchmark harness for the dense kernels.

Timings are measurements, never assertions: the harness reports elapsed
wall-clock per repetition plus MOPS (millions of semiring multiply-add
operations per second), counting 2*n^3 operations for an n x n product or
closure sweep and 2*n^2 for a matrix-vector product.
"""

from __future__ import annotations

import time
import zlib
from dataclasses import dataclass

import numpy as np

from . import dense
from .dense import DenseMatrix
from .semiring import SemiringId

BENCH_OPS = ("matmul", "matvec", "closure")

_ENTRY_LO = -1000
_ENTRY_HI = 1000


@dataclass
class BenchReport:
    op: str
    n: int
    semiring: SemiringId
    reps: int
    seed: int
    elapsed_us: list[float]
    mean_us: float
    mops: float
    checksum: int


def random_matrix(n: int, rng: np.random.Generator) -> DenseMatrix:
    """Dense n x n matrix with entries uniform in [-1000, 1000]."""
    arr = rng.integers(_ENTRY_LO, _ENTRY_HI + 1, size=(n, n), dtype=np.int32)
    return DenseMatrix._wrap(arr)


def random_vector(n: int, rng: np.random.Generator) -> list[int]:
    return rng.integers(_ENTRY_LO, _ENTRY_HI + 1, size=n, dtype=np.int32).tolist()


def run_bench(op: str, n: int, s: SemiringId, reps: int, seed: int = 0) -> BenchReport:
    if op not in BENCH_OPS:
        raise ValueError(f"unknown benchmark operation {op!r}")
    if n < 1:
        raise ValueError("size must be >= 1")
    if reps < 1:
        raise ValueError("reps must be >= 1")
    rng = np.random.default_rng(seed)
    a = random_matrix(n, rng)
    checksum = zlib.crc32(a._arr.tobytes())
    if op == "matmul":
        b = random_matrix(n, rng)
        checksum = zlib.crc32(b._arr.tobytes(), checksum)
        work = lambda: dense.matmul(a, b, s)
        ops = 2 * n**3
    elif op == "matvec":
        x = random_vector(n, rng)
        checksum = zlib.crc32(np.array(x, dtype=np.int32).tobytes(), checksum)
        work = lambda: dense.matvec(a, x, s)
        ops = 2 * n**2
    else:
        # raw sweep: the kernel is timed without the negative-cycle diagnosis
        work = lambda: dense._closure_kernel(a, s)
        ops = 2 * n**3
    elapsed = []
    for _ in range(reps):
        t0 = time.perf_counter()
        work()
        t1 = time.perf_counter()
        elapsed.append((t1 - t0) * 1e6)
    mean_us = sum(elapsed) / len(elapsed)
    mops = ops / mean_us if mean_us > 0 else float("inf")
    return BenchReport(
        op=op,
        n=n,
        semiring=s,
        reps=reps,
        seed=seed,
        elapsed_us=elapsed,
        mean_us=mean_us,
        mops=mops,
        checksum=checksum,
    )
