import numpy as np
import pytest

import tropical as tr
from tropical import SemiringId
from tropical.bench import random_matrix, run_bench


def test_report_fields_and_ops_formula():
    r = run_bench("matmul", 16, SemiringId.MAXPLUS, reps=3)
    assert r.reps == 3 and len(r.elapsed_us) == 3
    assert r.mean_us == pytest.approx(sum(r.elapsed_us) / 3)
    # 2n^3 semiring multiply-adds per product
    assert r.mops == pytest.approx(2 * 16**3 / r.mean_us)
    rv = run_bench("matvec", 16, SemiringId.MINPLUS, reps=2)
    assert rv.mops == pytest.approx(2 * 16**2 / rv.mean_us)


def test_same_seed_same_matrices():
    a = random_matrix(12, np.random.default_rng(0))
    b = random_matrix(12, np.random.default_rng(0))
    assert a == b
    c = random_matrix(12, np.random.default_rng(1))
    assert a != c
    r1 = run_bench("matmul", 12, SemiringId.MAXPLUS, reps=1, seed=5)
    r2 = run_bench("matmul", 12, SemiringId.MAXPLUS, reps=1, seed=5)
    assert r1.checksum == r2.checksum


def test_entry_range():
    a = random_matrix(20, np.random.default_rng(3))
    vals = [v for row in a.to_rows() for v in row]
    assert min(vals) >= -1000 and max(vals) <= 1000


def test_bad_args():
    with pytest.raises(ValueError):
        run_bench("sort", 8, SemiringId.MAXPLUS, reps=1)
    with pytest.raises(ValueError):
        run_bench("matmul", 0, SemiringId.MAXPLUS, reps=1)
    with pytest.raises(ValueError):
        run_bench("matmul", 8, SemiringId.MAXPLUS, reps=0)
