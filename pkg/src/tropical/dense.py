"""Dense row-major matrices over a tropical semiring.

Every operation takes the semiring explicitly; matrices carry no semiring of
their own. Two implementations exist for the heavy kernels:

* the default vectorized kernels (numpy, int64 intermediates), and
* ``*_reference`` scalar kernels (plain Python triple loops over the scalar
  semiring operations).

The vectorized kernels are required to be bit-identical to the references on
every input, including sentinel-laden and divergent (positive/negative cycle)
matrices; the test suite enforces this.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import semiring as sr
from .errors import NegativeCycleError
from .semiring import SemiringId

_I32 = np.int32
_I64 = np.int64
_NEG = _I64(sr.NEG_INF)
_POS = _I64(sr.POS_INF)
_LO = _I64(sr.FINITE_MIN)
_HI = _I64(sr.FINITE_MAX)

# Cap on elements of the int64 temporary used by blocked matmul (~32 MB).
_BLOCK_ELEMS = 4_000_000


class DenseMatrix:
    """Rectangular row-major matrix of 32-bit tropical values."""

    __slots__ = ("_arr",)

    def __init__(self, rows: Iterable[Sequence[int]]):
        data = [list(r) for r in rows]
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise ValueError("rows have inconsistent lengths")
        for r in data:
            for v in r:
                _check_value(v)
        self._arr = np.array(data, dtype=_I32)

    @classmethod
    def filled(cls, rows: int, cols: int, value: int) -> "DenseMatrix":
        if rows < 1 or cols < 1:
            raise ValueError("matrix must have at least one row and one column")
        _check_value(value)
        return cls._wrap(np.full((rows, cols), value, dtype=_I32))

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "DenseMatrix":
        m = object.__new__(cls)
        m._arr = arr
        return m

    @property
    def rows(self) -> int:
        return self._arr.shape[0]

    @property
    def cols(self) -> int:
        return self._arr.shape[1]

    def get(self, i: int, j: int) -> int:
        return int(self._arr[i, j])

    def row(self, i: int) -> list[int]:
        return self._arr[i].tolist()

    def to_rows(self) -> list[list[int]]:
        return self._arr.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self._arr.shape == other._arr.shape and bool(
            np.array_equal(self._arr, other._arr)
        )

    def __hash__(self):
        return hash((self._arr.shape, self._arr.tobytes()))

    def __repr__(self) -> str:
        return f"DenseMatrix({self.rows}x{self.cols})"


def _check_value(v) -> None:
    if not isinstance(v, (int, np.integer)):
        raise TypeError(f"tropical values must be integers, got {type(v).__name__}")
    if not sr.NEG_INF <= v <= sr.POS_INF:
        raise ValueError(f"value {v} outside the 32-bit tropical range")


def _check_vector(x: Sequence[int]) -> np.ndarray:
    if len(x) < 1:
        raise ValueError("vector must have at least one element")
    for v in x:
        _check_value(v)
    return np.array(x, dtype=_I32)


def identity(n: int, s: SemiringId) -> DenseMatrix:
    """n x n matrix with one(s) on the diagonal and zero(s) elsewhere."""
    if n < 1:
        raise ValueError("identity size must be >= 1")
    arr = np.full((n, n), sr.zero(s), dtype=_I32)
    np.fill_diagonal(arr, sr.one(s))
    return DenseMatrix._wrap(arr)


def transpose(a: DenseMatrix) -> DenseMatrix:
    return DenseMatrix._wrap(np.ascontiguousarray(a._arr.T))


def elementwise_add(a: DenseMatrix, b: DenseMatrix, s: SemiringId) -> DenseMatrix:
    """Entry-wise (+) of two equal-shape matrices."""
    if a._arr.shape != b._arr.shape:
        raise ValueError(
            f"shape mismatch for elementwise add: {a._arr.shape} vs {b._arr.shape}"
        )
    out = _ew_add(a._arr.astype(_I64), b._arr.astype(_I64), s)
    return DenseMatrix._wrap(out.astype(_I32))


# -- elementwise kernels on int64 arrays ------------------------------------

def _ew_add(u: np.ndarray, v: np.ndarray, s: SemiringId) -> np.ndarray:
    if s is SemiringId.MAXPLUS or s is SemiringId.MAXMIN:
        return np.maximum(u, v)
    if s is SemiringId.MINPLUS or s is SemiringId.MINMAX:
        return np.minimum(u, v)
    return u | v


def _ew_mul(u: np.ndarray, v: np.ndarray, s: SemiringId) -> np.ndarray:
    if s is SemiringId.MAXPLUS:
        out = np.clip(u + v, _LO, _HI)
        out = np.where((u == _NEG) | (v == _NEG), _NEG, out)
        return out
    if s is SemiringId.MINPLUS:
        out = np.clip(u + v, _LO, _HI)
        out = np.where((u == _POS) | (v == _POS), _POS, out)
        return out
    if s is SemiringId.MAXMIN:
        return np.minimum(u, v)
    if s is SemiringId.MINMAX:
        return np.maximum(u, v)
    return u & v


def _fold_add(prod: np.ndarray, axis: int, s: SemiringId) -> np.ndarray:
    if s is SemiringId.MAXPLUS or s is SemiringId.MAXMIN:
        return prod.max(axis=axis)
    if s is SemiringId.MINPLUS or s is SemiringId.MINMAX:
        return prod.min(axis=axis)
    return np.bitwise_or.reduce(prod, axis=axis)


# -- products ----------------------------------------------------------------

def matmul(a: DenseMatrix, b: DenseMatrix, s: SemiringId) -> DenseMatrix:
    """Tropical matrix product C_ij = (+)_k A_ik (x) B_kj (vectorized)."""
    if a.cols != b.rows:
        raise ValueError(f"inner dimensions differ: {a.cols} vs {b.rows}")
    a64 = a._arr.astype(_I64)
    b64 = b._arr.astype(_I64)
    m, k = a64.shape
    n = b64.shape[1]
    out = np.empty((m, n), dtype=_I64)
    step = max(1, _BLOCK_ELEMS // max(1, k * n))
    for i0 in range(0, m, step):
        i1 = min(m, i0 + step)
        prod = _ew_mul(a64[i0:i1, :, None], b64[None, :, :], s)
        out[i0:i1] = _fold_add(prod, 1, s)
    return DenseMatrix._wrap(out.astype(_I32))


def matvec(a: DenseMatrix, x: Sequence[int], s: SemiringId) -> list[int]:
    """y_i = (+)_j A_ij (x) x_j."""
    xv = _check_vector(x)
    if a.cols != xv.shape[0]:
        raise ValueError(f"matrix has {a.cols} columns but vector has {xv.shape[0]}")
    prod = _ew_mul(a._arr.astype(_I64), xv.astype(_I64)[None, :], s)
    return _fold_add(prod, 1, s).astype(_I32).tolist()


def vecmat(x: Sequence[int], a: DenseMatrix, s: SemiringId) -> list[int]:
    """y_j = (+)_i x_i (x) A_ij (the transpose-orientation product)."""
    xv = _check_vector(x)
    if a.rows != xv.shape[0]:
        raise ValueError(f"matrix has {a.rows} rows but vector has {xv.shape[0]}")
    prod = _ew_mul(xv.astype(_I64)[:, None], a._arr.astype(_I64), s)
    return _fold_add(prod, 0, s).astype(_I32).tolist()


def matpow(a: DenseMatrix, k: int, s: SemiringId) -> DenseMatrix:
    """A^k by repeated squaring; A^0 is the identity."""
    if a.rows != a.cols:
        raise ValueError("matrix power requires a square matrix")
    if k < 0:
        raise ValueError("power must be >= 0")
    result = identity(a.rows, s)
    base = a
    while k:
        if k & 1:
            result = matmul(result, base, s)
        k >>= 1
        if k:
            base = matmul(base, base, s)
    return result


# -- closure ------------------------------------------------------------------

def closure(a: DenseMatrix, s: SemiringId) -> DenseMatrix:
    """Kleene star A* = (+)_{k>=0} A^k via the in-place triple loop.

    Under min-plus, a diagonal entry strictly below the multiplicative
    identity after the sweep means a negative cycle: Kleene convergence does
    not hold, and a NegativeCycleError carrying the computed matrix and the
    offending vertices is raised.
    """
    d = _closure_kernel(a, s)
    out = DenseMatrix._wrap(d)
    if s is SemiringId.MINPLUS:
        diag = np.diagonal(d)
        bad = np.nonzero(diag < 0)[0]
        if bad.size:
            raise NegativeCycleError(
                f"negative cycle through vertices {bad.tolist()}",
                vertices=tuple(int(i) for i in bad),
                matrix=out,
            )
    return out


def _closure_kernel(a: DenseMatrix, s: SemiringId) -> np.ndarray:
    """Vectorized sweep, staged to replay the scalar i-then-j loop exactly.

    Within pass k the scalar loop mutates column k (at j == k) and row k (at
    i == k) while still reading them, so the update is split into rows above
    k, row k itself (with D_kk refreshed mid-row), and rows below k.
    """
    if a.rows != a.cols:
        raise ValueError("closure requires a square matrix")
    n = a.rows
    d = a._arr.astype(_I64)
    one64 = _I64(sr.one(s))
    d[np.diag_indices(n)] = _ew_add(np.diagonal(d).copy(), one64, s)
    for k in range(n):
        rowk = d[k]
        # rows i < k: row k is still pre-update here
        if k > 0:
            top = d[:k]
            colk = top[:, k].copy()
            top[:, :k] = _ew_add(top[:, :k], _ew_mul(colk[:, None], rowk[None, :k], s), s)
            colk_new = _ew_add(colk, _ew_mul(colk, rowk[k], s), s)
            top[:, k] = colk_new
            top[:, k + 1 :] = _ew_add(
                top[:, k + 1 :], _ew_mul(colk_new[:, None], rowk[None, k + 1 :], s), s
            )
        # row i == k: D_kk is read by every j and rewritten at j == k
        dkk = rowk[k].copy()
        rowk[:k] = _ew_add(rowk[:k], _ew_mul(dkk, rowk[:k], s), s)
        dkk_new = _ew_add(dkk, _ew_mul(dkk, dkk, s), s)
        rowk[k] = dkk_new
        rowk[k + 1 :] = _ew_add(rowk[k + 1 :], _ew_mul(dkk_new, rowk[k + 1 :], s), s)
        # rows i > k: row k has been fully updated
        if k + 1 < n:
            bot = d[k + 1 :]
            colk = bot[:, k].copy()
            bot[:, :k] = _ew_add(bot[:, :k], _ew_mul(colk[:, None], rowk[None, :k], s), s)
            colk_new = _ew_add(colk, _ew_mul(colk, rowk[k], s), s)
            bot[:, k] = colk_new
            bot[:, k + 1 :] = _ew_add(
                bot[:, k + 1 :], _ew_mul(colk_new[:, None], rowk[None, k + 1 :], s), s
            )
    return d.astype(_I32)


# -- scalar reference kernels --------------------------------------------------

def matmul_reference(a: DenseMatrix, b: DenseMatrix, s: SemiringId) -> DenseMatrix:
    """Three-loop scalar product in i-k-j order; the correctness reference."""
    if a.cols != b.rows:
        raise ValueError(f"inner dimensions differ: {a.cols} vs {b.rows}")
    arows = a.to_rows()
    brows = b.to_rows()
    m, kk, n = a.rows, a.cols, b.cols
    add_ = sr.add_fn(s)
    mul_ = sr.mul_fn(s)
    z = sr.zero(s)
    out = [[z] * n for _ in range(m)]
    for i in range(m):
        arow = arows[i]
        crow = out[i]
        for k in range(kk):
            aik = arow[k]
            brow = brows[k]
            for j in range(n):
                crow[j] = add_(crow[j], mul_(aik, brow[j]))
    return DenseMatrix(out)


def matvec_reference(a: DenseMatrix, x: Sequence[int], s: SemiringId) -> list[int]:
    xs = list(x)
    if a.cols != len(xs):
        raise ValueError(f"matrix has {a.cols} columns but vector has {len(xs)}")
    add_ = sr.add_fn(s)
    mul_ = sr.mul_fn(s)
    z = sr.zero(s)
    out = []
    for row in a.to_rows():
        acc = z
        for aj, xj in zip(row, xs):
            acc = add_(acc, mul_(aj, xj))
        out.append(acc)
    return out


def vecmat_reference(x: Sequence[int], a: DenseMatrix, s: SemiringId) -> list[int]:
    xs = list(x)
    if a.rows != len(xs):
        raise ValueError(f"matrix has {a.rows} rows but vector has {len(xs)}")
    add_ = sr.add_fn(s)
    mul_ = sr.mul_fn(s)
    out = [sr.zero(s)] * a.cols
    for xi, row in zip(xs, a.to_rows()):
        for j, aij in enumerate(row):
            out[j] = add_(out[j], mul_(xi, aij))
    return out


def closure_reference(a: DenseMatrix, s: SemiringId) -> DenseMatrix:
    """Literal in-place scalar sweep (diagonal (+) one, then the k-i-j loop).

    No negative-cycle check; this is the raw kernel the vectorized closure
    must reproduce bit-for-bit.
    """
    if a.rows != a.cols:
        raise ValueError("closure requires a square matrix")
    n = a.rows
    add_ = sr.add_fn(s)
    mul_ = sr.mul_fn(s)
    d = a.to_rows()
    e = sr.one(s)
    for i in range(n):
        d[i][i] = add_(d[i][i], e)
    for k in range(n):
        dk = d[k]
        for i in range(n):
            di = d[i]
            for j in range(n):
                di[j] = add_(di[j], mul_(di[k], dk[j]))
    return DenseMatrix(d)
