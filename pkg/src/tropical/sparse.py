"""CSR sparse matrices bound to a semiring.

Structural invariants, maintained by every constructor and by spmm:
row_ptr non-decreasing with row_ptr[0] == 0 and row_ptr[rows] == nnz; column
indices strictly increasing within each row; no stored value ever equals the
semiring zero (the sparsity pattern is exactly the support).
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import semiring as sr
from .dense import DenseMatrix
from .semiring import SemiringId

_I32 = np.int32
_U32 = np.uint32


class CsrMatrix:
    """Compressed-sparse-row matrix; immutable after construction."""

    __slots__ = ("rows", "cols", "values", "col_idx", "row_ptr", "semiring")

    def __init__(self, rows, cols, values, col_idx, row_ptr, semiring: SemiringId):
        self.rows = int(rows)
        self.cols = int(cols)
        self.values = np.asarray(values, dtype=_I32)
        self.col_idx = np.asarray(col_idx, dtype=_U32)
        self.row_ptr = np.asarray(row_ptr, dtype=_U32)
        self.semiring = semiring
        self._validate()

    def _validate(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix must have at least one row and one column")
        nnz = len(self.values)
        if len(self.col_idx) != nnz:
            raise ValueError("values and col_idx lengths differ")
        if len(self.row_ptr) != self.rows + 1:
            raise ValueError("row_ptr must have rows+1 entries")
        if self.row_ptr[0] != 0 or self.row_ptr[-1] != nnz:
            raise ValueError("row_ptr must start at 0 and end at nnz")
        ptr = self.row_ptr.astype(np.int64)
        if np.any(np.diff(ptr) < 0):
            raise ValueError("row_ptr must be non-decreasing")
        z = sr.zero(self.semiring)
        for i in range(self.rows):
            lo, hi = int(ptr[i]), int(ptr[i + 1])
            cols = self.col_idx[lo:hi].astype(np.int64)
            if cols.size and (cols[-1] >= self.cols or np.any(np.diff(cols) <= 0)):
                raise ValueError(f"row {i}: column indices not strictly increasing in range")
        if nnz and np.any(self.values == z):
            raise ValueError("stored values must not equal the semiring zero")
        if self.semiring is SemiringId.BOOLEAN and nnz and np.any(self.values != 1):
            raise ValueError("boolean matrices may only store the value 1")

    @property
    def nnz(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CsrMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.semiring is other.semiring
            and np.array_equal(self.values, other.values)
            and np.array_equal(self.col_idx, other.col_idx)
            and np.array_equal(self.row_ptr, other.row_ptr)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.semiring, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"CsrMatrix({self.rows}x{self.cols}, nnz={self.nnz}, {self.semiring.name.lower()})"


def from_triplets(
    rows: int,
    cols: int,
    entries: Iterable[tuple[int, int, int]],
    s: SemiringId,
) -> CsrMatrix:
    """Build a CSR matrix from (i, j, value) triplets.

    Duplicate coordinates are combined with the semiring addition; entries
    whose (combined) value equals the semiring zero are dropped. Boolean
    inputs are normalized to {0, 1} here, at the construction boundary.
    """
    z = sr.zero(s)
    acc: dict[tuple[int, int], int] = {}
    for i, j, v in entries:
        if not (0 <= i < rows and 0 <= j < cols):
            raise ValueError(f"entry index ({i}, {j}) out of range for {rows}x{cols}")
        if s is SemiringId.BOOLEAN:
            v = 1 if v != 0 else 0
        key = (i, j)
        if key in acc:
            acc[key] = sr.add(acc[key], v, s)
        else:
            acc[key] = v
    values, col_idx, row_ptr = [], [], [0]
    items = sorted((k, v) for k, v in acc.items() if v != z)
    pos = 0
    for r in range(rows):
        while pos < len(items) and items[pos][0][0] == r:
            (_, j), v = items[pos]
            values.append(v)
            col_idx.append(j)
            pos += 1
        row_ptr.append(len(values))
    return CsrMatrix(rows, cols, values, col_idx, row_ptr, s)


def from_dense(a: DenseMatrix, s: SemiringId) -> CsrMatrix:
    """CSR holding exactly the entries of a that differ from zero(s)."""
    z = sr.zero(s)
    entries = []
    for i, row in enumerate(a.to_rows()):
        for j, v in enumerate(row):
            if v != z:
                entries.append((i, j, v))
    return from_triplets(a.rows, a.cols, entries, s)


def to_dense(a: CsrMatrix) -> DenseMatrix:
    """Dense matrix with absent entries set to zero(a.semiring)."""
    z = sr.zero(a.semiring)
    out = np.full((a.rows, a.cols), z, dtype=_I32)
    ptr = a.row_ptr
    for i in range(a.rows):
        lo, hi = int(ptr[i]), int(ptr[i + 1])
        out[i, a.col_idx[lo:hi].astype(np.int64)] = a.values[lo:hi]
    return DenseMatrix._wrap(out)


def spmv(a: CsrMatrix, x: Sequence[int]) -> list[int]:
    """y_i = (+)_{stored j in row i} values (x) x[col]; O(nnz) multiplies."""
    y, _ = spmv_instrumented(a, x)
    return y


def spmv_instrumented(a: CsrMatrix, x: Sequence[int]) -> tuple[list[int], int]:
    """spmv plus the exact count of semiring multiplications performed."""
    xs = list(x)
    if len(xs) != a.cols:
        raise ValueError(f"matrix has {a.cols} columns but vector has {len(xs)}")
    s = a.semiring
    add_ = sr.add_fn(s)
    mul_ = sr.mul_fn(s)
    z = sr.zero(s)
    vals = a.values.tolist()
    cols = a.col_idx.tolist()
    ptr = a.row_ptr.tolist()
    y = []
    mults = 0
    for i in range(a.rows):
        acc = z
        for p in range(ptr[i], ptr[i + 1]):
            acc = add_(acc, mul_(vals[p], xs[cols[p]]))
            mults += 1
        y.append(acc)
    return y, mults


def spmm(a: CsrMatrix, b: CsrMatrix) -> CsrMatrix:
    """Sparse-sparse product with a Gustavson row accumulator.

    Symbolic and numeric work share one pass per row: products accumulate
    into a dense scratch of length b.cols, touched columns are tracked, and
    results equal to the semiring zero are dropped when the row is emitted.
    """
    if a.semiring is not b.semiring:
        raise ValueError("spmm operands must share a semiring")
    if a.cols != b.rows:
        raise ValueError(f"inner dimensions differ: {a.cols} vs {b.rows}")
    s = a.semiring
    add_ = sr.add_fn(s)
    mul_ = sr.mul_fn(s)
    z = sr.zero(s)
    avals = a.values.tolist()
    acols = a.col_idx.tolist()
    aptr = a.row_ptr.tolist()
    bvals = b.values.tolist()
    bcols = b.col_idx.tolist()
    bptr = b.row_ptr.tolist()
    scratch = [z] * b.cols
    present = [False] * b.cols
    values, col_idx, row_ptr = [], [], [0]
    for i in range(a.rows):
        touched = []
        for pa in range(aptr[i], aptr[i + 1]):
            k = acols[pa]
            aik = avals[pa]
            for pb in range(bptr[k], bptr[k + 1]):
                j = bcols[pb]
                prod = mul_(aik, bvals[pb])
                if present[j]:
                    scratch[j] = add_(scratch[j], prod)
                else:
                    scratch[j] = add_(z, prod)
                    present[j] = True
                    touched.append(j)
        touched.sort()
        for j in touched:
            if scratch[j] != z:
                values.append(scratch[j])
                col_idx.append(j)
            scratch[j] = z
            present[j] = False
        row_ptr.append(len(values))
    return CsrMatrix(a.rows, b.cols, values, col_idx, row_ptr, s)


def memory_bytes(a: CsrMatrix) -> int:
    """Storage footprint 8*nnz + 4*n + 4 bytes (n = rows)."""
    return 8 * a.nnz + 4 * a.rows + 4
