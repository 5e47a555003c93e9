"""Spectral analysis of max-plus matrices.

The unique eigenvalue of an irreducible max-plus matrix is its maximum cycle
mean, an exact rational. It is computed here with the source-based Karp
recurrence run independently on every strongly connected component: within a
component, D[k][v] is the heaviest k-edge walk from a fixed source, and the
component's value is max_v min_k (D[m][v] - D[k][v]) / (m - k). All
comparisons are exact rational arithmetic; floats never decide a maximum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import dense
from .dense import DenseMatrix
from .errors import NoCycleError
from .semiring import NEG_INF, SemiringId

# int64 bottom for "no walk" in the critical-graph sweep; real walk weights
# stay far above the detection threshold
_BOT = -(2**62)
_BOT_CUT = -(2**61)


class CycleMean:
    """Exact rational cycle mean, reduced, with an advisory connectivity flag.

    Equality and ordering compare the rational value only; the flag records
    whether the source graph was strongly connected (when it is not, the
    eigenvalue-uniqueness guarantee does not apply).
    """

    __slots__ = ("numerator", "denominator", "strongly_connected")

    def __init__(self, numerator: int, denominator: int, strongly_connected: bool = True):
        if denominator == 0:
            raise ValueError("cycle length must be positive")
        if denominator < 0:
            numerator, denominator = -numerator, -denominator
        g = math.gcd(numerator, denominator)
        if g > 1:
            numerator //= g
            denominator //= g
        self.numerator = numerator
        self.denominator = denominator
        self.strongly_connected = strongly_connected

    @property
    def as_float(self) -> float:
        return self.numerator / self.denominator

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycleMean):
            return self.numerator * other.denominator == other.numerator * self.denominator
        if isinstance(other, (int, Fraction)):
            return self.as_fraction() == other
        return NotImplemented

    def __lt__(self, other: "CycleMean") -> bool:
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __le__(self, other: "CycleMean") -> bool:
        return self.numerator * other.denominator <= other.numerator * self.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"CycleMean({self.numerator}, {self.denominator})"


@dataclass
class EigenvectorResult:
    """Outcome of the power iteration; converged=False is the not-converged
    signal and still carries the last iterate and its residual."""

    vector: list[float]
    converged: bool
    iterations: int
    residual: float


def _components(arr: np.ndarray) -> list[list[int]]:
    """Strongly connected components via the Boolean reachability closure."""
    presence = (arr != NEG_INF).astype(np.int32)
    reach = dense.closure(DenseMatrix._wrap(presence), SemiringId.BOOLEAN)._arr
    mutual = (reach != 0) & (reach.T != 0)
    n = arr.shape[0]
    seen = [False] * n
    comps = []
    for i in range(n):
        if seen[i]:
            continue
        comp = [j for j in range(n) if mutual[i, j]]
        for j in comp:
            seen[j] = True
        comps.append(comp)
    return comps


def _karp_component(w: list[list[int | None]]) -> Fraction:
    """Maximum cycle mean of one strongly connected component (m >= 1).

    w[u][v] is the edge weight or None. Walk table D[k][v] is exact Python
    integer arithmetic, so no overflow or rounding can occur.
    """
    m = len(w)
    d: list[list[int | None]] = [[None] * m for _ in range(m + 1)]
    d[0][0] = 0
    for k in range(1, m + 1):
        prev = d[k - 1]
        row = d[k]
        for u in range(m):
            pu = prev[u]
            if pu is None:
                continue
            wu = w[u]
            for v in range(m):
                wuv = wu[v]
                if wuv is None:
                    continue
                cand = pu + wuv
                if row[v] is None or cand > row[v]:
                    row[v] = cand
    best: Fraction | None = None
    dn = d[m]
    for v in range(m):
        if dn[v] is None:
            continue
        inner: Fraction | None = None
        for k in range(m):
            if d[k][v] is None:
                continue
            r = Fraction(dn[v] - d[k][v], m - k)
            if inner is None or r < inner:
                inner = r
        if inner is not None and (best is None or inner > best):
            best = inner
    if best is None:
        raise AssertionError("strongly connected component without an n-edge walk")
    return best


def max_cycle_mean(a: DenseMatrix) -> CycleMean | None:
    """Maximum cycle mean of a max-plus adjacency matrix, or None if acyclic.

    The strongly_connected flag on the result is advisory: when False, the
    value is still the exact maximum over all cycles, but it is not the
    unique eigenvalue of the whole matrix.
    """
    if a.rows != a.cols:
        raise ValueError("cycle mean requires a square matrix")
    arr = a._arr
    rows = a.to_rows()
    comps = _components(arr)
    best: Fraction | None = None
    for comp in comps:
        m = len(comp)
        if m == 1:
            i = comp[0]
            if rows[i][i] == NEG_INF:
                continue
            cand = Fraction(rows[i][i], 1)
        else:
            w = [
                [rows[u][v] if rows[u][v] != NEG_INF else None for v in comp]
                for u in comp
            ]
            cand = _karp_component(w)
        if best is None or cand > best:
            best = cand
    if best is None:
        return None
    return CycleMean(best.numerator, best.denominator, strongly_connected=len(comps) == 1)


def critical_vertices(a: DenseMatrix) -> frozenset[int]:
    """Vertices lying on a cycle whose mean equals the maximum cycle mean.

    Works on the integer matrix q*A - p (lambda = p/q): all its cycles have
    weight <= 0 and the critical ones weight exactly 0, so a vertex is
    critical iff the best closed walk through it weighs 0.
    """
    lam = max_cycle_mean(a)
    if lam is None:
        raise NoCycleError("graph has no cycle")
    p, q = lam.numerator, lam.denominator
    arr = a._arr.astype(np.int64)
    scaled = np.where(arr == NEG_INF, _BOT, q * arr - p)
    n = a.rows
    for k in range(n):
        cand = scaled[:, k, None] + scaled[None, k, :]
        cand[cand < _BOT_CUT] = _BOT
        np.maximum(scaled, cand, out=scaled)
    diag = np.diagonal(scaled)
    return frozenset(int(i) for i in np.nonzero(diag == 0)[0])


def eigenvector(
    a: DenseMatrix,
    lam: CycleMean,
    epsilon: float = 1e-9,
    max_iter: int | None = None,
) -> EigenvectorResult:
    """Power iteration v <- (A (x) v) - lambda with L-infinity convergence.

    A critical graph of cyclicity c makes the raw iteration orbit with period
    c instead of settling; when a repeat of an earlier iterate is detected,
    the entry-wise max over one full period is returned, which is an exact
    fixed point of the normalized iteration.
    """
    if a.rows != a.cols:
        raise ValueError("eigenvector requires a square matrix")
    if lam is None:
        raise NoCycleError("no eigenvalue: graph has no cycle")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    n = a.rows
    if max_iter is None:
        max_iter = 10 * n
    f = a._arr.astype(np.float64)
    f[a._arr == NEG_INF] = -np.inf
    lam_f = lam.as_float
    v = np.zeros(n, dtype=np.float64)
    history = [v]
    iterations = 0
    for it in range(1, max_iter + 1):
        iterations = it
        u = (f + v[None, :]).max(axis=1)
        v_new = u - lam_f
        if _linf(v_new, v) <= epsilon:
            return EigenvectorResult(
                v_new.tolist(), True, it, _residual(f, v_new, lam_f)
            )
        for c in range(2, len(history) + 1):
            if _linf(v_new, history[-c]) <= epsilon:
                period = history[len(history) - c + 1 :] + [v_new]
                merged = period[0]
                for w in period[1:]:
                    merged = np.maximum(merged, w)
                return EigenvectorResult(
                    merged.tolist(), True, it, _residual(f, merged, lam_f)
                )
        history.append(v_new)
        v = v_new
    return EigenvectorResult(v.tolist(), False, iterations, _residual(f, v, lam_f))


def _linf(u: np.ndarray, v: np.ndarray) -> float:
    both_bot = np.isneginf(u) & np.isneginf(v)
    with np.errstate(invalid="ignore"):
        diff = np.abs(u - v)
    diff[both_bot] = 0.0
    if np.any(np.isnan(diff)):
        return math.inf
    return float(diff.max())


def _residual(f: np.ndarray, v: np.ndarray, lam_f: float) -> float:
    lhs = (f + v[None, :]).max(axis=1)
    rhs = lam_f + v
    return _linf(lhs, rhs)
