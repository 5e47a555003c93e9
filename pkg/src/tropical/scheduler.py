"""Precedence-constrained scheduling over max-plus.

Edge lags are start-to-start delays: an edge (u, v, lag) forces
start_v >= start_u + lag. When a constraint is added without an explicit
lag it defaults to the predecessor's duration ("v starts after u finishes"),
which is the usual finish-to-start reading.

Earliest start times are the least fixed point of s = s (+) (s vecmat A)
over max-plus, reached in at most n-1 relaxation rounds on an acyclic edge
set. Feedback edges (declared for cyclic, repeating systems) are excluded
from the fixed-point solve; they only enter the cycle-time / throughput
analysis, where the minimum achievable period is the maximum cycle mean of
the full constraint matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import dense
from .dense import DenseMatrix
from .errors import CycleInAcyclicGraphError, NoCycleError
from .semiring import NEG_INF, SemiringId
from .spectral import CycleMean, max_cycle_mean


@dataclass
class _Edge:
    src: int
    dst: int
    lag: int
    feedback: bool = False


@dataclass
class ScheduleResult:
    start: list[int]
    completion: list[int]
    makespan: int
    iterations: int


class TaskGraph:
    """Mutable task-graph builder; solve() snapshots are immutable."""

    def __init__(self, cyclic: bool = False):
        self.cyclic = cyclic
        self.names: list[str] = []
        self.durations: list[int] = []
        self.ready: list[int] = []
        self.edges: list[_Edge] = []
        self._last_result: ScheduleResult | None = None

    @property
    def n(self) -> int:
        return len(self.names)

    def add_task(self, name: str, duration: int, ready: int = 0) -> int:
        if duration < 0:
            raise ValueError(f"task {name!r}: duration must be non-negative")
        if ready < 0:
            raise ValueError(f"task {name!r}: ready time must be non-negative")
        self.names.append(name)
        self.durations.append(int(duration))
        self.ready.append(int(ready))
        return self.n - 1

    def _check_id(self, t: int) -> None:
        if not 0 <= t < self.n:
            raise ValueError(f"task id {t} out of range (have {self.n} tasks)")

    def add_constraint(self, src: int, dst: int, lag: int | None = None) -> None:
        """Require start_dst >= start_src + lag; lag defaults to duration(src)."""
        self._check_id(src)
        self._check_id(dst)
        if lag is None:
            lag = self.durations[src]
        if lag < 0:
            raise ValueError("lag must be non-negative")
        self.edges.append(_Edge(src, dst, int(lag)))

    def add_feedback(self, src: int, dst: int, lag: int) -> None:
        """Declare a feedback edge for a repeating system; implies cyclic."""
        self._check_id(src)
        self._check_id(dst)
        if lag < 0:
            raise ValueError("lag must be non-negative")
        self.edges.append(_Edge(src, dst, int(lag), feedback=True))
        self.cyclic = True


def _constraint_matrix(g: TaskGraph, include_feedback: bool) -> DenseMatrix:
    n = g.n
    rows = [[NEG_INF] * n for _ in range(n)]
    for e in g.edges:
        if e.feedback and not include_feedback:
            continue
        rows[e.src][e.dst] = max(rows[e.src][e.dst], e.lag)
    return DenseMatrix(rows)


def _check_acyclic(g: TaskGraph) -> None:
    """Kahn's algorithm on the non-feedback edge set."""
    n = g.n
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for e in g.edges:
        if e.feedback:
            continue
        out[e.src].append(e.dst)
        indeg[e.dst] += 1
    queue = [i for i in range(n) if indeg[i] == 0]
    done = 0
    while queue:
        u = queue.pop()
        done += 1
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    if done != n:
        stuck = tuple(i for i in range(n) if indeg[i] > 0)
        raise CycleInAcyclicGraphError(
            "precedence constraints contain a cycle "
            "(declare feedback edges for cyclic systems)",
            vertices=stuck,
        )


def solve(g: TaskGraph, start_time: int = 0) -> ScheduleResult:
    """Earliest start/completion times; start_time offsets every ready time."""
    if g.n == 0:
        raise ValueError("task graph has no tasks")
    _check_acyclic(g)
    a = _constraint_matrix(g, include_feedback=False)
    s = SemiringId.MAXPLUS
    cur = [r + start_time for r in g.ready]
    iterations = 0
    for _ in range(g.n - 1):
        iterations += 1
        relaxed = dense.vecmat(cur, a, s)
        nxt = [x if x > y else y for x, y in zip(cur, relaxed)]
        if nxt == cur:
            break
        cur = nxt
    completion = [st + d for st, d in zip(cur, g.durations)]
    result = ScheduleResult(
        start=cur,
        completion=completion,
        makespan=max(completion),
        iterations=iterations,
    )
    g._last_result = result
    return result


def cycle_time(g: TaskGraph) -> CycleMean:
    """Minimum achievable period of the repeating system (max cycle mean of
    the full constraint matrix, feedback edges included)."""
    if g.n == 0:
        raise ValueError("task graph has no tasks")
    lam = max_cycle_mean(_constraint_matrix(g, include_feedback=True))
    if lam is None:
        raise NoCycleError("constraint graph has no cycle")
    return lam


def throughput(g: TaskGraph) -> float:
    """Completions per time unit: 1 / cycle_time."""
    lam = cycle_time(g)
    return lam.denominator / lam.numerator


def critical_path(g: TaskGraph, result: ScheduleResult | None = None) -> list[int]:
    """Task chain realizing the makespan, as task ids.

    Every hop is tight (start_dst == start_src + lag) and the final task
    completes at the makespan; ties are broken toward the lowest task id.
    """
    if result is None:
        result = g._last_result
    if result is None:
        raise ValueError("critical_path requires a completed solve")
    incoming: list[list[_Edge]] = [[] for _ in range(g.n)]
    for e in g.edges:
        if not e.feedback:
            incoming[e.dst].append(e)
    end = min(t for t in range(g.n) if result.completion[t] == result.makespan)
    path = [end]
    cur = end
    while True:
        tight = [
            e.src
            for e in incoming[cur]
            if result.start[cur] == result.start[e.src] + e.lag
        ]
        if not tight:
            break
        cur = min(tight)
        path.append(cur)
    path.reverse()
    return path
