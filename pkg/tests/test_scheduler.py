import random

import pytest

import tropical as tr
from tropical import CycleMean, TaskGraph


def drone_graph():
    g = TaskGraph()
    for name, d in [
        ("IMU", 50), ("Baro", 30), ("GPS", 100), ("Fusion", 200),
        ("AttEst", 80), ("PosEst", 120), ("AltCtrl", 40), ("AttCtrl", 60),
        ("PosCtrl", 50), ("Mix", 30), ("PWM", 20), ("Telemetry", 150),
    ]:
        g.add_task(name, d)
    for src, dst in [
        (0, 3), (1, 3), (2, 3), (3, 4), (3, 5), (5, 6), (4, 7),
        (5, 8), (6, 9), (7, 9), (8, 9), (9, 10), (5, 11),
    ]:
        g.add_constraint(src, dst)
    return g


def production_graph(weld=20):
    g = TaskGraph()
    for name, d in [
        ("Input", 5), ("Mill", 15), ("Drill", 12), ("Grind", 10),
        ("Weld", weld), ("Finish", 8), ("QC", 6),
    ]:
        g.add_task(name, d)
    for src, dst in [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4), (4, 5), (5, 6)]:
        g.add_constraint(src, dst)
    g.add_feedback(6, 0, 6)
    return g


def rand_dag_graph(rng, n):
    g = TaskGraph()
    for t in range(n):
        g.add_task(f"T{t}", rng.randint(0, 20), ready=rng.randint(0, 5))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                lag = None if rng.random() < 0.5 else rng.randint(0, 15)
                g.add_constraint(i, j, lag)
    return g


def longest_path_starts(g, start_time=0):
    """Topological-order earliest-start oracle."""
    n = g.n
    starts = [r + start_time for r in g.ready]
    incoming = [[] for _ in range(n)]
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for e in g.edges:
        if e.feedback:
            continue
        incoming[e.dst].append(e)
        out[e.src].append(e.dst)
        indeg[e.dst] += 1
    order = [i for i in range(n) if indeg[i] == 0]
    pos = 0
    while pos < len(order):
        u = order[pos]
        pos += 1
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                order.append(v)
    for v in order:
        for e in incoming[v]:
            starts[v] = max(starts[v], starts[e.src] + e.lag)
    return starts


def test_drone_case_study():
    g = drone_graph()
    r = tr.solve(g)
    assert r.makespan == 570
    assert r.iterations <= 11
    assert r.start[3] == 100          # Fusion waits for GPS
    assert r.completion[7] == 440     # AttCtrl
    assert r.completion[10] == 520    # PWM
    assert r.completion[11] == 570    # Telemetry
    names = [g.names[t] for t in tr.critical_path(g, r)]
    assert names == ["GPS", "Fusion", "PosEst", "Telemetry"]


def test_production_case_study():
    g = production_graph()
    r = tr.solve(g)
    assert r.makespan == 54
    lam = tr.cycle_time(g)
    assert lam == CycleMean(54, 5)
    assert abs(tr.throughput(g) - 0.09259259259) <= 1e-6
    names = [g.names[t] for t in tr.critical_path(g, r)]
    assert names == ["Input", "Mill", "Weld", "Finish", "QC"]


def test_production_what_if():
    g = production_graph(weld=15)
    assert tr.cycle_time(g) == CycleMean(49, 5)
    assert abs(tr.throughput(g) * 3600 - 367.0) < 1.0


def test_single_task():
    g = TaskGraph()
    g.add_task("only", 7, ready=3)
    r = tr.solve(g)
    assert r.start == [3]
    assert r.completion == [10]
    assert r.makespan == 10
    assert r.iterations == 0
    assert tr.critical_path(g, r) == [0]


def test_start_time_offset():
    g = TaskGraph()
    a = g.add_task("a", 4, ready=2)
    b = g.add_task("b", 1)
    g.add_constraint(a, b)
    r = tr.solve(g, start_time=10)
    assert r.start == [12, 16]
    assert r.completion == [16, 17]


def test_default_lag_is_predecessor_duration():
    g = TaskGraph()
    a = g.add_task("a", 9)
    b = g.add_task("b", 1)
    g.add_constraint(a, b)
    r = tr.solve(g)
    assert r.start[b] == 9


def test_zero_lag_allows_simultaneous_start():
    g = TaskGraph()
    a = g.add_task("a", 9)
    b = g.add_task("b", 1)
    g.add_constraint(a, b, lag=0)
    r = tr.solve(g)
    assert r.start == [0, 0]


def test_self_edge_rejected():
    g = TaskGraph()
    a = g.add_task("a", 1)
    g.add_constraint(a, a, lag=0)
    with pytest.raises(tr.CycleInAcyclicGraphError):
        tr.solve(g)


def test_cycle_detected():
    g = TaskGraph()
    a = g.add_task("a", 1)
    b = g.add_task("b", 1)
    g.add_constraint(a, b)
    g.add_constraint(b, a)
    with pytest.raises(tr.CycleInAcyclicGraphError):
        tr.solve(g)


def test_feasibility_and_optimality_random():
    rng = random.Random(0)
    for _ in range(30):
        g = rand_dag_graph(rng, rng.randint(1, 8))
        start_time = rng.randint(0, 10)
        r = tr.solve(g, start_time)
        assert r.iterations <= max(0, g.n - 1)
        for e in g.edges:
            assert r.start[e.dst] >= r.start[e.src] + e.lag
        for t in range(g.n):
            assert r.start[t] >= g.ready[t] + start_time
            assert r.completion[t] == r.start[t] + g.durations[t]
        assert r.start == longest_path_starts(g, start_time)
        assert r.makespan == max(r.completion)


def test_makespan_monotone_in_durations():
    rng = random.Random(1)
    for _ in range(15):
        g = rand_dag_graph(rng, rng.randint(2, 7))
        base = tr.solve(g).makespan
        t = rng.randrange(g.n)
        g2 = TaskGraph()
        for i in range(g.n):
            g2.add_task(g.names[i], g.durations[i] + (5 if i == t else 0), g.ready[i])
        for e in g.edges:
            # re-derive default lags so the increased duration propagates
            explicit = e.lag if e.lag != g.durations[e.src] else None
            g2.add_constraint(e.src, e.dst, explicit)
        assert tr.solve(g2).makespan >= base


def test_cycle_time_matches_spectral():
    g = production_graph()
    lam = tr.cycle_time(g)
    n = g.n
    rows = [[tr.NEG_INF] * n for _ in range(n)]
    for e in g.edges:
        rows[e.src][e.dst] = max(rows[e.src][e.dst], e.lag)
    assert tr.max_cycle_mean(tr.DenseMatrix(rows)) == lam


def test_cycle_time_self_feedback():
    g = TaskGraph()
    a = g.add_task("a", 4)
    g.add_feedback(a, a, 4)
    assert tr.cycle_time(g) == CycleMean(4, 1)
    assert tr.throughput(g) == pytest.approx(0.25)


def test_no_cycle_error():
    g = TaskGraph()
    g.add_task("a", 1)
    with pytest.raises(tr.NoCycleError):
        tr.cycle_time(g)


def test_critical_path_tie_break():
    g = TaskGraph()
    for name in "abcd":
        g.add_task(name, 5)
    g.add_constraint(0, 2)
    g.add_constraint(1, 2)
    g.add_constraint(2, 3)
    r = tr.solve(g)
    # tasks 0 and 1 both tight into 2; the lower id wins
    assert tr.critical_path(g, r) == [0, 2, 3]


def test_validation_errors():
    g = TaskGraph()
    with pytest.raises(ValueError):
        g.add_task("bad", -1)
    a = g.add_task("a", 1)
    with pytest.raises(ValueError):
        g.add_constraint(a, 7)
    with pytest.raises(ValueError):
        g.add_constraint(a, a, lag=-2)
    with pytest.raises(ValueError):
        tr.critical_path(TaskGraph())
