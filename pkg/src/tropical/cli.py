"""Command-line front end.

Every subcommand builds one payload dict; the text rendering and the --json
rendering are both generated from that payload, so the two modes always carry
the same numeric content. Sentinels print as ``inf`` / ``-inf`` in text and
appear as the strings "inf" / "-inf" in JSON (JSON has no infinities).

Exit codes: 0 success, 1 library-level failure (e.g. a negative cycle), 2
parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dense, graph, io as tio, scheduler, semiring as sr, spectral
from .bench import BENCH_OPS, run_bench
from .dense import DenseMatrix
from .errors import GraphParseError, TropicalError
from .semiring import NEG_INF, POS_INF, SemiringId

DEFAULT_CLOSURE_GUARD = 2048


def _fmt_val(v: int):
    if v == POS_INF:
        return "inf"
    if v == NEG_INF:
        return "-inf"
    return v


def _fmt_float(v: float):
    if v == float("-inf"):
        return "-inf"
    if v == float("inf"):
        return "inf"
    return round(v, 6)


def _matrix_payload(m: DenseMatrix) -> list[list]:
    return [[_fmt_val(v) for v in row] for row in m.to_rows()]


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_graph(path: str, want_sparse: bool):
    return tio.parse_graph(_read_file(path), sparse=want_sparse)


def _guard_closure(n: int, guard: int) -> None:
    if n > guard:
        raise _GuardRefusal(
            f"refusing closure of a {n}x{n} matrix (guard is {guard}; "
            f"raise --closure-guard to override)"
        )


class _GuardRefusal(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tropical",
        description="Tropical linear algebra analysis of graph and schedule files",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_graph_cmd(name, help_text, sparse_flag=True, guard=False):
        c = sub.add_parser(name, help=help_text)
        c.add_argument("file", help="graph file")
        if sparse_flag:
            c.add_argument("--sparse", action="store_true", help="parse into CSR form")
        if guard:
            c.add_argument(
                "--closure-guard",
                type=int,
                default=DEFAULT_CLOSURE_GUARD,
                help="largest n accepted for the cubic closure sweep",
            )
        c.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return c

    add_graph_cmd("closure", "Kleene star of the adjacency matrix", guard=True)
    c = add_graph_cmd("sssp", "single-source optimal path values")
    c.add_argument("--source", type=int, required=True, help="0-based source vertex")
    add_graph_cmd("apsp", "all-pairs optimal path values", guard=True)
    add_graph_cmd("reach", "reachability (Boolean transitive closure)", guard=True)
    add_graph_cmd("bottleneck", "all-pairs widest-path values (max-min)", guard=True)

    c = sub.add_parser("matmul", help="tropical product of two matrix files")
    c.add_argument("file_a")
    c.add_argument("file_b")
    c.add_argument("--json", action="store_true")

    c = sub.add_parser("eig", help="eigenvalue (maximum cycle mean) of a max-plus graph")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")

    c = sub.add_parser("eigvec", help="eigenvector by tropical power iteration")
    c.add_argument("file")
    c.add_argument("--eps", type=float, default=1e-9, help="L-infinity tolerance")
    c.add_argument("--max-iter", type=int, default=None, help="iteration cap (default 10n)")
    c.add_argument("--json", action="store_true")

    c = sub.add_parser("schedule", help="solve a precedence-constrained schedule file")
    c.add_argument("file")
    c.add_argument("--start", type=int, default=0, help="global start-time offset")
    c.add_argument("--json", action="store_true")

    c = sub.add_parser("bench", help="micro-benchmark a dense kernel")
    c.add_argument("--op", choices=BENCH_OPS, required=True)
    c.add_argument("--size", type=int, required=True)
    c.add_argument(
        "--semiring", choices=sorted(sr.SEMIRING_TOKENS), default="maxplus"
    )
    c.add_argument("--reps", type=int, default=3)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument(
        "--closure-guard", type=int, default=DEFAULT_CLOSURE_GUARD,
        help="largest n accepted for the closure benchmark",
    )
    c.add_argument("--json", action="store_true")
    return p


# -- subcommand handlers: each returns (payload, text_lines) -------------------

def _cmd_closure(args):
    m, s = _load_graph(args.file, args.sparse)
    _guard_closure(m.rows, args.closure_guard)
    result = graph.all_pairs_paths(m, s)
    payload = {
        "command": "closure",
        "semiring": sr.TOKEN_OF[s],
        "n": result.rows,
        "matrix": _matrix_payload(result),
    }
    return payload, _matrix_lines(payload["matrix"])


def _cmd_apsp(args):
    payload, lines = _cmd_closure(args)
    payload["command"] = "apsp"
    return payload, lines


def _cmd_reach(args):
    m, s = _load_graph(args.file, args.sparse)
    _guard_closure(m.rows, args.closure_guard)
    if isinstance(m, DenseMatrix):
        z = sr.zero(s)
        m = DenseMatrix([[1 if v != z else 0 for v in row] for row in m.to_rows()])
    result = graph.reachability(m)
    payload = {
        "command": "reach",
        "semiring": "boolean",
        "n": result.rows,
        "matrix": _matrix_payload(result),
    }
    return payload, _matrix_lines(payload["matrix"])


def _cmd_bottleneck(args):
    m, s = _load_graph(args.file, args.sparse)
    if s is not SemiringId.MAXMIN:
        raise ValueError("bottleneck requires a maxmin graph file")
    _guard_closure(m.rows, args.closure_guard)
    result = graph.bottleneck_paths(m)
    payload = {
        "command": "bottleneck",
        "semiring": "maxmin",
        "n": result.rows,
        "matrix": _matrix_payload(result),
    }
    return payload, _matrix_lines(payload["matrix"])


def _cmd_sssp(args):
    m, s = _load_graph(args.file, args.sparse)
    d = graph.sssp(m, args.source, s)
    payload = {
        "command": "sssp",
        "semiring": sr.TOKEN_OF[s],
        "source": args.source,
        "distances": [_fmt_val(v) for v in d],
    }
    return payload, [" ".join(str(v) for v in payload["distances"])]


def _cmd_matmul(args):
    a, s_a = tio.parse_graph(_read_file(args.file_a))
    b, s_b = tio.parse_graph(_read_file(args.file_b))
    if s_a is not s_b:
        raise ValueError(
            f"operand semirings differ: {sr.TOKEN_OF[s_a]} vs {sr.TOKEN_OF[s_b]}"
        )
    c = dense.matmul(a, b, s_a)
    payload = {
        "command": "matmul",
        "semiring": sr.TOKEN_OF[s_a],
        "rows": c.rows,
        "cols": c.cols,
        "matrix": _matrix_payload(c),
    }
    return payload, _matrix_lines(payload["matrix"])


def _require_maxplus(s: SemiringId, what: str) -> None:
    if s is not SemiringId.MAXPLUS:
        raise ValueError(f"{what} requires a maxplus graph file")


def _cmd_eig(args):
    m, s = _load_graph(args.file, False)
    _require_maxplus(s, "eig")
    lam = spectral.max_cycle_mean(m)
    if lam is None:
        payload = {"command": "eig", "eigenvalue": None}
        return payload, ["no cycle"]
    payload = {
        "command": "eig",
        "eigenvalue": str(lam),
        "numerator": lam.numerator,
        "denominator": lam.denominator,
        "float": round(lam.as_float, 6),
        "strongly_connected": lam.strongly_connected,
    }
    lines = [f"{lam} ({lam.as_float:.6f})"]
    if not lam.strongly_connected:
        print(
            "warning: graph is not strongly connected; eigenvalue uniqueness does not hold",
            file=sys.stderr,
        )
    return payload, lines


def _cmd_eigvec(args):
    m, s = _load_graph(args.file, False)
    _require_maxplus(s, "eigvec")
    lam = spectral.max_cycle_mean(m)
    if lam is None:
        raise TropicalError("NoCycle: graph has no cycle, eigenvector undefined")
    res = spectral.eigenvector(m, lam, epsilon=args.eps, max_iter=args.max_iter)
    residual = "inf" if res.residual == float("inf") else round(res.residual, 9)
    payload = {
        "command": "eigvec",
        "eigenvalue": str(lam),
        "vector": [_fmt_float(v) for v in res.vector],
        "residual": residual,
        "converged": res.converged,
        "iterations": res.iterations,
    }
    lines = [
        " ".join(_render_float(v) for v in payload["vector"]),
        f"residual {payload['residual']}",
    ]
    if not res.converged:
        lines.append("not converged")
    return payload, lines


def _render_float(v) -> str:
    if isinstance(v, str):
        return v
    return f"{v:.6f}"


def _cmd_schedule(args):
    g = tio.parse_schedule(_read_file(args.file))
    result = scheduler.solve(g, args.start)
    path = scheduler.critical_path(g, result)
    payload = {
        "command": "schedule",
        "cyclic": g.cyclic,
        "tasks": [
            {
                "id": t,
                "name": g.names[t],
                "start": result.start[t],
                "completion": result.completion[t],
            }
            for t in range(g.n)
        ],
        "makespan": result.makespan,
        "iterations": result.iterations,
        "critical_path": [g.names[t] for t in path],
    }
    lines = [
        f"task {t['id']} {t['name']} start {t['start']} completion {t['completion']}"
        for t in payload["tasks"]
    ]
    lines.append(f"makespan {result.makespan}")
    lines.append(f"iterations {result.iterations}")
    lines.append("critical_path " + " ".join(payload["critical_path"]))
    if g.cyclic:
        lam = scheduler.cycle_time(g)
        thr = round(scheduler.throughput(g), 4)
        payload["cycle_time"] = str(lam)
        payload["throughput"] = thr
        lines.append(f"cycle_time {lam}")
        lines.append(f"throughput {thr:.4f}")
    return payload, lines


def _cmd_bench(args):
    s = sr.parse_semiring(args.semiring)
    if args.op == "closure":
        _guard_closure(args.size, args.closure_guard)
    report = run_bench(args.op, args.size, s, args.reps, args.seed)
    payload = {
        "command": "bench",
        "op": report.op,
        "n": report.n,
        "semiring": sr.TOKEN_OF[report.semiring],
        "reps": report.reps,
        "seed": report.seed,
        "elapsed_us": [round(e, 3) for e in report.elapsed_us],
        "mean_us": round(report.mean_us, 3),
        "mops": round(report.mops, 3),
        "checksum": report.checksum,
    }
    lines = [
        f"op {payload['op']}",
        f"n {payload['n']}",
        f"semiring {payload['semiring']}",
        f"reps {payload['reps']}",
        f"seed {payload['seed']}",
        "elapsed_us " + " ".join(str(e) for e in payload["elapsed_us"]),
        f"mean_us {payload['mean_us']}",
        f"mops {payload['mops']}",
        f"checksum {payload['checksum']}",
    ]
    return payload, lines


def _matrix_lines(rows: list[list]) -> list[str]:
    return [" ".join(str(v) for v in row) for row in rows]


_HANDLERS = {
    "closure": _cmd_closure,
    "apsp": _cmd_apsp,
    "reach": _cmd_reach,
    "bottleneck": _cmd_bottleneck,
    "sssp": _cmd_sssp,
    "matmul": _cmd_matmul,
    "eig": _cmd_eig,
    "eigvec": _cmd_eigvec,
    "schedule": _cmd_schedule,
    "bench": _cmd_bench,
}


def run(argv: list[str]) -> int:
    """Dispatch one CLI invocation; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, lines = _HANDLERS[args.command](args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _GuardRefusal as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TropicalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
