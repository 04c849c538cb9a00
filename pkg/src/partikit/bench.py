"""Wall-clock comparison of the three evaluators over a geometric grid of n."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import InternalConsistencyError
from .partition import box_count, dp_count, new_weight_system, quasi_build, quasi_eval

CSV_HEADER = "n,dp_ns,box_ns,quasi_ns"


@dataclass
class BenchRow:
    n: int
    count: int
    dp_ns: int
    box_ns: int
    quasi_ns: int


@dataclass
class BenchReport:
    weights: tuple[int, ...]
    nmax: int
    box_build_ns: int
    quasi_build_ns: int
    rows: list[BenchRow]

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        lines += [f"{r.n},{r.dp_ns},{r.box_ns},{r.quasi_ns}" for r in self.rows]
        return "\n".join(lines)

    def to_text(self) -> str:
        head = ["n", "count", "dp_ns", "box_ns", "quasi_ns"]
        body = [[str(r.n), str(r.count), str(r.dp_ns), str(r.box_ns), str(r.quasi_ns)] for r in self.rows]
        widths = [max(len(row[i]) for row in [head] + body) for i in range(len(head))]
        fmt = lambda row: "  ".join(c.rjust(w) for c, w in zip(row, widths))
        lines = [
            f"weights={','.join(map(str, self.weights))} nmax={self.nmax}",
            f"box setup: {self.box_build_ns} ns, quasi build: {self.quasi_build_ns} ns",
            fmt(head),
        ]
        lines += [fmt(row) for row in body]
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "weights": list(self.weights),
            "nmax": self.nmax,
            "build_ns": {"box": self.box_build_ns, "quasi": self.quasi_build_ns},
            "rows": [
                {"n": r.n, "count": str(r.count), "dp_ns": r.dp_ns, "box_ns": r.box_ns, "quasi_ns": r.quasi_ns}
                for r in self.rows
            ],
        }


def geometric_grid(nmax: int, points: int = 10) -> list[int]:
    """Roughly log-spaced values in ``[0, nmax]``, always including 0 and nmax."""
    if nmax <= 0:
        return [0]
    grid = {0, nmax}
    for i in range(points):
        grid.add(round(nmax ** (i / (points - 1))))
    return sorted(grid)


def _best_ns(fn: Callable[[], object], repeat: int) -> int:
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        fn()
        dt = time.perf_counter_ns() - t0
        best = dt if best is None else min(best, dt)
    return best


def run_bench(weights: Sequence[int], nmax: int, repeat: int = 3, box_guard: int | None = None) -> BenchReport:
    weights = tuple(weights)
    t0 = time.perf_counter_ns()
    ws = new_weight_system(weights, box_guard=box_guard)
    box_build = time.perf_counter_ns() - t0
    t0 = time.perf_counter_ns()
    qp = quasi_build(ws)
    quasi_build_ns = time.perf_counter_ns() - t0

    grid = geometric_grid(nmax)
    # verify before timing anything
    counts = {}
    for n in grid:
        dp, box, quasi = dp_count(weights, n), box_count(ws, n), quasi_eval(qp, n)
        if not dp == box == quasi:
            raise InternalConsistencyError(
                f"evaluators disagree for weights {list(weights)} at n={n}: dp={dp} box={box} quasi={quasi}"
            )
        counts[n] = dp

    rows = []
    for n in grid:
        rows.append(
            BenchRow(
                n=n,
                count=counts[n],
                dp_ns=_best_ns(lambda: dp_count(weights, n), 1 if n > 10_000 else repeat),
                box_ns=_best_ns(lambda: box_count(ws, n), repeat),
                quasi_ns=_best_ns(lambda: quasi_eval(qp, n), repeat),
            )
        )
    return BenchReport(weights, nmax, box_build, quasi_build_ns, rows)
