"""Measured cost against contracted budgets, with slack calibrated on a prefix.

A run is one solver execution: its family index ``k``, the size the budget is
stated in (input length for the pair families, vertex count for WL), the
vertex count for reporting, and the measured cost. Runs are kept in
enumeration order. The slack is the worst cost/shape ratio over the first
fifth of the runs and is then asserted on all of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .graphlab.algorithms import ds_bound, ds_member, vc_member
from .graphlab.graph import Graph
from .graphlab.problems import pair_instance
from .graphlab.wl import WLRefiner
from .meter import metering

Shape = Callable[[int, int], float]
PREFIX_FRACTION = 0.2


@dataclass(frozen=True)
class Run:
    k: int
    size: int
    n: int
    cost: int


@dataclass(frozen=True)
class BudgetRow:
    family: str
    k: int
    n: int
    measured_max: int
    allowed: float
    passed: bool

    def as_csv(self) -> list[str]:
        return [self.family, str(self.k), str(self.n), str(self.measured_max), _num(self.allowed), "true" if self.passed else "false"]


def _num(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else f"{v:.6g}"


@dataclass
class BudgetResult:
    family: str
    label: str
    slack: float
    exponent: int | None
    prefix: int
    rows: list[BudgetRow] = field(default_factory=list)
    violations: list[Run] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def prefix_length(total: int, fraction: float = PREFIX_FRACTION) -> int:
    return math.ceil(total * fraction)


def calibrate_slack(runs: Sequence[Run], shape: Shape, fraction: float = PREFIX_FRACTION) -> float:
    """Worst ratio cost / shape(k, size) over the calibration prefix, at least 1."""
    prefix = runs[: prefix_length(len(runs), fraction)]
    return max([1.0] + [r.cost / shape(r.k, r.size) for r in prefix if shape(r.k, r.size) > 0])


def per_index_slack(runs: Iterable[Run], shape: Shape) -> dict[int, float]:
    out: dict[int, float] = {}
    for r in runs:
        out[r.k] = max(out.get(r.k, 0.0), r.cost / shape(r.k, r.size))
    return out


def _non_increasing(values: list[float]) -> bool:
    return all(a >= b for a, b in zip(values, values[1:]))


def _no_frontier_record(values: list[float]) -> bool:
    return len(values) < 2 or values[-1] <= max(values[:-1])


def fit_exponent(
    runs: Sequence[Run],
    shape_for: Callable[[int], Shape],
    candidates: Iterable[int] = range(0, 6),
    fraction: float = PREFIX_FRACTION,
    axis: str = "index",
) -> int:
    """Smallest c under which the prefix cost/shape ratio stops growing.

    With ``axis="index"`` the per-index worst ratio must not increase with the
    index; with ``axis="size"`` the largest size in the prefix must not set a
    new worst ratio, separately for every index (sizes below 2 are skipped
    since every power of 1 is 1). A shape whose exponent is too small leaves
    the growth to the slack.
    """
    prefix = runs[: prefix_length(len(runs), fraction)]
    last = None
    for c in candidates:
        last = c
        shape = shape_for(c)
        if axis == "index":
            slacks = per_index_slack(prefix, shape)
            ok = _non_increasing([slacks[k] for k in sorted(slacks)])
        else:
            worst: dict[int, dict[int, float]] = {}
            for r in prefix:
                if r.size >= 2:
                    row = worst.setdefault(r.k, {})
                    row[r.size] = max(row.get(r.size, 0.0), r.cost / shape(r.k, r.size))
            ok = all(_no_frontier_record([row[n] for n in sorted(row)]) for row in worst.values())
        if ok:
            return c
    return last


def evaluate(family: str, runs: Sequence[Run], shape: Shape, slack: float, label: str, exponent: int | None) -> BudgetResult:
    rows: dict[tuple[int, int], tuple[int, float]] = {}
    violations = []
    for r in runs:
        allowed = slack * shape(r.k, r.size)
        if r.cost > allowed:
            violations.append(r)
        key = (r.k, r.size)
        peak, _ = rows.get(key, (-1, allowed))
        if r.cost > peak:
            rows[key] = (r.cost, allowed)
    table = [
        BudgetRow(family, k, size, peak, allowed, peak <= allowed)
        for (k, size), (peak, allowed) in sorted(rows.items())
    ]
    return BudgetResult(family, label, slack, exponent, prefix_length(len(runs)), table, violations)


# ---------------------------------------------------------------------------
# run collection


def _measure(fn) -> int:
    with metering() as m:
        fn()
    return m.count


def vc_runs(graphs: Sequence[Graph], max_k: int) -> list[Run]:
    """Every member A_1..A_max_k on every pair (G, k') with k' <= max_k, graph-major."""
    members = [vc_member(k) for k in range(1, max_k + 1)]
    runs = []
    for g in graphs:
        for kp in range(max_k + 1):
            x = pair_instance(g, kp)
            for k, m in enumerate(members, 1):
                runs.append(Run(k, x.length, g.n, _measure(lambda: m(x))))
    return runs


def ds_runs(graphs: Sequence[Graph], max_j: int) -> list[Run]:
    members = [ds_member(j) for j in range(1, max_j + 1)]
    runs = []
    for g in graphs:
        for kp in range(max_j + 1):
            x = pair_instance(g, kp)
            for j, m in enumerate(members, 1):
                runs.append(Run(j, x.length, g.n, _measure(lambda: m(x))))
    return runs


def wl_runs(graphs: Sequence[Graph], max_k: int) -> list[Run]:
    refiner = WLRefiner()
    runs = []
    for g in graphs:
        for k in range(1, max_k + 1):
            runs.append(Run(k, g.n, g.n, _measure(lambda: refiner.run(g, k))))
    return runs


# ---------------------------------------------------------------------------
# per-family budgets


def vc_budget(graphs: Sequence[Graph], max_k: int, slack: float | None = None) -> BudgetResult:
    """f(k) = 2^k, rule f * |x|."""
    runs = vc_runs(graphs, max_k)
    shape: Shape = lambda k, n: 2**k * n  # noqa: E731
    s = calibrate_slack(runs, shape) if slack is None else slack
    return evaluate("vc", runs, shape, s, "2^k*n", 1)


def ds_budget(graphs: Sequence[Graph], max_j: int, slack: float | None = None, c: int | None = None) -> BudgetResult:
    """f(j) = j^(c*j^2) with c fitted, rule f * |x|."""
    runs = ds_runs(graphs, max_j)

    def shape_for(cc: int) -> Shape:
        f = ds_bound(cc)
        return lambda j, n: f(j) * n

    c = fit_exponent(runs, shape_for) if c is None else c
    shape = shape_for(c)
    s = calibrate_slack(runs, shape) if slack is None else slack
    return evaluate("ds", runs, shape, s, f"j^({c}*j^2)*n", c)


def wl_budget(graphs: Sequence[Graph], max_k: int, slack: float | None = None, c: int | None = None) -> BudgetResult:
    """Rule n^(c*k) on the vertex count, c fitted."""
    runs = wl_runs(graphs, max_k)

    def shape_for(cc: int) -> Shape:
        return lambda k, n: n ** (cc * k)

    c = fit_exponent(runs, shape_for, candidates=range(1, 6), axis="size") if c is None else c
    shape = shape_for(c)
    s = calibrate_slack(runs, shape) if slack is None else slack
    return evaluate("wl", runs, shape, s, f"n^({c}*k)", c)


BUDGETS = {"vc": vc_budget, "ds": ds_budget, "wl": wl_budget}
