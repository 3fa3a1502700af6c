"""Indexed algorithm families and uniform class membership.

A family maps an index k >= 1 to a solver M_k. A uniform witness pairs a
family with a selector parameter telling which member to trust for each
instance; the strongly uniform variant adds a bound function and a step
budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .kernel import (
    Instance,
    Language,
    Parameter,
    Parameterization,
    StepBudget,
    Unresolved,
    as_truncation,
    param_leq,
)
from .meter import tick
from .promise import Solver
from .report import FAIL, INCONCLUSIVE, PASS, VerificationReport, combine_status, stopwatch


@dataclass(frozen=True)
class AlgorithmFamily:
    name: str
    member: Callable[[int], Solver]
    description: str = ""

    def __getitem__(self, k: int) -> Solver:
        if k < 1:
            raise IndexError("family indices start at 1")
        return self.member(k)


@dataclass(frozen=True)
class UniformWitness:
    family: AlgorithmFamily
    selector: Parameter
    bound: Callable[[int], int] | None = None
    budget: StepBudget | None = None


@dataclass(frozen=True)
class SelectorTable:
    """Least correct index per instance; instances with no correct index up to the cap are unresolved."""

    parameter: Parameter
    values: dict[Instance, int] = field(default_factory=dict)
    unresolved: tuple[Instance, ...] = ()

    def __getitem__(self, x: Instance) -> int:
        return self.values[x]


def selector(family: AlgorithmFamily, language: Language, universe: Iterable[Instance], cap: int) -> SelectorTable:
    values: dict[Instance, int] = {}
    unresolved = []
    members = [family[k] for k in range(1, cap + 1)]
    for x in universe:
        truth = language(x)
        k = next((i for i, m in enumerate(members, 1) if m(x) == truth), None)
        if k is None:
            unresolved.append(x)
        else:
            values[x] = k
    return SelectorTable(Parameter.from_table(f"sel[{family.name}]", values), values, tuple(unresolved))


def check_strong_monotone(family: AlgorithmFamily, language: Language, universe: Iterable[Instance], cap: int) -> VerificationReport:
    """Once some M_{i-1} is right on x, M_i must be right too."""
    members = [family[k] for k in range(1, cap + 1)]
    witness = None
    with stopwatch() as clock:
        for x in universe:
            truth = language(x)
            correct = [m(x) == truth for m in members]
            for i in range(2, cap + 1):
                if correct[i - 2] and not correct[i - 1]:
                    witness = {"instance": x.encoding, "index": i, "truth": truth}
                    break
            if witness:
                break
    return VerificationReport(
        f"strong-monotone:{family.name}",
        FAIL if witness else PASS,
        [witness] if witness else [],
        {"cap": cap},
        clock[0],
    )


def or_combine(family: AlgorithmFamily) -> AlgorithmFamily:
    """M'_k accepts iff some M_i with i <= k accepts; one cost unit per simulation."""

    def member(k: int) -> Solver:
        parts = [family[i] for i in range(1, k + 1)]

        def decide(x: Instance) -> bool:
            for m in parts:
                tick()
                if m(x):
                    return True
            return False

        return Solver(f"or{k}[{family.name}]", decide)

    return AlgorithmFamily(f"or[{family.name}]", member, f"prefix disjunction of {family.name}")


def check_one_sided(family: AlgorithmFamily, language: Language, universe: Iterable[Instance], cap: int) -> VerificationReport:
    """No member ever accepts a non-member (the precondition of :func:`or_combine`)."""
    witness = None
    for x in universe:
        if language(x):
            continue
        k = next((k for k in range(1, cap + 1) if family[k](x)), None)
        if k is not None:
            witness = {"instance": x.encoding, "index": k}
            break
    return VerificationReport(f"one-sided:{family.name}", FAIL if witness else PASS, [witness] if witness else [])


def _selector_value(sel: Parameter, x: Instance) -> int | None:
    try:
        return sel(x)
    except Unresolved:
        return None


def verify_uniform(
    language: Language,
    parameterization: Parameterization,
    witness: UniformWitness,
    universe: Iterable[Instance],
    cap: int,
    check_id: str | None = None,
) -> VerificationReport:
    """(a) the parameterization is bounded by the selector; (b) M_i agrees with L on selector slice i.

    A growth trend in (a) makes the verdict inconclusive rather than failing.
    Instances whose selector value exceeds ``cap`` are listed as unresolved
    when they are members of L, since no tested member accepts them.
    """
    trunc = as_truncation(universe)
    sel = witness.selector
    with stopwatch() as clock:
        kappa_vals = {x: _selector_value(sel, x) for x in trunc}
        known = trunc.where(lambda x: kappa_vals[x] is not None)
        table = param_leq(sel, parameterization.representative, known, cap)
        status_a = PASS if table.bounded else INCONCLUSIVE

        witnesses = []
        members = {i: witness.family[i] for i in range(1, cap + 1)}
        for x in known:
            k = kappa_vals[x]
            if k > cap:
                continue
            truth = language(x)
            for i in range(max(k, 1), cap + 1):
                if members[i](x) != truth:
                    witnesses.append({"condition": "slice-agreement", "index": i, "instance": x.encoding, "truth": truth})
                    break
            if witnesses:
                break
        status_b = FAIL if witnesses else PASS
        unresolved = [x.encoding for x in trunc if (kappa_vals[x] is None or kappa_vals[x] > cap) and language(x)]
    return VerificationReport(
        check_id or f"uniform:{language.name}:{witness.family.name}",
        combine_status(status_a, status_b),
        witnesses,
        {"selector_bound": table.as_dict(), "unresolved": unresolved},
        clock[0],
    )


def verify_strongly_uniform(
    language: Language,
    parameterization: Parameterization,
    witness: UniformWitness,
    budget: StepBudget | None,
    universe: Iterable[Instance],
    cap: int,
    check_id: str | None = None,
) -> VerificationReport:
    """:func:`verify_uniform` plus ``cost(M_k, x) <= slack * rule(f(k), |x|)`` for all k <= cap."""
    budget = budget or witness.budget
    if witness.bound is None or budget is None:
        raise ValueError("strongly uniform verification needs a bound function and a budget")
    trunc = as_truncation(universe)
    base = verify_uniform(language, parameterization, witness, trunc, cap)
    with stopwatch() as clock:
        over = None
        worst = []
        for k in range(1, cap + 1):
            m = witness.family[k]
            fk = witness.bound(k)
            peak = 0
            for x in trunc:
                _, cost = m.measure(x)
                allowed = budget.allowed(fk, x.length)
                peak = max(peak, cost)
                if cost > allowed and over is None:
                    over = {"condition": "budget", "index": k, "instance": x.encoding, "measured": cost, "allowed": allowed}
            worst.append({"k": k, "f": fk, "measured_max": peak})
    witnesses = list(base.witnesses) + ([over] if over else [])
    return VerificationReport(
        check_id or f"strongly-uniform:{language.name}:{witness.family.name}",
        combine_status(base.status, FAIL if over else PASS),
        witnesses,
        dict(base.tables, budget={"label": budget.label, "slack": budget.slack, "per_index": worst}),
        base.millis + clock[0],
    )
