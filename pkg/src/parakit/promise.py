"""Promise problems, solvers and promise reductions.

Class membership is always checked relative to explicit solvers: a witness is
verified, never searched for in a complexity class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .kernel import Instance, Language, Parameterization, Universe, as_truncation, param_slice
from .meter import metering, tick
from .report import FAIL, PASS, VerificationReport, stopwatch


@dataclass(frozen=True)
class Solver:
    name: str
    decide: Callable[[Instance], bool]

    def __call__(self, x: Instance) -> bool:
        return bool(self.decide(x))

    def measure(self, x: Instance) -> tuple[bool, int]:
        with metering() as m:
            answer = bool(self.decide(x))
        return answer, m.count


@dataclass(frozen=True)
class PromiseProblem:
    language: Language
    promise: Language

    @property
    def name(self) -> str:
        return f"({self.language.name}, {self.promise.name})"


@dataclass(frozen=True)
class PromiseReductionFn:
    name: str
    translate: Callable[[Instance], Instance]

    def __call__(self, x: Instance) -> Instance:
        return self.translate(x)

    def measure(self, x: Instance) -> tuple[Instance, int]:
        with metering() as m:
            y = self.translate(x)
        return y, m.count

    def then(self, other: "PromiseReductionFn") -> "PromiseReductionFn":
        """``other`` applied after ``self``."""
        return PromiseReductionFn(f"{other.name}.{self.name}", lambda x: other.translate(self.translate(x)))


class TranslationError(ValueError):
    """A reduction produced a word outside the target universe."""

    def __init__(self, source: Instance, image: Instance, universe: str) -> None:
        super().__init__(f"{image.encoding!r} (from {source.encoding!r}) is not an instance of {universe}")
        self.source = source
        self.image = image


def lookup_solver(name: str, accept: Iterable[Instance]) -> Solver:
    """Decides membership in an explicit finite set; one cost unit per symbol read."""
    table = frozenset(accept)

    def decide(x: Instance) -> bool:
        tick(x.length)
        return x in table

    return Solver(name, decide)


def check_solves(solver: Solver, problem: PromiseProblem, universe: Iterable[Instance], check_id: str | None = None) -> VerificationReport:
    """Pass iff the solver matches the language on every promised instance."""
    with stopwatch() as clock:
        checked = 0
        witness = None
        for x in universe:
            if not problem.promise(x):
                continue
            checked += 1
            truth = problem.language(x)
            answer = solver(x)
            if answer != truth:
                witness = {"instance": x.encoding, "truth": truth, "answer": answer}
                break
    return VerificationReport(
        check_id or f"solves:{solver.name}:{problem.name}",
        FAIL if witness else PASS,
        [witness] if witness else [],
        {"checked": checked},
        clock[0],
    )


def check_promise_reduction(
    r: PromiseReductionFn,
    source: PromiseProblem,
    target: PromiseProblem,
    universe: Iterable[Instance],
    target_universe: Universe | None = None,
    check_id: str | None = None,
) -> VerificationReport:
    """Both reduction conditions on every promised instance.

    Condition ``membership``: x in L iff r(x) in L'. Condition ``promise``:
    r(x) lies in the target promise. An image outside ``target_universe``
    raises :class:`TranslationError` instead of failing.
    """
    with stopwatch() as clock:
        witnesses = []
        checked = 0
        for x in universe:
            if not source.promise(x):
                continue
            checked += 1
            y = r(x)
            if target_universe is not None and not target_universe.contains(y):
                raise TranslationError(x, y, target_universe.name)
            if source.language(x) != target.language(y):
                witnesses.append({"condition": "membership", "instance": x.encoding, "image": y.encoding})
                break
            if not target.promise(y):
                witnesses.append({"condition": "promise", "instance": x.encoding, "image": y.encoding})
                break
    return VerificationReport(
        check_id or f"promise-reduction:{r.name}",
        FAIL if witnesses else PASS,
        witnesses,
        {"checked": checked},
        clock[0],
    )


def in_class_nonuniform(
    language: Language,
    parameterization: Parameterization,
    catalog: Sequence[Solver],
    universe: Iterable[Instance],
    cap: int,
    check_id: str | None = None,
) -> VerificationReport:
    """Cover every slice ``1..cap`` of the representative with some catalog solver.

    For slice i the catalog entry at position i is tried first, then the rest
    in catalog order, so an indexed family gets the assignment i -> M_i when it
    works.
    """
    trunc = as_truncation(universe)
    kappa = parameterization.representative
    with stopwatch() as clock:
        assignment: dict[int, str] = {}
        witnesses = []
        for i in range(1, cap + 1):
            members = param_slice(kappa, i, trunc)
            order = list(range(len(catalog)))
            if i - 1 < len(catalog):
                order.remove(i - 1)
                order.insert(0, i - 1)
            found = None
            misses = []
            for pos in order:
                solver = catalog[pos]
                bad = next((x for x in members if solver(x) != language(x)), None)
                if bad is None:
                    found = solver
                    break
                misses.append({"solver": solver.name, "instance": bad.encoding, "truth": language(bad)})
            if found is None:
                witnesses.append({"slice": i, "disagreements": misses})
                break
            assignment[i] = found.name
    return VerificationReport(
        check_id or f"nonuniform:{language.name}:{parameterization.name}",
        FAIL if witnesses else PASS,
        witnesses,
        {"assignment": [{"slice": i, "solver": s} for i, s in sorted(assignment.items())]},
        clock[0],
    )
