"""Uniform parameterized reductions: verification, composition and solver pull-back.

A uniform reduction is an indexed family of translations ``r_1, r_2, ...``
together with a selector ``kappa`` over the source universe. Translator
``r_i`` only owes correct answers on instances with ``kappa(x) <= i``, and
every later translator must agree with the first one that owed it
(coherence).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .families import AlgorithmFamily, UniformWitness
from .kernel import (
    Instance,
    Parameter,
    ParameterizedProblem,
    Universe,
    as_truncation,
    param_leq,
    poly_budget,
)
from .meter import tick
from .promise import PromiseReductionFn, Solver, TranslationError
from .report import FAIL, INCONCLUSIVE, PASS, VerificationReport, combine_status, stopwatch


class UniverseMismatch(ValueError):
    pass


@dataclass(frozen=True)
class UniformReduction:
    """``family(k)`` is the translator r_k; ``bound`` and ``exponent`` give the budget f(k)*|x|^c."""

    name: str
    family: Callable[[int], PromiseReductionFn]
    selector: Parameter
    source: str
    target: str
    bound: Callable[[int], int] | None = None
    exponent: int | None = None
    slack: float = 1.0
    image_bound: Callable[[int], int] | None = None

    def __getitem__(self, k: int) -> PromiseReductionFn:
        if k < 1:
            raise IndexError("reduction indices start at 1")
        return self.family(k)

    def index_for(self, x: Instance) -> int:
        return max(1, self.selector(x))


def identity_reduction(universe: str, selector: Parameter) -> UniformReduction:
    ident = PromiseReductionFn("id", lambda x: x)
    return UniformReduction("identity", lambda k: ident, selector, universe, universe)


def constant_family(name: str, r: PromiseReductionFn, selector: Parameter, source: str, target: str, **budget) -> UniformReduction:
    """The same translator at every index; coherence then holds trivially."""
    return UniformReduction(name, lambda k: r, selector, source, target, **budget)


# ---------------------------------------------------------------------------
# verification


def verify_uniform_reduction(
    R: UniformReduction,
    src: ParameterizedProblem,
    tgt: ParameterizedProblem,
    universe: Iterable[Instance],
    cap: int,
    image_cap: int | Callable[[int], int] | None = None,
    target_universe: Universe | None = None,
    check_id: str | None = None,
) -> VerificationReport:
    """Check the three reduction conditions for every index ``1..cap``.

    Witness kinds: ``selector-bound`` (growth trend, inconclusive only),
    ``membership`` and ``image-slice`` for condition 2, ``coherence`` for
    condition 3. The image table maps each i to the least target slice j
    holding ``r_i`` of the truncated selector slice; ``normalized`` is
    ``max(i, j)``. ``image_cap`` (a number or a function of i) bounds j and
    defaults to the reduction's own ``image_bound``.
    """
    if image_cap is None:
        image_cap = R.image_bound
    trunc = as_truncation(universe)
    kappa = R.selector
    rep_t = tgt.parameterization.representative
    translators = {i: R[i] for i in range(1, cap + 1)}
    cache: dict[tuple[int, Instance], Instance] = {}

    def image(i: int, x: Instance) -> Instance:
        key = (i, x)
        if key not in cache:
            y = translators[i](x)
            if target_universe is not None and not target_universe.contains(y):
                raise TranslationError(x, y, target_universe.name)
            cache[key] = y
        return cache[key]

    with stopwatch() as clock:
        witnesses: list[dict] = []
        bound = param_leq(kappa, src.parameterization.representative, trunc, cap)
        status_1 = PASS if bound.bounded else INCONCLUSIVE

        kvals = {x: kappa(x) for x in trunc}
        image_rows = []
        failed_2 = False
        for i in range(1, cap + 1):
            j: int | None = None
            for x in trunc:
                if kvals[x] > i:
                    continue
                y = image(i, x)
                if src.language(x) != tgt.language(y):
                    witnesses.append({"condition": "membership", "index": i, "instance": x.encoding, "image": y.encoding})
                    failed_2 = True
                    break
                v = rep_t(y)
                j = v if j is None else max(j, v)
            if failed_2:
                break
            image_rows.append({"i": i, "j": "vacuous" if j is None else j, "normalized": i if j is None else max(i, j)})
            limit = image_cap(i) if callable(image_cap) else image_cap
            if limit is not None and j is not None and j > limit:
                witnesses.append({"condition": "image-slice", "index": i, "found": j, "image_cap": limit})
                failed_2 = True
                break

        failed_3 = False
        for x in trunc:
            k = max(1, kvals[x])
            if k > cap:
                continue
            first = image(k, x)
            for i in range(k + 1, cap + 1):
                y = image(i, x)
                if y != first:
                    witnesses.append(
                        {"condition": "coherence", "instance": x.encoding, "selector": kvals[x], "index": i,
                         "expected": first.encoding, "image": y.encoding}
                    )
                    failed_3 = True
                    break
            if failed_3:
                break

    status = combine_status(status_1, FAIL if failed_2 else PASS, FAIL if failed_3 else PASS)
    return VerificationReport(
        check_id or f"uniform-reduction:{R.name}",
        status,
        witnesses,
        {"selector_bound": bound.as_dict(), "image_slices": image_rows},
        clock[0],
    )


def verify_su_reduction(
    R: UniformReduction,
    src: ParameterizedProblem,
    tgt: ParameterizedProblem,
    universe: Iterable[Instance],
    cap: int,
    slack: float | None = None,
    check_id: str | None = None,
    **kwargs,
) -> VerificationReport:
    """:func:`verify_uniform_reduction` plus ``cost(r_k, x) <= slack * f(k) * |x|^c`` for all k <= cap."""
    if R.bound is None or R.exponent is None:
        raise ValueError("strongly uniform verification needs a bound function and an exponent")
    slack = R.slack if slack is None else slack
    trunc = as_truncation(universe)
    base = verify_uniform_reduction(R, src, tgt, trunc, cap, **kwargs)
    with stopwatch() as clock:
        over = None
        per_index = []
        for k in range(1, cap + 1):
            r = R[k]
            fk = R.bound(k)
            peak = 0
            for x in trunc:
                _, cost = r.measure(x)
                allowed = slack * fk * x.length**R.exponent
                peak = max(peak, cost)
                if cost > allowed and over is None:
                    over = {"condition": "budget", "index": k, "instance": x.encoding, "measured": cost, "allowed": allowed}
            per_index.append({"k": k, "f": fk, "measured_max": peak})
    return VerificationReport(
        check_id or f"su-reduction:{R.name}",
        combine_status(base.status, FAIL if over else PASS),
        list(base.witnesses) + ([over] if over else []),
        dict(base.tables, budget={"exponent": R.exponent, "slack": slack, "per_index": per_index}),
        base.millis + clock[0],
    )


# ---------------------------------------------------------------------------
# constructions


def _composite_selector(kappa: Parameter, first: UniformReduction, kappa2: Parameter) -> Parameter:
    def value(x: Instance) -> int:
        k = kappa(x)
        return max(k, kappa2(first[max(1, k)](x)))

    return Parameter(f"max({kappa.name},{kappa2.name}.r)", value)


def compose(R1: UniformReduction, R2: UniformReduction) -> UniformReduction:
    """R2 after R1: ``r''_i = r'_i . r_i`` with selector ``max(k(x), k'(r_k(x)(x)))``."""
    if R1.target != R2.source:
        raise UniverseMismatch(f"{R1.name} lands in {R1.target}, {R2.name} starts from {R2.source}")
    return UniformReduction(
        f"{R2.name}.{R1.name}",
        lambda i: R1[i].then(R2[i]),
        _composite_selector(R1.selector, R1, R2.selector),
        R1.source,
        R2.target,
    )


def pullback_solver(R: UniformReduction, W: UniformWitness) -> UniformWitness:
    """Solve the source problem by translating with r_k and running M'_k.

    When both parts carry budgets of the form f * n^c the result gets bound
    ``f * f'``, exponent ``c + d`` and slack ``s_R + s_W + 1`` (the extra unit
    pays for the hand-off between the two stages).
    """

    def member(k: int) -> Solver:
        r = R[k]
        m = W.family[k]

        def decide(x: Instance) -> bool:
            tick()
            return m(r(x))

        return Solver(f"{m.name}.{r.name}", decide)

    family = AlgorithmFamily(f"pullback[{W.family.name}]", member, f"{W.family.name} through {R.name}")
    sel = _composite_selector(R.selector, R, W.selector)
    bound = budget = None
    wb = W.budget
    if R.bound is not None and R.exponent is not None and W.bound is not None and wb is not None and wb.exponent is not None:
        f, g = R.bound, W.bound
        bound = lambda k: f(k) * g(k)  # noqa: E731
        budget = poly_budget(R.exponent + wb.exponent, R.slack + wb.slack + 1)
    return UniformWitness(family, sel, bound, budget)
