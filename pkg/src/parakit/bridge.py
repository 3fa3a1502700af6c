"""Moving between pair-set problems, (language, parameter) problems and promise families.

Pair-set problems are sets of (x, k) pairs. They become (language, parameter)
problems through the padded word ``x#1^k``, whose parameter is read back
from the padding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .families import AlgorithmFamily, UniformWitness
from .kernel import Instance, Language, Parameter, StepBudget, as_truncation, param_leq
from .meter import tick
from .promise import PromiseReductionFn, Solver
from .reductions import UniformReduction
from .report import INCONCLUSIVE, PASS, VerificationReport, stopwatch

SEPARATOR = "#"
EMPTY_WORD = Instance("")


@dataclass(frozen=True)
class DFProblem:
    """A set of (x, k) pairs; ``decode`` validates the x part and raises ``ValueError`` otherwise."""

    name: str
    member: Callable[[Instance, int], bool]
    decode: Callable[[str], Instance]

    def __call__(self, x: Instance, k: int) -> bool:
        return bool(self.member(x, k))


@dataclass(frozen=True)
class FGProblem:
    language: Language
    kappa: Parameter
    decode: Callable[[str], Instance]

    @property
    def name(self) -> str:
        return f"({self.language.name}, {self.kappa.name})"


def pad(x: Instance, k: int) -> Instance:
    if k < 0:
        raise ValueError("k must be non-negative")
    return Instance(f"{x.encoding}{SEPARATOR}{'1' * k}")


def unpad(word: str, decode: Callable[[str], Instance]) -> tuple[Instance, int] | None:
    """Split ``x#1^k``; ``None`` when the word is malformed."""
    head, sep, tail = word.rpartition(SEPARATOR)
    if not sep or tail.strip("1"):
        return None
    try:
        x = decode(head)
    except ValueError:
        return None
    return x, len(tail)


def df_to_fg(D: DFProblem) -> FGProblem:
    """Padded-word language; the parameter is the padding length, 1 on malformed words."""

    def member(w: Instance) -> bool:
        parts = unpad(w.encoding, D.decode)
        return parts is not None and D(*parts)

    def kappa(w: Instance) -> int:
        parts = unpad(w.encoding, D.decode)
        return 1 if parts is None else parts[1]

    def decode(word: str) -> Instance:
        return Instance(word)

    return FGProblem(Language(f"pad[{D.name}]", member), Parameter(f"padding[{D.name}]", kappa), decode)


def fg_to_df(F: FGProblem) -> DFProblem:
    """(x, k) is a member iff x is in the language and k is exactly kappa(x)."""
    return DFProblem(f"pairs[{F.name}]", lambda x, k: F.language(x) and k == F.kappa(x), F.decode)


# ---------------------------------------------------------------------------
# from slices and classical algorithms to families


def slice_union(F: FGProblem, c: int, slice_solvers: Mapping[int, Solver] | Callable[[int], Solver]) -> Solver:
    """Accept iff one of the slice solvers 1..c accepts. Decides L only on kappa <= c."""
    get = slice_solvers.__getitem__ if isinstance(slice_solvers, Mapping) else slice_solvers
    parts = [get(i) for i in range(1, c + 1)]

    def decide(x: Instance) -> bool:
        return any(s(x) for s in parts)

    return Solver(f"union{c}[{F.name}]", decide)


def fpt_to_fptprime(
    M: Solver,
    kappa: Parameter,
    f: Callable[[int], int],
    c: int,
    d: int = 1,
    slack: float = 1.0,
) -> UniformWitness:
    """M_i runs M when kappa(x) <= i and rejects otherwise.

    Evaluating kappa is charged one unit per input symbol, which is what the
    ``n^d`` term of the budget pays for.
    """

    def member(i: int) -> Solver:
        def decide(x: Instance) -> bool:
            tick(x.length)
            if kappa(x) > i:
                return False
            return M(x)

        return Solver(f"{M.name}|{kappa.name}<={i}", decide)

    family = AlgorithmFamily(f"guarded[{M.name}]", member, f"{M.name} guarded by {kappa.name}")
    budget = StepBudget(lambda fv, n: n**d + fv * n**c, slack, f"n^{d}+f*n^{c}")
    return UniformWitness(family, kappa, f, budget)


def fptred_to_su(
    M: PromiseReductionFn,
    kappa: Parameter,
    f: Callable[[int], int],
    g: Callable[[int], int],
    c: int,
    source: str,
    target: str,
    slack: float = 1.0,
) -> UniformReduction:
    """r_i(x) = M(x) when kappa(x) <= i, the empty word otherwise.

    The returned reduction has bound ``f + 1`` (the extra unit per ``n^c``
    pays for evaluating kappa) and image bound ``g``.
    """

    def member(i: int) -> PromiseReductionFn:
        def translate(x: Instance) -> Instance:
            tick(x.length)
            return M(x) if kappa(x) <= i else EMPTY_WORD

        return PromiseReductionFn(f"{M.name}|{kappa.name}<={i}", translate)

    return UniformReduction(f"su[{M.name}]", member, kappa, source, target, lambda k: f(k) + 1, c, slack, g)


# ---------------------------------------------------------------------------
# parameter equivalence


def param_equiv(kappa: Parameter, tau: Parameter, universe: Iterable[Instance], cap: int, check_id: str | None = None) -> VerificationReport:
    """Bounded in both directions passes; a growth trend either way is inconclusive."""
    trunc = as_truncation(universe)
    with stopwatch() as clock:
        forward = param_leq(kappa, tau, trunc, cap)
        backward = param_leq(tau, kappa, trunc, cap)
    witnesses = []
    for t in (forward, backward):
        if t.trend:
            witnesses.append({"condition": "growth-trend", "kappa": t.kappa, "tau": t.tau, "levels": list(t.growing)})
    return VerificationReport(
        check_id or f"equiv:{kappa.name}~{tau.name}",
        PASS if not witnesses else INCONCLUSIVE,
        witnesses,
        {"forward": forward.as_dict(), "backward": backward.as_dict()},
        clock[0],
    )
