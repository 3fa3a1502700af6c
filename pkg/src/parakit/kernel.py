"""Universes, languages, parameters and parameterizations.

A parameterization is carried by one representative parameter: the set of
languages it denotes is everything contained in some slice of that parameter.
All set-valued results come back in enumeration order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from .meter import metering


@dataclass(frozen=True)
class Instance:
    """A finite word. ``value`` caches the decoded domain object and is ignored by equality."""

    encoding: str
    value: Any = field(default=None, compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.encoding)

    def __str__(self) -> str:
        return self.encoding


class Truncation(Sequence[Instance]):
    """A finite, ordered prefix of a universe.

    ``stage`` maps an instance to the growth stage it first appears in (graph
    order, for graph universes); it is what trend detection in
    :func:`param_leq` compares across. Without it the truncation is a single
    stage and no trend can be observed.
    """

    def __init__(
        self,
        instances: Iterable[Instance],
        name: str = "",
        stage: Callable[[Instance], int] | None = None,
    ) -> None:
        self.instances = tuple(instances)
        self.name = name
        self.stage = stage

    def __getitem__(self, i):
        return self.instances[i]

    def __len__(self) -> int:
        return len(self.instances)

    def __iter__(self) -> Iterator[Instance]:
        return iter(self.instances)

    def where(self, pred: Callable[[Instance], bool], name: str | None = None) -> "Truncation":
        return Truncation((x for x in self.instances if pred(x)), name or self.name, self.stage)

    def __repr__(self) -> str:
        return f"Truncation({self.name!r}, {len(self)} instances)"


def as_truncation(items: Iterable[Instance]) -> Truncation:
    return items if isinstance(items, Truncation) else Truncation(items)


@dataclass(frozen=True)
class Universe:
    """A countable instance domain.

    ``enumerator`` is injective from indices ``1, 2, ...``; ``index_of`` inverts
    it; ``decode`` turns a word back into an instance and raises ``ValueError``
    on words outside the universe.
    """

    name: str
    enumerator: Callable[[int], Instance]
    index_of: Callable[[Instance], int]
    decode: Callable[[str], Instance]
    stage: Callable[[Instance], int] | None = None
    size: int | None = None

    def __getitem__(self, index: int) -> Instance:
        if index < 1 or (self.size is not None and index > self.size):
            raise IndexError(index)
        return self.enumerator(index)

    def truncation(self, n: int) -> Truncation:
        if self.size is not None:
            n = min(n, self.size)
        return Truncation((self.enumerator(i) for i in range(1, n + 1)), f"{self.name}[:{n}]", self.stage)

    def contains(self, x: Instance) -> bool:
        try:
            self.decode(x.encoding)
        except ValueError:
            return False
        return True


def finite_universe(name: str, words: Sequence[str], stage: Callable[[Instance], int] | None = None) -> Universe:
    """Universe over an explicit word list; index ``i`` is ``words[i-1]``."""
    words = tuple(words)
    pos = {w: i + 1 for i, w in enumerate(words)}

    def decode(word: str) -> Instance:
        if word not in pos:
            raise ValueError(f"{word!r} is not in universe {name}")
        return Instance(word)

    return Universe(
        name,
        enumerator=lambda i: Instance(words[i - 1]),
        index_of=lambda x: pos[x.encoding],
        decode=decode,
        stage=stage,
        size=len(words),
    )


def naturals_universe() -> Universe:
    """The naturals 0, 1, 2, ... in decimal; k has index k + 1."""

    def decode(word: str) -> Instance:
        if not word.isdigit() or (len(word) > 1 and word[0] == "0"):
            raise ValueError(f"{word!r} is not a natural number")
        return Instance(word, int(word))

    return Universe(
        "naturals",
        enumerator=lambda i: Instance(str(i - 1), i - 1),
        index_of=lambda x: int(x.encoding) + 1,
        decode=decode,
    )


@dataclass(frozen=True)
class Language:
    name: str
    member: Callable[[Instance], bool]
    oracle: bool = False

    def __call__(self, x: Instance) -> bool:
        return bool(self.member(x))

    def complement(self) -> "Language":
        return Language(f"co-{self.name}", lambda x: not self.member(x), self.oracle)


def full_language(name: str = "all") -> Language:
    return Language(name, lambda x: True, oracle=True)


class Unresolved(KeyError):
    """A table-backed parameter was asked about an instance it has no value for."""


@dataclass(frozen=True)
class Parameter:
    """Total map from instances to naturals. ``measure`` reports the cost of one evaluation."""

    name: str
    fn: Callable[[Instance], int]

    def __call__(self, x: Instance) -> int:
        return self.fn(x)

    def measure(self, x: Instance) -> tuple[int, int]:
        with metering() as m:
            value = self.fn(x)
        return value, m.count

    def then(self, scale: Callable[[int], int], name: str) -> "Parameter":
        """Post-compose with a value rescaling, e.g. ``lambda v: 2 ** v``."""
        return Parameter(name, lambda x: scale(self.fn(x)))

    @classmethod
    def constant(cls, value: int = 1, name: str | None = None) -> "Parameter":
        return cls(name or f"const{value}", lambda x: value)

    @classmethod
    def from_table(cls, name: str, table: Mapping[Instance, int]) -> "Parameter":
        frozen = dict(table)

        def look(x: Instance) -> int:
            try:
                return frozen[x]
            except KeyError:
                raise Unresolved(x.encoding) from None

        return cls(name, look)


@dataclass(frozen=True)
class Parameterization:
    representative: Parameter
    note: str = "constructed"

    @property
    def name(self) -> str:
        return self.representative.name

    def bound(self, language: Iterable[Instance]) -> int:
        """Least c with ``language`` inside slice c (0 for the empty language)."""
        return max((self.representative(x) for x in language), default=0)

    def contains(self, language: Iterable[Instance], cap: int) -> bool:
        """Whether the finite ``language`` is bounded by a slice of index at most ``cap``."""
        return self.bound(language) <= cap


@dataclass(frozen=True)
class ParameterizedProblem:
    language: Language
    parameterization: Parameterization

    @property
    def name(self) -> str:
        return f"({self.language.name}, {self.parameterization.name})"


@dataclass(frozen=True)
class StepBudget:
    """Allowed cost ``slack * rule(f_value, length)``.

    ``exponent`` is set for rules of the form ``f * n**c`` so that composite
    budgets can be derived from their parts.
    """

    rule: Callable[[int, int], float]
    slack: float = 1.0
    label: str = ""
    exponent: int | None = None

    def allowed(self, f_value: int, length: int) -> float:
        return self.slack * self.rule(f_value, length)

    def with_slack(self, slack: float) -> "StepBudget":
        return StepBudget(self.rule, slack, self.label, self.exponent)

    def is_monotone(self, max_f: int, max_len: int) -> bool:
        for f in range(max_f + 1):
            for n in range(max_len + 1):
                here = self.rule(f, n)
                if (f < max_f and self.rule(f + 1, n) < here) or (n < max_len and self.rule(f, n + 1) < here):
                    return False
        return True


def poly_budget(c: int, slack: float = 1.0) -> StepBudget:
    """The rule ``(f, n) -> f * n**c``."""
    return StepBudget(lambda f, n: f * n**c, slack, f"f*n^{c}", c)


# ---------------------------------------------------------------------------
# slices and the parameter preorder


def param_slice(kappa: Parameter, c: int, universe: Iterable[Instance]) -> tuple[Instance, ...]:
    """``{x in universe : kappa(x) <= c}``, in enumeration order."""
    return tuple(x for x in universe if kappa(x) <= c)


@dataclass(frozen=True)
class BoundTable:
    """``rows[i] = max{kappa(x) : tau(x) <= i}`` over a truncation; ``None`` marks an empty slice.

    ``trend`` is set when some level ``tau = v`` saw its kappa-maximum rise at
    two or more stage steps. That is evidence of unboundedness, never proof.
    """

    kappa: str
    tau: str
    rows: tuple[int | None, ...]
    trend: bool = False
    growing: tuple[int, ...] = ()

    @property
    def bounded(self) -> bool:
        return not self.trend

    @property
    def cap(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, i: int) -> int | None:
        return self.rows[i]

    def violations(self, bound: Callable[[int], int]) -> list[tuple[int, int, int]]:
        """Rows exceeding ``bound(i)`` as ``(i, value, bound)``; vacuous rows never violate."""
        return [(i, v, bound(i)) for i, v in enumerate(self.rows) if v is not None and v > bound(i)]

    def as_dict(self) -> dict[str, Any]:
        return {
            "kappa": self.kappa,
            "tau": self.tau,
            "rows": [{"i": i, "f": "vacuous" if v is None else v} for i, v in enumerate(self.rows)],
            "trend": self.trend,
            "growing_levels": list(self.growing),
        }


def param_leq(kappa: Parameter, tau: Parameter, universe: Iterable[Instance], cap: int) -> BoundTable:
    """Tabulate how far ``kappa`` is bounded by ``tau`` on a truncation, rows ``0..cap``."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    trunc = as_truncation(universe)
    stage_of = trunc.stage or (lambda x: 0)
    level_max: dict[int, int] = {}
    by_stage: dict[int, dict[int, int]] = {}
    for x in trunc:
        t = tau(x)
        if t > cap:
            continue
        k = kappa(x)
        if k > level_max.get(t, -1):
            level_max[t] = k
        per = by_stage.setdefault(stage_of(x), {})
        if k > per.get(t, -1):
            per[t] = k

    rows: list[int | None] = []
    running: int | None = None
    for i in range(cap + 1):
        if i in level_max:
            running = level_max[i] if running is None else max(running, level_max[i])
        rows.append(running)

    # cumulative per-level maxima stage by stage
    rises: dict[int, int] = {}
    current: dict[int, int] = {}
    for s in sorted(by_stage):
        for level, k in by_stage[s].items():
            if level in current and k > current[level]:
                rises[level] = rises.get(level, 0) + 1
            if k > current.get(level, -1):
                current[level] = k
    growing = tuple(sorted(level for level, r in rises.items() if r >= 2))
    return BoundTable(kappa.name, tau.name, tuple(rows), bool(growing), growing)


def combine(kappa: Parameter, tau: Parameter, mode: str) -> Parameter:
    ops = {"sum": lambda a, b: a + b, "product": lambda a, b: a * b, "max": max, "min": min}
    if mode not in ops:
        raise ValueError(f"unknown combination mode {mode!r}")
    op = ops[mode]
    return Parameter(f"{mode}({kappa.name},{tau.name})", lambda x: op(kappa(x), tau(x)))


def meet(p: Parameterization, q: Parameterization) -> Parameterization:
    return Parameterization(combine(p.representative, q.representative, "max"), "meet")


def join(p: Parameterization, q: Parameterization) -> Parameterization:
    return Parameterization(combine(p.representative, q.representative, "min"), "join")


def canonical_all(universe: Universe | None = None) -> Parameterization:
    """All languages: every instance sits in slice 1."""
    return Parameterization(Parameter.constant(1, "all"), "canonical")


def canonical_fin(universe: Universe) -> Parameterization:
    """Finite languages: the enumeration index is the representative."""
    return Parameterization(Parameter(f"index[{universe.name}]", universe.index_of), "canonical")


def product(p: Parameterization, q: Parameterization, split: Callable[[Instance], tuple[Instance, Instance]]) -> Parameterization:
    """Parameterization of a pair universe: componentwise, combined by max."""
    rp, rq = p.representative, q.representative

    def rep(x: Instance) -> int:
        a, b = split(x)
        return max(rp(a), rq(b))

    return Parameterization(Parameter(f"{rp.name}x{rq.name}", rep), "product")

