"""Small random worlds of finite universes, languages and uniform reductions.

Each world has three universes A, B, C over a handful of words, a random
language and a random representative (values 1..4) on each, and reductions
A -> B -> C. Translator r_i sends x to a fixed membership-preserving image
when the selector allows index i, and to an arbitrary word otherwise, so the
reductions are correct but far from constant families.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .kernel import Instance, Language, Parameter, Parameterization, ParameterizedProblem, Universe, finite_universe
from .promise import PromiseReductionFn
from .reductions import UniformReduction

MAX_VALUE = 4


@dataclass(frozen=True)
class ToyWorld:
    seed: int
    universes: tuple[Universe, Universe, Universe]
    problems: tuple[ParameterizedProblem, ParameterizedProblem, ParameterizedProblem]
    first: UniformReduction
    second: UniformReduction


def _problem(rng: random.Random, label: str, size: int) -> tuple[Universe, ParameterizedProblem]:
    words = [f"{label}{i}" for i in range(size)]
    members = set(rng.sample(words, rng.randint(1, size - 1)))
    values = {Instance(w): rng.randint(1, MAX_VALUE) for w in words}
    lang = Language(f"L{label}", lambda x, m=frozenset(members): x.encoding in m)
    rep = Parameter.from_table(f"rho{label}", values)
    return finite_universe(label, words), ParameterizedProblem(lang, Parameterization(rep, "random"))


def _reduction(rng: random.Random, name: str, src: tuple[Universe, ParameterizedProblem], tgt: tuple[Universe, ParameterizedProblem], cap: int) -> UniformReduction:
    su, sp = src
    tu, tp = tgt
    source_words = [su[i] for i in range(1, su.size + 1)]
    target_words = [tu[i] for i in range(1, tu.size + 1)]
    yes = [y for y in target_words if tp.language(y)]
    no = [y for y in target_words if not tp.language(y)]
    base = {x: rng.choice(yes if sp.language(x) else no) for x in source_words}
    kappa = sp.parameterization.representative
    noise = {(i, x): rng.choice(target_words) for i in range(1, cap + 1) for x in source_words}

    def member(i: int) -> PromiseReductionFn:
        def translate(x: Instance) -> Instance:
            if kappa(x) <= i:
                return base[x]
            return noise.get((i, x), base[x])

        return PromiseReductionFn(f"{name}{i}", translate)

    return UniformReduction(name, member, kappa, su.name, tu.name)


def toy_world(seed: int, size: int = 8, cap: int = MAX_VALUE) -> ToyWorld:
    rng = random.Random(seed)
    a, b, c = (_problem(rng, label, size) for label in "ABC")
    return ToyWorld(
        seed,
        (a[0], b[0], c[0]),
        (a[1], b[1], c[1]),
        _reduction(rng, "r", a, b, cap),
        _reduction(rng, "s", b, c, cap),
    )
