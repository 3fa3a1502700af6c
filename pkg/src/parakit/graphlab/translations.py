"""Translations between (graph, k) problems and the parameterized problems they connect."""

from __future__ import annotations

from ..kernel import Instance, Parameterization, ParameterizedProblem, canonical_all, canonical_fin, product
from ..promise import PromiseReductionFn
from ..reductions import UniformReduction, constant_family
from .problems import CLIQUE, IS, NATURALS, VC, decode_pair, pair_instance, split_pair

PAIRS = "graph-pairs"


def pair_parameterization() -> Parameterization:
    """All graphs times finitely many k: the representative is k + 1."""
    return product(canonical_all(), canonical_fin(NATURALS), split_pair)


def pair_problem(language) -> ParameterizedProblem:
    return ParameterizedProblem(language, pair_parameterization())


def complement_translation() -> PromiseReductionFn:
    """(G, k) -> (complement(G), k); one cost unit per vertex pair."""

    def translate(x: Instance) -> Instance:
        g, k = x.value if x.value is not None else decode_pair(x.encoding).value
        return pair_instance(g.complement(), k)

    return PromiseReductionFn("complement", translate)


def complement_reduction(name: str = "complement", slack: float = 1.0) -> UniformReduction:
    """Constant-family complement reduction with the source representative as selector."""
    rep = pair_parameterization().representative
    return constant_family(name, complement_translation(), rep, PAIRS, PAIRS, bound=lambda k: 1, exponent=2, slack=slack)


def clique_problem() -> ParameterizedProblem:
    return pair_problem(CLIQUE)


def is_problem() -> ParameterizedProblem:
    return pair_problem(IS)


def vc_problem() -> ParameterizedProblem:
    return pair_problem(VC)
