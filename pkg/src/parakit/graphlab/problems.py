"""Graph universes, (graph, k) pair instances and the decision languages on them.

A pair (G, k) is written as the padded word ``graph6(G) + "#" + "1" * k``.
Neither ``#`` nor ``1`` occurs in graph6, so the split is unambiguous.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Sequence

from ..kernel import Instance, Language, Parameter, Truncation, Universe, naturals_universe
from ..meter import tick
from .canon import canonical_graph6, enumerate_graphs
from .graph import Graph, decode_graph6, encode_graph6
from .params import clique_number, ds_number, independence_number, vc_number

SEPARATOR = "#"


def graph_instance(g: Graph) -> Instance:
    return Instance(encode_graph6(g), g)


def decode_graph_instance(word: str) -> Instance:
    if SEPARATOR in word:
        raise ValueError(f"{word!r} is not a graph6 word")
    return Instance(word, decode_graph6(word))


def pair_instance(g: Graph, k: int) -> Instance:
    if k < 0:
        raise ValueError("k must be non-negative")
    return Instance(f"{encode_graph6(g)}{SEPARATOR}{'1' * k}", (g, k))


def decode_pair(word: str) -> Instance:
    head, sep, pad = word.rpartition(SEPARATOR)
    if not sep or SEPARATOR in head or pad.strip("1"):
        raise ValueError(f"{word!r} is not a graph#1^k word")
    return Instance(word, (decode_graph6(head), len(pad)))


def graph_of(x: Instance) -> Graph:
    v = x.value
    if v is None:
        v = decode_pair(x.encoding).value if SEPARATOR in x.encoding else decode_graph6(x.encoding)
    return v[0] if isinstance(v, tuple) else v


def k_of(x: Instance) -> int:
    v = x.value if x.value is not None else decode_pair(x.encoding).value
    return v[1]


def read_pair(x: Instance) -> tuple[Graph, int]:
    """Charge one unit per input symbol and return the decoded pair."""
    tick(x.length)
    v = x.value if x.value is not None else decode_pair(x.encoding).value
    return v


def split_pair(x: Instance) -> tuple[Instance, Instance]:
    g, k = x.value if x.value is not None else decode_pair(x.encoding).value
    return graph_instance(g), Instance(str(k), k)


# ---------------------------------------------------------------------------
# universes


def _order_stage(x: Instance) -> int:
    return graph_of(x).n


@lru_cache(maxsize=None)
def _corpus(max_n: int) -> tuple[Graph, ...]:
    return tuple(enumerate_graphs(max_n))


def graph_universe(max_n: int = 7, graphs: Sequence[Graph] | None = None) -> Universe:
    """Unlabelled graphs on 1..max_n vertices, by order then graph6 word.

    ``index_of`` accepts any labelling and looks up its canonical form.
    """
    corpus = tuple(graphs) if graphs is not None else _corpus(max_n)
    words = [encode_graph6(g) for g in corpus]
    pos = {w: i + 1 for i, w in enumerate(words)}

    def index_of(x: Instance) -> int:
        word = x.encoding if x.encoding in pos else canonical_graph6(graph_of(x))
        return pos[word]

    return Universe(
        f"graphs(n<={max_n})",
        enumerator=lambda i: Instance(words[i - 1], corpus[i - 1]),
        index_of=index_of,
        decode=decode_graph_instance,
        stage=_order_stage,
        size=len(corpus),
    )


def pair_universe(graphs: Sequence[Graph], max_k: int, name: str | None = None) -> Universe:
    """Pairs (G, k) with k in 0..max_k, graph-major order."""
    graphs = tuple(graphs)
    width = max_k + 1
    gpos: dict[str, int] = {encode_graph6(g): i for i, g in enumerate(graphs)}

    def enumerator(i: int) -> Instance:
        g = graphs[(i - 1) // width]
        return pair_instance(g, (i - 1) % width)

    def index_of(x: Instance) -> int:
        g, k = x.value if x.value is not None else decode_pair(x.encoding).value
        word = encode_graph6(g)
        if word not in gpos:
            word = canonical_graph6(g)
        return gpos[word] * width + k + 1

    return Universe(
        name or f"pairs({len(graphs)} graphs, k<={max_k})",
        enumerator=enumerator,
        index_of=index_of,
        decode=decode_pair,
        stage=_order_stage,
        size=len(graphs) * width,
    )


def graphs_as_truncation(graphs: Iterable[Graph], name: str = "graphs") -> Truncation:
    return Truncation((graph_instance(g) for g in graphs), name, _order_stage)


def pairs_as_truncation(graphs: Iterable[Graph], max_k: int, name: str = "pairs") -> Truncation:
    return Truncation((pair_instance(g, k) for g in graphs for k in range(max_k + 1)), name, _order_stage)


def graph_truncation(max_n: int, min_n: int = 1) -> Truncation:
    graphs = [g for g in _corpus(max_n) if g.n >= min_n]
    return graphs_as_truncation(graphs, f"graphs({min_n}<=n<={max_n})")


def pair_truncation(max_n: int, max_k: int, min_n: int = 1) -> Truncation:
    graphs = [g for g in _corpus(max_n) if g.n >= min_n]
    return pairs_as_truncation(graphs, max_k, f"pairs(n<={max_n}, k<={max_k})")


NATURALS = naturals_universe()


# ---------------------------------------------------------------------------
# parameters and languages


def graph_parameter(name: str, fn: Callable[[Graph], int]) -> Parameter:
    """Lift a graph measure to graph instances and to the graph part of pair instances."""
    return Parameter(name, lambda x: fn(graph_of(x)))


def solution_size() -> Parameter:
    """k of a pair, floored at 1."""
    return Parameter("solution-size", lambda x: max(1, k_of(x)))


def _pair_language(name: str, test: Callable[[Graph, int], bool]) -> Language:
    return Language(name, lambda x: test(graph_of(x), k_of(x)), oracle=True)


VC = _pair_language("VC", lambda g, k: vc_number(g) <= k)
DS = _pair_language("DS", lambda g, k: ds_number(g) <= k)
CLIQUE = _pair_language("Clique", lambda g, k: clique_number(g) >= k)
IS = _pair_language("IS", lambda g, k: independence_number(g) >= k)


def promise_k_at_most(bound: int) -> Language:
    return Language(f"k<={bound}", lambda x: k_of(x) <= bound)


def promise_from(pred: Callable[[Instance], bool], name: str) -> Language:
    return Language(name, pred)


def pairs(instances: Iterable[Instance]) -> list[tuple[Graph, int]]:
    return [(graph_of(x), k_of(x)) for x in instances]
