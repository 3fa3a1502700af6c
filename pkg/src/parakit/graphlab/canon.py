"""Canonical labelling and exhaustive generation of unlabelled graphs.

Canonical forms come from individualisation-refinement: the vertex set is
split into an equitable ordered partition, non-singleton cells are broken by
individualising a vertex, and the lexicographically largest adjacency string
over all leaves wins. Twins inside a cell are interchangeable (swapping them
is an automorphism fixing every individualised vertex), so only one twin per
class is branched on. That keeps complete, empty and complete multipartite
graphs cheap.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, encode_graph6


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            mask = 0
            for v in cells[s]:
                mask |= 1 << v
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(_popcount(adj[v] & mask), []).append(v)
                if len(groups) > 1:
                    changed = True
                    out.extend(groups[k] for k in sorted(groups))
                else:
                    out.append(cell)
            if changed:
                cells = out
                break
    return cells


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    n = len(order)
    return tuple(1 if adj[order[i]] >> order[j] & 1 else 0 for j in range(1, n) for i in range(j))


def _twin_representatives(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        if not any(adj[v] & ~(1 << r) == adj[r] & ~(1 << v) for r in reps):
            reps.append(v)
    return reps


def canonical_order(g: Graph) -> list[int]:
    """Position -> vertex map of the canonical relabelling."""
    adj = g.adj
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, order
            return
        cell = cells[target]
        for v in _twin_representatives(adj, cell):
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    if g.n == 0:
        return []
    search([list(range(g.n))])
    return best[1]


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    return g.relabel(pos)


def canonical_graph6(g: Graph) -> str:
    return encode_graph6(canonical_form(g))


@lru_cache(maxsize=None)
def graphs_of_order(n: int) -> tuple[Graph, ...]:
    """All unlabelled graphs on exactly ``n`` vertices, canonical, sorted by graph6 word.

    Order-``n`` graphs are grown from order ``n-1`` by attaching a new vertex to
    a subset ``S``. Deleting a minimum-degree vertex from any graph gives such a
    parent, so only subsets with ``|S|`` at most the smallest resulting degree
    are tried.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    if n == 0:
        return (Graph(0),)
    if n == 1:
        return (Graph(1),)
    seen: dict[str, Graph] = {}
    for parent in graphs_of_order(n - 1):
        degs = parent.degrees()
        new = n - 1
        for subset in range(1 << new):
            size = _popcount(subset)
            if any(degs[u] + (subset >> u & 1) < size for u in range(new)):
                continue
            edges = parent.edges + tuple((u, new) for u in range(new) if subset >> u & 1)
            canon = canonical_form(Graph(n, edges))
            word = encode_graph6(canon)
            if word not in seen:
                seen[word] = canon
    return tuple(seen[w] for w in sorted(seen))


def enumerate_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    """Every unlabelled graph with ``min_n <= n <= max_n``, by order then graph6 word."""
    out: list[Graph] = []
    for n in range(min_n, max_n + 1):
        out.extend(graphs_of_order(n))
    return out
