"""Parameterized algorithm families on (graph, k) pairs.

Every member first reads its input (one unit per symbol) and rejects pairs
outside its own promise, so it never accepts a non-member.
"""

from __future__ import annotations

from ..families import AlgorithmFamily
from ..kernel import Instance
from ..meter import tick
from ..promise import Solver
from .graph import Graph
from .params import degeneracy_order
from .problems import read_pair


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _popcount(x: int) -> int:
    return bin(x).count("1")


# ---------------------------------------------------------------------------
# vertex cover


def vc_branch(g: Graph, k: int, alive: int | None = None) -> bool:
    """Bounded search tree: some endpoint of any remaining edge is in the cover."""
    if alive is None:
        alive = (1 << g.n) - 1
    for u in _bits(alive):
        tick()
        nb = g.adj[u] & alive
        if nb:
            if k == 0:
                return False
            v = (nb & -nb).bit_length() - 1
            return vc_branch(g, k - 1, alive & ~(1 << u)) or vc_branch(g, k - 1, alive & ~(1 << v))
    return True


def vc_member(k: int) -> Solver:
    def decide(x: Instance) -> bool:
        g, budget = read_pair(x)
        if budget > k:
            return False
        return vc_branch(g, budget)

    return Solver(f"A{k}", decide)


def vc_family() -> AlgorithmFamily:
    return AlgorithmFamily("vc", vc_member, "exact branching for k' <= k, no otherwise")


# ---------------------------------------------------------------------------
# independent set


def is_search(g: Graph, k: int, alive: int | None = None) -> bool:
    """Some maximum independent set meets N[v] for any v; branch on a minimum-degree v."""
    if alive is None:
        alive = (1 << g.n) - 1
    if k == 0:
        return True
    if _popcount(alive) < k:
        return False
    verts = _bits(alive)
    tick(len(verts))
    v = min(verts, key=lambda u: (_popcount(g.adj[u] & alive), u))
    for w in _bits((g.adj[v] | 1 << v) & alive):
        tick()
        if is_search(g, k - 1, alive & ~(g.adj[w] | 1 << w)):
            return True
    return False


def is_member(k: int) -> Solver:
    def decide(x: Instance) -> bool:
        g, size = read_pair(x)
        if size > k:
            return False
        return is_search(g, size)

    return Solver(f"B{k}", decide)


def is_family() -> AlgorithmFamily:
    return AlgorithmFamily("is", is_member, "bounded search for k' <= k, no otherwise")


# ---------------------------------------------------------------------------
# dominating set on degenerate graphs


def _closed(g: Graph, v: int) -> int:
    return g.adj[v] | 1 << v


def _maximal_traces(g: Graph, candidates: list[int], white: int) -> list[int]:
    """One vertex per distinct white trace, dropping traces strictly inside another."""
    by_trace: dict[int, int] = {}
    for v in candidates:
        tick()
        by_trace.setdefault(_closed(g, v) & white, v)
    traces = [t for t in by_trace if t]
    keep = [t for t in traces if not any(t != o and t & o == t for o in traces)]
    return [by_trace[t] for t in sorted(keep, key=lambda t: (-_popcount(t), by_trace[t]))]


def ds_search(g: Graph, k: int, white: int | None = None) -> bool:
    """Exact search for k vertices dominating the white set.

    Two branching sets are valid at every node and the smaller one is used:
    vertices whose closed neighbourhood holds at least |W|/k white vertices
    (some solution vertex must, by pigeonhole), and the closed neighbourhood of
    a minimum-degree white vertex. Both are reduced to one vertex per maximal
    white trace. In a d-degenerate graph the first set has O(dk) members once
    |W| >= 2dk, and the second has O(dk)^d distinct traces below that.
    """
    if white is None:
        white = (1 << g.n) - 1
    if not white:
        return True
    if k == 0:
        return False
    w_count = _popcount(white)
    need = -(-w_count // k)
    heavy = []
    for v in range(g.n):
        tick()
        if _popcount(_closed(g, v) & white) >= need:
            heavy.append(v)
    if not heavy:
        return False
    whites = _bits(white)
    tick(len(whites))
    w0 = min(whites, key=lambda u: (_popcount(g.adj[u]), u))
    local = _bits(_closed(g, w0))
    options = min(_maximal_traces(g, heavy, white), _maximal_traces(g, local, white), key=len)
    for v in options:
        if ds_search(g, k - 1, white & ~_closed(g, v)):
            return True
    return False


def ds_member(j: int) -> Solver:
    """A_{j,j}: exact on pairs with degeneracy <= j and k' <= j, no otherwise."""

    def decide(x: Instance) -> bool:
        g, k = read_pair(x)
        if k > j:
            return False
        # a j-degenerate graph has fewer than j*n edges
        if g.m > j * g.n:
            return False
        _, d = degeneracy_order(g)
        if d > j:
            return False
        return ds_search(g, k)

    return Solver(f"A{j},{j}", decide)


def ds_family() -> AlgorithmFamily:
    return AlgorithmFamily("ds", ds_member, "degeneracy-guided branching, diagonal A_{j,j}")


def ds_bound(c: int = 1):
    """f(j) = j^(c*j^2), the diagonal family's bound shape."""
    return lambda j: j ** (c * j * j)
