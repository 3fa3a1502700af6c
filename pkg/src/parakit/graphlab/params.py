"""Graph parameters.

Values are raw graph measures, so edgeless graphs have degeneracy, arboricity
and treewidth 0. Exponential-time measures refuse graphs above ``cap``
vertices instead of approximating.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..meter import tick
from .graph import Graph

DEFAULT_CAP = 12


class CapExceeded(ValueError):
    pass


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapExceeded(f"{what}: graph has {g.n} vertices, cap is {cap}")


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Minimum-degree peeling. Returns the removal order and the degeneracy."""
    alive = (1 << g.n) - 1
    deg = [g.degree(v) for v in range(g.n)]
    tick(g.n)
    order = []
    best = 0
    while alive:
        v = min(_bits(alive), key=lambda u: (deg[u], u))
        tick(_popcount(alive))
        best = max(best, deg[v])
        order.append(v)
        alive &= ~(1 << v)
        for u in _bits(g.adj[v] & alive):
            tick()
            deg[u] -= 1
    return order, best


def degeneracy(g: Graph) -> int:
    return degeneracy_order(g)[1]


@lru_cache(maxsize=None)
def arboricity(g: Graph) -> int:
    """Nash-Williams: max over vertex sets S with |S| >= 2 of ceil(|E(G[S])| / (|S| - 1))."""
    _check_cap(g, 16, "arboricity")
    best = 0
    for mask in range(1, 1 << g.n):
        size = _popcount(mask)
        if size < 2:
            continue
        inside = sum(_popcount(g.adj[v] & mask) for v in _bits(mask)) // 2
        best = max(best, -(-inside // (size - 1)))
    return best


def forest_cover_number(g: Graph) -> int:
    """Fewest forests covering the edge set, by explicit edge-colouring search."""
    if g.m == 0:
        return 0
    edges = sorted(g.edges, key=lambda e: -(g.degree(e[0]) + g.degree(e[1])))

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def colourable(k: int) -> bool:
        forests = [list(range(g.n)) for _ in range(k)]

        def place(i: int, used: int) -> bool:
            if i == len(edges):
                return True
            u, v = edges[i]
            # colours beyond the first unused one are symmetric
            for c in range(min(used + 1, k)):
                parent = forests[c]
                ru, rv = find(parent, u), find(parent, v)
                if ru == rv:
                    continue
                parent[ru] = rv
                if place(i + 1, max(used, c + 1)):
                    return True
                parent[ru] = ru
            return False

        return place(0, 0)

    k = 1
    while not colourable(k):
        k += 1
    return k


@lru_cache(maxsize=None)
def treewidth(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Exact treewidth by dynamic programming over elimination prefixes.

    ``TW(S) = min over v in S of max(TW(S - v), Q(S - v, v))`` where ``Q(S, v)``
    counts vertices outside ``S + v`` reachable from ``v`` through ``S``.
    """
    _check_cap(g, cap, "treewidth")
    n = g.n
    if n == 0:
        return 0
    full = (1 << n) - 1

    def q(inner: int, v: int) -> int:
        seen = 1 << v
        frontier = [v]
        reach = 0
        while frontier:
            u = frontier.pop()
            nb = g.adj[u] & ~seen
            seen |= nb
            for w in _bits(nb):
                if inner >> w & 1:
                    frontier.append(w)
                else:
                    reach |= 1 << w
        return _popcount(reach)

    tw = [0] * (1 << n)
    tw[0] = -1
    for s in range(1, 1 << n):
        best = n
        for v in _bits(s):
            rest = s & ~(1 << v)
            val = max(tw[rest], q(rest, v))
            if val < best:
                best = val
        tw[s] = best
    return max(tw[full], 0)


def _connected(g: Graph, mask: int) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v] & mask
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


@lru_cache(maxsize=None)
def hadwiger(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Largest t such that K_t is a minor: t disjoint connected, pairwise adjacent branch sets."""
    _check_cap(g, cap, "hadwiger")
    if g.n == 0:
        return 0
    sets = [m for m in range(1, 1 << g.n) if _connected(g, m)]
    nbhd = {}
    for m in sets:
        out = 0
        for v in _bits(m):
            out |= g.adj[v]
        nbhd[m] = out & ~m
    # branch sets are ordered by their lowest vertex to avoid permutations
    sets.sort(key=lambda m: (m & -m, m))
    best = 1

    def grow(chosen: list[int], used: int, start: int) -> None:
        nonlocal best
        best = max(best, len(chosen))
        if len(chosen) + _popcount(~used & ((1 << g.n) - 1)) <= best:
            return
        for idx in range(start, len(sets)):
            m = sets[idx]
            if m & used:
                continue
            if all(nbhd[m] & c for c in chosen):
                grow(chosen + [m], used | m, idx + 1)

    grow([], 0, 0)
    return best


def has_kt_t(g: Graph, t: int) -> bool:
    """Whether K_{t,t} occurs as a (not necessarily induced) subgraph."""
    if 2 * t > g.n:
        return False
    for a in combinations(range(g.n), t):
        common = (1 << g.n) - 1
        for v in a:
            common &= g.adj[v]
        if _popcount(common) >= t:
            return True
    return False


@lru_cache(maxsize=None)
def kij_index(g: Graph) -> int:
    """Least t >= 1 such that G has no K_{t,t} subgraph."""
    t = 1
    while has_kt_t(g, t):
        t += 1
    return t


@lru_cache(maxsize=None)
def vc_number(g: Graph, cap: int = DEFAULT_CAP) -> int:
    _check_cap(g, cap, "vc_number")
    for size in range(g.n + 1):
        for cover in combinations(range(g.n), size):
            mask = sum(1 << v for v in cover)
            if all(mask >> u & 1 or mask >> v & 1 for u, v in g.edges):
                return size
    return g.n


@lru_cache(maxsize=None)
def ds_number(g: Graph, cap: int = DEFAULT_CAP) -> int:
    _check_cap(g, cap, "ds_number")
    full = (1 << g.n) - 1
    for size in range(g.n + 1):
        for ds in combinations(range(g.n), size):
            covered = 0
            for v in ds:
                covered |= g.adj[v] | 1 << v
            if covered == full:
                return size
    return g.n


@lru_cache(maxsize=None)
def clique_number(g: Graph, cap: int = DEFAULT_CAP) -> int:
    _check_cap(g, cap, "clique_number")
    best = 0
    for size in range(1, g.n + 1):
        if any(all(g.adj[u] >> v & 1 for u, v in combinations(c, 2)) for c in combinations(range(g.n), size)):
            best = size
        else:
            break
    return best


def independence_number(g: Graph, cap: int = DEFAULT_CAP) -> int:
    return clique_number(g.complement(), cap)


GRAPH_PARAMETERS = {
    "degeneracy": degeneracy,
    "arboricity": arboricity,
    "treewidth": treewidth,
    "hadwiger": hadwiger,
    "kij": kij_index,
    "vc": vc_number,
    "ds": ds_number,
    "order": lambda g: g.n,
    "size": lambda g: g.m,
}
