"""Exhaustive reference answers: isomorphism, Hamiltonicity and planarity."""

from __future__ import annotations

import networkx as nx

from .graph import Graph
from .params import DEFAULT_CAP, CapExceeded


def oracle_iso(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> bool:
    """Isomorphism by backtracking over vertex maps that preserve degrees."""
    if max(g.n, h.n) > cap:
        raise CapExceeded(f"oracle_iso: cap is {cap}")
    if g.n != h.n or g.m != h.m:
        return False
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return False
    order = sorted(range(g.n), key=lambda v: -dg[v])
    image = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used[w] or dh[w] != dg[v]:
                continue
            ok = True
            for u in order[:i]:
                if bool(g.adj[v] >> u & 1) != bool(h.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v], used[w] = w, True
            if extend(i + 1):
                return True
            image[v], used[w] = -1, False
        return False

    return extend(0)


def oracle_hamiltonian(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    """Whether ``g`` has a cycle through every vertex. Graphs on fewer than 3 vertices have none."""
    if g.n > cap:
        raise CapExceeded(f"oracle_hamiltonian: cap is {cap}")
    n = g.n
    if n < 3:
        return False
    full = (1 << n) - 1

    def walk(v: int, seen: int) -> bool:
        if seen == full:
            return bool(g.adj[v] & 1)
        nb = g.adj[v] & ~seen
        while nb:
            low = nb & -nb
            if walk(low.bit_length() - 1, seen | low):
                return True
            nb ^= low
        return False

    return walk(0, 1)


def to_networkx(g: Graph) -> "nx.Graph":
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def is_planar(g: Graph) -> bool:
    return nx.check_planarity(to_networkx(g))[0]
