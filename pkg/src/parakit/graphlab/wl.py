"""k-dimensional Weisfeiler-Leman refinement for k = 1, 2, 3.

Level 1 is classic colour refinement on vertices. Levels k >= 2 colour
k-tuples: the initial colour is the atomic type (equalities and adjacencies
among the entries) and a tuple's new colour combines its old colour with the
multiset, over all vertices w, of the colour vectors obtained by substituting
w into each position.

Colours are named through a shared :class:`WLRefiner` registry, so colour ids
mean the same thing across graphs refined by the same refiner. Two graphs are
distinguished when their per-round colour histograms differ.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from operator import itemgetter

from ..meter import tick
from .graph import Graph

MAX_LEVEL = 3
DISTINGUISHED = "distinguished"
SAME_COLORS = "same-colors"


@dataclass(frozen=True)
class WLResult:
    level: int
    rounds: int
    fingerprint: tuple
    vertex_colors: tuple[int, ...]

    def vertex_partition(self) -> frozenset[frozenset[int]]:
        classes: dict[int, set[int]] = {}
        for v, c in enumerate(self.vertex_colors):
            classes.setdefault(c, set()).add(v)
        return frozenset(frozenset(s) for s in classes.values())


def _check_level(k: int) -> None:
    if not 1 <= k <= MAX_LEVEL:
        raise ValueError(f"WL level must be in 1..{MAX_LEVEL}, got {k}")


def _histogram(colors: list[int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(Counter(colors).items()))


class WLRefiner:
    """Colour registry plus refinement routines."""

    def __init__(self) -> None:
        self._ids: dict[tuple, int] = {}
        self._lock = threading.Lock()

    def _name(self, signature: tuple) -> int:
        ident = self._ids.get(signature)
        if ident is None:
            with self._lock:
                ident = self._ids.setdefault(signature, len(self._ids))
        return ident

    def run(self, g: Graph, k: int) -> WLResult:
        _check_level(k)
        if k == 1:
            return self._refine_vertices(g)
        return self._refine_tuples(g, k)

    def _stabilise(self, colors: list[int], step) -> tuple[list[int], int, tuple]:
        hist = [_histogram(colors)]
        rounds = 0
        while True:
            new = step(colors)
            rounds += 1
            hist.append(_histogram(new))
            if len(set(new)) == len(set(colors)):
                return new, rounds, tuple(hist)
            colors = new

    def _refine_vertices(self, g: Graph) -> WLResult:
        nbrs = [g.neighbors(v) for v in range(g.n)]
        colors = [self._name((1, "vertex"))] * g.n

        def step(cur: list[int]) -> list[int]:
            out = []
            for v in range(g.n):
                tick(len(nbrs[v]) + 1)
                out.append(self._name((cur[v], tuple(sorted(cur[u] for u in nbrs[v])))))
            return out

        colors, rounds, fp = self._stabilise(colors, step)
        return WLResult(1, rounds, (1, g.n) + fp, tuple(colors))

    def _refine_tuples(self, g: Graph, k: int) -> WLResult:
        n = g.n
        tuples = list(product(range(n), repeat=k))
        index = {t: i for i, t in enumerate(tuples)}
        subst = [
            [itemgetter(*(index[t[:i] + (w,) + t[i + 1 :]] for i in range(k))) for w in range(n)]
            for t in tuples
        ]
        colors = []
        for t in tuples:
            tick(k * (k - 1) // 2)
            atomic = tuple(
                (t[i] == t[j], bool(g.adj[t[i]] >> t[j] & 1))
                for i in range(k)
                for j in range(i + 1, k)
            )
            colors.append(self._name((k, "atomic", atomic)))

        def step(cur: list[int]) -> list[int]:
            out = []
            for ti in range(len(tuples)):
                tick(n * k)
                multiset = tuple(sorted([get(cur) for get in subst[ti]]))
                out.append(self._name((cur[ti], multiset)))
            return out

        colors, rounds, fp = self._stabilise(colors, step)
        diagonal = tuple(colors[index[(v,) * k]] for v in range(n))
        return WLResult(k, rounds, (k, n) + fp, diagonal)


_SHARED = WLRefiner()


@lru_cache(maxsize=None)
def stable_coloring(g: Graph, k: int) -> WLResult:
    """Cached level-k result under one process-wide refiner, so fingerprints compare across calls."""
    return _SHARED.run(g, k)


def wl(k: int, g: Graph, h: Graph, refiner: WLRefiner | None = None) -> str:
    """Run level-k refinement on both graphs; ``"distinguished"`` proves non-isomorphism."""
    _check_level(k)
    refiner = refiner or WLRefiner()
    a, b = refiner.run(g, k), refiner.run(h, k)
    return SAME_COLORS if a.fingerprint == b.fingerprint else DISTINGUISHED


def refines(finer: frozenset[frozenset[int]], coarser: frozenset[frozenset[int]]) -> bool:
    """Every class of ``finer`` lies inside one class of ``coarser``."""
    return all(any(c <= d for d in coarser) for c in finer)
