"""Simple undirected graphs, graph6 and edge-list I/O."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from ..meter import tick

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 word. ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Graph on vertices ``0..n-1``; ``edges`` holds sorted pairs ``(u, v)``, ``u < v``."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, tuple(edges))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = list(masks)
        edges = [(u, v) for u in range(len(masks)) for v in range(u + 1, len(masks)) if masks[u] >> v & 1]
        return cls(len(masks), tuple(edges))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        tick()
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        mask = self.adj[v]
        return [u for u in range(self.n) if mask >> u & 1]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def complement(self) -> "Graph":
        edges = []
        for u, v in combinations(range(self.n), 2):
            tick()
            if not self.adj[u] >> v & 1:
                edges.append((u, v))
        return Graph(self.n, tuple(edges))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        return Graph(len(keep), tuple((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shifted = tuple((u + self.n, v + self.n) for u, v in other.edges)
        return Graph(self.n + other.n, self.edges + shifted)

    def __str__(self) -> str:
        return encode_graph6(self)


# ---------------------------------------------------------------------------
# named graphs


def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def encode_graph6(g: Graph) -> str:
    bits = [1 if g.adj[i] >> j & 1 else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def _sixbits(text: str, start: int, count: int) -> list[int]:
    out = []
    for off in range(start, start + count):
        if off >= len(text):
            raise Graph6Error("truncated graph6 word", off)
        code = ord(text[off])
        if not 63 <= code <= 126:
            raise Graph6Error(f"invalid graph6 character {text[off]!r}", off)
        out.append(code - 63)
    return out


def decode_graph6(text: str) -> Graph:
    """Parse one graph6 word. Padding bits must be zero and no trailing bytes may follow."""
    word = text.strip()
    base = 0
    if word.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        word = word[base:]
    if not word:
        raise Graph6Error("empty graph6 word", base)
    if word[0] == "~":
        if len(word) > 1 and word[1] == "~":
            parts, pos = _sixbits(word, 2, 6), 8
        else:
            parts, pos = _sixbits(word, 1, 3), 4
        n = 0
        for p in parts:
            n = n << 6 | p
    else:
        n, pos = _sixbits(word, 0, 1)[0], 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    chunks = _sixbits(word, pos, nbytes)
    if len(word) > pos + nbytes:
        raise Graph6Error("trailing bytes after graph6 word", base + pos + nbytes)
    bits = []
    for c in chunks:
        bits.extend(c >> s & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("non-zero padding bits", base + pos + nbytes - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(edges))


def graph6_length(n: int) -> int:
    return len(_encode_n(n)) + (n * (n - 1) // 2 + 5) // 6


# ---------------------------------------------------------------------------
# edge lists


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Whitespace-separated ``u v`` pairs, one per line; ``#`` starts a comment.

    The vertex count defaults to one more than the largest label seen.
    """
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected two vertex labels, got {len(fields)}")
        edges.append((int(fields[0]), int(fields[1])))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, tuple(edges))


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)
