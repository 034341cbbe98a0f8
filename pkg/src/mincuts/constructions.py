"""Two-terminal constructions and small named graphs.

All constructions use fixed vertex numbering so their graph6 encodings are
reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import MAX_VERTICES, Graph

SEYMOUR_MAX_PATHS = 20


@dataclass(frozen=True)
class TerminalGraph:
    g: Graph
    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("terminals must be distinct")
        if not (0 <= self.u < self.g.n and 0 <= self.v < self.g.n):
            raise ValueError("terminal out of range")

    @property
    def interior(self) -> list[int]:
        return [i for i in range(self.g.n) if i not in (self.u, self.v)]


def seymour(m: int) -> TerminalGraph:
    """Terminals 0 and 1 joined by ``m`` internally disjoint paths of length 4.

    Path ``i`` runs 0 - (2+3i) - (3+3i) - (4+3i) - 1.
    """
    if not 1 <= m <= SEYMOUR_MAX_PATHS:
        raise ValueError(f"m must be in 1..{SEYMOUR_MAX_PATHS}, got {m}")
    edges = []
    for i in range(m):
        a, b, c = 2 + 3 * i, 3 + 3 * i, 4 + 3 * i
        edges += [(0, a), (a, b), (b, c), (c, 1)]
    return TerminalGraph(Graph.from_edges(3 * m + 2, edges), 0, 1)


def glue(a: TerminalGraph, b: TerminalGraph) -> TerminalGraph:
    """Disjoint union with the terminals of ``b`` merged into those of ``a``.

    ``a`` keeps its numbering and terminals; the interior vertices of ``b``
    follow in increasing order. A terminal edge present in either input
    becomes a single edge.
    """
    n = a.g.n + b.g.n - 2
    if n > MAX_VERTICES:
        raise ValueError(f"glued graph would have {n} > {MAX_VERTICES} vertices")
    where = {b.u: a.u, b.v: a.v}
    for k, x in enumerate(b.interior):
        where[x] = a.g.n + k
    edges = set(a.g.edges())
    for x, y in b.g.edges():
        p, q = where[x], where[y]
        edges.add((min(p, q), max(p, q)))
    return TerminalGraph(Graph.from_edges(n, edges), a.u, a.v)


def _path(n):
    return [(i, i + 1) for i in range(n - 1)]


def _cycle(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return _path(n) + [(n - 1, 0)]


def _complete(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _star(n):
    return [(0, i) for i in range(1, n)]


NAMED = {
    "path": _path,  # 0 - 1 - ... - n-1
    "cycle": _cycle,  # path plus the edge n-1 - 0
    "complete": _complete,
    "star": _star,  # centre 0
    "empty": lambda n: [],
}


def named_graph(name: str, n: int, m: int | None = None) -> Graph:
    """Standard small graphs.

    ``complete_bipartite`` takes part sizes ``n`` and ``m`` (vertices
    ``0..n-1`` on one side); every other name takes only ``n``.
    """
    if name == "complete_bipartite":
        if m is None:
            raise ValueError("complete_bipartite needs both part sizes")
        total = n + m
        if not 1 <= total <= MAX_VERTICES or n < 0 or m < 0:
            raise ValueError(f"bad part sizes {n}, {m}")
        return Graph.from_edges(total, [(i, n + j) for i in range(n) for j in range(m)])
    if name not in NAMED:
        known = ", ".join(sorted([*NAMED, "complete_bipartite"]))
        raise ValueError(f"unknown graph name {name!r}; known: {known}")
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"n must be in 1..{MAX_VERTICES}, got {n}")
    return Graph.from_edges(n, NAMED[name](n))


def terminal_path(length: int) -> TerminalGraph:
    """Path with ``length`` edges between terminals 0 and ``length``."""
    return TerminalGraph(named_graph("path", length + 1), 0, length)
