"""Bitset graphs on at most 64 vertices, set primitives and graph6 I/O.

A vertex set is a plain ``int`` used as a bit mask: vertex ``i`` is a
member iff bit ``i`` is set. A :class:`Graph` stores one such mask per
vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

MAX_VERTICES = 64


class GraphFormatError(ValueError):
    """Raised for malformed graph6 input."""


def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for i in vertices:
        mask |= 1 << i
    return mask


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[i]`` is the neighbour mask of vertex ``i``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = full_mask(self.n)
        for i, row in enumerate(self.adj):
            if row & ~full or row < 0:
                raise ValueError(f"vertex {i} has neighbours outside 0..{self.n - 1}")
            if (row >> i) & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in members(row):
                if not (self.adj[j] >> i) & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def vertices(self) -> int:
        return full_mask(self.n)

    def has_edge(self, a: int, b: int) -> bool:
        return bool((self.adj[a] >> b) & 1)

    def degree(self, i: int) -> int:
        return popcount(self.adj[i])

    def edges(self) -> Iterator[tuple[int, int]]:
        for i in range(self.n):
            for j in members(self.adj[i] >> (i + 1)):
                yield i, i + 1 + j

    @property
    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def relabel(self, perm: list[int]) -> Graph:
        """Graph in which old vertex ``i`` becomes ``perm[i]``."""
        return Graph.from_edges(self.n, ((perm[a], perm[b]) for a, b in self.edges()))

    @cached_property
    def masks(self) -> np.ndarray:
        """Adjacency as an ``int64`` array, the layout the kernels expect."""
        return np.array(self.adj, dtype=np.uint64).view(np.int64)

    def to_graph6(self) -> bytes:
        return to_graph6(self)

    def __str__(self) -> str:
        return to_graph6(self).decode("ascii")


def outer_neighborhood(g: Graph, x: int) -> int:
    """Vertices outside ``x`` with at least one neighbour in ``x``."""
    out = 0
    rest = x
    while rest:
        low = rest & -rest
        out |= g.adj[low.bit_length() - 1]
        rest ^= low
    return out & ~x


def component_of(g: Graph, start: int, removed: int = 0) -> int:
    """Vertex set of the component of ``start`` in ``g`` minus ``removed``."""
    if (removed >> start) & 1:
        raise ValueError(f"start vertex {start} is in the removed set")
    allowed = g.vertices & ~removed
    comp = frontier = 1 << start
    while frontier:
        reach = 0
        while frontier:
            low = frontier & -frontier
            reach |= g.adj[low.bit_length() - 1]
            frontier ^= low
        frontier = reach & allowed & ~comp
        comp |= frontier
    return comp


def components(g: Graph, removed: int = 0) -> list[int]:
    """Components of ``g`` minus ``removed``, ordered by smallest vertex."""
    left = g.vertices & ~removed
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = component_of(g, start, removed)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return component_of(g, 0) == g.vertices


# graph6: https://users.cecs.anu.edu.au/~bdm/data/formats.txt

def _size_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])


def to_graph6(g: Graph) -> bytes:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        bits.extend((row >> i) & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[p:p + 6]))
        for p in range(0, len(bits), 6)
    )
    return _size_header(g.n) + body


def from_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    text = text.strip(b"\r\n")
    if text.startswith(b">>graph6<<"):
        text = text[len(b">>graph6<<"):]
    if not text:
        raise GraphFormatError("empty graph6 string")
    bad = next((k for k, c in enumerate(text) if not 63 <= c <= 126), None)
    if bad is not None:
        raise GraphFormatError(f"byte {text[bad]!r} at offset {bad} is outside 63..126")

    if text[0] != 126:
        n, body = text[0] - 63, text[1:]
    elif len(text) >= 4 and text[1] != 126:
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63)
        body = text[4:]
    else:
        raise GraphFormatError("unsupported or truncated size header")
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} outside 1..{MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )
    value = 0
    for c in body:
        value = (value << 6) | (c - 63)
    pad = 6 * len(body) - nbits
    if value & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits")
    value >>= pad

    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (value >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))
