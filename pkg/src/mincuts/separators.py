"""Minimal u,v-separators and minimal vertex cuts.

Conventions for the degenerate cases follow the literal definitions:

* u and v adjacent: nothing separates them, the family is empty (count 0).
* u and v already in different components: the empty set is the unique
  minimal separator (count 1). This keeps ``count(glue(a, b)) ==
  count(a) * count(b)`` exact without special cases.
* minimal vertex cuts of a disconnected graph: ``{0}`` (just the empty set);
  of a complete graph: the empty family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import kernels
from .graph import Graph, component_of, members, outer_neighborhood

BRUTEFORCE_MAX_VERTICES = 24


class InstanceTooLarge(ValueError):
    pass


def _as_int(mask) -> int:
    return int(np.int64(mask).view(np.uint64))


def _to_kernel(mask: int) -> np.int64:
    return np.uint64(mask).view(np.int64)


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise ValueError("u and v must be distinct")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"terminal out of range for n={g.n}")


def _check_instance(g: Graph, u: int, v: int, t: int) -> None:
    _check_pair(g, u, v)
    if (t >> u) & 1 or (t >> v) & 1:
        raise ValueError("the separator may not contain u or v")


@dataclass(frozen=True)
class SeparatorInstance:
    g: Graph
    u: int
    v: int

    def __post_init__(self):
        _check_pair(self.g, self.u, self.v)


@dataclass(frozen=True)
class SeparatorFamily:
    members: frozenset[int]
    instance: SeparatorInstance | None = None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, t: int) -> bool:
        return t in self.members

    def as_lists(self) -> list[list[int]]:
        return sorted(members(t) for t in self.members)


def is_separator(g: Graph, u: int, v: int, t: int) -> bool:
    _check_instance(g, u, v, t)
    return not (component_of(g, u, t) >> v) & 1


def is_minimal_separator(g: Graph, u: int, v: int, t: int) -> bool:
    """Deletion test: ``t`` separates and no ``t - {x}`` does."""
    if not is_separator(g, u, v, t):
        return False
    return not any(is_separator(g, u, v, t & ~(1 << x)) for x in members(t))


def is_minimal_separator_full(g: Graph, u: int, v: int, t: int) -> bool:
    """Full-component test: N(S_u) == t == N(S_v)."""
    _check_instance(g, u, v, t)
    su = component_of(g, u, t)
    if (su >> v) & 1:
        return False
    return outer_neighborhood(g, su) == t == outer_neighborhood(g, component_of(g, v, t))


def enumerate_minimal_separators_bruteforce(g: Graph, u: int, v: int) -> SeparatorFamily:
    _check_pair(g, u, v)
    if g.n > BRUTEFORCE_MAX_VERTICES:
        raise InstanceTooLarge(
            f"brute force is capped at {BRUTEFORCE_MAX_VERTICES} vertices, got {g.n}"
        )
    found = kernels.bruteforce_separators(g.masks, g.n, u, v)
    return SeparatorFamily(frozenset(_as_int(t) for t in found), SeparatorInstance(g, u, v))


def enumerate_minimal_separators(g: Graph, u: int, v: int) -> Iterator[int]:
    """Yield every minimal u,v-separator once, in no particular order."""
    _check_pair(g, u, v)
    _, found = kernels.walk_separators(g.masks, g.n, u, v, True)
    for t in found:
        yield _as_int(t)


def minimal_separators(g: Graph, u: int, v: int) -> SeparatorFamily:
    return SeparatorFamily(
        frozenset(enumerate_minimal_separators(g, u, v)), SeparatorInstance(g, u, v)
    )


def count_minimal_separators(g: Graph, u: int, v: int) -> int:
    _check_pair(g, u, v)
    count, _ = kernels.walk_separators(g.masks, g.n, u, v, False)
    return int(count)


def enumerate_minimal_vertex_cuts(g: Graph) -> SeparatorFamily:
    if g.n < 3:
        raise ValueError("minimal vertex cuts need at least 3 vertices")
    cuts = kernels.minimal_vertex_cuts(g.masks, g.n)
    return SeparatorFamily(frozenset(_as_int(t) for t in cuts))
