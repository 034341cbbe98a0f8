"""Independent reference computations used to freeze expected values."""

import itertools
import math

import numpy as np
from numba import njit

from mincuts.graph import Graph, component_of


@njit(cache=True)
def _relabel_code(code, n, perm, pair_index):
    out = np.int64(0)
    nbits = n * (n - 1) // 2
    k = nbits - 1
    for i in range(1, n):
        for j in range(i):
            if (code >> k) & 1:
                a, b = perm[i], perm[j]
                if a < b:
                    a, b = b, a
                out |= np.int64(1) << (nbits - 1 - pair_index[a, b])
            k -= 1
    return out


@njit(cache=True)
def _count_orbits(n, perms, pair_index):
    nbits = n * (n - 1) // 2
    seen = np.zeros(1 << nbits, dtype=np.bool_)
    classes = 0
    for code in range(1 << nbits):
        if seen[code]:
            continue
        classes += 1
        for p in range(perms.shape[0]):
            seen[_relabel_code(np.int64(code), n, perms[p], pair_index)] = True
    return classes


def isomorphism_classes_bruteforce(n):
    """Count graphs on n vertices up to isomorphism by marking S_n orbits of all labelled graphs."""
    if n == 1:
        return 1
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    pair_index = np.zeros((n, n), dtype=np.int64)
    t = 0
    for i in range(1, n):
        for j in range(i):
            pair_index[i, j] = t
            t += 1
    return int(_count_orbits(n, perms, pair_index))


def minimal_separators_by_definition(g: Graph, u: int, v: int) -> set:
    """Every subset of V - {u, v} that separates while no proper subset does."""
    others = [x for x in range(g.n) if x not in (u, v)]

    def separates(t):
        return not (component_of(g, u, t) >> v) & 1

    subsets = [sum(1 << x for x in c) for r in range(len(others) + 1)
               for c in itertools.combinations(others, r)]
    seps = [t for t in subsets if separates(t)]
    return {t for t in seps if not any(s != t and s & t == s for s in seps)}


def minimal_vertex_cuts_by_definition(g: Graph) -> set:
    """Inclusion-minimal T whose removal leaves at least two components."""
    from mincuts.graph import components

    cuts = [sum(1 << x for x in c) for r in range(g.n + 1)
            for c in itertools.combinations(range(g.n), r)
            if len(components(g, sum(1 << x for x in c))) >= 2]
    return {t for t in cuts if not any(s != t and s & t == s for s in cuts)}


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
    return row


def binary_entropy_reference(x):
    return -(x * math.log(x) + (1 - x) * math.log(1 - x)) / math.log(2)
