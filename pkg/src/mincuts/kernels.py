"""Hot bitmask kernels for separator work.

Graphs arrive as ``int64`` arrays of neighbour masks (see ``Graph.masks``);
vertex sets are ``int64`` masks. Only shifts and bitwise operators touch the
masks so that bit 63 behaves the same compiled or interpreted.
"""

from __future__ import annotations

import numpy as np

from ._jit import njit


@njit
def full_mask(n):
    if n >= 64:
        return np.int64(-1)
    return (np.int64(1) << np.int64(n)) - np.int64(1)


@njit
def bit(i):
    return np.int64(1) << np.int64(i)


@njit
def neighbour_union(adj, n, x):
    out = np.int64(0)
    for i in range(n):
        if (x >> np.int64(i)) & 1:
            out |= adj[i]
    return out


@njit
def outer(adj, n, x):
    return neighbour_union(adj, n, x) & ~x


@njit
def component(adj, n, start, removed):
    allowed = full_mask(n) & ~removed
    comp = bit(start)
    frontier = comp
    while frontier != 0:
        frontier = neighbour_union(adj, n, frontier) & allowed & ~comp
        comp |= frontier
    return comp


@njit
def separates(adj, n, u, v, t):
    return (component(adj, n, u, t) >> np.int64(v)) & 1 == 0


@njit
def is_minimal_by_deletion(adj, n, u, v, t):
    if not separates(adj, n, u, v, t):
        return False
    for x in range(n):
        if (t >> np.int64(x)) & 1:
            if separates(adj, n, u, v, t & ~bit(x)):
                return False
    return True


@njit
def is_minimal_by_full_components(adj, n, u, v, t):
    su = component(adj, n, u, t)
    if (su >> np.int64(v)) & 1:
        return False
    if outer(adj, n, su) != t:
        return False
    return outer(adj, n, component(adj, n, v, t)) == t


@njit
def _push(buf, size, value):
    if size == buf.shape[0]:
        grown = np.empty(2 * size, dtype=np.int64)
        grown[:size] = buf
        buf = grown
    buf[size] = value
    return buf, size + 1


@njit
def walk_separators(adj, n, u, v, store):
    """Closure of the u-side seed under one-vertex expansion towards v.

    Every minimal u,v-separator T satisfies T = N(C_v) for the component C_v
    of v in G - T. Starting from the separator closest to u, each T spawns,
    for every x in T not adjacent to v, the separator N(D) where D is the
    component of v in G - (T | N(x)). This reaches each minimal separator.
    Returns ``(count, members)``; ``members`` is empty unless ``store``.
    """
    out = np.empty(16 if store else 0, dtype=np.int64)
    count = 0
    if (adj[u] >> np.int64(v)) & 1:
        return 0, out[:0]
    seed = outer(adj, n, component(adj, n, v, adj[u] | bit(u)))
    seen = {seed}
    stack = np.empty(16, dtype=np.int64)
    stack[0] = seed
    depth = 1
    while depth > 0:
        depth -= 1
        t = stack[depth]
        if not is_minimal_by_full_components(adj, n, u, v, t):
            continue
        count += 1
        if store:
            out, _ = _push(out, count - 1, t)
        for x in range(n):
            if (t >> np.int64(x)) & 1 and not (adj[x] >> np.int64(v)) & 1:
                d = component(adj, n, v, t | adj[x])
                s = outer(adj, n, d)
                if s not in seen:
                    seen.add(s)
                    stack, depth = _push(stack, depth, s)
    return count, out[:count]


@njit
def bruteforce_separators(adj, n, u, v):
    """All minimal u,v-separators by testing every subset of V - {u, v}."""
    others = np.empty(n - 2, dtype=np.int64)
    k = 0
    for i in range(n):
        if i != u and i != v:
            others[k] = i
            k += 1
    out = np.empty(16, dtype=np.int64)
    size = 0
    for code in range(1 << (n - 2)):
        t = np.int64(0)
        for j in range(n - 2):
            if (code >> j) & 1:
                t |= bit(others[j])
        if is_minimal_by_deletion(adj, n, u, v, t):
            out, size = _push(out, size, t)
    return out[:size]


@njit
def _is_subset(a, b):
    return (a & ~b) == 0


@njit
def minimal_vertex_cuts(adj, n):
    """Inclusion-minimal members of the union of all minimal u,v-separators."""
    pool = np.empty(16, dtype=np.int64)
    size = 0
    seen = {np.int64(0)}
    seen.clear()
    for u in range(n):
        for v in range(u + 1, n):
            _, seps = walk_separators(adj, n, u, v, True)
            for t in seps:
                if t not in seen:
                    seen.add(t)
                    pool, size = _push(pool, size, t)
    keep = np.empty(size, dtype=np.int64)
    kept = 0
    for i in range(size):
        a = pool[i]
        minimal = True
        for j in range(size):
            if j != i and _is_subset(pool[j], a):
                minimal = False
                break
        if minimal:
            keep[kept] = a
            kept += 1
    return keep[:kept]


@njit
def pair_counts(adj, n):
    """Minimal separator counts for every pair, as an n x n symmetric matrix."""
    counts = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in range(u + 1, n):
            c, _ = walk_separators(adj, n, u, v, False)
            counts[u, v] = c
            counts[v, u] = c
    return counts


@njit
def best_pair_count(adj, n):
    best = 0
    for u in range(n):
        for v in range(u + 1, n):
            c, _ = walk_separators(adj, n, u, v, False)
            if c > best:
                best = c
    return best
