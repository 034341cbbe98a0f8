"""Canonical labelling and isomorph-free generation of small graphs.

A graph on ``n <= 11`` vertices is identified by its *code*: the graph6
bit string of its upper triangle (pairs (0,1), (0,2), (1,2), (0,3), ...)
read as one integer, first pair most significant. ``C(11, 2) = 55`` bits
fit in an ``int64``.

The canonical code is the minimum code over all labellings that list the
colour classes of the stable colour refinement in colour order. Twins are
placed in index order, which removes the factorial blow-up on graphs with
large twin classes (empty, complete, complete multipartite).

Generation is canonical augmentation by one vertex: a child of parent P is
kept iff the new vertex lies in the last colour class and deleting the
vertex placed last by the canonical labelling gives back P. Children of
one parent are then deduplicated by code.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ._jit import njit
from .graph import Graph

MAX_CANON_VERTICES = 11


@njit
def _bit(i):
    return np.int64(1) << np.int64(i)


@njit
def code_to_adj(code, n):
    adj = np.zeros(n, dtype=np.int64)
    k = n * (n - 1) // 2 - 1
    for i in range(1, n):
        for j in range(i):
            if (code >> np.int64(k)) & 1:
                adj[i] |= _bit(j)
                adj[j] |= _bit(i)
            k -= 1
    return adj


@njit
def adj_to_code(adj, n):
    code = np.int64(0)
    for i in range(1, n):
        for j in range(i):
            code = (code << np.int64(1)) | ((adj[i] >> np.int64(j)) & 1)
    return code


@njit
def _lex_less(sig, a, b):
    for c in range(sig.shape[1]):
        if sig[a, c] != sig[b, c]:
            return sig[a, c] < sig[b, c]
    return False


@njit
def refine(adj, n, colors):
    """Stable colour refinement; ``colors`` must be dense ranks 0..k-1.

    New colours are ranks of (old colour, neighbour counts per old colour)
    in lexicographic order, so the result is isomorphism-invariant.
    """
    colors = colors.copy()
    ncol = 0
    for v in range(n):
        if colors[v] + 1 > ncol:
            ncol = colors[v] + 1
    order = np.empty(n, dtype=np.int64)
    while True:
        sig = np.zeros((n, ncol + 1), dtype=np.int64)
        for v in range(n):
            sig[v, 0] = colors[v]
            for w in range(n):
                if (adj[v] >> np.int64(w)) & 1:
                    sig[v, 1 + colors[w]] += 1
        for v in range(n):
            order[v] = v
        for i in range(1, n):
            x = order[i]
            j = i - 1
            while j >= 0 and _lex_less(sig, x, order[j]):
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = x
        fresh = np.empty(n, dtype=np.int64)
        rank = 0
        fresh[order[0]] = 0
        for i in range(1, n):
            if _lex_less(sig, order[i - 1], order[i]):
                rank += 1
            fresh[order[i]] = rank
        colors = fresh
        if rank + 1 == ncol:
            return colors
        ncol = rank + 1


@njit
def search(adj, n, colors):
    """Minimum-code labelling among colour-respecting labellings.

    Returns ``(code, lab)`` where ``lab[p]`` is the vertex placed at position p.
    """
    if n == 1:
        return np.int64(0), np.zeros(1, dtype=np.int64)
    cell = np.sort(colors)
    twin_prev = np.zeros(n, dtype=np.int64)
    for x in range(n):
        for y in range(x):
            if colors[x] == colors[y]:
                if (adj[x] & ~_bit(y)) == (adj[y] & ~_bit(x)):
                    twin_prev[x] |= _bit(y)

    lab = np.zeros(n, dtype=np.int64)
    rows = np.zeros(n, dtype=np.int64)
    best_lab = np.zeros(n, dtype=np.int64)
    best_rows = np.zeros(n, dtype=np.int64)
    # status[p] is 1 once the prefix before p is strictly below the best
    status = np.ones(n + 1, dtype=np.int64)
    cand = np.zeros(n, dtype=np.int64)
    have_best = False
    used = np.int64(0)
    p = 0
    while p >= 0:
        found = False
        while cand[p] < n:
            x = cand[p]
            cand[p] += 1
            if colors[x] != cell[p] or (used >> np.int64(x)) & 1:
                continue
            if twin_prev[x] & ~used:
                continue
            row = np.int64(0)
            for j in range(p):
                row = (row << np.int64(1)) | ((adj[x] >> lab[j]) & 1)
            st = status[p]
            if have_best and st == 0:
                if row > best_rows[p]:
                    continue
                if row < best_rows[p]:
                    st = 1
            lab[p] = x
            rows[p] = row
            status[p + 1] = st
            found = True
            break
        if not found:
            p -= 1
            if p >= 0:
                used &= ~_bit(lab[p])
            continue
        if p == n - 1:
            if not have_best or status[n] == 1:
                best_lab[:] = lab
                best_rows[:] = rows
                have_best = True
                status[:] = 0
            continue
        used |= _bit(lab[p])
        p += 1
        cand[p] = 0
    code = np.int64(0)
    for q in range(1, n):
        code = (code << np.int64(q)) | best_rows[q]
    return code, best_lab


@njit
def canonical(adj, n):
    colors = refine(adj, n, np.zeros(n, dtype=np.int64))
    return search(adj, n, colors)


@njit
def delete_vertex(adj, n, w):
    out = np.empty(n - 1, dtype=np.int64)
    low = _bit(w) - np.int64(1)
    k = 0
    for i in range(n):
        if i == w:
            continue
        row = adj[i]
        out[k] = (row & low) | ((row >> np.int64(w + 1)) << np.int64(w))
        k += 1
    return out


@njit
def children(parent_code, n):
    """Canonical codes of the ``n``-vertex children of a canonical parent."""
    parent = code_to_adj(parent_code, n - 1)
    out = np.empty(1 << (n - 1), dtype=np.int64)
    size = 0
    adj = np.zeros(n, dtype=np.int64)
    zeros = np.zeros(n, dtype=np.int64)
    new = _bit(n - 1)
    for s in range(1 << (n - 1)):
        nbrs = np.int64(s)
        for i in range(n - 1):
            adj[i] = parent[i]
            if (nbrs >> np.int64(i)) & 1:
                adj[i] |= new
        adj[n - 1] = nbrs
        colors = refine(adj, n, zeros)
        top = 0
        for i in range(n):
            if colors[i] > top:
                top = colors[i]
        if colors[n - 1] != top:
            continue
        code, lab = search(adj, n, colors)
        w = lab[n - 1]
        if w != n - 1:
            sub = delete_vertex(adj, n, w)
            sub_code, _ = canonical(sub, n - 1)
            if sub_code != parent_code:
                continue
        out[size] = code
        size += 1
    return np.unique(out[:size])


def canonical_code(g: Graph) -> int:
    if g.n > MAX_CANON_VERTICES:
        raise ValueError(f"canonical codes are limited to {MAX_CANON_VERTICES} vertices")
    code, _ = canonical(g.masks, g.n)
    return int(code)


def canonical_labelling(g: Graph, colors=None) -> tuple[int, list[int]]:
    """``(code, lab)`` with ``lab[p]`` the vertex put at position ``p``.

    ``colors`` optionally gives an initial vertex colouring (dense ranks);
    the labelling then respects it.
    """
    if g.n > MAX_CANON_VERTICES:
        raise ValueError(f"canonical codes are limited to {MAX_CANON_VERTICES} vertices")
    init = np.zeros(g.n, dtype=np.int64) if colors is None else np.asarray(colors, dtype=np.int64)
    refined = refine(g.masks, g.n, init)
    code, lab = search(g.masks, g.n, refined)
    return int(code), [int(x) for x in lab]


def canonical_form(g: Graph) -> Graph:
    return graph_from_code(canonical_code(g), g.n)


def graph_from_code(code: int, n: int) -> Graph:
    adj = code_to_adj(np.int64(code), n)
    return Graph(n, tuple(int(x) for x in adj))


@lru_cache(maxsize=4)
def level_codes(n: int) -> np.ndarray:
    """Sorted canonical codes of all graphs on ``n`` vertices (read-only array)."""
    if not 1 <= n <= MAX_CANON_VERTICES:
        raise ValueError(f"n must be in 1..{MAX_CANON_VERTICES}, got {n}")
    if n == 1:
        codes = np.zeros(1, dtype=np.int64)
    else:
        codes = np.concatenate([children(c, n) for c in level_codes(n - 1)])
        codes.sort()
    codes.flags.writeable = False
    return codes


def generate_graphs(n: int):
    """One representative per isomorphism class on ``n`` vertices, in canonical form."""
    for code in level_codes(n):
        yield graph_from_code(int(code), n)
