"""Exact finite-n bounds on the maximum number of minimal u,v-separators.

For ``n`` interior vertices (``n + 2`` in total):

* lower: ``3 ** (n // 3)``, from gluing length-4 paths.
* upper_sum: ``2 * sum(C(n+2, k) for k <= m)`` with ``m = (n + 2) // 3``.
* upper_weak: ``2 * (m + 1) * C(n+2, m)``.

Counts are exact Python integers. Floats only appear in the n-th roots and
the entropy constants.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from typing import Mapping

BINOMIAL_MAX_N = 200
TABLE_MAX_N = 200
FIELDS = ("n", "lower", "upper_sum", "upper_weak", "exact_g", "root_lower", "root_upper")

CUBE_ROOT_3 = 3.0 ** (1.0 / 3.0)


def binary_entropy(x: float) -> float:
    if not 0.0 < x < 1.0:
        raise ValueError(f"binary entropy is defined on (0, 1), got {x}")
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def binary_entropy_total(x: float) -> float:
    """``binary_entropy`` extended by continuity to 0 at both endpoints."""
    if x in (0.0, 1.0):
        return 0.0
    return binary_entropy(x)


def entropy_growth_rate() -> float:
    """``2 ** H(1/3)``, the base of the exponential upper bound."""
    return 2.0 ** binary_entropy(1.0 / 3.0)


def binomial(n: int, k: int) -> int:
    if not 0 <= k <= n <= BINOMIAL_MAX_N:
        raise ValueError(f"need 0 <= k <= n <= {BINOMIAL_MAX_N}, got n={n}, k={k}")
    return math.comb(n, k)


def upper_bound_counts(n: int) -> tuple[int, int]:
    """``(upper_sum, upper_weak)`` for ``n`` interior vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    # n + 2 can exceed the public binomial cap at the top of the table
    total = n + 2
    m = total // 3
    upper_sum = 2 * sum(math.comb(total, k) for k in range(m + 1))
    upper_weak = 2 * (m + 1) * math.comb(total, m)
    return upper_sum, upper_weak


def lower_bound_count(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return 3 ** (n // 3)


def nth_root(value: int, n: int) -> float:
    if value <= 0:
        return 0.0
    return math.exp(math.log(value) / n)


def root_lower(n: int) -> float:
    """``lower_bound_count(n) ** (1/n)`` without forming the integer."""
    return CUBE_ROOT_3 ** (3 * (n // 3) / n)


@dataclass
class BoundsRow:
    n: int
    lower: int
    upper_sum: int
    upper_weak: int
    exact_g: int | None
    root_lower: float
    root_upper: float


def bounds_row(n: int, exact_g: int | None = None) -> BoundsRow:
    lower = lower_bound_count(n)
    upper_sum, upper_weak = upper_bound_counts(n)
    if not lower <= upper_sum <= upper_weak:
        raise AssertionError(f"bound ordering broken at n={n}")
    if exact_g is not None and not lower <= exact_g <= upper_sum:
        raise AssertionError(f"g({n}) = {exact_g} outside [{lower}, {upper_sum}]")
    return BoundsRow(n, lower, upper_sum, upper_weak, exact_g, root_lower(n), nth_root(upper_sum, n))


def bounds_table(n_max: int, census_results: Mapping[int, int] | None = None) -> list[BoundsRow]:
    """One row per ``n`` in ``1..n_max``; ``census_results`` maps n to exact g(n)."""
    if not 1 <= n_max <= TABLE_MAX_N:
        raise ValueError(f"n_max must be in 1..{TABLE_MAX_N}, got {n_max}")
    known = census_results or {}
    return [bounds_row(n, known.get(n)) for n in range(1, n_max + 1)]


def rows_to_csv(rows: list[BoundsRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        record = asdict(row)
        if record["exact_g"] is None:
            record["exact_g"] = ""
        writer.writerow(record)
    return buf.getvalue()


def rows_to_json(rows: list[BoundsRow]) -> str:
    return json.dumps([asdict(row) for row in rows], indent=1)


def rows_to_plain(rows: list[BoundsRow]) -> str:
    lines = [f"{'n':>4} {'lower':>12} {'upper_sum':>14} {'g(n)':>8} {'root_lo':>8} {'root_up':>8}"]
    for r in rows:
        g = "" if r.exact_g is None else str(r.exact_g)
        lines.append(
            f"{r.n:>4} {r.lower:>12} {r.upper_sum:>14} {g:>8} {r.root_lower:8.5f} {r.root_upper:8.5f}"
        )
    return "\n".join(lines) + "\n"
