"""Exact restricted-partition counting.

p_k^s(n) is the number of ways to write n as a sum of s-th powers of positive
integers with each power used at most k times.  The workhorse is a bounded-
multiplicity knapsack DP over one rolling table of exact Python ints; counts
overflow 64 bits near n ~ 400 already for s = 1, so arbitrary precision is
not optional.

Three independent oracles cross-check the DP:

* ``oracle_product``    -- truncated formal-power-series expansion of the
                           generating product (finite caps),
* ``oracle_pentagonal`` -- Euler's pentagonal-number recurrence for the
                           unrestricted s = 1 column,
* ``oracle_enumerate``  -- literal depth-first generation of every part
                           multiset (guarded to small n).

Everything is pure; independent tables may be built concurrently.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .multiplicity import UNBOUNDED, Cap, is_unbounded, validate_cap

__all__ = [
    "ENUMERATION_LIMIT",
    "PartitionSpec",
    "CountTable",
    "count",
    "count_table",
    "count_table_for_parts",
    "oracle_product",
    "oracle_pentagonal",
    "oracle_enumerate",
]

# DFS enumeration guard; above this the multiset tree is too large to walk.
ENUMERATION_LIMIT = 60


@dataclass(frozen=True)
class PartitionSpec:
    """One counting problem: partitions of n into s-th powers, cap k per part."""

    s: int
    k: Cap
    n: int

    def __post_init__(self):
        if isinstance(self.s, bool) or not isinstance(self.s, int) or self.s < 1:
            raise ValueError(f"power s must be an integer >= 1, got {self.s!r}")
        validate_cap(self.k)
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"target n must be an integer >= 0, got {self.n!r}")


@dataclass(frozen=True)
class CountTable:
    """Counts p_k^s(0..n_max) for one fixed (s, k) prefix."""

    s: int
    k: Cap
    counts: "tuple[int, ...]"

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1


def _power_parts(s: int, n_max: int) -> "list[int]":
    """Part sizes m^s <= n_max, ascending."""
    parts = []
    m = 1
    while m**s <= n_max:
        parts.append(m**s)
        m += 1
    return parts


def count_table_for_parts(parts: Iterable[int], k: Cap, n_max: int) -> "list[int]":
    """Partitions of 0..n_max into the given part sizes, each used at most k times.

    Generic DP engine: one rolling table, parts applied in the order given
    (the result is order-independent).  A bounded cap is handled with a
    sliding window of the previous k+1 values along each stride-j lane, so
    every part costs O(n_max) big-int additions regardless of k.
    """
    validate_cap(k)
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    table = [0] * (n_max + 1)
    table[0] = 1
    for j in parts:
        if j < 1:
            raise ValueError(f"part sizes must be positive, got {j}")
        if j > n_max:
            continue
        if is_unbounded(k):
            for idx in range(j, n_max + 1):
                table[idx] += table[idx - j]
        else:
            width = k + 1
            for r in range(min(j, n_max + 1)):
                window = deque()
                acc = 0
                for idx in range(r, n_max + 1, j):
                    window.append(table[idx])
                    acc += table[idx]
                    if len(window) > width:
                        acc -= window.popleft()
                    table[idx] = acc
    return table


def count_table(s: int, k: Cap, n_max: int) -> CountTable:
    """All p_k^s(n) for n = 0..n_max in one DP pass."""
    if isinstance(s, bool) or not isinstance(s, int) or s < 1:
        raise ValueError(f"power s must be an integer >= 1, got {s!r}")
    counts = count_table_for_parts(_power_parts(s, n_max), k, n_max)
    return CountTable(s, k, tuple(counts))


def count(spec: PartitionSpec) -> int:
    """Exact p_k^s(n) for one problem instance."""
    return count_table(spec.s, spec.k, spec.n)[spec.n]


def oracle_product(s: int, k: int, n_max: int) -> CountTable:
    """Coefficients of prod_m (1 - x^{(k+1) m^s}) / (1 - x^{m^s}) mod x^{n_max+1}.

    Independent of the DP path: every numerator factor is applied as an
    explicit two-term polynomial multiplication, and each division by
    (1 - x^j) as multiplication by the geometric series sum_i x^{i j}.
    Finite caps only (the numerator disappears in the unbounded limit).
    """
    if is_unbounded(k):
        raise ValueError("product oracle requires a finite multiplicity cap")
    validate_cap(k)
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    coeffs = [0] * (n_max + 1)
    coeffs[0] = 1
    parts = _power_parts(s, n_max)
    for j in parts:
        top = (k + 1) * j
        if top > n_max:
            continue
        for idx in range(n_max, top - 1, -1):
            coeffs[idx] -= coeffs[idx - top]
    for j in parts:
        for idx in range(j, n_max + 1):
            coeffs[idx] += coeffs[idx - j]
    return CountTable(s, k, tuple(coeffs))


def oracle_pentagonal(n_max: int) -> CountTable:
    """Unrestricted p(n) for n = 0..n_max via Euler's pentagonal recurrence.

    p(n) = sum_{j>=1} (-1)^{j+1} [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)]
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    p = [0] * (n_max + 1)
    p[0] = 1
    for n in range(1, n_max + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[n - g1]
            g2 = g1 + j
            if g2 <= n:
                total += sign * p[n - g2]
            j += 1
        p[n] = total
    return CountTable(1, UNBOUNDED, tuple(p))


def oracle_enumerate(spec: PartitionSpec) -> int:
    """Count by depth-first generation of every admissible part multiset.

    Slow and trivially correct; refuses n above ENUMERATION_LIMIT.
    """
    if spec.n > ENUMERATION_LIMIT:
        raise ValueError(
            f"enumeration oracle is limited to n <= {ENUMERATION_LIMIT}, got n = {spec.n}"
        )
    parts = _power_parts(spec.s, spec.n)
    parts.reverse()  # descending: prunes faster
    unbounded = is_unbounded(spec.k)

    def walk(remaining: int, start: int) -> int:
        if remaining == 0:
            return 1
        found = 0
        for i in range(start, len(parts)):
            part = parts[i]
            cap = remaining // part
            if not unbounded:
                cap = min(cap, spec.k)
            for copies in range(1, cap + 1):
                found += walk(remaining - copies * part, i + 1)
        return found

    return walk(spec.n, 0)
