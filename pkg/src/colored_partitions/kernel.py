"""Exact combinatorial number kernel.

Binomials and multinomials are *total*: out-of-range arguments give 0 instead
of raising.  That convention lets the closed-form evaluators in
:mod:`colored_partitions.formulas` sum over rectangular index boxes without
per-term range guards.  Everything works on plain Python ints, so counts never
overflow.
"""

from __future__ import annotations

import math
import threading
from typing import Iterator, NamedTuple, Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k), with value 0 whenever k < 0, n < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, ks: Sequence[int]) -> int:
    """n! / (k_1! ... k_m! (n - sum ks)!), or 0 out of range.

    The final group of size n - sum(ks) is implicit, so
    ``multinomial(n, [k]) == binomial(n, k)``.
    """
    if n < 0:
        return 0
    result = 1
    remaining = n
    for k in ks:
        if k < 0 or k > remaining:
            return 0
        result *= math.comb(remaining, k)
        remaining -= k
    return result


def falling_factorial(k: int, length: int) -> int:
    """k (k-1) ... (k-length+1); 1 for the empty product, 0 when length > k."""
    if length <= 0:
        return 1
    if k < length:
        return 0
    result = 1
    for t in range(length):
        result *= k - t
    return result


# Stirling rows are append-only and shared between threads; the lock only
# serialises growth, reads of finished rows are unsynchronised.
_stirling_rows: list[list[int]] = [[1]]
_bell_values: list[int] = [1]
_table_lock = threading.Lock()


def _grow_tables(n: int) -> None:
    with _table_lock:
        while len(_stirling_rows) <= n:
            prev = _stirling_rows[-1]
            m = len(_stirling_rows)
            row = [0] * (m + 1)
            for k in range(1, m + 1):
                row[k] = k * (prev[k] if k < len(prev) else 0) + prev[k - 1]
            _stirling_rows.append(row)
            _bell_values.append(sum(row))


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k); 0 out of range."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n >= len(_stirling_rows):
        _grow_tables(n)
    return _stirling_rows[n][k]


def bell(n: int) -> int:
    """Bell number B(n), the number of set partitions of an n-set."""
    if n < 0:
        raise ValueError(f"bell() needs n >= 0, got {n}")
    if n >= len(_bell_values):
        _grow_tables(n)
    return _bell_values[n]


class IntegerPartition(NamedTuple):
    """Weakly decreasing positive parts summing to ``n``."""

    parts: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicity(self, i: int) -> int:
        """Number of parts equal to i."""
        return self.parts.count(i)

    def symmetry_factor(self) -> int:
        """Product of multiplicity factorials over all part sizes."""
        result = 1
        run = 0
        prev = None
        for p in self.parts:
            if p == prev:
                run += 1
            else:
                prev, run = p, 1
            result *= run
        # running product of 1*2*...*mult per equal run equals mult! overall
        return result


def integer_partitions(n: int) -> Iterator[IntegerPartition]:
    """All partitions of n, reverse-lexicographic, e.g. (4), (3,1), (2,2), ...

    Yields the empty partition for n = 0.
    """
    if n < 0:
        raise ValueError(f"integer_partitions() needs n >= 0, got {n}")

    def rec(remaining: int, cap: int, acc: list[int]) -> Iterator[IntegerPartition]:
        if remaining == 0:
            yield IntegerPartition(tuple(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, acc)
            acc.pop()

    yield from rec(n, n, [])


def set_partition_count_by_structure(p: IntegerPartition) -> int:
    """Number of set partitions of [n] whose multiset of block sizes is p."""
    num = multinomial(p.n, p.parts)
    den = p.symmetry_factor()
    assert num % den == 0
    return num // den
