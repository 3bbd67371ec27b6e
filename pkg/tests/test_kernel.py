"""Number-kernel tests with independent oracles."""

import pytest

from colored_partitions.kernel import (IntegerPartition, bell, binomial,
                                       falling_factorial, integer_partitions,
                                       multinomial,
                                       set_partition_count_by_structure,
                                       stirling2)


def brute_partitions(universe):
    """All set partitions of a list, as frozensets of frozensets."""
    if not universe:
        yield frozenset()
        return
    first, rest = universe[0], universe[1:]
    for sub in brute_partitions(rest):
        yield sub | {frozenset([first])}
        for block in sub:
            yield (sub - {block}) | {block | {first}}


def euler_partition_count(n):
    """p(n) through the pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(3, 7) == 0
    assert binomial(0, 0) == 1
    assert binomial(-1, 0) == 0
    assert binomial(4, -2) == 0


def test_multinomial_examples():
    assert multinomial(2, [1, 0]) == 2
    assert multinomial(2, [0, 1]) == 2
    assert multinomial(4, [4]) == 1
    assert multinomial(3, [2, 2]) == 0
    assert multinomial(3, [-1]) == 0
    assert multinomial(-1, []) == 0


def test_multinomial_matches_binomial():
    for n in range(21):
        for k in range(n + 1):
            assert multinomial(n, [k]) == binomial(n, k) * binomial(n - k, n - k)


def test_stirling2_against_enumeration():
    for n in range(7):
        for k in range(n + 2):
            expected = sum(1 for p in set(brute_partitions(list(range(n))))
                           if len(p) == k)
            assert stirling2(n, k) == expected
    assert stirling2(4, 2) == 7
    assert stirling2(9, 9) == 1
    assert stirling2(1, 0) == 0
    assert stirling2(3, 5) == 0


def test_bell_against_enumeration():
    assert bell(0) == 1
    assert bell(3) == len(set(brute_partitions([1, 2, 3]))) == 5
    assert bell(6) == len(set(brute_partitions(list(range(6))))) == 203


def test_bell_rejects_negative():
    with pytest.raises(ValueError):
        bell(-1)


def test_bell_stirling_identities():
    for n in range(26):
        assert sum(stirling2(n, k) for k in range(n + 1)) == bell(n)
    for n in range(25):
        assert bell(n + 1) == sum(binomial(n, k) * bell(k) for k in range(n + 1))


def test_falling_factorial():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(3, 0) == 1
    assert falling_factorial(2, 3) == 0
    assert falling_factorial(6, 6) == 720


def test_integer_partitions_listing():
    assert [p.parts for p in integer_partitions(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in integer_partitions(1)] == [(1,)]
    assert [p.parts for p in integer_partitions(0)] == [()]


def test_integer_partitions_count_vs_euler():
    for n in range(41):
        assert sum(1 for _ in integer_partitions(n)) == euler_partition_count(n)


def test_integer_partitions_are_sorted_and_unique():
    for n in range(12):
        seen = set()
        for p in integer_partitions(n):
            assert all(a >= b >= 1 for a, b in zip(p.parts, p.parts[1:]))
            assert sum(p.parts) == n == p.n
            assert p.parts not in seen
            seen.add(p.parts)


def test_multiplicity_and_structure_count():
    p = IntegerPartition((3, 2, 2, 1))
    assert p.multiplicity(2) == 2
    assert p.multiplicity(5) == 0
    # partitions of [4] shaped (2, 2): {12|34, 13|24, 14|23}
    assert set_partition_count_by_structure(IntegerPartition((2, 2))) == 3
    for n in range(8):
        total = sum(set_partition_count_by_structure(p) for p in integer_partitions(n))
        assert total == bell(n)
