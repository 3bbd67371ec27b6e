"""Containment senses, expansions, and the brute-force counter."""

from itertools import permutations

import pytest

from colored_partitions.avoidance import (EnumerationBudgetError, Sense, avoids,
                                          contains, contains_word,
                                          count_avoiders, expand_lt,
                                          expand_pattern, pattern_set)
from colored_partitions.kernel import bell
from colored_partitions.partitions import (ColoredPartition, enumerate_colored,
                                           parse_pattern, reversal)
from colored_partitions.wilf import LENGTH3_PATTERNS

Q_EXAMPLE = parse_pattern("1^2,2^1,1^1,3^1,2^3,4^3,1^2")
P1 = parse_pattern("1^1,2^4,3^4")
P2 = parse_pattern("1^1,2^1,1^3")


def test_contains_three_senses_worked_example():
    assert contains(Q_EXAMPLE, P2, Sense.EQ)
    assert not contains(Q_EXAMPLE, P1, Sense.EQ)
    assert contains(Q_EXAMPLE, P1, Sense.LT)
    assert contains(Q_EXAMPLE, P1, Sense.PATTERN)


def test_uncolored_containment():
    q = (1, 2, 1, 3, 2, 4, 1)
    assert contains_word(q, (1, 1, 2))
    assert not contains_word(q, (1, 2, 2, 2))


def test_longer_pattern_never_contained():
    q = parse_pattern("1^1,2^1")
    p = parse_pattern("1^1,2^1,3^1")
    assert not contains(q, p, Sense.EQ)


def test_avoids_examples():
    assert avoids(parse_pattern("1^1,1^2"), pattern_set([parse_pattern("1^1,1^1")]))
    assert not avoids(parse_pattern("1^1,1^1"), pattern_set([parse_pattern("1^1,1^1")]))
    full = pattern_set([parse_pattern(t) for t in
                        ("1^1,1^1", "1^1,1^2", "1^2,1^1", "1^2,1^2")])
    assert avoids(parse_pattern("1^1,2^2"), full)


def test_expand_lt():
    got = expand_lt(parse_pattern("1^1,1^2"), 2)
    assert {str(p) for p in got.patterns} == {"1^1,1^1", "1^1,1^2"}
    got = expand_lt(parse_pattern("1^2,2^2"), 2)
    assert {str(p) for p in got.patterns} == {"1^1,2^1", "1^1,2^2", "1^2,2^1", "1^2,2^2"}
    got = expand_lt(parse_pattern("1^1,1^1"), 3)
    assert {str(p) for p in got.patterns} == {"1^1,1^1"}
    assert got.sense is Sense.EQ


def test_expand_pattern():
    got = expand_pattern(parse_pattern("1^1,2^1"), 2)
    assert {str(p) for p in got.patterns} == {"1^1,2^1", "1^2,2^2"}
    got = expand_pattern(parse_pattern("1^1,1^1"), 2)
    assert {str(p) for p in got.patterns} == {"1^1,1^1", "1^2,1^2"}
    got = expand_pattern(parse_pattern("1^1,2^2"), 2)
    assert {str(p) for p in got.patterns} == {"1^1,2^2", "1^2,2^1"}


def test_count_avoiders_known_values():
    assert count_avoiders(4, 2, pattern_set([parse_pattern("1^1,2^1")])) == 114
    assert count_avoiders(5, 2, pattern_set([parse_pattern("1^1,1^1")])) == 878
    assert count_avoiders(2, 3, pattern_set([parse_pattern("1^1,1^1")])) == 17
    assert count_avoiders(6, 2, pattern_set([parse_pattern("1^1,2^1,3^1")])) == 8425


def test_sense_expansion_equivalence():
    patterns = [parse_pattern(t) for t in ("1^1,1^2", "1^2,2^2", "1^2,2^1")]
    patterns += list(LENGTH3_PATTERNS)
    universe = [q for n in range(5 + 1) for q in enumerate_colored(n, 2)]
    for p in patterns:
        lt_set = expand_lt(p, 2)
        pat_set = expand_pattern(p, 2)
        for q in universe:
            assert contains(q, p, Sense.LT) == (not avoids(q, lt_set))
            assert contains(q, p, Sense.PATTERN) == (not avoids(q, pat_set))


def test_palette_symmetry():
    samples = [parse_pattern(t) for t in
               ("1^1,1^1", "1^1,2^2", "1^1,2^1,1^2", "1^1,1^2,2^3")]
    for p in samples:
        for c in (2, 3):
            if max(p.colors) > c:
                continue
            base = [count_avoiders(n, c, pattern_set([p])) for n in range(5 + 1)]
            for sigma in permutations(range(1, c + 1)):
                relabeled = ColoredPartition(
                    p.word, tuple(sigma[col - 1] for col in p.colors), c)
                got = [count_avoiders(n, c, pattern_set([relabeled]))
                       for n in range(5 + 1)]
                assert got == base


def test_guard_law_exhaustive():
    # below the pattern's length or color requirement, everything avoids
    pool = [parse_pattern(t) for t in
            ("1^1,1^1", "1^1,2^2", "1^2,2^3", "1^1,2^1,3^1", "1^1,2^2,3^3")]
    for p in pool:
        k = len(p.word)
        colors_used = len(set(p.colors))
        for n in range(5):
            for c in (1, 2, 3):
                if max(p.colors) > c and colors_used <= c:
                    continue
                if n < k or c < colors_used:
                    assert count_avoiders(n, c, pattern_set([p])) == c**n * bell(n)


def test_union_monotonicity():
    r1 = pattern_set([parse_pattern("1^1,2^1")])
    r2 = pattern_set([parse_pattern("1^1,2^1"), parse_pattern("1^1,1^1")])
    for n in range(6):
        assert count_avoiders(n, 2, r2) <= count_avoiders(n, 2, r1)


def test_reversal_equinumerosity_all_length3():
    for p in LENGTH3_PATTERNS:
        rev = reversal(p)
        for c in (2, 3):
            for n in range(1, 6):
                assert (count_avoiders(n, c, pattern_set([p]))
                        == count_avoiders(n, c, pattern_set([rev]))), (str(p), n, c)


def test_budget_guard():
    ps = pattern_set([parse_pattern("1^1,2^1,3^1")])
    with pytest.raises(EnumerationBudgetError):
        count_avoiders(12, 3, ps)
    # budgets are exact cutoffs on the space size 2^3 * B(3) = 40
    assert count_avoiders(3, 2, ps, budget=40) == 39
    with pytest.raises(EnumerationBudgetError):
        count_avoiders(3, 2, ps, budget=39)


def test_workers_agree():
    ps = pattern_set([parse_pattern("1^1,1^1")])
    expected = count_avoiders(6, 2, ps, workers=1)
    assert count_avoiders(6, 2, ps, workers=2) == expected
    assert count_avoiders(6, 2, ps, workers=8) == expected


def test_lt_and_pattern_sense_counting():
    # counting through expansion agrees with direct containment filtering
    p = parse_pattern("1^1,1^2")
    for sense in (Sense.LT, Sense.PATTERN):
        ps = pattern_set([p], sense)
        for n in range(5):
            direct = sum(1 for q in enumerate_colored(n, 2)
                         if not contains(q, p, sense))
            assert count_avoiders(n, 2, ps) == direct
