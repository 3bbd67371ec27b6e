"""Wilf classification and the recoloring bijections."""

import pytest

from colored_partitions.avoidance import Sense, contains, count_avoiders, pattern_set
from colored_partitions.formulas import FormulaId, evaluate
from colored_partitions.kernel import bell
from colored_partitions.partitions import (ColoredPartition, canonize,
                                           enumerate_colored, parse_pattern,
                                           reversal)
from colored_partitions.wilf import (EXPECTED_CLASSES, LENGTH3_PATTERNS,
                                     MapDomainError, RECOLOR_MAP_SPECS,
                                     REVERSAL_PAIRS, classify, recolor_map)


def test_pattern_list():
    assert len(LENGTH3_PATTERNS) == 25
    assert len(set(LENGTH3_PATTERNS)) == 25
    assert all(len(p.word) == 3 for p in LENGTH3_PATTERNS)


def test_classify_single_pattern():
    result = classify([LENGTH3_PATTERNS[0]], 4, 2)
    assert len(result.classes) == 1


def test_classify_reversal_pair_merges():
    pats = [parse_pattern("1^1,1^1,1^2"), parse_pattern("1^2,1^1,1^1")]
    result = classify(pats, 5, 2)
    assert len(result.classes) == 1


def test_classify_full_at_c3():
    result = classify(LENGTH3_PATTERNS, 5, 3)
    got = {frozenset((p.word, p.colors) for p in group) for group in result.classes}
    assert got == set(EXPECTED_CLASSES)
    assert sorted(len(g) for g in result.classes) == [1, 1, 1, 1, 2, 2, 2, 4, 5, 6]


def test_classify_c2_collapses_three_color_patterns():
    result = classify(LENGTH3_PATTERNS, 5, 2)
    full = tuple(2**n * bell(n) for n in range(1, 6))
    for p in LENGTH3_PATTERNS:
        if len(set(p.colors)) == 3:
            assert result.evidence[p] == full


def test_reversal_pairs_are_reversals():
    for p, q in REVERSAL_PAIRS:
        r = reversal(p)
        assert r.word == q.word
        assert canonize(r.colors) == canonize(q.colors)


def test_recolor_map_examples():
    q = ColoredPartition((1, 1, 1), (1, 1, 1), 2)
    assert recolor_map(2, q) == ColoredPartition((1, 1, 1), (1, 1, 2), 2)
    q = ColoredPartition((1, 2, 2), (1, 1, 1), 2)
    assert recolor_map(6, q) == ColoredPartition((1, 2, 2), (1, 1, 2), 2)


def test_recolor_map_errors():
    with pytest.raises(MapDomainError):
        recolor_map(7, ColoredPartition((1,), (1,), 2))
    with pytest.raises(MapDomainError):
        recolor_map(3, ColoredPartition((1, 1, 1), (1, 2, 1), 2))  # needs palette 3
    with pytest.raises(MapDomainError):
        recolor_map(2, ColoredPartition((1, 1, 1), (1, 1, 2), 3))  # not in domain


def containment_split(spec, n, c):
    """(contains source & avoids target, contains target & avoids source)."""
    domain, codomain = [], []
    for q in enumerate_colored(n, c):
        a = contains(q, spec.source, Sense.EQ)
        b = contains(q, spec.target, Sense.EQ)
        if a and not b:
            domain.append(q)
        elif b and not a:
            codomain.append(q)
    return domain, codomain


@pytest.mark.parametrize("map_id", sorted(RECOLOR_MAP_SPECS))
def test_recolor_maps_are_bijections(map_id):
    spec = RECOLOR_MAP_SPECS[map_id]
    for n in range(3, 5):
        domain, codomain = containment_split(spec, n, 3)
        images = [recolor_map(map_id, q) for q in domain]
        codomain_set = set(codomain)
        assert all(img in codomain_set for img in images)
        assert len(set(images)) == len(images)
        assert len(domain) == len(codomain)
        assert all(img.word == q.word for q, img in zip(domain, images))


def test_map1_is_involution():
    spec = RECOLOR_MAP_SPECS[1]
    for n in range(3, 6):
        domain, _ = containment_split(spec, n, 2)
        for q in domain:
            assert recolor_map(1, recolor_map(1, q)) == q


def test_class_counts_match_formula_rows():
    # each formula-backed class representative reproduces its count vector
    cases = {
        FormulaId.P111_AAA: parse_pattern("1^1,1^1,1^1"),
        FormulaId.P122_AAA: parse_pattern("1^1,2^1,2^1"),
        FormulaId.P121_AAA: parse_pattern("1^1,2^1,1^1"),
        FormulaId.P123_AAA: parse_pattern("1^1,2^1,3^1"),
    }
    for fid, pat in cases.items():
        for n in range(1, 6):
            assert evaluate(fid, n, 2).value == count_avoiders(n, 2, pattern_set([pat]))
