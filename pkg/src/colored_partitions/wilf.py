"""Wilf-equivalence machinery for the 25 length-3 colored patterns.

``classify`` groups patterns by their exact avoider-count vectors.  The six
recoloring maps are containment-set bijections witnessing six of the
equivalences; each sends partitions containing its source pattern (but not the
target) to partitions containing the target (but not the source), changing
colors only.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .avoidance import DEFAULT_BUDGET, Sense, count_avoiders, pattern_set
from .partitions import ColoredPartition, blocks_of

# the 25 patterns: each length-3 block word crossed with each color pattern
# (concrete colors: a=1, b=2, d=3)
_WORDS3 = ((1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2), (1, 2, 3))
_COLOR_SHAPES = ((1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1), (1, 2, 3))

LENGTH3_PATTERNS: tuple[ColoredPartition, ...] = tuple(
    ColoredPartition(word, shape, max(shape))
    for word in _WORDS3 for shape in _COLOR_SHAPES
)


class MapDomainError(ValueError):
    """Input outside a recoloring map's declared domain."""


class WilfClassification(NamedTuple):
    classes: tuple[tuple[ColoredPartition, ...], ...]
    evidence: dict[ColoredPartition, tuple[int, ...]]


def classify(patterns: Iterable[ColoredPartition], n_max: int, c: int, *,
             budget: int = DEFAULT_BUDGET, workers: int = 1) -> WilfClassification:
    """Group patterns by their avoider-count vectors for n = 1..n_max.

    Classes are ordered by ascending count vector; patterns inside a class
    keep their input order.
    """
    patterns = list(patterns)
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    evidence: dict[ColoredPartition, tuple[int, ...]] = {}
    for p in patterns:
        counts = tuple(
            count_avoiders(n, c, pattern_set([p]), budget=budget, workers=workers)
            for n in range(1, n_max + 1))
        evidence[p] = counts
    groups: dict[tuple[int, ...], list[ColoredPartition]] = {}
    for p in patterns:
        groups.setdefault(evidence[p], []).append(p)
    classes = tuple(tuple(groups[vec]) for vec in sorted(groups))
    return WilfClassification(classes, evidence)


# ---------------------------------------------------------------------------
# recoloring maps


class _MapSpec(NamedTuple):
    source: ColoredPartition
    target: ColoredPartition
    min_palette: int


def _cp(word, colors):
    return ColoredPartition(tuple(word), tuple(colors), max(colors))


RECOLOR_MAP_SPECS: dict[int, _MapSpec] = {
    1: _MapSpec(_cp((1, 1, 1), (1, 1, 2)), _cp((1, 1, 1), (1, 2, 1)), 2),
    2: _MapSpec(_cp((1, 1, 1), (1, 1, 1)), _cp((1, 1, 1), (1, 1, 2)), 2),
    3: _MapSpec(_cp((1, 1, 1), (1, 2, 1)), _cp((1, 1, 1), (1, 2, 3)), 3),
    4: _MapSpec(_cp((1, 2, 1), (1, 2, 1)), _cp((1, 2, 1), (1, 2, 3)), 3),
    5: _MapSpec(_cp((1, 2, 2), (1, 2, 2)), _cp((1, 2, 2), (1, 2, 3)), 3),
    6: _MapSpec(_cp((1, 2, 2), (1, 1, 1)), _cp((1, 2, 2), (1, 1, 2)), 2),
}


def _contains_eq(q: ColoredPartition, p: ColoredPartition) -> bool:
    from .avoidance import contains
    return contains(q, p, Sense.EQ)


def _recolor(q: ColoredPartition, new_colors: dict[int, int]) -> ColoredPartition:
    colors = list(q.colors)
    for elem, col in new_colors.items():
        colors[elem - 1] = col
    return ColoredPartition(q.word, tuple(colors), q.palette)


def _map1(q: ColoredPartition) -> ColoredPartition:
    # in each block with two or more color-1 elements, reverse the color
    # sequence after the first color-1 element; self-inverse
    colors = list(q.colors)
    for block in blocks_of(q.word):
        ones = [e for e in block if q.colors[e - 1] == 1]
        if len(ones) < 2:
            continue
        j = block.index(ones[0])
        tail = [colors[e - 1] for e in block[j + 1:]]
        for e, col in zip(block[j + 1:], reversed(tail)):
            colors[e - 1] = col
    return ColoredPartition(q.word, tuple(colors), q.palette)


def _map2(q: ColoredPartition) -> ColoredPartition:
    # keep the first two color-1 elements of each block, recolor the rest to 2
    out = {}
    for block in blocks_of(q.word):
        ones = [e for e in block if q.colors[e - 1] == 1]
        for e in ones[2:]:
            out[e] = 2
    return _recolor(q, out)


def _map3(q: ColoredPartition) -> ColoredPartition:
    # per block: after the first color-2 element following the first color-1
    # element, recolor the color-1 elements to 3
    out = {}
    for block in blocks_of(q.word):
        ones = [e for e in block if q.colors[e - 1] == 1]
        if not ones:
            continue
        twos_after = [e for e in block if q.colors[e - 1] == 2 and e > ones[0]]
        if not twos_after:
            continue
        for e in ones:
            if e > twos_after[0]:
                out[e] = 3
    return _recolor(q, out)


def _terminal_participants(q: ColoredPartition, source: ColoredPartition) -> list[int]:
    """Elements serving as the final element of some copy of ``source``."""
    out = []
    for z in range(1, len(q.word) + 1):
        if q.colors[z - 1] != source.colors[-1]:
            continue
        if _has_prefix_copy(q, source, z):
            out.append(z)
    return out


def _has_prefix_copy(q: ColoredPartition, source: ColoredPartition, z: int) -> bool:
    k = len(source.word)
    zletter_pat = source.word[-1]
    # match the first k-1 pattern positions against q positions < z, with the
    # block-letter map already binding the final pattern letter to z's block
    def rec(pi: int, start: int, fwd: dict[int, int], used: set[int]) -> bool:
        if pi == k - 1:
            return True
        pletter = source.word[pi]
        for qi in range(start, z - 1):
            qletter = q.word[qi]
            if q.colors[qi] != source.colors[pi]:
                continue
            if pletter in fwd:
                if fwd[pletter] != qletter:
                    continue
                if rec(pi + 1, qi + 1, fwd, used):
                    return True
            else:
                if qletter in used:
                    continue
                fwd[pletter] = qletter
                used.add(qletter)
                if rec(pi + 1, qi + 1, fwd, used):
                    return True
                del fwd[pletter]
                used.remove(qletter)
        return False

    zletter = q.word[z - 1]
    fwd = {zletter_pat: zletter}
    return rec(0, 0, fwd, {zletter})


def _participant_map(target_color: int):
    def apply(q: ColoredPartition, source: ColoredPartition) -> ColoredPartition:
        out = {z: target_color for z in _terminal_participants(q, source)}
        return _recolor(q, out)
    return apply


def recolor_map(map_id: int, q: ColoredPartition) -> ColoredPartition:
    """Apply one of the six recoloring bijections to a colored partition.

    The input must contain the map's source pattern and avoid its target
    (map 1, being self-inverse, also accepts the reverse situation).  The
    result contains the target and avoids the source; only colors change.
    """
    if map_id not in RECOLOR_MAP_SPECS:
        raise MapDomainError(f"unknown map id {map_id}; valid ids are 1..6")
    spec = RECOLOR_MAP_SPECS[map_id]
    if q.palette < spec.min_palette:
        raise MapDomainError(f"map {map_id} needs a palette of size >= {spec.min_palette}")
    forward = _contains_eq(q, spec.source) and not _contains_eq(q, spec.target)
    if map_id == 1:
        backward = _contains_eq(q, spec.target) and not _contains_eq(q, spec.source)
        if not (forward or backward):
            raise MapDomainError(
                "map 1 needs a partition containing exactly one of its two patterns")
        return _map1(q)
    if not forward:
        raise MapDomainError(
            f"map {map_id} needs a partition containing {spec.source} and avoiding {spec.target}")
    if map_id == 2:
        return _map2(q)
    if map_id == 3:
        return _map3(q)
    # maps 4-6: recolor the elements terminating a copy of the source
    return _participant_map(3 if map_id in (4, 5) else 2)(q, spec.source)


# the eight reversal equalities: pairs of patterns with equal avoider counts
REVERSAL_PAIRS: tuple[tuple[ColoredPartition, ColoredPartition], ...] = (
    (_cp((1, 1, 1), (1, 1, 2)), _cp((1, 1, 1), (2, 1, 1))),
    (_cp((1, 2, 3), (1, 1, 2)), _cp((1, 2, 3), (2, 1, 1))),
    (_cp((1, 2, 2), (2, 1, 1)), _cp((1, 1, 2), (1, 1, 2))),
    (_cp((1, 2, 2), (1, 2, 3)), _cp((1, 1, 2), (1, 2, 3))),
    (_cp((1, 2, 2), (1, 2, 1)), _cp((1, 1, 2), (1, 2, 1))),
    (_cp((1, 2, 2), (1, 1, 1)), _cp((1, 1, 2), (1, 1, 1))),
    (_cp((1, 2, 2), (1, 1, 2)), _cp((1, 1, 2), (2, 1, 1))),
    (_cp((1, 2, 1), (1, 1, 2)), _cp((1, 2, 1), (2, 1, 1))),
)

# the ten equivalence classes of the 25 patterns (word, color shape)
EXPECTED_CLASSES: tuple[frozenset[tuple[tuple[int, ...], tuple[int, ...]]], ...] = tuple(
    frozenset(members) for members in (
        {((1, 1, 1), (1, 1, 1)), ((1, 1, 1), (1, 1, 2)), ((1, 1, 1), (1, 2, 1)),
         ((1, 1, 1), (2, 1, 1)), ((1, 1, 1), (1, 2, 3))},
        {((1, 2, 2), (1, 1, 1)), ((1, 1, 2), (1, 1, 1)), ((1, 2, 2), (1, 1, 2)),
         ((1, 1, 2), (2, 1, 1)), ((1, 2, 1), (1, 1, 2)), ((1, 2, 1), (2, 1, 1))},
        {((1, 2, 2), (1, 2, 1)), ((1, 1, 2), (1, 2, 1))},
        {((1, 2, 2), (2, 1, 1)), ((1, 1, 2), (1, 1, 2)), ((1, 2, 2), (1, 2, 3)),
         ((1, 1, 2), (1, 2, 3))},
        {((1, 2, 1), (1, 1, 1))},
        {((1, 2, 1), (1, 2, 1)), ((1, 2, 1), (1, 2, 3))},
        {((1, 2, 3), (1, 1, 1))},
        {((1, 2, 3), (1, 1, 2)), ((1, 2, 3), (2, 1, 1))},
        {((1, 2, 3), (1, 2, 1))},
        {((1, 2, 3), (1, 2, 3))},
    )
)
