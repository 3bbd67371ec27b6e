"""Pattern containment and brute-force avoider counting.

A colored partition Q contains a pattern P when some subsequence of Q's word
has the same letter-equality structure as P's word and the subsequence colors
satisfy the chosen sense:

* ``EQ``      -- colors match P's colors exactly,
* ``LT``      -- colors are element-wise <= P's colors,
* ``PATTERN`` -- colors have the same equality structure as P's colors.

lt- and pattern-avoidance over a finite palette reduce to eq-avoidance of an
expanded pattern set; the brute-force counter works on the eq form.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from .kernel import bell
from .partitions import ColoredPartition, canonize, enumerate_set_partitions

DEFAULT_BUDGET = 10**8


class EnumerationBudgetError(RuntimeError):
    """Raised when a brute-force run would enumerate too many partitions."""


class Sense(Enum):
    EQ = "eq"
    LT = "lt"
    PATTERN = "pattern"


class PatternSet(NamedTuple):
    patterns: tuple[ColoredPartition, ...]
    sense: Sense


def pattern_set(patterns: Iterable[ColoredPartition], sense: Sense = Sense.EQ) -> PatternSet:
    """Deduplicate (structurally) and order a collection of patterns."""
    seen = {}
    for p in patterns:
        seen[(p.word, p.colors)] = p
    if not seen:
        raise ValueError("a pattern set must be non-empty")
    ordered = tuple(seen[key] for key in sorted(seen))
    return PatternSet(ordered, sense)


@lru_cache(maxsize=None)
def word_embeddings(qword: tuple[int, ...], pword: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All index tuples where ``pword`` occurs as a canonized subword of ``qword``.

    An occurrence is a strictly increasing position tuple whose letters have
    exactly the equality structure of ``pword``.
    """
    k = len(pword)
    n = len(qword)
    if k > n:
        return ()
    found: list[tuple[int, ...]] = []
    positions = [0] * k

    def rec(pi: int, start: int, fwd: dict[int, int], used: set[int]) -> None:
        if pi == k:
            found.append(tuple(positions))
            return
        pletter = pword[pi]
        for qi in range(start, n - (k - pi) + 1):
            qletter = qword[qi]
            if pletter in fwd:
                if fwd[pletter] != qletter:
                    continue
                positions[pi] = qi
                rec(pi + 1, qi + 1, fwd, used)
            else:
                if qletter in used:
                    continue
                fwd[pletter] = qletter
                used.add(qletter)
                positions[pi] = qi
                rec(pi + 1, qi + 1, fwd, used)
                del fwd[pletter]
                used.remove(qletter)

    rec(0, 0, {}, set())
    return tuple(found)


def contains_word(qword: tuple[int, ...], pword: tuple[int, ...]) -> bool:
    """Uncolored containment: does some subsequence of qword canonize to pword?"""
    return bool(word_embeddings(qword, canonize(pword)))


def contains(q: ColoredPartition, p: ColoredPartition, sense: Sense) -> bool:
    """True iff q contains a copy of p in the given sense.

    Depth-first search over positions; the partial letter map (and, in the
    pattern sense, the partial color map) prunes inconsistent prefixes.
    """
    k = len(p.word)
    n = len(q.word)
    if k > n:
        return False
    pcolors = canonize(p.colors) if sense is Sense.PATTERN else p.colors

    def color_ok(pi: int, qcol: int, cmap: dict[int, int], cused: set[int]) -> bool:
        if sense is Sense.EQ:
            return qcol == pcolors[pi]
        if sense is Sense.LT:
            return qcol <= pcolors[pi]
        pcol = pcolors[pi]
        if pcol in cmap:
            return cmap[pcol] == qcol
        return qcol not in cused

    def rec(pi: int, start: int, fwd: dict[int, int], used: set[int],
            cmap: dict[int, int], cused: set[int]) -> bool:
        if pi == k:
            return True
        pletter = p.word[pi]
        for qi in range(start, n - (k - pi) + 1):
            qletter = q.word[qi]
            if pletter in fwd:
                if fwd[pletter] != qletter:
                    continue
            elif qletter in used:
                continue
            qcol = q.colors[qi]
            if not color_ok(pi, qcol, cmap, cused):
                continue
            new_letter = pletter not in fwd
            if new_letter:
                fwd[pletter] = qletter
                used.add(qletter)
            new_color = sense is Sense.PATTERN and pcolors[pi] not in cmap
            if new_color:
                cmap[pcolors[pi]] = qcol
                cused.add(qcol)
            if rec(pi + 1, qi + 1, fwd, used, cmap, cused):
                return True
            if new_color:
                del cmap[pcolors[pi]]
                cused.remove(qcol)
            if new_letter:
                del fwd[pletter]
                used.remove(qletter)
        return False

    return rec(0, 0, {}, set(), {}, set())


def avoids(q: ColoredPartition, patterns: PatternSet) -> bool:
    """True iff q contains none of the patterns in the set's sense."""
    return not any(contains(q, p, patterns.sense) for p in patterns.patterns)


def expand_lt(p: ColoredPartition, c: int) -> PatternSet:
    """The eq-sense pattern set equivalent to lt-avoiding p over palette c."""
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")
    ranges = [range(1, min(col, c) + 1) for col in p.colors]
    pats = [ColoredPartition(p.word, cols, c) for cols in product(*ranges)]
    return pattern_set(pats, Sense.EQ)


def expand_pattern(p: ColoredPartition, c: int) -> PatternSet:
    """The eq-sense pattern set equivalent to pattern-avoiding p over palette c."""
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")
    target = canonize(p.colors)
    pats = [
        ColoredPartition(p.word, cols, c)
        for cols in product(range(1, c + 1), repeat=len(p.word))
        if canonize(cols) == target
    ]
    if not pats:
        # fewer palette colors than the pattern uses: nothing can match, but a
        # PatternSet must be non-empty, so keep the unsatisfiable original.
        pats = [p]
    return pattern_set(pats, Sense.EQ)


def _as_eq_requirements(patterns: PatternSet, c: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Flatten a pattern set into (word, exact colors) requirements over [c]."""
    reqs: dict[tuple[tuple[int, ...], tuple[int, ...]], None] = {}
    for p in patterns.patterns:
        if patterns.sense is Sense.EQ:
            expanded = [p]
        elif patterns.sense is Sense.LT:
            expanded = expand_lt(p, c).patterns
        else:
            expanded = expand_pattern(p, c).patterns
        for q in expanded:
            if max(q.colors, default=1) <= c:
                reqs[(q.word, q.colors)] = None
    return list(reqs)


def word_avoider_count(word: tuple[int, ...], c: int,
                       requirements: Sequence[tuple[tuple[int, ...], tuple[int, ...]]]) -> int:
    """Number of colorings of one set-partition word avoiding all requirements.

    Each requirement is (pattern word, exact colors).  Positions touched by no
    embedding are colored freely; the rest are filled by depth-first search
    that abandons a prefix as soon as it completes an embedding.
    """
    n = len(word)
    embeddings: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for pword, pcolors in requirements:
        for positions in word_embeddings(word, pword):
            embeddings.append((positions, pcolors))
    if not embeddings:
        return c**n

    constrained = sorted({pos for positions, _ in embeddings for pos in positions})
    remap = {pos: i for i, pos in enumerate(constrained)}
    m = len(constrained)
    # per constrained index: list of (earlier indices, their colors, last color)
    by_last: list[list[tuple[tuple[int, ...], tuple[int, ...], int]]] = [[] for _ in range(m)]
    for positions, pcolors in embeddings:
        mapped = tuple(remap[pos] for pos in positions)
        by_last[mapped[-1]].append((mapped[:-1], pcolors[:-1], pcolors[-1]))

    colors = [0] * m

    def count_from(i: int) -> int:
        if i == m:
            return 1
        total = 0
        for col in range(1, c + 1):
            colors[i] = col
            blocked = False
            for prefix, prefix_colors, last_color in by_last[i]:
                if col == last_color and all(colors[j] == pc for j, pc in zip(prefix, prefix_colors)):
                    blocked = True
                    break
            if not blocked:
                total += count_from(i + 1)
        return total

    return c ** (n - m) * count_from(0)


def _count_words_chunk(words: Sequence[tuple[int, ...]], c: int,
                       requirements: Sequence[tuple[tuple[int, ...], tuple[int, ...]]]) -> int:
    return sum(word_avoider_count(word, c, requirements) for word in words)


def count_avoiders(n: int, c: int, patterns: PatternSet, *,
                   budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    """Exact number of colored partitions of [n] over c colors avoiding the set.

    Splits the word stream into slices; each slice is counted independently
    and the integer totals are summed, so the result is identical for any
    worker count.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")
    space = c**n * bell(n)
    if space > budget:
        raise EnumerationBudgetError(
            f"brute-force enumeration of {space} colored partitions "
            f"(n={n}, c={c}) exceeds the budget of {budget}; "
            f"raise the budget to force it"
        )
    requirements = _as_eq_requirements(patterns, c)
    words = list(enumerate_set_partitions(n))
    if workers <= 1 or len(words) < 2 * workers:
        return _count_words_chunk(words, c, requirements)
    chunk = (len(words) + workers - 1) // workers
    slices = [words[i:i + chunk] for i in range(0, len(words), chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        totals = pool.map(_count_words_chunk, slices, [c] * len(slices), [requirements] * len(slices))
        return sum(totals)
