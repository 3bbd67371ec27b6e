"""Constructive bijections for two avoidance classes over two colors.

* Partitions avoiding the cross-block same-color pair correspond to set
  partitions of [n+3] whose largest singleton is exactly n+1 ("marked"
  partitions: the two extra elements n+2, n+3 act as markers).
* Partitions avoiding both monochromatic same-block pairs correspond to
  involutions of [2n] invariant under the reverse-complement map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .partitions import (ColoredPartition, blocks_of, canonize,
                         enumerate_set_partitions, word_from_blocks)


class PreconditionError(ValueError):
    """Input outside the declared domain of a bijection."""


@dataclass(frozen=True)
class MarkedPartition:
    """Partition of [n+3] with at least one singleton, the largest being n+1."""

    word: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        blocks = blocks_of(self.word)
        singletons = [b[0] for b in blocks if len(b) == 1]
        if not singletons or max(singletons) != n + 1:
            raise PreconditionError(
                f"largest singleton must be {n + 1} in {self.word}")

    @property
    def n(self) -> int:
        return len(self.word) - 3


def enumerate_marked(n: int) -> Iterator[MarkedPartition]:
    """All marked partitions for a given n, in word order."""
    for word in enumerate_set_partitions(n + 3):
        blocks = blocks_of(word)
        singletons = [b[0] for b in blocks if len(b) == 1]
        if singletons and max(singletons) == n + 1:
            yield MarkedPartition(word)


def to_marked(p: ColoredPartition) -> MarkedPartition:
    """Map an avoider of the cross-block color-1 pair to a marked partition.

    All color-1 elements must share a block.  The markers n+2 and n+3 go: into
    their own block when color 1 is unused; both into the block when it is
    purely color 1; otherwise the mixed block splits by color, marker n+2
    joining the color-1 part and n+3 the color-2 part.
    """
    if p.palette != 2:
        raise PreconditionError("the marked-partition bijection needs palette 2")
    n = len(p.word)
    ones = [e for e in range(1, n + 1) if p.colors[e - 1] == 1]
    host_letters = {p.word[e - 1] for e in ones}
    if len(host_letters) > 1:
        raise PreconditionError("color-1 elements occupy more than one block")
    blocks = [set(b) for b in blocks_of(p.word)]
    out: list[set[int]] = []
    if not ones:
        out = blocks + [{n + 2, n + 3}]
    else:
        host = blocks[host_letters.pop() - 1]
        rest = [b for b in blocks if b is not host]
        twos = host - set(ones)
        if not twos:
            out = rest + [host | {n + 2, n + 3}]
        else:
            out = rest + [set(ones) | {n + 2}, twos | {n + 3}]
    out.append({n + 1})
    return MarkedPartition(word_from_blocks(out, n + 3))


def from_marked(m: MarkedPartition) -> ColoredPartition:
    """Inverse of :func:`to_marked`."""
    n = m.n
    blocks = [set(b) for b in blocks_of(m.word)]
    d2 = next(b for b in blocks if n + 2 in b)
    d3 = next(b for b in blocks if n + 3 in b)
    colors = [2] * n
    if d2 is d3:
        core = d2 - {n + 2, n + 3}
        kept = [b for b in blocks if b is not d2 and min(b) != n + 1]
        if core:
            kept.append(core)
            for e in core:
                colors[e - 1] = 1
    else:
        part1 = d2 - {n + 2}
        part2 = d3 - {n + 3}
        kept = [b for b in blocks if b not in (d2, d3) and min(b) != n + 1]
        kept.append(part1 | part2)
        for e in part1:
            colors[e - 1] = 1
    word = word_from_blocks(kept, n) if n else ()
    return ColoredPartition(word, tuple(colors), 2)


@dataclass(frozen=True)
class Involution2n:
    """An involution of [2n], invariant under reverse-complement."""

    perm: tuple[int, ...]

    def __post_init__(self):
        m = len(self.perm)
        if m % 2:
            raise PreconditionError("length must be even")
        if sorted(self.perm) != list(range(1, m + 1)):
            raise PreconditionError(f"not a permutation: {self.perm}")
        if any(self.perm[self.perm[i] - 1] != i + 1 for i in range(m)):
            raise PreconditionError(f"not an involution: {self.perm}")
        if reverse_complement(self.perm) != self.perm:
            raise PreconditionError(f"not reverse-complement invariant: {self.perm}")

    @property
    def n(self) -> int:
        return len(self.perm) // 2


def reverse_complement(perm: tuple[int, ...]) -> tuple[int, ...]:
    """Complement of the reversal; an involution on permutations of [m]."""
    m = len(perm)
    return tuple(m + 1 - v for v in reversed(perm))


def _validate_pairable(p: ColoredPartition) -> list[list[int]]:
    if p.palette != 2:
        raise PreconditionError("the involution bijection needs palette 2")
    blocks = blocks_of(p.word)
    for block in blocks:
        cols = [p.colors[e - 1] for e in block]
        if len(cols) != len(set(cols)):
            raise PreconditionError("a block repeats a color")
    return blocks


def to_rc_involution(p: ColoredPartition) -> Involution2n:
    """Map an avoider of both monochromatic pairs to an RC-invariant involution.

    Works on the largest element: a singleton colored 1 or 2 pins the value 2n
    to position 1 or 2n; a two-element block {i, n} pins it to position 1+i or
    2n-i depending on n's color.  The remaining positions and values are the
    same symmetric set, so the rest is filled by the order-isomorphic copy of
    the involution built recursively from the remaining elements.
    """
    _validate_pairable(p)

    def build(word: tuple[int, ...], colors: tuple[int, ...]) -> tuple[int, ...]:
        n = len(word)
        if n == 0:
            return ()
        two_n = 2 * n
        block = next(b for b in blocks_of(word) if n in b)
        color_n = colors[-1]
        if len(block) == 1:
            sub = build(canonize(word[:-1]), colors[:-1])
            perm = {t + 1: v + 1 for t, v in enumerate(sub, start=1)}
            if color_n == 1:
                perm[1], perm[two_n] = two_n, 1
            else:
                perm[1], perm[two_n] = 1, two_n
        else:
            i = block[0]
            pos = 1 + i if color_n == 1 else two_n - i
            mirror = two_n + 1 - pos
            perm = {pos: two_n, two_n: pos, mirror: 1, 1: mirror}
            keep = [e for e in range(1, n + 1) if e not in (i, n)]
            sub = build(canonize(word[e - 1] for e in keep),
                        tuple(colors[e - 1] for e in keep))
            slots = [t for t in range(1, two_n + 1) if t not in perm]
            for t, v in zip(slots, sub):
                perm[t] = slots[v - 1]
        return tuple(perm[t] for t in range(1, two_n + 1))

    return Involution2n(build(p.word, p.colors))


def from_rc_involution(v: Involution2n) -> ColoredPartition:
    """Inverse of :func:`to_rc_involution`."""

    def build(perm: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        m = len(perm)
        if m == 0:
            return (), ()
        n = m // 2
        pos = perm.index(m) + 1
        if pos in (1, m):
            slots = list(range(2, m))
            sub = tuple(slots.index(perm[t - 1]) + 1 for t in slots)
            word, colors = build(sub)
            letter = max(word, default=0) + 1
            return word + (letter,), colors + (1 if pos == 1 else 2,)
        if pos <= n:
            i, color_n = pos - 1, 1
        else:
            i, color_n = m - pos, 2
        removed = {1, pos, m + 1 - pos, m}
        slots = [t for t in range(1, m + 1) if t not in removed]
        sub = tuple(slots.index(perm[t - 1]) + 1 for t in slots)
        sub_word, sub_colors = build(sub)
        keep = [e for e in range(1, n + 1) if e not in (i, n)]
        blocks = [[keep[e - 1] for e in block] for block in blocks_of(sub_word)]
        blocks.append([i, n])
        colors = [0] * n
        for e_sub, col in enumerate(sub_colors, start=1):
            colors[keep[e_sub - 1] - 1] = col
        colors[i - 1] = 3 - color_n
        colors[n - 1] = color_n
        return word_from_blocks(blocks, n), tuple(colors)

    word, colors = build(v.perm)
    return ColoredPartition(word, colors, 2)
