"""Set partitions as restricted-growth words, plus colorings.

A set partition of [n] is stored as its canonical word: a tuple
``w`` with ``w[0] == 1`` and each later letter at most one more than the
running maximum, where ``w[i] == j`` says element i+1 lies in the j-th block
(blocks ordered by their minima).  A colored partition adds one color in
``1..palette`` per element; the same type doubles as a pattern.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .kernel import IntegerPartition


class PatternSyntaxError(ValueError):
    """Raised when a word or pattern string does not parse."""


def canonize(word: Iterable[int]) -> tuple[int, ...]:
    """Relabel letters by order of first occurrence.

    The result is a restricted-growth word; canonize is idempotent and
    preserves the same-letter (same-block) relation.
    """
    relabel: dict[int, int] = {}
    out = []
    for letter in word:
        if letter not in relabel:
            relabel[letter] = len(relabel) + 1
        out.append(relabel[letter])
    return tuple(out)


def is_canonical(word: tuple[int, ...]) -> bool:
    top = 0
    for letter in word:
        if letter < 1 or letter > top + 1:
            return False
        top = max(top, letter)
    return True


def blocks_of(word: tuple[int, ...]) -> list[list[int]]:
    """Blocks as sorted element lists, ordered by block minima."""
    blocks: list[list[int]] = [[] for _ in range(max(word, default=0))]
    for elem, letter in enumerate(word, start=1):
        blocks[letter - 1].append(elem)
    return blocks


def word_from_blocks(blocks: Iterable[Iterable[int]], n: int) -> tuple[int, ...]:
    """Canonical word of the partition of [n] with the given blocks."""
    letter_of: dict[int, int] = {}
    for index, block in enumerate(sorted((tuple(b) for b in blocks), key=min), start=1):
        for elem in block:
            letter_of[elem] = index
    if sorted(letter_of) != list(range(1, n + 1)):
        raise ValueError("blocks do not partition [n]")
    return tuple(letter_of[e] for e in range(1, n + 1))


def block_structure(word: tuple[int, ...]) -> IntegerPartition:
    """Multiset of block sizes, weakly decreasing."""
    sizes = [0] * max(word, default=0)
    for letter in word:
        sizes[letter - 1] += 1
    return IntegerPartition(tuple(sorted(sizes, reverse=True)))


def enumerate_set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All restricted-growth words of length n in lexicographic order."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n == 0:
        yield ()
        return
    word = [1] * n

    def rec(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(word)
            return
        for letter in range(1, top + 2):
            word[i] = letter
            yield from rec(i + 1, max(top, letter))

    yield from rec(1, 1)


class ColoredPartition(NamedTuple):
    """A canonical word with one color per element; doubles as a pattern."""

    word: tuple[int, ...]
    colors: tuple[int, ...]
    palette: int

    def __str__(self) -> str:
        return format_pattern(self)


def colored(word: Iterable[int], colors: Iterable[int], palette: int | None = None) -> ColoredPartition:
    """Validating constructor for :class:`ColoredPartition`."""
    word = tuple(word)
    colors = tuple(colors)
    if not is_canonical(word):
        raise ValueError(f"not a canonical word: {word}")
    if len(colors) != len(word):
        raise ValueError("word and colors must have equal length")
    if palette is None:
        palette = max(colors, default=1)
    if any(col < 1 or col > palette for col in colors):
        raise ValueError(f"colors must lie in 1..{palette}: {colors}")
    return ColoredPartition(word, colors, palette)


def enumerate_colored(n: int, c: int) -> Iterator[ColoredPartition]:
    """All of the c^n * B(n) colored partitions of [n], streamed.

    Word-major order, colorings lexicographic within a word.
    """
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")
    palette = range(1, c + 1)
    for word in enumerate_set_partitions(n):
        for colors in product(palette, repeat=n):
            yield ColoredPartition(word, colors, c)


def reversal(p: ColoredPartition) -> ColoredPartition:
    """Canonize the reversed word and reverse the colors; an involution."""
    return ColoredPartition(canonize(reversed(p.word)), p.colors[::-1], p.palette)


def format_word(word: tuple[int, ...]) -> str:
    """Digit string like ``1213241``; comma-separated once letters pass 9."""
    if all(letter <= 9 for letter in word):
        return "".join(str(letter) for letter in word)
    return ",".join(str(letter) for letter in word)


def parse_word(text: str) -> tuple[int, ...]:
    """Parse an uncolored word, digit-string or comma-separated."""
    text = "".join(text.split())
    if not text:
        raise PatternSyntaxError("empty word")
    if "," in text:
        try:
            word = tuple(int(item) for item in text.split(","))
        except ValueError as exc:
            raise PatternSyntaxError(f"bad word {text!r}") from exc
    else:
        if not text.isdigit():
            raise PatternSyntaxError(f"bad word {text!r}")
        word = tuple(int(ch) for ch in text)
    if not is_canonical(word):
        raise PatternSyntaxError(f"word is not canonical: {text!r}")
    return word


def format_pattern(p: ColoredPartition) -> str:
    """Serialize as comma-separated ``<letter>^<color>`` items."""
    return ",".join(f"{letter}^{color}" for letter, color in zip(p.word, p.colors))


def parse_pattern(text: str, palette: int | None = None) -> ColoredPartition:
    """Parse ``1^1,2^1,1^2`` style text (whitespace ignored) into a pattern.

    Letters must form a canonical word and colors must be positive.
    """
    compact = "".join(text.split())
    if not compact:
        raise PatternSyntaxError("empty pattern")
    letters = []
    colors = []
    for item in compact.split(","):
        head, sep, tail = item.partition("^")
        if not sep or not head.isdigit() or not tail.isdigit():
            raise PatternSyntaxError(f"bad item {item!r} in pattern {text!r}")
        letters.append(int(head))
        colors.append(int(tail))
    if any(col < 1 for col in colors):
        raise PatternSyntaxError(f"colors must be >= 1 in {text!r}")
    word = tuple(letters)
    if not is_canonical(word):
        raise PatternSyntaxError(f"letters do not form a canonical word: {text!r}")
    if palette is None:
        palette = max(colors)
    elif palette < max(colors):
        raise PatternSyntaxError(f"palette {palette} too small for {text!r}")
    return ColoredPartition(word, tuple(colors), palette)
