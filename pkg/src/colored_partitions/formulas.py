"""Closed-form avoider counts, each wrapped in its small-(n, c) guard.

Every evaluator returns the exact number of colored partitions of [n] over c
colors avoiding its pattern (or pattern set).  Below the pattern's length or
color requirement nothing can be contained, so the count is the full
c^n * B(n); that guard is applied before the formula body is trusted.

The bodies with doubly-indexed choice sums (``12:ab``, ``123:aab``,
``112:aab``, ``112:aba``) are evaluated with each pair of counts (x, y) drawn
from a gap collapsed to its total s via
``sum_{x+y=s} C(g; x, y) * alpha^x * beta^y = C(g, s) (alpha+beta)^s``;
``123:aba`` uses an exact scan over elements instead.  The tests check the
collapsed forms against direct nested-loop evaluation, and every evaluator
against brute-force enumeration.
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations, permutations
from math import factorial
from typing import NamedTuple

from .avoidance import PatternSet, Sense, pattern_set
from .kernel import (bell, binomial, falling_factorial, integer_partitions,
                     set_partition_count_by_structure, stirling2)
from .partitions import ColoredPartition, canonize


class FormulaId(str, Enum):
    """Closed forms, named by the pattern (word:colors) they count avoiders of."""

    TOTAL = "total"            # no pattern: c^n B(n)
    P11_AA = "11:aa"
    P12_AA = "12:aa"
    P12_AB = "12:ab"
    MARKED = "marked"          # alternate form for 12:aa at c=2 via marked partitions
    S11_ALL = "set:11:all"     # all four colorings of 11, c=2 -> 2^n
    S12_MONO = "set:12:mono"   # {12:aa, 12:bb}, c=2 -> 2^(n+1)-2
    S11_AA_AB = "set:11:aa-ab"  # {11:aa, 11:ab}, c=2 -> sum 2^k S(n,k)
    S11_AA_BB = "set:11:aa-bb"  # {11:aa, 11:bb}, c=2 -> sum C(n,2k)C(2k,k)k!2^(n-2k)
    REPEAT = "repeat"          # 1^a repeated m+1 times; takes parameter m
    P111_AAA = "111:aaa"
    P123_AAA = "123:aaa"
    P121_AAA = "121:aaa"
    P122_AAA = "122:aaa"
    P123_AAB = "123:aab"
    P112_AAB = "112:aab"
    P112_ABA = "112:aba"
    P123_ABA = "123:aba"
    P123_ABD = "123:abd"       # needs 3 colors, evaluated at c=2 -> 2^n B(n)


class GuardedCount(NamedTuple):
    value: int
    guard_applied: bool


FIXED_C2 = frozenset({
    FormulaId.MARKED, FormulaId.S11_ALL, FormulaId.S12_MONO,
    FormulaId.S11_AA_AB, FormulaId.S11_AA_BB, FormulaId.P123_ABD,
})

# (minimum n, minimum c) outside of which the full-space guard applies.
_GUARDS: dict[FormulaId, tuple[int, int]] = {
    FormulaId.P11_AA: (2, 1),
    FormulaId.P12_AA: (2, 1),
    FormulaId.P12_AB: (2, 2),
    FormulaId.MARKED: (2, 1),
    FormulaId.S11_ALL: (2, 2),
    FormulaId.S12_MONO: (2, 2),
    FormulaId.S11_AA_AB: (2, 2),
    FormulaId.S11_AA_BB: (2, 2),
    FormulaId.P111_AAA: (3, 1),
    FormulaId.P123_AAA: (3, 1),
    FormulaId.P121_AAA: (3, 1),
    FormulaId.P122_AAA: (3, 1),
    FormulaId.P123_AAB: (3, 2),
    FormulaId.P112_AAB: (3, 2),
    FormulaId.P112_ABA: (3, 2),
    FormulaId.P123_ABA: (3, 2),
    FormulaId.P123_ABD: (3, 3),
}


def _cp(word: tuple[int, ...], colors: tuple[int, ...]) -> ColoredPartition:
    return ColoredPartition(word, colors, max(colors))


_SINGLE_PATTERNS: dict[FormulaId, ColoredPartition] = {
    FormulaId.P11_AA: _cp((1, 1), (1, 1)),
    FormulaId.P12_AA: _cp((1, 2), (1, 1)),
    FormulaId.P12_AB: _cp((1, 2), (1, 2)),
    FormulaId.MARKED: _cp((1, 2), (1, 1)),
    FormulaId.P111_AAA: _cp((1, 1, 1), (1, 1, 1)),
    FormulaId.P123_AAA: _cp((1, 2, 3), (1, 1, 1)),
    FormulaId.P121_AAA: _cp((1, 2, 1), (1, 1, 1)),
    FormulaId.P122_AAA: _cp((1, 2, 2), (1, 1, 1)),
    FormulaId.P123_AAB: _cp((1, 2, 3), (1, 1, 2)),
    FormulaId.P112_AAB: _cp((1, 1, 2), (1, 1, 2)),
    FormulaId.P112_ABA: _cp((1, 1, 2), (1, 2, 1)),
    FormulaId.P123_ABA: _cp((1, 2, 3), (1, 2, 1)),
    FormulaId.P123_ABD: _cp((1, 2, 3), (1, 2, 3)),
}

_SET_PATTERNS: dict[FormulaId, tuple[ColoredPartition, ...]] = {
    FormulaId.S11_ALL: tuple(_cp((1, 1), cols) for cols in ((1, 1), (1, 2), (2, 1), (2, 2))),
    FormulaId.S12_MONO: (_cp((1, 2), (1, 1)), _cp((1, 2), (2, 2))),
    FormulaId.S11_AA_AB: (_cp((1, 1), (1, 1)), _cp((1, 1), (1, 2))),
    FormulaId.S11_AA_BB: (_cp((1, 1), (1, 1)), _cp((1, 1), (2, 2))),
}


def formula_patterns(fid: FormulaId, m: int | None = None) -> PatternSet | None:
    """The eq-sense pattern set an id counts avoiders of (None for TOTAL)."""
    if fid is FormulaId.TOTAL:
        return None
    if fid is FormulaId.REPEAT:
        if m is None or m < 1:
            raise ValueError("repeat formula needs m >= 1")
        return pattern_set([_cp((1,) * (m + 1), (1,) * (m + 1))], Sense.EQ)
    if fid in _SET_PATTERNS:
        return pattern_set(_SET_PATTERNS[fid], Sense.EQ)
    return pattern_set([_SINGLE_PATTERNS[fid]], Sense.EQ)


def _bell0(k: int) -> int:
    """Bell number extended by 0 on negative arguments (empty term)."""
    return bell(k) if k >= 0 else 0


# ---------------------------------------------------------------------------
# length-2 patterns


def _p11_aa(n: int, c: int) -> int:
    # i singleton a-colored elements, j a-colored elements in shared blocks,
    # p non-a elements filling those shared blocks.
    total = 0
    for j in range(n // 2 + 1):
        for i in range(n - 2 * j + 1):
            rest = n - i - j
            coeff = binomial(n, i) * binomial(n - i, j) * (c - 1) ** rest
            inner = 0
            for p in range(j, rest + 1):
                inner += binomial(rest, p) * stirling2(p, j) * factorial(j) * bell(rest - p)
            total += coeff * inner
    return total


def _p12_aa(n: int, c: int) -> int:
    # either no a-colored elements, or i of them sharing one block with j others
    total = bell(n) * (c - 1) ** n
    for i in range(1, n + 1):
        for j in range(n - i + 1):
            total += binomial(n, i) * binomial(n - i, j) * bell(n - i - j) * (c - 1) ** (n - i)
    return total


def _p12_ab(n: int, c: int) -> int:
    total = bell(n) * (c - 1) ** n
    # all a-colored elements in one block, i the smallest of them
    for i in range(1, n + 1):
        for k in range(n - i + 1):
            for l in range(i):
                total += (binomial(n - i, k) * binomial(i - 1, l) * bell(n - k - l - 1)
                          * c ** k * (c - 1) ** (i - 1) * (c - 2) ** (n - i - k))
    # a-colored elements in at least two blocks; first two at i < j
    for i, j in combinations(range(1, n + 1), 2):
        g1, g2, g3 = i - 1, j - i - 1, n - j
        pre = (c - 1) ** (g1 + g3)
        for s1 in range(g1 + 1):
            w1 = binomial(g1, s1) << s1
            for s2 in range(g2 + 1):
                w2 = binomial(g2, s2) * (2 * c - 2) ** s2 * (c - 2) ** (g2 - s2)
                part = pre * w1 * w2
                for s3 in range(g3 + 1):
                    total += part * (binomial(g3, s3) << s3) * bell(n - 2 - s1 - s2 - s3)
    return total


# ---------------------------------------------------------------------------
# sets of length-2 patterns (c = 2)


def _marked(n: int, c: int) -> int:
    return sum(stirling2(n, k) * (k * k + 1) for k in range(1, n + 1))


def _s11_all(n: int, c: int) -> int:
    return 2 ** n


def _s12_mono(n: int, c: int) -> int:
    return 2 ** (n + 1) - 2


def _s11_aa_ab(n: int, c: int) -> int:
    return sum((stirling2(n, k) << k) for k in range(1, n + 1))


def _s11_aa_bb(n: int, c: int) -> int:
    return sum(binomial(n, 2 * k) * binomial(2 * k, k) * factorial(k) * 2 ** (n - 2 * k)
               for k in range(n // 2 + 1))


# ---------------------------------------------------------------------------
# single-block letter patterns: 1^a repeated m+1 times


def _repeat(n: int, c: int, m: int) -> int:
    # sum over block structures; each block takes at most m a-colored elements
    total = 0
    for p in integer_partitions(n):
        ways = set_partition_count_by_structure(p)
        for size in p.parts:
            ways *= sum(binomial(size, l) * (c - 1) ** (size - l) for l in range(min(m, size) + 1))
        total += ways
    return total


# ---------------------------------------------------------------------------
# remaining length-3 patterns


def _one_a_block(n: int, c: int) -> int:
    """Partitions whose a-colored elements occupy exactly one block."""
    total = 0
    for i in range(1, n + 1):
        for r in range(1, i + 1):
            total += binomial(n, i) * binomial(i, r) * bell(n - i) * (c - 1) ** (n - r)
    return total


def _p123_aaa(n: int, c: int) -> int:
    total = bell(n) * (c - 1) ** n + _one_a_block(n, c)
    # exactly two blocks carry a-colored elements
    for i in range(2, n + 1):
        for j in range(1, i):
            for r1 in range(1, i - j + 1):
                for r2 in range(1, j + 1):
                    total += (binomial(n, i) * binomial(i - 1, j) * binomial(i - j, r1)
                              * binomial(j, r2) * bell(n - i) * (c - 1) ** (n - r1 - r2))
    return total


def _p121_aaa(n: int, c: int) -> int:
    total = bell(n) * (c - 1) ** n + _one_a_block(n, c)
    # a-colored elements split in block order: l runs of increasing elements
    for i in range(2, n + 1):
        for l in range(2, i + 1):
            for j in range(n - i + 1):
                total += (binomial(n, i) * binomial(i - 1, l - 1) * binomial(n - i, j)
                          * l ** j * bell(n - i - j) * (c - 1) ** (n - i))
    return total


def _p122_aaa(n: int, c: int) -> int:
    total = bell(n) * (c - 1) ** n + bell(n) * n * (c - 1) ** (n - 1)
    for i in range(2, n + 1):
        coeff = binomial(n, i) * (c - 1) ** (n - i)
        for j in range(n - i + 1):
            spread = binomial(n - i, j) * bell(n - i - j)
            # smallest l of the a's share the lead block, the rest are separated
            for l in range(1, i + 1):
                total += coeff * spread * (i - l + 1) ** j
            # one extra later a joins the lead block
            for l in range(1, i - 1):
                total += coeff * spread * (i - l - 1) * (i - l) ** j
    return total


def _p123_aab(n: int, c: int) -> int:
    total = bell(n) * (c - 1) ** n
    for i in range(1, n + 1):
        for j in range(n - i + 1):
            total += binomial(n, i) * binomial(n - i, j) * bell(n - i - j) * (c - 1) ** (n - i)
    # first same-colored cross-block pair at (i, j); no third block gets that color
    for i, j in combinations(range(1, n + 1), 2):
        g1, g2, g3 = i - 1, j - i - 1, n - j
        pre = (c - 1) ** g1
        for s1 in range(g1 + 1):
            w1 = binomial(g1, s1) << s1
            for s2 in range(g2 + 1):
                w2 = binomial(g2, s2) * (2 * c - 1) ** s2 * (c - 1) ** (g2 - s2)
                part = pre * w1 * w2
                for s3 in range(g3 + 1):
                    w3 = binomial(g3, s3) * (2 * c) ** s3 * (c - 2) ** (g3 - s3)
                    total += part * w3 * bell(n - 2 - s1 - s2 - s3)
    # ... or the color reaches a third block, first doing so at k
    for i, j, k in combinations(range(1, n + 1), 3):
        g1, g2, g3, g4 = i - 1, j - i - 1, k - j - 1, n - k
        pre = (c - 1) ** (g1 + g4)
        for s1 in range(g1 + 1):
            w1 = binomial(g1, s1) << s1
            for s2 in range(g2 + 1):
                w2 = binomial(g2, s2) * (2 * c - 1) ** s2 * (c - 1) ** (g2 - s2)
                for s3 in range(g3 + 1):
                    w3 = binomial(g3, s3) * (2 * c) ** s3 * (c - 2) ** (g3 - s3)
                    part = pre * w1 * w2 * w3
                    for s4 in range(g4 + 1):
                        w4 = binomial(g4, s4) << s4
                        rem = n - 3 - s1 - s2 - s3 - s4
                        inner = sum(binomial(rem, p) * bell(rem - p) for p in range(rem + 1))
                        total += part * w4 * inner
    return total


def _p112_aab(n: int, c: int) -> int:
    total = bell(n) * (c - 1) ** n
    # exactly one block holds b-colored elements; i is its largest one
    for i in range(1, n + 1):
        for a in range(i):
            for b in range(n - i + 1):
                base = (binomial(i - 1, a) * binomial(n - i, b)
                        * c ** a * (c - 1) ** (n - i))
                g = i - a - 1
                for d in range(g + 1):
                    for e in range(g - d + 1):
                        w = binomial(g, d) * binomial(g - d, e) * (c - 2) ** (g - d - e)
                        if w == 0:
                            continue
                        rem = n - a - b - d - e - 1
                        inner = sum(binomial(rem, p) * stirling2(p, e) * factorial(e)
                                    * bell(rem - p) for p in range(e, rem + 1))
                        total += base * w * inner
    # at least two blocks hold b-colored elements, largest members i < j
    for i, j in combinations(range(1, n + 1), 2):
        g1, g2, g3 = i - 1, j - i - 1, n - j
        for sab in range(g1 + 1):
            for sde in range(g2 + 1):
                blocks = 0
                for a in range(sab + 1):
                    b = sab - a
                    fb = _block_factor_b(b, sde, c)
                    for d in range(sde + 1):
                        e = sde - d
                        fa = _block_factor_a(a, d, c)
                        blocks += binomial(sab, a) * binomial(sde, d) * fa * fb[e]
                if blocks == 0:
                    continue
                pre = binomial(g1, sab) * binomial(g2, sde) * blocks
                r1, r2 = g1 - sab, g2 - sde
                for s3 in range(g3 + 1):
                    w3 = binomial(g3, s3) << s3
                    for shk in range(r1 + 1):
                        whk = binomial(r1, shk)
                        for k in range(shk + 1):
                            wk = binomial(shk, k)
                            for slm in range(r2 + 1):
                                wlm = binomial(r2, slm)
                                for mm in range(slm + 1):
                                    km = k + mm
                                    coeff = (pre * w3 * whk * wk * wlm * binomial(slm, mm)
                                             * factorial(km)
                                             * (c - 1) ** (g1 + g3 - sab - shk)
                                             * (c - 2) ** (g2 - sde - slm))
                                    if coeff == 0:
                                        continue
                                    rem = n - 2 - sab - sde - s3 - shk - slm
                                    inner = sum(binomial(rem, p) * stirling2(p, km)
                                                * bell(rem - p) for p in range(km, rem + 1))
                                    total += coeff * inner
    return total


def _block_factor_a(a: int, d: int, c: int) -> int:
    """Colorings of the a + d sub-i elements of the secondary block."""
    first = a * (c - 1) ** (a - 1) * (c - 2) ** d if a else 0
    second = d * (c - 1) ** a * (c - 2) ** (d - 1) if d else 0
    return first + second + (c - 1) ** a * (c - 2) ** d


def _block_factor_b(b: int, sde: int, c: int) -> list[int]:
    """Colorings of the primary block's sub-j elements, indexed by e."""
    base = (c - 1) ** b + (b * (c - 1) ** (b - 1) if b else 0)
    return [base * c ** e for e in range(sde + 1)]


def _p112_aba(n: int, c: int) -> int:
    total = bell(n) * (c - 1) ** n
    # exactly one block holds a-colored elements
    for k in range(1, n + 1):
        for j in range(1, k + 1):
            total += binomial(n, k) * binomial(k, j) * bell(n - k) * (c - 1) ** (n - j)
    # at least two blocks do; largest a's are j (block B) and i (block A), i < j
    for i, j in combinations(range(1, n + 1), 2):
        g1, g2, g3 = i - 1, j - i - 1, n - j
        for s1 in range(g1 + 1):
            v = 0
            for a in range(s1 + 1):
                b = s1 - a
                fa = (c - 1) ** a + (a * (c - 1) ** (a - 1) if a else 0)
                fb = (c - 1) ** b + (b * (c - 1) ** (b - 1) if b else 0)
                v += binomial(s1, a) * fa * fb
            w1 = binomial(g1, s1) * v
            for s2 in range(g2 + 1):
                w2 = binomial(g2, s2) * (2 * c - 2) ** s2
                for s3 in range(g3 + 1):
                    w3 = binomial(g3, s3) << s3
                    for k in range(g1 - s1 + 1):
                        wk = binomial(g1 - s1, k)
                        for p in range(g2 - s2 + 1):
                            wp = binomial(g2 - s2, p) * (c - 2) ** p
                            head = w1 * w2 * w3 * wk * wp
                            if head == 0:
                                continue
                            qspan = (g1 - s1 - k) + (g3 - s3)
                            for q in range(qspan + 1):
                                lsum = sum(stirling2(p + q, l) * falling_factorial(k, l)
                                           for l in range(min(k, p + q) + 1))
                                if lsum == 0:
                                    continue
                                total += (head * binomial(qspan, q) * lsum
                                          * bell(n - 2 - s1 - s2 - s3 - k - p - q)
                                          * (c - 1) ** (n - 2 - s1 - s2 - k - p))
    return total


def _p123_aba(n: int, c: int) -> int:
    """Exact left-to-right scan count of avoiders of the alpha-beta-alpha pattern.

    A forbidden configuration is x < y < z in three pairwise distinct blocks
    colored (1, 2, 1).  Scanning elements in order, each element colored 2 in
    block b together with the earlier 1-carrying blocks restricts where future
    1s may go: they must stay inside every set {block(x), b} over earlier
    1-blocks block(x) != b.  The running intersection of those sets is all
    blocks, a specific pair, a single block, or empty, so a state of

        (allowed-mode, 1-flags of the allowed blocks, #blocks, #1-blocks)

    suffices.  Blocks are interchangeable within a role, which keeps the state
    space polynomial; every transition weight is an exact integer.
    """
    ALL, TWO, ONE, NONE = 0, 1, 2, 3
    # state: (mode, hi, lo, m, k1) -> weight; hi/lo = sorted 1-flags of the
    # allowed pair (TWO), hi = flag of the single allowed block (ONE).
    dp: dict[tuple[int, int, int, int, int], int] = {(ALL, 0, 0, 0, 0): 1}
    for _ in range(n):
        ndp: dict[tuple[int, int, int, int, int], int] = {}

        def add(state: tuple[int, int, int, int, int], w: int) -> None:
            if w:
                ndp[state] = ndp.get(state, 0) + w

        for (mode, hi, lo, m, k1), w in dp.items():
            if mode == TWO:
                others1 = k1 - hi - lo
                opts = [("new", 1, False), ("P", 1, hi == 1), ("Q", 1, lo == 1),
                        ("o1", others1, True), ("o0", m - 2 - others1, False)]
            elif mode == ONE:
                others1 = k1 - hi
                opts = [("new", 1, False), ("P", 1, hi == 1),
                        ("o1", others1, True), ("o0", m - 1 - others1, False)]
            else:
                opts = [("new", 1, False), ("o1", k1, True), ("o0", m - k1, False)]
            for tag, cnt, flav in opts:
                if cnt <= 0:
                    continue
                ww = w * cnt
                m2 = m + (tag == "new")
                # colors other than 1 and 2 never interact with the pattern
                if c > 2:
                    add((mode, hi, lo, m2, k1), ww * (c - 2))
                # color 1: only into an allowed block
                k1b = k1 + (not flav)
                if mode == ALL:
                    add((ALL, 0, 0, m2, k1b), ww)
                elif mode == TWO and tag in ("P", "Q"):
                    nhi, nlo = (1, lo) if tag == "P" else (hi, 1)
                    if nhi < nlo:
                        nhi, nlo = nlo, nhi
                    add((TWO, nhi, nlo, m2, k1b), ww)
                elif mode == ONE and tag == "P":
                    add((ONE, 1, 0, m2, k1b), ww)
                # color 2: tighten the allowed set by {earlier 1-block, here}
                e = k1 - flav  # earlier 1-blocks other than the one joined
                if mode == NONE or e == 0:
                    add((mode, hi, lo, m2, k1), ww)
                elif mode == ALL:
                    if e == 1:
                        add((TWO, 1, 1 if flav else 0, m2, k1), ww)
                    else:
                        add((ONE, 1 if flav else 0, 0, m2, k1), ww)
                elif mode == TWO:
                    if tag == "P":  # hi == 1 always in TWO
                        if e == 1 and lo == 1:
                            add((TWO, hi, lo, m2, k1), ww)
                        else:
                            add((ONE, 1, 0, m2, k1), ww)
                    elif tag == "Q":
                        if e == 1:  # the other 1-block is necessarily P
                            add((TWO, hi, lo, m2, k1), ww)
                        else:
                            add((ONE, lo, 0, m2, k1), ww)
                    elif e == 1:  # pair {P, here}; survives only through P
                        add((ONE, 1, 0, m2, k1), ww)
                    else:
                        add((NONE, 0, 0, m2, k1), ww)
                else:  # ONE
                    if tag == "P" or (e == 1 and hi == 1):
                        add((ONE, hi, 0, m2, k1), ww)
                    else:
                        add((NONE, 0, 0, m2, k1), ww)
        dp = ndp
    return sum(dp.values())


def _p123_abd(n: int, c: int) -> int:
    return 2 ** n * bell(n)


def _total(n: int, c: int) -> int:
    return c ** n * bell(n)


_BODIES = {
    FormulaId.TOTAL: _total,
    FormulaId.P11_AA: _p11_aa,
    FormulaId.P12_AA: _p12_aa,
    FormulaId.P12_AB: _p12_ab,
    FormulaId.MARKED: _marked,
    FormulaId.S11_ALL: _s11_all,
    FormulaId.S12_MONO: _s12_mono,
    FormulaId.S11_AA_AB: _s11_aa_ab,
    FormulaId.S11_AA_BB: _s11_aa_bb,
    FormulaId.P111_AAA: lambda n, c: _repeat(n, c, 2),
    FormulaId.P123_AAA: _p123_aaa,
    FormulaId.P121_AAA: _p121_aaa,
    FormulaId.P122_AAA: _p122_aaa,
    FormulaId.P123_AAB: _p123_aab,
    FormulaId.P112_AAB: _p112_aab,
    FormulaId.P112_ABA: _p112_aba,
    FormulaId.P123_ABA: _p123_aba,
    FormulaId.P123_ABD: _p123_abd,
}


def evaluate(fid: FormulaId, n: int, c: int, *, m: int | None = None) -> GuardedCount:
    """Exact avoider count by closed form, guard applied first."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")
    if fid in FIXED_C2 and c != 2:
        raise ValueError(f"{fid.value} is a two-color closed form; call it with c=2")
    if fid is FormulaId.REPEAT:
        if m is None or m < 1:
            raise ValueError("repeat formula needs m >= 1")
        if n < m + 1:
            return GuardedCount(c ** n * bell(n), True)
        return GuardedCount(_repeat(n, c, m), False)
    if m is not None:
        raise ValueError(f"{fid.value} takes no m parameter")
    if fid is FormulaId.TOTAL:
        return GuardedCount(_total(n, c), False)
    min_n, min_c = _GUARDS[fid]
    if n < min_n or c < min_c:
        return GuardedCount(c ** n * bell(n), True)
    return GuardedCount(_BODIES[fid](n, c), False)


def sequence(fid: FormulaId, n_max: int, c: int, *, m: int | None = None) -> list[int]:
    """Values for n = 1..n_max."""
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    return [evaluate(fid, n, c, m=m).value for n in range(1, n_max + 1)]


# ---------------------------------------------------------------------------
# pattern-set -> formula lookup (used by the CLI's formula/both modes)

_SINGLE_LOOKUP: dict[tuple[tuple[int, ...], tuple[int, ...]], FormulaId] = {
    (p.word, p.colors): fid for fid, p in _SINGLE_PATTERNS.items() if fid is not FormulaId.MARKED
}

_SET_LOOKUP: dict[frozenset[tuple[tuple[int, ...], tuple[int, ...]]], FormulaId] = {}


def _register_set(fid: FormulaId, pats: list[tuple[tuple[int, ...], tuple[int, ...]]]) -> None:
    _SET_LOOKUP[frozenset(pats)] = fid


_register_set(FormulaId.S11_ALL,
              [((1, 1), cols) for cols in ((1, 1), (1, 2), (2, 1), (2, 2))])
# the cross-block analogue has the same count (each element alone in one block)
_register_set(FormulaId.S11_ALL,
              [((1, 2), cols) for cols in ((1, 1), (1, 2), (2, 1), (2, 2))])
_register_set(FormulaId.S12_MONO, [((1, 2), (1, 1)), ((1, 2), (2, 2))])
_register_set(FormulaId.S11_AA_AB, [((1, 1), (1, 1)), ((1, 1), (1, 2))])
_register_set(FormulaId.S11_AA_AB, [((1, 1), (1, 1)), ((1, 1), (2, 1))])
_register_set(FormulaId.S11_AA_BB, [((1, 1), (1, 1)), ((1, 1), (2, 2))])


def formula_for(patterns: PatternSet) -> tuple[FormulaId, int | None] | None:
    """Find the closed form for an eq-sense pattern set, up to color renaming.

    Returns (id, m) where m is the repeat parameter, or None when no formula
    in the catalog covers the set.
    """
    if patterns.sense is not Sense.EQ:
        return None
    if len(patterns.patterns) == 1:
        p = patterns.patterns[0]
        key = (p.word, canonize(p.colors))
        if key in _SINGLE_LOOKUP:
            return _SINGLE_LOOKUP[key], None
        if len(set(p.word)) == 1 and len(set(p.colors)) == 1 and len(p.word) >= 2:
            return FormulaId.REPEAT, len(p.word) - 1
        return None
    used = sorted({col for p in patterns.patterns for col in p.colors})
    for target in permutations(range(1, len(used) + 1)):
        sigma = dict(zip(used, target))
        key = frozenset((p.word, tuple(sigma[col] for col in p.colors)) for p in patterns.patterns)
        if key in _SET_LOOKUP:
            return _SET_LOOKUP[key], None
    return None
