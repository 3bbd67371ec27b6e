"""Exact enumeration of pattern-avoiding colored set partitions.

A colored set partition assigns each element of [n] to a block and gives it
one of c colors.  This package enumerates them, tests pattern containment in
the eq, lt and pattern senses, evaluates the known closed forms for avoider
counts with arbitrary-precision integers, and cross-verifies everything
against brute force.
"""

from .avoidance import (DEFAULT_BUDGET, EnumerationBudgetError, PatternSet,
                        Sense, avoids, contains, contains_word, count_avoiders,
                        expand_lt, expand_pattern, pattern_set)
from .bijections import (Involution2n, MarkedPartition, PreconditionError,
                         enumerate_marked, from_marked, from_rc_involution,
                         reverse_complement, to_marked, to_rc_involution)
from .formulas import (FormulaId, GuardedCount, evaluate, formula_for,
                       formula_patterns, sequence)
from .kernel import (IntegerPartition, bell, binomial, falling_factorial,
                     integer_partitions, multinomial, stirling2)
from .partitions import (ColoredPartition, PatternSyntaxError, block_structure,
                         blocks_of, canonize, colored, enumerate_colored,
                         enumerate_set_partitions, format_pattern, format_word,
                         parse_pattern, parse_word, reversal, word_from_blocks)
from .series import (EGF_NAMES, NonIntegerCoefficientError, TruncatedExpSeries,
                     egf_coefficients, series_exp)
from .wilf import (LENGTH3_PATTERNS, MapDomainError, REVERSAL_PAIRS,
                   WilfClassification, classify, recolor_map)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
