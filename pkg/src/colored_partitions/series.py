"""Truncated exponential generating functions over exact rationals.

Coefficients are :class:`fractions.Fraction`; no floating point anywhere, so
``n! * [x^n]`` can be certified to be an integer.  All operations are exact
through the truncation order.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable


class NonIntegerCoefficientError(ArithmeticError):
    """A sequence extraction produced a non-integer n! [x^n]."""


class TruncatedExpSeries:
    """A power series known exactly through x^order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int]):
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedExpSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedExpSeries":
        return cls([1] + [0] * order)

    @classmethod
    def x(cls, order: int, scale: int = 1) -> "TruncatedExpSeries":
        coeffs = [Fraction(0)] * (order + 1)
        if order >= 1:
            coeffs[1] = Fraction(scale)
        return cls(coeffs)

    def _match(self, other: "TruncatedExpSeries") -> int:
        if self.order != other.order:
            raise ValueError("series orders differ")
        return self.order

    def __add__(self, other: "TruncatedExpSeries") -> "TruncatedExpSeries":
        self._match(other)
        return TruncatedExpSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "TruncatedExpSeries") -> "TruncatedExpSeries":
        self._match(other)
        return TruncatedExpSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncatedExpSeries):
            n = self._match(other)
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
            return TruncatedExpSeries(out)
        return TruncatedExpSeries(Fraction(other) * a for a in self.coeffs)

    __rmul__ = __mul__

    def derivative(self) -> "TruncatedExpSeries":
        """d/dx, exact through one order less; padded back with 0."""
        n = self.order
        out = [(k + 1) * self.coeffs[k + 1] for k in range(n)]
        return TruncatedExpSeries(out + [Fraction(0)])

    def compose(self, inner: "TruncatedExpSeries") -> "TruncatedExpSeries":
        """self(inner(x)) by Horner; inner must have zero constant term."""
        n = self._match(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires zero constant term")
        result = TruncatedExpSeries.zero(n)
        for a in reversed(self.coeffs):
            result = result * inner
            result = TruncatedExpSeries(
                (result.coeffs[0] + a,) + result.coeffs[1:])
        return result

    def exp(self) -> "TruncatedExpSeries":
        """exp(self) via g' = s' g; requires zero constant term."""
        n = self.order
        if self.coeffs[0] != 0:
            raise ValueError("series_exp requires zero constant term")
        g = [Fraction(1)] + [Fraction(0)] * n
        for k in range(1, n + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += i * self.coeffs[i] * g[k - i]
            g[k] = acc / k
        return TruncatedExpSeries(g)

    def egf_values(self) -> list[int]:
        """n! [x^n] for n = 0..order, certified integral."""
        out = []
        for k, coeff in enumerate(self.coeffs):
            value = coeff * factorial(k)
            if value.denominator != 1:
                raise NonIntegerCoefficientError(
                    f"coefficient of x^{k} times {k}! is {value}, not an integer")
            out.append(int(value))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedExpSeries) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedExpSeries({list(self.coeffs)!r})"


def series_exp(s: TruncatedExpSeries) -> TruncatedExpSeries:
    return s.exp()


def expm1_series(order: int) -> TruncatedExpSeries:
    """e^x - 1 through the given order."""
    return TruncatedExpSeries([Fraction(0)] + [Fraction(1, factorial(k)) for k in range(1, order + 1)])


EGF_NAMES = ("A011965", "A001861", "A000898")


def egf_series(which: str, order: int) -> TruncatedExpSeries:
    """One of the three catalogued EGFs, exact through the given order."""
    em1 = expm1_series(order)
    if which == "A011965":
        # second differences of the Bell numbers: e^(e^x - 1) (e^2x - e^x + 1)
        bell_egf = em1.exp()
        e2x = TruncatedExpSeries.x(order, 2).exp()
        ex = TruncatedExpSeries.x(order).exp()
        return bell_egf * (e2x - ex + TruncatedExpSeries.one(order))
    if which == "A001861":
        # e^(2 e^x - 2); the n >= 1 values equal sum_k 2^k S(n,k)
        return (2 * em1).exp()
    if which == "A000898":
        # e^(x^2 + 2x)
        xsq = TruncatedExpSeries.x(order) * TruncatedExpSeries.x(order)
        return (xsq + TruncatedExpSeries.x(order, 2)).exp()
    raise ValueError(f"unknown EGF name {which!r}; pick one of {EGF_NAMES}")


def egf_coefficients(which: str, n_max: int) -> list[int]:
    """n! [x^n] of the named EGF for n = 0..n_max, certified integral."""
    if n_max < 0:
        raise ValueError(f"need n_max >= 0, got {n_max}")
    return egf_series(which, n_max).egf_values()
