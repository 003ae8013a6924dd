"""Exact arithmetic substrate: rational text forms, truncated series, Bernoulli numbers.

Every quantity in this package is a ``fractions.Fraction``; nothing is ever
evaluated in floating point, so all identity checks downstream are exact
equalities of reduced fractions. This module supplies the pieces the standard
library lacks: a strict canonical text form for rationals (used by the CLI,
the JSON emitters and the cache files), dense truncated power series with
exact coefficients, and a growing table of Bernoulli numbers.
"""

from __future__ import annotations

import math
import re
import threading
from fractions import Fraction

__all__ = [
    "format_rational",
    "parse_rational",
    "TruncatedSeries",
    "bernoulli",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Canonical text: optional sign, no leading zeros, denominator present only
# when it exceeds 1. "2/4", "1/0", "-0", "+1" and "01" are all rejected.
_RATIONAL_RE = re.compile(r"(?:0|-?[1-9][0-9]*)(?:/[1-9][0-9]*)?")


def format_rational(value: Fraction | int) -> str:
    """Render a rational as ``p/q`` with q > 0 and gcd(p, q) = 1, or plain ``p``."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    """Parse the canonical text form, rejecting anything not in lowest terms."""
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a canonical rational: {text!r}")
    value = Fraction(text)
    if format_rational(value) != text:
        raise ValueError(f"rational not in lowest terms: {text!r}")
    return value


class TruncatedSeries:
    """A dense power series in one variable, kept modulo t**order_bound.

    Coefficients are exact rationals and instances are immutable after
    construction. Binary operations insist on equal order bounds: silently
    mixing truncation orders would make "exact modulo t^N" meaningless.
    Reciprocals need a nonzero constant term, ``log`` a constant term of 1,
    ``exp`` a constant term of 0.
    """

    __slots__ = ("order_bound", "coefficients")

    def __init__(self, coefficients, order_bound: int | None = None):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if order_bound is None:
            order_bound = len(coeffs)
        if order_bound < 1:
            raise ValueError("order bound must be a positive integer")
        if len(coeffs) < order_bound:
            coeffs = coeffs + (_ZERO,) * (order_bound - len(coeffs))
        elif len(coeffs) > order_bound:
            coeffs = coeffs[:order_bound]
        self.order_bound = order_bound
        self.coefficients = coeffs

    @classmethod
    def zero(cls, order_bound: int) -> "TruncatedSeries":
        return cls((), order_bound)

    @classmethod
    def one(cls, order_bound: int) -> "TruncatedSeries":
        return cls((_ONE,), order_bound)

    def coefficient(self, power: int) -> Fraction:
        if not 0 <= power < self.order_bound:
            raise ValueError(
                f"coefficient of t^{power} is not determined at order bound {self.order_bound}"
            )
        return self.coefficients[power]

    @property
    def constant_term(self) -> Fraction:
        return self.coefficients[0]

    def _require_same_bound(self, other: "TruncatedSeries") -> None:
        if self.order_bound != other.order_bound:
            raise ValueError(
                f"mismatched order bounds: {self.order_bound} vs {other.order_bound}"
            )

    def __eq__(self, other: object):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.order_bound == other.order_bound
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash((self.order_bound, self.coefficients))

    def __repr__(self):
        inside = ", ".join(format_rational(c) for c in self.coefficients)
        return f"TruncatedSeries([{inside}], order_bound={self.order_bound})"

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_bound(other)
        return TruncatedSeries(
            (a + b for a, b in zip(self.coefficients, other.coefficients)),
            self.order_bound,
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_bound(other)
        return TruncatedSeries(
            (a - b for a, b in zip(self.coefficients, other.coefficients)),
            self.order_bound,
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries((-a for a in self.coefficients), self.order_bound)

    def _scale(self, scalar) -> "TruncatedSeries":
        factor = Fraction(scalar)
        return TruncatedSeries(
            (factor * a for a in self.coefficients), self.order_bound
        )

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._require_same_bound(other)
            n = self.order_bound
            out = [_ZERO] * n
            for i, a in enumerate(self.coefficients):
                if not a:
                    continue
                for j in range(n - i):
                    b = other.coefficients[j]
                    if b:
                        out[i + j] += a * b
            return TruncatedSeries(out, n)
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        if isinstance(other, (int, Fraction)):
            return self._scale(Fraction(1, 1) / Fraction(other))
        return NotImplemented

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse modulo t**order_bound."""
        lead = self.coefficients[0]
        if lead == 0:
            raise ValueError("series with zero constant term is not invertible")
        n = self.order_bound
        inv_lead = 1 / lead
        out = [_ZERO] * n
        out[0] = inv_lead
        for m in range(1, n):
            acc = _ZERO
            for k in range(1, m + 1):
                a = self.coefficients[k]
                if a:
                    acc += a * out[m - k]
            out[m] = -inv_lead * acc
        return TruncatedSeries(out, n)

    def log(self) -> "TruncatedSeries":
        """Formal logarithm; requires constant term 1."""
        if self.coefficients[0] != 1:
            raise ValueError("series logarithm requires constant term 1")
        n = self.order_bound
        out = [_ZERO] * n
        # m*a_m = sum_{k=1..m} k*l_k*a_{m-k}, solved for l_m with a_0 = 1
        for m in range(1, n):
            acc = self.coefficients[m]
            for k in range(1, m):
                if out[k] and self.coefficients[m - k]:
                    acc -= Fraction(k, m) * out[k] * self.coefficients[m - k]
            out[m] = acc
        return TruncatedSeries(out, n)

    def exp(self) -> "TruncatedSeries":
        """Formal exponential; requires constant term 0."""
        if self.coefficients[0] != 0:
            raise ValueError("series exponential requires constant term 0")
        n = self.order_bound
        out = [_ZERO] * n
        out[0] = _ONE
        # m*e_m = sum_{k=1..m} k*s_k*e_{m-k}
        for m in range(1, n):
            acc = _ZERO
            for k in range(1, m + 1):
                s = self.coefficients[k]
                if s and out[m - k]:
                    acc += k * s * out[m - k]
            out[m] = acc / m
        return TruncatedSeries(out, n)


_bernoulli_lock = threading.Lock()
_bernoulli_table: list[Fraction] = [Fraction(1)]


def bernoulli(index: int) -> Fraction:
    """The Bernoulli number B_index, in the convention with B_1 = -1/2.

    Computed from the defining recurrence sum_{k=0..m} C(m+1, k) B_k = 0,
    which pins B_0 = 1, B_1 = -1/2 and kills every odd index above 1. The
    shared table grows on demand under a lock; entries never change once
    written, so concurrent readers are safe.
    """
    if index < 0:
        raise ValueError("Bernoulli numbers are indexed by nonnegative integers")
    with _bernoulli_lock:
        while len(_bernoulli_table) <= index:
            m = len(_bernoulli_table)
            acc = _ZERO
            for k in range(m):
                value = _bernoulli_table[k]
                if value:
                    acc += math.comb(m + 1, k) * value
            _bernoulli_table.append(-acc / (m + 1))
        return _bernoulli_table[index]
