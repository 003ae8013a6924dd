"""Closed-form series oracle for the one-point Hodge integrals.

The generating function of all one-point Hodge integrals is the kernel
(t/2)/sin(t/2) raised to the power k+1: the coefficient of t**(2g) * k**j
is the integral of psi**(2g-2+j) * lambda_(g-j). This module expands that
power exactly, as a polynomial in k whose coefficients are truncated series
in t with rational coefficients, giving a cross-check on the recursion
pipeline that shares none of its code. Writing the power as
exp((k+1) * log(kernel)) = kernel * sum_j (k * log(kernel))**j / j! keeps k
a genuine polynomial variable; since log(kernel) starts at t**2, powers of
k beyond the truncation's genus reach vanish identically and the k-degree
is exactly the maximal genus.

The top lambda index also satisfies a Bernoulli closed form: g! times the
integral with lambda_g equals (2**(2g-1) - 1) * g! / (2**(2g-1) * (2g)!)
times the absolute value of the Bernoulli number with index 2g.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import TruncatedSeries, bernoulli

__all__ = [
    "sine_kernel",
    "KernelExpansion",
    "gf_expand",
    "oracle_integral",
    "bernoulli_rhs",
]


def sine_kernel(order_bound: int) -> TruncatedSeries:
    """Exact expansion of (t/2)/sin(t/2) modulo t**order_bound.

    Built as the reciprocal of sin(t/2)/(t/2), whose t**(2m) coefficient is
    (-1)**m / (4**m * (2m+1)!); the kernel is even with constant term 1.
    """
    if order_bound < 1:
        raise ValueError("order bound must be a positive integer")
    coefficients = [Fraction(0)] * order_bound
    for m in range(0, (order_bound + 1) // 2):
        coefficients[2 * m] = Fraction(
            (-1) ** m, 4**m * math.factorial(2 * m + 1)
        )
    return TruncatedSeries(coefficients, order_bound).reciprocal()


@dataclass(frozen=True)
class KernelExpansion:
    """The kernel power expansion: entry j is the t-series multiplying k**j."""

    entries: tuple[TruncatedSeries, ...]

    @property
    def k_degree_bound(self) -> int:
        return len(self.entries) - 1

    @property
    def order_bound(self) -> int:
        return self.entries[0].order_bound

    @property
    def max_genus(self) -> int:
        return self.k_degree_bound

    def coefficient(self, t_power: int, k_power: int) -> Fraction:
        return self.entries[k_power].coefficient(t_power)


def gf_expand(max_genus: int) -> KernelExpansion:
    """Expand the kernel power up to genus ``max_genus``.

    The t truncation order is 2*max_genus + 2, one spare even order, so
    every coefficient of t**(2g) with g <= max_genus is exact.
    """
    if max_genus < 1:
        raise ValueError("max genus must be at least 1")
    order_bound = 2 * max_genus + 2
    kernel = sine_kernel(order_bound)
    log_kernel = kernel.log()
    entries = [kernel]
    for j in range(1, max_genus + 1):
        entries.append(entries[-1] * log_kernel * Fraction(1, j))
    return KernelExpansion(tuple(entries))


def oracle_integral(genus: int, lam: int, expansion: KernelExpansion) -> Fraction:
    """Read the integral of psi**(3g-2-i) lambda_i off the expansion."""
    if not 1 <= genus <= expansion.max_genus:
        raise ValueError(f"genus must lie in 1..{expansion.max_genus}")
    if not 0 <= lam <= genus:
        raise ValueError("lambda index must lie in 0..genus")
    return expansion.coefficient(2 * genus, genus - lam)


def bernoulli_rhs(genus: int) -> Fraction:
    """Bernoulli closed form for g! times the top-lambda integral."""
    if genus < 1:
        raise ValueError("genus must be at least 1")
    half = 2 ** (2 * genus - 1)
    return (
        Fraction((half - 1) * math.factorial(genus), half * math.factorial(2 * genus))
        * abs(bernoulli(2 * genus))
    )
