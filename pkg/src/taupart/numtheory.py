"""Exact integer and rational primitives.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Callable, Iterator

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "InexactDivisionError",
    "divisors",
    "sigma",
    "divisor_sum",
    "exact_div",
    "as_integer",
]


class InexactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def _check_positive(k: int, name: str = "n") -> None:
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError(f"{name} must be an int, got {type(k).__name__}")
    if k <= 0:
        raise ValueError(f"{name} must be positive, got {k}")


def divisors(k: int) -> Iterator[int]:
    """Yield the positive divisors of ``k`` in increasing order."""
    _check_positive(k, "k")
    high = []
    for d in range(1, isqrt(k) + 1):
        if k % d == 0:
            yield d
            if d * d != k:
                high.append(k // d)
    yield from reversed(high)


def sigma(n: int) -> int:
    """Sum of the positive divisors of ``n``.

    >>> sigma(6)
    12
    """
    return sum(divisors(n))


def divisor_sum(f: Callable[[int], int], k: int) -> int:
    """Return ``sum(f(d) for d | k)``."""
    return sum(f(d) for d in divisors(k))


def exact_div(a: int, b: int) -> int:
    """Integer quotient ``a / b``, raising if ``b`` does not divide ``a``."""
    if b == 0:
        raise ZeroDivisionError("exact_div by zero")
    q, r = divmod(a, b)
    if r:
        raise InexactDivisionError(f"{b} does not divide {a}")
    return q


def as_integer(q: Fraction | int) -> int:
    """Convert a rational known to be integral, raising otherwise."""
    if isinstance(q, int):
        return q
    if q.denominator != 1:
        raise InexactDivisionError(f"expected an integer, got {q}")
    return q.numerator
