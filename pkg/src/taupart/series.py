"""Truncated integer power series and infinite-product expansions.

A product ``prod_{n>=1} (1 - x**n)**e(n)`` and its coefficient sequence
``r`` are linked by logarithmic differentiation:

    n*r(n) + sum_{k=1}^{n} r(n-k) * sum_{d|k} f(d) = 0,   f(d) = d*e(d).

:func:`product_expansion` multiplies the factors out directly and
:func:`apostol_recursion` runs the recurrence; the two are independent
routes to the same coefficients.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .numtheory import divisor_sum, exact_div

__all__ = [
    "TruncatedSeries",
    "multiply",
    "int_power",
    "product_expansion",
    "apostol_recursion",
]


class TruncatedSeries:
    """Integer power series known exactly through degree ``N``.

    Binary operations require equal truncation degrees.
    """

    __slots__ = ("_coeffs", "_N")

    def __init__(self, coeffs: Iterable[int], N: int) -> None:
        if N < 0:
            raise ValueError(f"truncation degree must be >= 0, got {N}")
        c = [int(a) for a in coeffs]
        if len(c) > N + 1:
            c = c[: N + 1]
        c.extend([0] * (N + 1 - len(c)))
        self._coeffs = tuple(c)
        self._N = N

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls([1], N)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def truncation_degree(self) -> int:
        return self._N

    def __getitem__(self, k: int) -> int:
        if not 0 <= k <= self._N:
            raise IndexError(f"degree {k} outside 0..{self._N}")
        return self._coeffs[k]

    def __len__(self) -> int:
        return self._N + 1

    def _check(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other._N != self._N:
            raise ValueError(
                f"truncation degree mismatch: {self._N} vs {other._N}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self._coeffs, other._coeffs)], self._N)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self._coeffs, other._coeffs)], self._N)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self._coeffs], self._N)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return multiply(self, other)

    def __pow__(self, e: int) -> "TruncatedSeries":
        return int_power(self, e)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._N == other._N and self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._N, self._coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)}, N={self._N})"

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be +1 or -1."""
        a = self._coeffs
        a0 = a[0]
        if a0 not in (1, -1):
            raise ValueError(
                f"series with constant term {a0} is not invertible over the integers"
            )
        support = [(j, a[j]) for j in range(1, self._N + 1) if a[j]]
        b = [0] * (self._N + 1)
        b[0] = a0
        for k in range(1, self._N + 1):
            s = 0
            for j, aj in support:
                if j > k:
                    break
                s += aj * b[k - j]
            b[k] = -s * a0
        return TruncatedSeries(b, self._N)

    def to_dict(self) -> dict:
        return {"truncation": self._N, "coeffs": [str(a) for a in self._coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        d = json.loads(text)
        return cls([int(a) for a in d["coeffs"]], int(d["truncation"]))


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common degree ``N``."""
    a._check(b)
    N = a.truncation_degree
    x, y = a.coefficients, b.coefficients
    # Iterate over the sparser operand; products of lacunary factors stay cheap.
    if sum(1 for c in y if c) < sum(1 for c in x if c):
        x, y = y, x
    out = [0] * (N + 1)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j in range(N + 1 - i):
            yj = y[j]
            if yj:
                out[i + j] += xi * yj
    return TruncatedSeries(out, N)


def int_power(s: TruncatedSeries, e: int) -> TruncatedSeries:
    """``s**e`` truncated at ``N``; negative ``e`` inverts first.

    >>> int_power(TruncatedSeries([1, -1], 4), -1).coefficients
    (1, 1, 1, 1, 1)
    """
    if e < 0:
        s = s.inverse()
        e = -e
    result = TruncatedSeries.one(s.truncation_degree)
    base = s
    while e:
        if e & 1:
            result = multiply(result, base)
        e >>= 1
        if e:
            base = multiply(base, base)
    return result


def product_expansion(e: Callable[[int], int], N: int) -> TruncatedSeries:
    """Expand ``prod_{n=1}^{N} (1 - x**n)**e(n)`` through degree ``N``.

    Factors with ``n > N`` are omitted since they do not touch degrees
    up to ``N``.
    """
    result = TruncatedSeries.one(N)
    for n in range(1, N + 1):
        exponent = e(n)
        if not exponent:
            continue
        factor = [0] * (N + 1)
        factor[0] = 1
        factor[n] = -1
        result = multiply(result, int_power(TruncatedSeries(factor, N), exponent))
    return result


def apostol_recursion(
    f: Callable[[int], int], N: int, integral: bool = False
) -> list[Fraction] | list[int]:
    """Coefficients ``r(0..N)`` of the product with ``f(n) = n*e(n)``.

    Solves ``n*r(n) = -sum_{k=1}^{n} r(n-k) * sum_{d|k} f(d)`` from
    ``r(0) = 1``. With ``integral=True`` the values are ints and every
    division by ``n`` must be exact, otherwise
    :class:`~taupart.numtheory.InexactDivisionError` is raised.
    """
    if N < 0:
        raise ValueError(f"N must be non-negative, got {N}")
    g = [0] + [divisor_sum(f, k) for k in range(1, N + 1)]
    r: list = [1 if integral else Fraction(1)]
    for n in range(1, N + 1):
        s = sum(r[n - k] * g[k] for k in range(1, n + 1))
        r.append(exact_div(-s, n) if integral else -s / n)
    return r

