"""Three solvers for Newton-type recursions ``n*r(n) = sum_k F(k) r(n-k)``.

``recursion_solve`` unrolls the recursion, ``partition_sum_solve`` uses the
Girard-Waring closed form ``r(n) = sum_{|lam|=n} F_lam / z_lam`` and
``determinant_solve`` evaluates the Brioschi determinant divided by ``n!``.
They share no code beyond the partition enumerator, so each acts as an
oracle for the others.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import factorial
from typing import Callable, Iterable, Sequence

from .numtheory import exact_div
from .partitions import Partition, apply_to_function, enumerate_partitions, z

__all__ = [
    "RecursionProblem",
    "recursion_solve",
    "partition_sum_solve",
    "partition_sum_terms",
    "determinant_solve",
    "newton_matrix",
    "bareiss_determinant",
]


@dataclass(frozen=True)
class RecursionProblem:
    """``F`` is the power-sum side of the recursion, ``n`` the target index."""

    F: Callable[[int], int]
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")


def recursion_solve(prob: RecursionProblem) -> Fraction:
    n = prob.n
    Fv = [0] + [prob.F(k) for k in range(1, n + 1)]
    r = [Fraction(1)]
    for m in range(1, n + 1):
        r.append(sum(Fv[k] * r[m - k] for k in range(1, m + 1)) / m)
    return r[n]


def partition_sum_terms(prob: RecursionProblem) -> Iterable[tuple[Partition, Fraction]]:
    """Yield ``(lam, F_lam / z_lam)`` for every partition of ``n`` in canonical order."""
    cache: dict[int, int] = {}

    def F(k: int) -> int:
        if k not in cache:
            cache[k] = prob.F(k)
        return cache[k]

    for lam in enumerate_partitions(prob.n):
        yield lam, Fraction(apply_to_function(lam, F), z(lam))


def _sum_batch(prob: RecursionProblem, batch: Sequence[Partition]) -> Fraction:
    total = Fraction(0)
    for lam in batch:
        total += Fraction(apply_to_function(lam, prob.F), z(lam))
    return total


def partition_sum_solve(prob: RecursionProblem, threads: int = 1) -> Fraction:
    """Girard-Waring sum over the partitions of ``n``.

    With ``threads > 1`` the partition stream is cut into batches summed
    concurrently. Rational addition is exact, so the result is identical
    to the sequential one.
    """
    if threads <= 1:
        total = Fraction(0)
        for _, term in partition_sum_terms(prob):
            total += term
        return total

    stream = enumerate_partitions(prob.n)
    batches = iter(lambda: list(islice(stream, 2048)), [])
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(lambda b: _sum_batch(prob, b), batches), Fraction(0))


def newton_matrix(p: Sequence[int]) -> list[list[int]]:
    """Matrix whose determinant is ``n! * h_n`` given ``p = [p_1, ..., p_n]``.

    Row ``i`` holds ``p_i, p_{i-1}, ..., p_1`` from column 1 and ``-i`` on
    the superdiagonal.
    """
    n = len(p)
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            M[i][j] = p[i - j]
        if i + 1 < n:
            M[i][i + 1] = -(i + 1)
    return M


def bareiss_determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination.

    Every intermediate division is exact, so all entries stay integers.
    """
    A = [list(row) for row in M]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(pivot * row_i[j] - aik * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]


def determinant_solve(prob: RecursionProblem) -> Fraction:
    """``det(newton_matrix(F(1..n))) / n!``. Rejects ``n == 0``."""
    n = prob.n
    if n < 1:
        raise ValueError("determinant form needs n >= 1; take r(0) = 1 directly")
    p = [prob.F(k) for k in range(1, n + 1)]
    return Fraction(bareiss_determinant(newton_matrix(p)), factorial(n))
