"""Five independent routes to Ramanujan's tau function.

=================  ====================================================
method             route
=================  ====================================================
``product``        coefficient of ``q**n`` in ``q * prod (1 - q**k)**24``
``recursion``      ``m*tau(m+1) = -24 * sum_k tau(m+1-k) sigma(k)``
``partition_sum``  Girard-Waring sum with ``F(k) = -24 sigma(k)``
``determinant``    Brioschi determinant with entries ``24 sigma(k)``
``bko``            Bruinier-Kohnen-Ono polynomial ``F_n`` at weight 12
=================  ====================================================

Every public function takes ``n`` and returns ``tau(n)`` as an ``int``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from .newton import RecursionProblem, bareiss_determinant, partition_sum_solve
from .numtheory import as_integer, exact_div, sigma
from .partitions import enumerate_partitions
from .series import product_expansion

__all__ = [
    "METHODS",
    "WEIGHT",
    "tau",
    "tau_product",
    "tau_recursion",
    "tau_partition_sum",
    "tau_determinant",
    "tau_bko",
    "tau_sequence",
    "CrossCheckReport",
    "Disagreement",
    "tau_cross_check",
]

WEIGHT = 12


def _require_n(n: int, low: int = 1) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < low:
        raise ValueError(f"n must be >= {low}, got {n}")


def tau_product(n: int) -> int:
    _require_n(n)
    return product_expansion(lambda k: 24, n - 1)[n - 1]


def tau_sequence_recursion(n_max: int) -> list[int]:
    """``[tau(1), ..., tau(n_max)]`` by Ramanujan's recursion."""
    _require_n(n_max)
    sig = [0] + [sigma(k) for k in range(1, n_max)]
    t = [0, 1]
    for m in range(1, n_max):
        s = sum(t[m + 1 - k] * sig[k] for k in range(1, m + 1))
        t.append(exact_div(-24 * s, m))
    return t[1:]


def tau_recursion(n: int) -> int:
    return tau_sequence_recursion(n)[-1]


def _neg24sigma(k: int) -> int:
    return -24 * sigma(k)


def tau_partition_sum(n: int, threads: int = 1) -> int:
    _require_n(n)
    return as_integer(partition_sum_solve(RecursionProblem(_neg24sigma, n - 1), threads))


def tau_determinant(n: int) -> int:
    """tau(n) from the ``(n-1) x (n-1)`` determinant; tau(1) = 1."""
    _require_n(n)
    m = n - 1
    if m == 0:
        return 1
    s = [24 * sigma(k) for k in range(1, m + 1)]
    M = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1):
            M[i][j] = s[i - j]
        if i + 1 < m:
            M[i][i + 1] = i + 1
    return (-1) ** m * exact_div(bareiss_determinant(M), factorial(m))


def _bko_F(n: int, x: list[int]) -> Fraction:
    """Evaluate ``F_n(x_1, ..., x_{n-1})``; ``x[j]`` holds ``x_j`` (``x[0]`` unused).

    The tuple sum over ``m_1 + 2 m_2 + ... + (n-2) m_{n-2} = n-1`` runs over
    partitions of ``n-1`` with parts at most ``n-2``; part ``j`` appearing
    ``m_j`` times contributes ``x_{j+1}**m_j``.
    """
    total = Fraction(-2 * x[1] * sigma(n - 1), n - 1)
    for lam in enumerate_partitions(n - 1, max_part=n - 2):
        mult = lam.multiplicities
        M = lam.length
        num = (-1) ** M * factorial(M - 1)
        den = 1
        for j, mj in mult.items():
            num *= x[j + 1] ** mj
            den *= factorial(mj)
        total += Fraction(num, den)
    return total


def tau_sequence_bko(n_max: int) -> list[int]:
    """``[tau(1), ..., tau(n_max)]``, each term from the BKO polynomial of the earlier ones."""
    _require_n(n_max)
    x = [0, WEIGHT]
    taus = [1]
    for n in range(2, n_max + 1):
        t = as_integer(_bko_F(n, x))
        taus.append(t)
        x.append(t)
    return taus


def tau_bko(n: int) -> int:
    _require_n(n, 2)
    return tau_sequence_bko(n)[-1]


METHODS: dict[str, Callable[[int], int]] = {
    "product": tau_product,
    "recursion": tau_recursion,
    "partition_sum": tau_partition_sum,
    "determinant": tau_determinant,
    "bko": tau_bko,
}


def tau(n: int, method: str = "recursion") -> int:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}") from None
    return fn(n)


def tau_sequence(n_max: int, method: str = "recursion", threads: int = 1) -> list[int]:
    """``[tau(1), ..., tau(n_max)]`` by a single method.

    ``recursion``, ``bko`` and ``product`` build the whole sequence in one
    pass; the other methods are evaluated index by index. For ``bko`` the
    first entry is the base value tau(1) = 1, which the method itself does
    not produce.
    """
    _require_n(n_max)
    if method == "recursion":
        return tau_sequence_recursion(n_max)
    if method == "bko":
        return tau_sequence_bko(n_max)
    if method == "product":
        return list(product_expansion(lambda k: 24, n_max - 1).coefficients)
    if method == "partition_sum":
        return [tau_partition_sum(n, threads) for n in range(1, n_max + 1)]
    if method == "determinant":
        return [tau_determinant(n) for n in range(1, n_max + 1)]
    raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}")


@dataclass(frozen=True)
class Disagreement:
    index: int
    method_a: str
    value_a: int
    method_b: str
    value_b: int

    def __str__(self) -> str:
        return (
            f"tau({self.index}): {self.method_a}={self.value_a} "
            f"but {self.method_b}={self.value_b}"
        )


@dataclass
class CrossCheckReport:
    n_max: int
    values: dict[str, list[int]] = field(default_factory=dict)
    disagreement: Disagreement | None = None
    multiplicative_failures: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.disagreement is None and not self.multiplicative_failures


# Coprime pairs checked when the range allows.
_COPRIME_PAIRS = [(2, 3), (2, 5), (3, 5), (3, 4), (4, 5), (2, 7), (3, 7), (4, 7), (5, 7)]


def tau_cross_check(n_max: int, threads: int = 1) -> CrossCheckReport:
    """Compute tau(1..n_max) by every method and compare.

    bko is skipped at index 1 where it is undefined. The first mismatch,
    scanning indices in increasing order and comparing each method with
    ``recursion``, is recorded. Multiplicativity ``tau(ab) = tau(a) tau(b)``
    is checked on coprime pairs with ``ab <= n_max``.
    """
    _require_n(n_max)
    report = CrossCheckReport(n_max)
    for name in METHODS:
        if name == "bko" and n_max < 2:
            continue
        report.values[name] = tau_sequence(n_max, name, threads)
    ref = report.values["recursion"]
    for i in range(n_max):
        for name, vals in report.values.items():
            if name == "bko" and i == 0:
                continue
            if vals[i] != ref[i]:
                report.disagreement = Disagreement(i + 1, "recursion", ref[i], name, vals[i])
                return report
    for a, b in _COPRIME_PAIRS:
        if a * b <= n_max and ref[a * b - 1] != ref[a - 1] * ref[b - 1]:
            report.multiplicative_failures.append((a, b))
    return report
