import random
from fractions import Fraction

import pytest

from taupart.newton import (
    RecursionProblem,
    bareiss_determinant,
    determinant_solve,
    newton_matrix,
    partition_sum_solve,
    partition_sum_terms,
    recursion_solve,
)
from taupart.numtheory import sigma
from taupart.partitions import Partition

neg24sigma = lambda k: -24 * sigma(k)


def P(F, n):
    return RecursionProblem(F, n)


def test_recursion_examples():
    assert recursion_solve(P(lambda k: 0, 5)) == 0
    assert recursion_solve(P(neg24sigma, 1)) == -24
    assert recursion_solve(P(sigma, 3)) == 3
    assert recursion_solve(P(sigma, 0)) == 1


@pytest.mark.parametrize("n", range(0, 41, 5))
def test_partition_sum_sylvester(n):
    assert partition_sum_solve(P(lambda k: 1, n)) == 1


def test_partition_sum_examples():
    terms = dict(partition_sum_terms(P(neg24sigma, 2)))
    assert terms == {Partition(2): -36, Partition(1, 1): 288}
    assert partition_sum_solve(P(neg24sigma, 2)) == 252
    assert partition_sum_solve(P(lambda k: 7, 0)) == 1


def test_partition_sum_threads_identical():
    F = lambda k: (k * 13) % 17 - 8
    assert partition_sum_solve(P(F, 18), threads=4) == partition_sum_solve(P(F, 18))


def test_determinant_examples():
    F = lambda k: {1: 5, 2: -3}[k]
    assert determinant_solve(P(F, 1)) == 5
    assert determinant_solve(P(F, 2)) == Fraction(5 * 5 + (-3), 2)
    assert determinant_solve(P(neg24sigma, 3)) == -1472
    with pytest.raises(ValueError):
        determinant_solve(P(neg24sigma, 0))


def test_newton_matrix_layout():
    assert newton_matrix([1, 2, 3]) == [[1, -1, 0], [2, 1, -2], [3, 2, 1]]


def _cofactor_det(M):
    if not M:
        return 1
    return sum(
        (-1) ** j * M[0][j] * _cofactor_det([row[:j] + row[j + 1:] for row in M[1:]])
        for j in range(len(M))
    )


def test_bareiss_matches_cofactor_expansion():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(0, 6)
        M = [[rng.choice([0, 0, rng.randint(-9, 9)]) for _ in range(n)] for _ in range(n)]
        assert bareiss_determinant(M) == _cofactor_det(M)


def test_bareiss_rejects_non_square():
    with pytest.raises(ValueError):
        bareiss_determinant([[1, 2]])


def test_triple_oracle_random():
    rng = random.Random(3)
    for _ in range(20):
        vals = [rng.randint(-100, 100) for _ in range(12)]
        F = lambda k, vals=vals: vals[k - 1]
        for n in range(1, 13):
            prob = P(F, n)
            assert recursion_solve(prob) == partition_sum_solve(prob) == determinant_solve(prob)


@pytest.mark.parametrize("n", range(1, 10))
def test_top_stratum_coefficient_is_one_over_n(n):
    rng = random.Random(n)
    vals = [rng.randint(-50, 50) for _ in range(n)]
    F = lambda k: vals[k - 1]
    G = lambda k: vals[k - 1] + (1 if k == n else 0)
    for solve in (recursion_solve, partition_sum_solve, determinant_solve):
        assert solve(P(G, n)) - solve(P(F, n)) == Fraction(1, n)


def test_problem_rejects_negative_n():
    with pytest.raises(ValueError):
        RecursionProblem(sigma, -1)
