import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from oracles import partition_count
from taupart.numtheory import InexactDivisionError
from taupart.series import TruncatedSeries, apostol_recursion, int_power, multiply, product_expansion


def S(coeffs, N):
    return TruncatedSeries(coeffs, N)


def test_multiply_examples():
    assert multiply(S([1, 1], 2), S([1, -1], 2)).coefficients == (1, 0, -1)
    s = S([3, -1, 4, 1], 3)
    assert multiply(s, TruncatedSeries.one(3)) == s
    N = 6
    assert multiply(S([1, -1], N), S([1] * (N + 1), N)) == TruncatedSeries.one(N)


def test_multiply_rejects_mismatched_degree():
    with pytest.raises(ValueError):
        multiply(S([1], 2), S([1], 3))
    with pytest.raises(ValueError):
        S([1], 2) + S([1], 3)


def test_int_power_examples():
    assert int_power(S([1, -1], 4), -1).coefficients == (1, 1, 1, 1, 1)
    assert int_power(S([5, 2, 7], 4), 0) == TruncatedSeries.one(4)
    assert int_power(S([1, -1], 4), 24)[2] == comb(24, 2) == 276


def test_int_power_requires_unit():
    with pytest.raises(ValueError):
        int_power(S([2, 1], 3), -1)
    assert int_power(S([-1, 1], 3), -1).coefficients == (-1, -1, -1, -1)


def test_coefficients_beyond_truncation_are_not_readable():
    s = S([1, 2, 3, 4, 5], 2)
    assert s.coefficients == (1, 2, 3)
    with pytest.raises(IndexError):
        s[3]


def test_product_expansion_examples():
    assert product_expansion(lambda n: 24, 2).coefficients == (1, -24, 252)
    assert product_expansion(lambda n: -1, 5).coefficients == (1, 1, 2, 3, 5, 7)
    assert product_expansion(lambda n: 1, 7).coefficients == (1, -1, -1, 0, 0, 1, 0, 1)


def test_euler_pentagonal_pattern():
    N = 100
    expected = [0] * (N + 1)
    for k in range(-10, 11):
        g = k * (3 * k - 1) // 2
        if 0 <= g <= N:
            expected[g] = (-1) ** k
    assert list(product_expansion(lambda n: 1, N).coefficients) == expected


def test_partition_counts_from_product():
    c = product_expansion(lambda n: -1, 60).coefficients
    assert [c[n] for n in range(30)] == [partition_count(n) for n in range(30)]


def test_apostol_examples():
    assert apostol_recursion(lambda n: 24 * n, 1)[1] == -24
    assert apostol_recursion(lambda n: 0, 6) == [1, 0, 0, 0, 0, 0, 0]
    assert apostol_recursion(lambda n: n, 7) == [1, -1, -1, 0, 0, 1, 0, 1]
    r = apostol_recursion(lambda n: n, 7)
    assert all(isinstance(v, Fraction) for v in r)


def test_apostol_integral_mode():
    r = apostol_recursion(lambda n: 24 * n, 5, integral=True)
    assert r == [1, -24, 252, -1472, 4830, -6048]
    assert all(type(v) is int for v in r)
    # f(n) = 1 is (1 - x)(1 - x^2)^(1/2)...; the x^2 coefficient is -1/2.
    assert apostol_recursion(lambda n: 1, 2) == [1, -1, Fraction(-1, 2)]
    with pytest.raises(InexactDivisionError):
        apostol_recursion(lambda n: 1 if n == 2 else 0, 2, integral=True)


def test_json_round_trip():
    s = product_expansion(lambda n: 24, 12)
    d = json.loads(s.to_json())
    assert d["truncation"] == 12
    assert all(isinstance(c, str) for c in d["coeffs"])
    assert TruncatedSeries.from_json(s.to_json()) == s


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=1, max_size=60))
def test_round_trip_random_exponents(exps):
    N = len(exps)
    e = lambda n: exps[n - 1]
    direct = product_expansion(e, N).coefficients
    rec = apostol_recursion(lambda n: n * e(n), N)
    assert list(direct) == rec


def test_round_trip_degree_200_mixed_exponents():
    e = lambda n: ((n * 37) % 101) - 50
    N = 200
    assert list(product_expansion(e, N).coefficients) == apostol_recursion(lambda n: n * e(n), N, integral=True)


series_st = st.integers(0, 8).flatmap(
    lambda N: st.tuples(
        st.just(N),
        st.lists(st.integers(-5, 5), min_size=N + 1, max_size=N + 1),
    )
)


@given(series_st, st.integers(-4, 4), st.integers(-4, 4))
def test_int_power_homomorphism(ns, a, b):
    N, coeffs = ns
    s = S([1] + coeffs[1:], N)
    assert int_power(s, a) * int_power(s, b) == int_power(s, a + b)


@given(st.integers(0, 8).flatmap(
    lambda N: st.lists(st.lists(st.integers(-9, 9), min_size=N + 1, max_size=N + 1), min_size=3, max_size=3)
))
def test_multiply_commutative_associative(rows):
    N = len(rows[0]) - 1
    a, b, c = (S(r, N) for r in rows)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
