from itertools import combinations, permutations
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from minimaj.qpoly import (
    ONE,
    Q,
    ZERO,
    QPoly,
    binomial_series,
    f_poly,
    q_binomial,
    q_factorial,
    q_integer,
    q_stirling,
)
from minimaj.partitions import enum_compositions, multinomial

polys = st.lists(st.integers(-50, 50), max_size=6).map(QPoly)


def stirling2(n, k):
    # inclusion-exclusion, independent of the recurrence
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


def test_canonical_form_drops_trailing_zeros():
    assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPoly([0, 0]) == ZERO
    assert ZERO.degree == -1
    assert QPoly([3]) == 3


def test_str_rendering():
    assert str(QPoly([1, 2, 1])) == "1 + 2q + q^2"
    assert str(ZERO) == "0"
    assert str(QPoly([1, -1])) == "1 - q"
    assert str(QPoly([0, 0, -3])) == "-3q^2"


def test_q_integer_zero_is_zero():
    assert q_integer(0) == ZERO
    assert q_integer(3) == QPoly([1, 1, 1])
    with pytest.raises(ValueError):
        q_integer(-1)


def test_q_factorial_is_inversion_generating_function():
    for n in range(6):
        invs = [
            sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
            for w in permutations(range(n))
        ]
        assert q_factorial(n) == QPoly.from_exponents(invs)


def test_q_binomial_counts_subsets_by_sum():
    for n in range(7):
        for k in range(n + 1):
            brute = QPoly.from_exponents(sum(s) - k * (k + 1) // 2 for s in combinations(range(1, n + 1), k))
            assert q_binomial(n, k) == brute
    assert q_binomial(3, 5) == ZERO and q_binomial(3, -1) == ZERO


def test_q_binomial_factorial_identity():
    for n in range(7):
        for k in range(n + 1):
            assert q_binomial(n, k) * q_factorial(k) * q_factorial(n - k) == q_factorial(n)


def test_q_stirling_specializes_to_stirling_numbers():
    for n in range(8):
        for k in range(n + 1):
            assert q_stirling(n, k).eval_at_one() == stirling2(n, k)


def test_f_poly_specializes_to_multinomial():
    for n in range(1, 7):
        for alpha in enum_compositions(n):
            assert f_poly(n, alpha)(1) == multinomial(alpha)


def test_f_poly_examples():
    # two blocks (1,1): the last factor is 1 + q
    assert f_poly(2, (1, 1)) == QPoly([1, 1])
    assert f_poly(3, (1, 2)) == binomial_series(2, 1)
    with pytest.raises(ValueError):
        f_poly(3, (1, 1))
    with pytest.raises(ValueError):
        f_poly(2, (2, 0))


def test_substitute_power_and_shift():
    p = QPoly([1, 2, 3])
    assert p.substitute_power(2) == QPoly([1, 0, 2, 0, 3])
    assert p.shift(2) == QPoly([0, 0, 1, 2, 3])
    assert ZERO.substitute_power(3) == ZERO
    with pytest.raises(ValueError):
        p.substitute_power(0)


def test_big_coefficients_stay_exact():
    p = q_factorial(30)
    assert p.eval_at_one() == factorial(30)
    assert (q_integer(2) ** 200)[100] == comb(200, 100)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, x):
    assert (a * a)(x) == a(x) ** 2
    assert (a * Q)(x) == a(x) * x


@given(polys)
def test_json_roundtrip(a):
    assert QPoly.from_json(a.to_json()) == a
