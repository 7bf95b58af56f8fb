"""Tests for the integer and modular arithmetic primitives."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seqpower.arith import (
    Factorization,
    beta,
    divisors,
    euler_phi,
    factorize,
    mod_inv,
    mod_pow,
)
from seqpower.errors import NotInvertibleError


def naive_phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def naive_liouville(k):
    count = 0
    d = 2
    while d * d <= k:
        while k % d == 0:
            count += 1
            k //= d
        d += 1
    if k > 1:
        count += 1
    return -1 if count % 2 else 1


def is_squarefree(n):
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


@pytest.mark.parametrize(
    "m, factors",
    [
        (36, ((2, 2), (3, 2))),
        (2, ((2, 1),)),
        (30, ((2, 1), (3, 1), (5, 1))),
        (97, ((97, 1),)),
        (1024, ((2, 10),)),
        (360, ((2, 3), (3, 2), (5, 1))),
    ],
)
def test_factorize_examples(m, factors):
    f = factorize(m)
    assert f.m == m
    assert f.factors == factors
    assert f.r == len(factors)


@pytest.mark.parametrize("bad", [1, 0, -5])
def test_factorize_rejects_small(bad):
    with pytest.raises(ValueError):
        factorize(bad)


def test_factorize_reconstructs_exhaustive():
    for m in range(2, 10**6 + 1):
        f = factorize(m)
        product = 1
        for p, e in f.factors:
            product *= p**e
        assert product == m


def test_factorize_primes_sorted():
    for m in range(2, 30000):
        f = factorize(m)
        assert list(f.primes) == sorted(set(f.primes))


@given(st.integers(min_value=2, max_value=10**6))
def test_factorize_reconstructs_random(m):
    f = factorize(m)
    product = 1
    for p, e in f.factors:
        assert e >= 1
        assert p == 2 or all(p % q for q in range(2, math.isqrt(p) + 1))
        product *= p**e
    assert product == m


def test_factorization_validates():
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))  # product mismatch
    with pytest.raises(ValueError):
        Factorization(6, ((3, 1), (2, 1)))  # primes out of order
    with pytest.raises(ValueError):
        Factorization(4, ((2, 0),))
    with pytest.raises(ValueError):
        Factorization(1, ())


def test_factorization_accessors():
    f = factorize(360)
    assert f.primes == (2, 3, 5)
    assert f.exponents == (3, 2, 1)
    assert f.prime(1) == 2 and f.exponent(1) == 3
    assert f.prime(3) == 5 and f.exponent(3) == 1


@pytest.mark.parametrize("n, expected", [(36, 12), (1, 1), (9, 6), (2, 1), (97, 96)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected


def test_euler_phi_rejects_nonpositive():
    with pytest.raises(ValueError):
        euler_phi(0)


def test_euler_phi_matches_coprime_count():
    for n in range(1, 500):
        assert euler_phi(n) == naive_phi(n)


def test_euler_phi_multiplicative():
    for a in range(1, 101):
        for b in range(1, 101):
            if math.gcd(a, b) == 1:
                assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)


def test_mod_pow_examples():
    assert mod_pow(3, 4, 15) == 6
    assert mod_pow(7, 0, 11) == 1
    assert mod_pow(2, 6, 36) == 28


def test_mod_pow_matches_repeated_multiplication():
    for m in range(2, 201):
        for base in range(m):
            acc = 1 % m
            for exp in range(51):
                assert mod_pow(base, exp, m) == acc
                acc = acc * base % m


def test_mod_pow_validates():
    with pytest.raises(ValueError):
        mod_pow(5, 2, 4)
    with pytest.raises(ValueError):
        mod_pow(1, -1, 4)
    with pytest.raises(ValueError):
        mod_pow(0, 1, 1)


def test_mod_inv_examples():
    assert mod_inv(4, 9) == 7
    assert mod_inv(1, 5) == 1
    with pytest.raises(NotInvertibleError):
        mod_inv(2, 4)
    with pytest.raises(NotInvertibleError):
        mod_inv(0, 7)


def test_mod_inv_exhaustive_small():
    for m in range(2, 120):
        for a in range(m):
            if math.gcd(a, m) == 1:
                inv = mod_inv(a, m)
                assert 0 <= inv < m
                assert a * inv % m == 1
            else:
                with pytest.raises(NotInvertibleError):
                    mod_inv(a, m)


@given(st.data())
def test_mod_inv_random(data):
    m = data.draw(st.integers(min_value=2, max_value=10**9))
    a = data.draw(
        st.integers(min_value=1, max_value=m - 1).filter(
            lambda x: math.gcd(x, m) == 1
        )
    )
    inv = mod_inv(a, m)
    assert a * inv % m == 1


@pytest.mark.parametrize(
    "n, expected",
    [(6, [1, 2, 3, 6]), (1, [1]), (12, [1, 2, 3, 4, 6, 12]), (49, [1, 7, 49])],
)
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


def test_divisors_complete_and_sorted():
    for n in range(1, 400):
        ds = divisors(n)
        assert ds == sorted(d for d in range(1, n + 1) if n % d == 0)


def test_beta_examples():
    assert beta(6) == 2 == euler_phi(6)
    assert beta(1) == 1
    assert beta(30) == 8 == euler_phi(30)


def test_beta_matches_direct_sum():
    for n in range(1, 1000):
        expected = sum(
            d * naive_liouville(n // d) for d in range(1, n + 1) if n % d == 0
        )
        assert beta(n) == expected


def test_beta_totient_relation():
    # equality on squarefree arguments, lower bound otherwise
    for n in range(1, 2000):
        if is_squarefree(n):
            assert beta(n) == euler_phi(n)
        else:
            assert beta(n) >= euler_phi(n)
    assert beta(4) == 3 > euler_phi(4)
