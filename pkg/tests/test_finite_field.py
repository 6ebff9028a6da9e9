"""Exact arithmetic in F_p and the scalar Legendre symbol."""

import pytest

from ffnewman.finite_field import (
    FpElement,
    check_odd_prime,
    is_prime,
    legendre_int,
    legendre_scalar,
    legendre_table,
)

SMALL_ODD_PRIMES = [3, 5, 7, 11, 13]


def test_is_prime_small_values():
    primes = [n for n in range(2, 60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(-7)


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15, 21, 0, -3])
def test_check_odd_prime_rejects(bad):
    with pytest.raises(ValueError):
        check_odd_prime(bad)


def test_check_odd_prime_accepts():
    for p in SMALL_ODD_PRIMES:
        check_odd_prime(p)  # must not raise


def test_element_examples():
    # 2 + 2 = 1 in F_3
    assert (FpElement(2, 3) + FpElement(2, 3)).value == 1
    # inverse of 2 in F_5 is 3
    assert FpElement(2, 5).inv().value == 3
    # 2^4 = 1 in F_5
    assert (FpElement(2, 5) ** 4).value == 1


def test_element_exhaustive_arithmetic():
    for p in [3, 5, 7]:
        for a in range(p):
            x = FpElement(a, p)
            assert (-x).value == (-a) % p
            assert (x - x).value == 0
            for b in range(p):
                y = FpElement(b, p)
                assert (x + y).value == (a + b) % p
                assert (x * y).value == (a * b) % p
                assert (x - y).value == (a - b) % p


def test_inverse_is_two_sided():
    for p in SMALL_ODD_PRIMES:
        for a in range(1, p):
            x = FpElement(a, p)
            assert (x * x.inv()).value == 1
            assert (x.inv() * x).value == 1


def test_inversion_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        FpElement(0, 7).inv()
    with pytest.raises(ZeroDivisionError):
        FpElement(5, 5).inv()  # reduces to zero first


def test_pow_matches_repeated_multiplication():
    p = 7
    for a in range(p):
        x = FpElement(a, p)
        acc = FpElement(1, p)
        for e in range(17):
            assert (x**e).value == acc.value
            acc = acc * x


def test_negative_exponent():
    x = FpElement(2, 5)
    assert (x**-1).value == x.inv().value
    assert (x**-4).value == (x.inv() ** 4).value
    with pytest.raises(ZeroDivisionError):
        FpElement(0, 5) ** -1


def test_mixed_int_arithmetic():
    x = FpElement(2, 7)
    assert (x + 12).value == 0
    assert (12 + x).value == 0
    assert (x * 4).value == 1
    assert (3 - x).value == 1
    assert (x - 3).value == 6


def test_modulus_mismatch_raises():
    with pytest.raises(ValueError):
        FpElement(1, 3) + FpElement(1, 5)
    with pytest.raises(ValueError):
        FpElement(1, 3) * FpElement(1, 7)


def test_reduction_on_construction():
    assert FpElement(10, 3).value == 1
    assert FpElement(-1, 5).value == 4
    with pytest.raises(ValueError):
        FpElement(1, 4)


def test_legendre_examples():
    assert legendre_int(0, 7) == 0
    assert legendre_int(4, 5) == 1
    assert legendre_int(2, 5) == -1


def test_legendre_values_complete():
    for p in SMALL_ODD_PRIMES:
        vals = [legendre_int(a, p) for a in range(p)]
        assert vals[0] == 0
        assert all(v in (-1, 1) for v in vals[1:])
        # exactly (p-1)/2 nonzero squares
        assert vals.count(1) == (p - 1) // 2
        assert vals.count(-1) == (p - 1) // 2


def test_legendre_multiplicative():
    for p in SMALL_ODD_PRIMES:
        for a in range(p):
            for b in range(p):
                assert legendre_int(a * b, p) == legendre_int(a, p) * legendre_int(b, p)


def test_legendre_periodic():
    for p in SMALL_ODD_PRIMES:
        for a in range(p):
            assert legendre_int(a + 3 * p, p) == legendre_int(a, p)
            assert legendre_int(a - p, p) == legendre_int(a, p)


def test_legendre_table_matches_euler():
    # two independent routes: squares-marking table vs Euler's criterion
    for p in SMALL_ODD_PRIMES + [17, 19, 23]:
        t = legendre_table(p)
        assert len(t) == p
        assert t == tuple(legendre_int(a, p) for a in range(p))


def test_legendre_scalar_wraps_value():
    assert legendre_scalar(FpElement(4, 5)) == 1
    assert legendre_scalar(FpElement(0, 5)) == 0
    assert legendre_scalar(FpElement(7, 5)) == legendre_int(2, 5)
