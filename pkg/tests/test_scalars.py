import random
from fractions import Fraction

import pytest

from ospq.scalars import Scalar, rat, P, HALF, SQRT2, format_scalar


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == rat(2)


def test_half_p_times_two_is_p():
    assert (P * HALF) * rat(2) == P


def test_eval_is_ring_homomorphism():
    rng = random.Random(7)
    for _ in range(50):
        a = _random_scalar(rng)
        b = _random_scalar(rng)
        q = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        assert (a + b).substitute(p=q) == a.substitute(p=q) + b.substitute(p=q)
        assert (a * b).substitute(p=q) == a.substitute(p=q) * b.substitute(p=q)


def test_eval_example():
    val = (P * P * HALF).substitute(p=2)
    assert val == rat(2)


def _random_scalar(rng):
    out = Scalar.zero()
    for _ in range(rng.randint(0, 4)):
        term = rat(Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
        term = term * P ** rng.randint(0, 3)
        if rng.random() < 0.3:
            term = term * SQRT2
        out = out + term
    return out


def test_division_by_rationals_only():
    assert (P * rat(2)) / 2 == P
    with pytest.raises(ValueError):
        _ = P / P


def test_exact_division():
    f = P * P * rat(4) + P * P * P * rat(2)
    assert f.divide_exact(P * rat(2)) == P * rat(2) + P * P
    with pytest.raises(ValueError):
        (P + rat(1)).divide_exact(P)


def test_unit_inverse_in_quadratic_extension():
    u = rat(1) + SQRT2
    assert u * u.unit_inverse() == rat(1)
    with pytest.raises(ValueError):
        P.unit_inverse()


def test_sqrt_perfect_squares():
    assert (P * P * rat(4)).sqrt() == P * rat(2)
    assert (P * P * rat(2)).sqrt() == SQRT2 * P
    assert Scalar.zero().sqrt() == Scalar.zero()
    f = (P + rat(1)) * (P + rat(1))
    assert f.sqrt() == P + rat(1)
    with pytest.raises(ValueError):
        (P + rat(1)).sqrt()


def test_substitute_extra_symbols():
    x = Scalar.var("x")
    f = x * x * P
    assert f.substitute(x=3) == rat(9) * P
    assert f.substitute(x=0).is_zero


def test_format():
    assert format_scalar(P * P * HALF) == "1/2*p^2"
    assert format_scalar(SQRT2 * P) == "s*p"
    assert format_scalar(rat(1) - P) == "-p + 1" or format_scalar(rat(1) - P) == "1 - p"
    assert format_scalar(Scalar.zero()) == "0"


def test_hash_consistency():
    a = P * HALF + rat(3)
    b = rat(3) + HALF * P
    assert a == b and hash(a) == hash(b)
