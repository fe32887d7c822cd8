import random
from fractions import Fraction as Q

import pytest

from lbk.lexq import LambdaScalar, abs_val, compare


def lam(*parts):
    return LambdaScalar([Q(p) for p in parts])


def test_lexicographic_examples():
    assert compare(lam(0, 1), lam(1, 0)) == -1
    assert compare(lam(2, -5), lam(2, -5)) == 0
    assert compare(lam(Q(1, 2), 100), lam(Q(1, 2), 99)) == 1


def test_abs_examples():
    assert abs_val(lam(0, 0)) == lam(0, 0)
    assert abs_val(lam(-1, 3)) == lam(1, -3)
    assert abs_val(lam(0, -2)) == lam(0, 2)


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError):
        compare(lam(1), lam(1, 0))
    with pytest.raises(ValueError):
        lam(1) + lam(1, 0)


def test_group_and_module_laws():
    a, b = lam(1, -2), lam(Q(3, 4), 5)
    assert a + b == b + a
    assert a - a == lam(0, 0)
    assert -(-a) == a
    assert (a * 6) / 6 == a
    assert a * Q(2, 3) == LambdaScalar([Q(2, 3), Q(-4, 3)])


def test_divisibility():
    rng = random.Random(11)
    for _ in range(200):
        a = lam(Q(rng.randint(-30, 30), rng.randint(1, 9)), Q(rng.randint(-30, 30), rng.randint(1, 9)))
        m = rng.randint(1, 12)
        b = a / m
        assert b * m == a


def test_total_order_properties():
    rng = random.Random(5)

    def rand():
        return lam(Q(rng.randint(-6, 6), rng.randint(1, 4)), Q(rng.randint(-6, 6), rng.randint(1, 4)))

    for _ in range(500):
        a, b, c = rand(), rand(), rand()
        # totality: exactly one of <, ==, > holds
        assert (a < b) + (a == b) + (a > b) == 1
        # antisymmetry
        if a <= b and b <= a:
            assert a == b
        # transitivity
        if a <= b and b <= c:
            assert a <= c


def test_abs_properties():
    rng = random.Random(9)
    for _ in range(200):
        a = lam(Q(rng.randint(-9, 9), rng.randint(1, 5)), Q(rng.randint(-9, 9), rng.randint(1, 5)))
        assert abs(a) >= LambdaScalar.zero(2)
        assert (abs(a) == LambdaScalar.zero(2)) == a.is_zero()


def test_embedding_and_formatting():
    assert LambdaScalar.rational(Q(3, 2), 3).parts == (Q(3, 2), 0, 0)
    assert str(lam(Q(1, 2), -3)) == "1/2|-3"
    assert LambdaScalar.one(2) > LambdaScalar.zero(2)
