import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cicheck.errors import DivisionByZero, UnsupportedField
from cicheck.fields import GF, QQ, FunctionField, PrimeField


def sample_elements(field, rng, count):
    if field is QQ:
        return [
            field.from_fraction(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
            for _ in range(count)
        ]
    if isinstance(field, PrimeField):
        return [field.from_int(rng.randint(0, field.p - 1)) for _ in range(count)]
    out = []
    for _ in range(count):
        a = field.from_int(rng.randint(-5, 5))
        for name in field.parameters[:2]:
            if rng.random() < 0.5:
                a = field.add(a, field.mul(field.from_parameter(name), field.from_int(rng.randint(-3, 3))))
        out.append(a)
    return out


@pytest.mark.parametrize("field", [QQ, GF(5), GF(7), FunctionField(("c", "d"))])
def test_field_axioms_random(field):
    rng = random.Random(99)
    elems = sample_elements(field, rng, 60)
    for _ in range(1000):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert field.eq(field.add(field.add(a, b), c), field.add(a, field.add(b, c)))
        assert field.eq(
            field.mul(a, field.add(b, c)),
            field.add(field.mul(a, b), field.mul(a, c)),
        )
        if not field.is_zero(a):
            assert field.is_one(field.mul(a, field.div(field.one(), a)))


@pytest.mark.parametrize("field", [QQ, GF(5)])
def test_sub_and_neg(field):
    a = field.from_int(7)
    b = field.from_int(3)
    assert field.eq(field.sub(a, b), field.from_int(4))
    assert field.is_zero(field.add(a, field.neg(a)))


def test_rational_exact():
    a = QQ.from_fraction(Fraction(1, 2))
    b = QQ.from_fraction(Fraction(1, 3))
    assert QQ.add(a, b) == Fraction(5, 6)


def test_fp_mul():
    F = GF(5)
    assert F.mul(F.from_int(3), F.from_int(4)) == 2


def test_fp_division_by_zero():
    F = GF(7)
    with pytest.raises(DivisionByZero):
        F.div(F.from_int(3), F.from_int(7))
    assert F.is_zero(F.from_int(7))


def test_prime_validation():
    with pytest.raises(UnsupportedField):
        GF(6)
    with pytest.raises(UnsupportedField):
        GF(2**31 + 11)
    GF(2147483629)  # largest prime below 2^31


def test_function_field_zero_test_without_normalization():
    F = FunctionField(("c",))
    c = F.from_parameter("c")
    val = F.div(F.sub(c, c), F.add(c, F.one()))
    assert F.is_zero(val)


def test_function_field_nonzero_condition():
    F = FunctionField(("c41", "c42"))
    prod = F.mul(F.from_parameter("c41"), F.from_parameter("c42"))
    val = F.sub(F.one(), prod)
    assert not F.is_zero(val)


def test_normalize_gcd_cancellation():
    F = FunctionField(("c1",))
    c1 = F.from_parameter("c1")
    num = F.sub(F.mul(c1, c1), F.one())
    den = F.sub(c1, F.one())
    val = F.div(num, den)
    norm = F.normalize(val)
    assert F.format(norm) == "c1 + 1"


def test_normalize_idempotent():
    F = FunctionField(("c41", "c42"))
    rng = random.Random(5)
    for a in sample_elements(F, rng, 40):
        n1 = F.normalize(a)
        n2 = F.normalize(n1)
        assert F.format(n1) == F.format(n2)
        assert F.eq(a, n1)


def test_cross_multiplication_equality():
    F = FunctionField(("c41", "c42"))
    c41 = F.from_parameter("c41")
    one = F.one()
    lhs = F.div(F.mul(F.sub(one, F.mul(c41, c41)), c41), c41)
    rhs = F.sub(one, F.mul(c41, c41))
    assert F.eq(lhs, rhs)
    assert F.format(F.normalize(lhs)) == F.format(F.normalize(rhs))


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 30))
@settings(max_examples=200)
def test_rational_field_ops_match_fraction(a, b, d):
    x = QQ.from_fraction(Fraction(a, d))
    y = QQ.from_fraction(Fraction(b, d))
    assert QQ.add(x, y) == Fraction(a + b, d)
    assert QQ.mul(x, y) == Fraction(a * b, d * d)


@given(st.integers(0, 10**6), st.integers(1, 10**6))
@settings(max_examples=200)
def test_fp_inverse(a, b):
    F = GF(10007)
    bb = F.from_int(b)
    if F.is_zero(bb):
        return
    assert F.is_one(F.mul(bb, F.div(F.one(), bb)))
