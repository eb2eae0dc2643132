from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from grpder.field import CharacteristicTwoError, FieldError, FieldSpec, is_prime

PRIMES = [3, 5, 7, 101, 2**31 - 1, 2**61 - 1]


def scalars(p):
    if p == 0:
        return st.fractions(max_denominator=50).map(Fraction)
    return st.integers(0, p - 1)


@pytest.mark.parametrize("m", list(range(200)) + [2**31 - 1, 2**61 - 1, 2**61 + 1, 561, 1105])
def test_is_prime_matches_sympy(m):
    assert is_prime(m) == sympy.isprime(m)


@pytest.mark.parametrize("bad", [2, 1, 4, 9, -3, 15])
def test_rejects_bad_characteristic(bad):
    with pytest.raises(FieldError):
        FieldSpec(bad)


def test_char_two_has_its_own_error():
    with pytest.raises(CharacteristicTwoError):
        FieldSpec(2)


def test_fast_flag_and_dtype():
    assert FieldSpec(3).fast and FieldSpec(3).dtype == np.int64
    assert not FieldSpec(0).fast and FieldSpec(0).dtype == object
    assert not FieldSpec(2**61 - 1).fast


def test_coercion():
    q, f5 = FieldSpec(0), FieldSpec(5)
    assert q("3/6") == Fraction(1, 2)
    assert f5(Fraction(1, 2)) == 3
    assert f5(-1) == 4
    assert f5("2/3") == 4
    with pytest.raises(TypeError):
        q(0.5)
    with pytest.raises(TypeError):
        f5(1.0)


@pytest.mark.parametrize("p,x,text", [(0, Fraction(-3, 4), "-3/4"), (0, Fraction(6, 2), "3"), (7, 10, "3")])
def test_format(p, x, text):
    assert FieldSpec(p).format(x) == text


@pytest.mark.parametrize("p", [0, 3, 7, 2**61 - 1])
@given(data=st.data())
def test_field_axioms(p, data):
    f = FieldSpec(p)
    x, y, z = (f(data.draw(scalars(p))) for _ in range(3))
    assert f.add(x, y) == f.add(y, x)
    assert f.mul(x, y) == f.mul(y, x)
    assert f.add(f.add(x, y), z) == f.add(x, f.add(y, z))
    assert f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z))
    assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
    assert f.add(x, f.neg(x)) == f.zero
    assert f.sub(x, y) == f.add(x, f.neg(y))
    assert f.mul(x, f.one) == x
    if not f.is_zero(x):
        assert f.mul(x, f.inv(x)) == f.one
        assert f.div(y, x) == f.mul(y, f.inv(x))


@pytest.mark.parametrize("p", [0, 5, 2**61 - 1])
@given(data=st.data())
def test_format_parse_roundtrip(p, data):
    f = FieldSpec(p)
    x = f(data.draw(scalars(p)))
    assert f.parse(f.format(x)) == x


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        FieldSpec(3).inv(0)


def test_reduce_fast_and_object_paths():
    f = FieldSpec(5)
    assert f.reduce(np.array([[-1, 7]])).tolist() == [[4, 2]]
    assert f.reduce(np.array([Fraction(1, 2)], dtype=object)).tolist() == [3]
    big = FieldSpec(2**61 - 1)
    assert big.reduce([-1]).tolist() == [2**61 - 2]
