from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cswhit.laurent import LaurentHalf

laurents = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentHalf)


def test_zero_coefficients_dropped():
    assert LaurentHalf({1: 0, 2: 3}).coeffs == {2: 3}
    assert LaurentHalf() == 0 and not LaurentHalf({4: 0})


def test_arithmetic():
    x = LaurentHalf.q_power(1)  # q^{1/2}
    assert x * x == LaurentHalf({2: 1})
    assert x * LaurentHalf.q_power(-1) == 1
    assert (x + 1) * (x - 1) == LaurentHalf({2: 1, 0: -1})
    assert 2 * x - x == x


def test_str():
    assert str(LaurentHalf()) == "0"
    assert str(LaurentHalf({2: 1})) == "q"
    assert str(LaurentHalf({-1: -1})) == "-q^(-1/2)"
    assert str(LaurentHalf({-2: 1, 0: 3})) == "3 + q^(-1)"


def test_json_roundtrip():
    x = LaurentHalf({-1: 3, 2: 1})
    assert x.to_json() == [[-1, 3], [2, 1]]
    assert LaurentHalf.from_json(x.to_json()) == x


def test_evaluate():
    x = LaurentHalf({-1: 2, 2: 1})  # 2 q^{-1/2} + q
    assert x.evaluate(4) == Fraction(5)
    assert x.evaluate(Fraction(1, 4)) == Fraction(17, 4)
    assert abs(x.evaluate(2) - (2 / 2 ** 0.5 + 2)) < 1e-12


def test_rejects_non_integers():
    with pytest.raises(ValueError):
        LaurentHalf({0: 0.5})
    with pytest.raises(TypeError):
        LaurentHalf() + 1.5


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@given(laurents, laurents)
def test_evaluation_is_a_homomorphism(a, b):
    assert (a * b).evaluate(9) == a.evaluate(9) * b.evaluate(9)
    assert (a + b).evaluate(9) == a.evaluate(9) + b.evaluate(9)
