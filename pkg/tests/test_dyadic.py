from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from goldennugget.dyadic import Dyadic, simplest_number

dyadics = st.builds(Dyadic, st.integers(-10**6, 10**6), st.integers(0, 40))


def to_fraction(d: Dyadic) -> Fraction:
    return Fraction(d.num, 2**d.exp)


def test_lowest_terms():
    assert Dyadic(4, 2) == Dyadic(1, 0)
    assert Dyadic(6, 3) == Dyadic(3, 2)
    assert Dyadic(0, 7) == Dyadic(0, 0)
    d = Dyadic(12, 4)
    assert (d.num, d.exp) == (3, 2)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Dyadic(1, -1)


@given(dyadics, dyadics)
def test_add_matches_fractions(a, b):
    assert to_fraction(a + b) == to_fraction(a) + to_fraction(b)


@given(dyadics, dyadics)
def test_sub_and_order_match_fractions(a, b):
    assert to_fraction(a - b) == to_fraction(a) - to_fraction(b)
    assert (a < b) == (to_fraction(a) < to_fraction(b))
    assert (a == b) == (to_fraction(a) == to_fraction(b))


@given(dyadics)
def test_negation_round_trip(a):
    assert -(-a) == a
    assert a + (-a) == Dyadic(0)


@given(dyadics)
def test_floor_and_integer(a):
    assert a.floor() == to_fraction(a).__floor__()
    assert a.is_integer() == (to_fraction(a).denominator == 1)


@given(dyadics)
def test_text_round_trip(a):
    assert Dyadic.from_str(str(a)) == a
    assert Dyadic.from_binary(a.binary()) == a


def test_binary_forms():
    assert Dyadic(11, 4).binary() == "0.1011"
    assert Dyadic(1).binary() == "1"
    assert Dyadic(0).binary() == "0"
    assert Dyadic.from_binary("0.110011") == Dyadic(51, 6)


def test_from_str_rejects_non_power_of_two():
    with pytest.raises(ValueError):
        Dyadic.from_str("1/3")


def test_simplest_number_examples():
    assert simplest_number(Dyadic(0), Dyadic(1)) == Dyadic(1, 1)
    assert simplest_number(Dyadic(1, 1), Dyadic(3, 2)) == Dyadic(5, 3)
    assert simplest_number(Dyadic(5, 3), Dyadic(11, 4)) == Dyadic(21, 5)
    assert simplest_number(Dyadic(-1), Dyadic(1)) == Dyadic(0)
    assert simplest_number(Dyadic(3, 1), Dyadic(7)) == Dyadic(2)
    assert simplest_number(Dyadic(-9, 1), Dyadic(-2)) == Dyadic(-3)


def test_simplest_number_rejects_empty_interval():
    with pytest.raises(ValueError):
        simplest_number(Dyadic(1), Dyadic(1))


@given(dyadics, dyadics)
def test_simplest_number_properties(a, b):
    if not a < b:
        a, b = b, a
    if a == b:
        return
    mid = simplest_number(a, b)
    assert a < mid < b
    if not mid.is_integer():
        # minimal denominator: no coarser dyadic fits in the open interval
        for exp in range(mid.exp):
            first = ((a.num << exp) >> a.exp) + 1
            assert not a < Dyadic(first, exp) < b
    else:
        # least-magnitude integer in the interval
        n = mid.num
        closer = n - 1 if n > 0 else n + 1
        assert n == 0 or not a < Dyadic(closer) < b
