import pytest

from goldennugget.dyadic import Dyadic, ONE
from goldennugget.games import Universe
from goldennugget.nugget import heap_canonical
from goldennugget.rcf import eq_inf, geq_inf, reduced_canonical_form


@pytest.fixture
def u():
    return Universe()


def test_geq_inf_examples(u):
    one = u.from_number(ONE)
    g10 = u.parse("{1|0}")
    assert geq_inf(u, one, g10)
    assert not geq_inf(u, g10, one)
    # the stop computation behind the negative case
    assert u.right_stop(u.add(g10, u.negate(one))) == Dyadic(-1)
    half_switch = u.parse("{1/2|0}")
    assert geq_inf(u, half_switch, u.zero)
    assert not geq_inf(u, u.zero, half_switch)


def test_eq_inf_examples(u):
    g4 = heap_canonical(u, 4)
    assert u.to_text(g4) == "{1|{1|0}}"
    assert eq_inf(u, g4, u.from_number(ONE))
    star = u.parse("{0|0}")
    assert eq_inf(u, u.zero, star)
    assert not eq_inf(u, u.from_number(Dyadic(1, 1)), u.from_number(ONE))


def test_rcf_examples(u):
    assert reduced_canonical_form(u, heap_canonical(u, 4)) == u.from_number(ONE)
    g10 = u.parse("{1|0}")
    assert reduced_canonical_form(u, heap_canonical(u, 7)) == g10
    assert reduced_canonical_form(u, heap_canonical(u, 20)) == g10
    assert reduced_canonical_form(u, g10) == g10


def test_rcf_of_numbers_and_infinitesimals(u):
    half = u.from_number(Dyadic(1, 1))
    assert reduced_canonical_form(u, half) == half
    star = u.parse("{0|0}")
    up = u.parse("{0|{0|0}}")
    assert reduced_canonical_form(u, star) == u.zero
    assert reduced_canonical_form(u, up) == u.zero
    # number plus infinitesimal reduces to the number
    assert reduced_canonical_form(u, u.add(half, star)) == half


def test_rcf_idempotent_and_sound_on_heaps(u):
    for h in range(31):
        g = heap_canonical(u, h)
        r = reduced_canonical_form(u, g)
        assert reduced_canonical_form(u, r) == r
        assert eq_inf(u, g, r)
        assert u.stops(g) == u.stops(r)
