import random

import pytest

from goldennugget.dyadic import Dyadic, ZERO, ONE
from goldennugget.games import Outcome, Universe


@pytest.fixture
def u():
    return Universe()


def player_wins(u, g, mover):
    """Plain alternating-play search, independent of the memoized order logic."""
    options = u.left_options(g) if mover == "L" else u.right_options(g)
    other = "R" if mover == "L" else "L"
    return any(not player_wins(u, o, other) for o in options)


def brute_geq(u, g, h):
    diff = u.add(g, u.negate(h))
    return not player_wins(u, diff, "R")


def test_make_game_basics(u):
    assert u.make_game([], []) == u.zero
    one = u.make_game([u.zero], [])
    assert one == u.from_number(ONE)
    neg_one = u.make_game([], [u.zero])
    assert neg_one == u.from_number(Dyadic(-1))
    # idempotent interning, order/duplicate insensitive
    g = u.make_game([one, u.zero, one], [neg_one])
    assert g == u.make_game([u.zero, one], [neg_one])


def test_make_game_rejects_unknown_ids(u):
    with pytest.raises(ValueError):
        u.make_game([999], [])


def test_from_number_examples(u):
    assert u.from_number(ZERO) == u.zero
    assert u.to_text(u.from_number(Dyadic(1, 1))) == "1/2"
    g = u.parse("{0|1}")
    assert u.canonical_form(g) == u.from_number(Dyadic(1, 1))
    g34 = u.parse("{1/2|1}")
    assert u.canonical_form(g34) == g34
    assert g34 == u.from_number(Dyadic(3, 2))


def test_negate_and_add(u):
    one = u.from_number(ONE)
    assert u.negate(one) == u.from_number(Dyadic(-1))
    assert u.negate(u.negate(one)) == one
    g = u.parse("{1|0}")
    assert u.add(g, u.zero) == g
    s = u.add(g, u.parse("{0|-1}"))
    assert u.outcome(s) == Outcome.P  # {1|0} + {0|-1} = 0


def test_geq_examples(u):
    one = u.from_number(ONE)
    g10 = u.parse("{1|0}")
    assert u.geq(one, u.zero)
    assert not u.geq(one, g10) and not u.geq(g10, one)
    assert u.geq(u.parse("{1||1|0}"), u.from_number(Dyadic(1, 1)))


def test_geq_matches_brute_force(u):
    rng = random.Random(7)

    def rand_game(depth):
        if depth == 0 or rng.random() < 0.35:
            return u.from_number(Dyadic(rng.randint(-2, 2), rng.randint(0, 1)))
        left = [rand_game(depth - 1) for _ in range(rng.randint(0, 2))]
        right = [rand_game(depth - 1) for _ in range(rng.randint(0, 2))]
        return u.make_game(left, right)

    games = [rand_game(3) for _ in range(40)]
    for g in games:
        for h in games[:12]:
            assert u.geq(g, h) == brute_geq(u, g, h)


def test_outcomes(u):
    assert u.outcome(u.zero) == Outcome.P
    assert u.outcome(u.parse("{1|0}")) == Outcome.N
    assert u.outcome(u.from_number(Dyadic(1, 1))) == Outcome.L
    assert u.outcome(u.from_number(Dyadic(-1))) == Outcome.R
    star = u.parse("{0|0}")
    assert u.outcome(star) == Outcome.N


def test_stops(u):
    assert u.stops(u.parse("{1|0}")) == (ONE, ZERO)
    assert u.stops(u.parse("{1||1|0}")) == (ONE, ONE)
    assert u.stops(u.parse("{1|1/2}")) == (ONE, Dyadic(1, 1))
    # a number in disguise: stops are the value, not the naive recursion
    assert u.stops(u.parse("{1/4|3/4}")) == (Dyadic(1, 1), Dyadic(1, 1))


def test_as_number(u):
    assert u.as_number(u.parse("{0|1}")) == Dyadic(1, 1)
    assert u.as_number(u.parse("{1|0}")) is None
    assert u.as_number(u.parse("{{0|0}|{0|0}}")) == ZERO
    assert u.as_number(u.parse("{|{0|0}}")) == ZERO


def test_canonical_form(u):
    assert u.canonical_form(u.parse("{0,1|}")) == u.from_number(Dyadic(2))
    assert u.canonical_form(u.parse("{0|0,1}")) == u.parse("{0|0}")
    up_star = u.parse("{0,{0|0}|0}")
    assert u.canonical_form(up_star) == up_star
    # idempotence on a batch of random games
    rng = random.Random(3)

    def rand_game(depth):
        if depth == 0:
            return u.from_number(Dyadic(rng.randint(-2, 2)))
        left = [rand_game(depth - 1) for _ in range(rng.randint(0, 2))]
        right = [rand_game(depth - 1) for _ in range(rng.randint(0, 2))]
        return u.make_game(left, right)

    for _ in range(60):
        g = rand_game(3)
        c = u.canonical_form(g)
        assert u.canonical_form(c) == c
        assert u.geq(g, c) and u.geq(c, g)


def test_stops_of_one_sided_games():
    u = Universe()
    # one-sided games always equal integers, so the stop recursion never
    # meets a non-number with an empty option set
    assert u.stops(u.parse("{|0}")) == (Dyadic(-1), Dyadic(-1))
    assert u.stops(u.parse("{|{0|0}}")) == (ZERO, ZERO)


def test_text_round_trip(u):
    for text in ("0", "1", "-1", "1/2", "{1|0}", "{1,{1|0}|0}",
                 "{{1|{1|0}}|0,{1|0}}", "{1,{1|1/2}|1/2}"):
        g = u.parse(text)
        assert u.parse(u.to_text(g)) == g
    # canonical games print back to themselves
    g = u.canonical_form(u.parse("{1,{1|0}|0}"))
    assert u.parse(u.to_text(g)) == g


def test_parse_shorthand(u):
    assert u.parse("{1||1|0}") == u.parse("{1|{1|0}}")
    assert u.parse("{1||1|0|||0,{1|0}}") == u.parse("{{1|{1|0}}|0,{1|0}}")
    deep = u.parse("{1||1|0||||1||1|0|||0,{1|0}}")
    assert deep == u.parse("{{1|{1|0}}|{{1|{1|0}}|0,{1|0}}}")
    assert u.parse("{1|{1|0},{1||1|0}||{1|0},{1||1|0}}") == u.parse(
        "{{1|{1|0},{1|{1|0}}}|{1|0},{1|{1|0}}}"
    )


def test_parse_errors(u):
    for bad in ("{1|", "1/3", "{1|0} junk", "{a|b}"):
        with pytest.raises(ValueError):
            u.parse(bad)


def test_json_round_trip(u):
    for text in ("0", "1/2", "{1|0}", "{1,{1|0}|0,{1,{1|0}|0}}"):
        g = u.parse(text)
        assert u.from_json_obj(u.to_json_obj(g)) == g
