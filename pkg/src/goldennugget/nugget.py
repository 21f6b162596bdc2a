"""The GoldenNugget subtraction game: classification, values, and the oracle.

In GoldenNugget, Left removes a member of Wythoff's A sequence from the
heap and Right removes a member of the B sequence.  Heap sizes partition
into four classes (plus zero) that determine the reduced canonical form:

* ``b``        -- heaps in B:             reduced form {1|0};
* ``ab-hat``   -- heaps in AB0 + 1:       reduced form 1;
* ``b2-hat``   -- heaps in B^2 + 1:       a number in [1/2, 1);
* ``g0``       -- heaps F(2n+3) - 2:      the number s(n);
* ``g-switch`` -- other heaps in AB:      reduced form {1|s(n)}.

The numbers are read off bitwise from the even Fibonacci representation
(the xi map); everything runs in time polynomial in log(heap size).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fibonacci as fw
from .dyadic import Dyadic, ZERO, ONE
from .games import GameId, ResourceLimitError, Universe

ORACLE_BOUND = 60


def left_subtraction_ok(k: int) -> bool:
    """Left may remove k tokens: k is in the A sequence."""
    if k <= 0:
        raise ValueError(f"positive integer required, got {k}")
    return fw.in_a(k)


def right_subtraction_ok(k: int) -> bool:
    """Right may remove k tokens: k is in the B sequence."""
    if k <= 0:
        raise ValueError(f"positive integer required, got {k}")
    return fw.in_b(k)


def s_val(n: int) -> Dyadic:
    """s(n) = (2/3)(4^n - 1)/4^n, the increasing number ladder below 2/3."""
    if n < 0:
        raise ValueError(f"nonnegative integer required, got {n}")
    if n == 0:
        return ZERO
    return Dyadic((4**n - 1) // 3, 2 * n - 1)


def q_val(n: int) -> Dyadic:
    """q(n) = (2/3)(4^n + 1/2)/4^n, the decreasing number ladder above 2/3."""
    if n < 0:
        raise ValueError(f"nonnegative integer required, got {n}")
    return Dyadic((2 * 4**n + 1) // 3, 2 * n)


def g_heap(i: int, n: int) -> int:
    """The i-th heap in the switch family G(n).

    G_i(n) = A(i) F(2n+2) + i F(2n+1) + F(2n+3) - 2, which also equals
    B^{n+1}(i) + F(2n+3) - 2.
    """
    if i < 0 or n < 1:
        raise ValueError(f"need i >= 0 and n >= 1, got i={i}, n={n}")
    return fw.a_seq(i) * fw.fib(2 * n + 2) + i * fw.fib(2 * n + 1) + fw.fib(2 * n + 3) - 2


@dataclass(frozen=True)
class HeapClass:
    """Where a heap size falls in the partition; n and i parametrize G."""

    kind: str  # 'zero' | 'b' | 'ab-hat' | 'b2-hat' | 'g0' | 'g-switch'
    n: int | None = None
    i: int | None = None

    def __str__(self) -> str:
        if self.kind == "g0":
            return f"g0(n={self.n})"
        if self.kind == "g-switch":
            return f"g-switch(n={self.n},i={self.i})"
        return self.kind


def classify(h: int) -> HeapClass:
    """Total, single-valued classification of a heap size."""
    if h < 0:
        raise ValueError(f"nonnegative integer required, got {h}")
    if h == 0:
        return HeapClass("zero")
    if h == 1:
        return HeapClass("ab-hat")
    least = fw.z1(h)
    if least % 2 == 1:
        return HeapClass("b")
    if least >= 4:
        return _classify_in_ab(h)
    prev = fw.z1(h - 1)
    if prev % 2 == 0 and prev >= 4:
        return HeapClass("ab-hat")
    if prev % 2 == 1 and prev >= 5:
        return HeapClass("b2-hat")
    raise AssertionError(f"heap {h} escaped the partition")


def _classify_in_ab(h: int) -> HeapClass:
    # h in AB equals B^{n+1}(i) + F(2n+3) - 2 for exactly one n >= 1
    n = 1
    while fw.fib(2 * n + 3) - 2 <= h:
        rest = h - fw.fib(2 * n + 3) + 2
        if rest == 0:
            return HeapClass("g0", n=n)
        i = _strip_b(rest, n + 1)
        if i is not None:
            return HeapClass("g-switch", n=n, i=i)
        n += 1
    raise AssertionError(f"heap {h} in AB matched no G(n)")


def _strip_b(y: int, times: int) -> int | None:
    """Invert B applied `times` times, or None if y is not in B^times."""
    for _ in range(times):
        if y <= 0 or fw.z1(y) % 2 == 0:
            return None
        y = fw.b_inverse(y)
    return y


def is_in_q(h: int) -> bool:
    """Membership in the number heaps: B^2 + 1 together with F(2n+3) - 2."""
    return classify(h).kind in ("b2-hat", "g0")


# -- the xi bijection ------------------------------------------------------


def _bit_expansion(d: Dyadic) -> list[int]:
    # digits d0.d1...dk of a dyadic in [1/2, 1]
    whole = d.num >> d.exp
    frac = d.num - (whole << d.exp)
    return [whole] + [(frac >> (d.exp - 1 - j)) & 1 for j in range(d.exp)]


def xi(d: Dyadic) -> int:
    """Map a binary fraction in [1/2, 1] to its heap size.

    Digit i contributes F(e(i)) when set, where e(0) = 2, e(1) = 4, and
    e(i) repeats e(i-1) exactly after a 01 digit pair, else advances by 2.
    The resulting multiset is the even Fibonacci representation.
    """
    if not (Dyadic(1, 1) <= d <= ONE):
        raise ValueError(f"xi needs a dyadic in [1/2, 1], got {d}")
    bits = _bit_expansion(d)
    total = 0
    e = 2
    for i, bit in enumerate(bits):
        if i == 1:
            e = 4
        elif i >= 2:
            if (bits[i - 2], bits[i - 1]) != (0, 1):
                e += 2
        if bit:
            total += fw.fib(e)
    return total


def xi_inverse(h: int) -> Dyadic:
    """The unique dyadic in [1/2, 1) whose xi image is h, for h in Q.

    The bits are emitted greedily against the even representation of h:
    a bit is 1 exactly when the current even index still needs a copy.
    """
    if not (h > 0 and is_in_q(h)):
        raise ValueError(f"heap {h} is not a positive number heap")
    remaining = fw.even_repr(h).counts()
    if remaining.get(2):
        raise AssertionError(f"even representation of {h} contains F2")
    if remaining.get(4, 0) < 1:
        raise AssertionError(f"even representation of {h} lacks the F4 anchor")
    bits = [0, 1]
    e = 4
    remaining[4] -= 1
    while any(remaining.values()):
        if (bits[-2], bits[-1]) == (0, 1):
            nxt = e
        else:
            nxt = e + 2
            if remaining.get(e):
                raise AssertionError(f"level F{e} left unsatisfied for heap {h}")
        if remaining.get(nxt):
            bits.append(1)
            remaining[nxt] -= 1
        else:
            bits.append(0)
        e = nxt
    num = 0
    for bit in bits:
        num = (num << 1) | bit
    return Dyadic(num, len(bits) - 1)


def zeck_parity_check(d: Dyadic, g: Dyadic) -> bool:
    """Whether z1(xi(d) - xi(g)) is odd; equivalent to g > d on number heaps."""
    half = Dyadic(1, 1)
    if not (half <= d < ONE and half <= g < ONE):
        raise ValueError("both arguments must lie in [1/2, 1)")
    hd, hg = xi(d), xi(g)
    if not (is_in_q(hd) and is_in_q(hg)):
        raise ValueError("xi images must be number heaps")
    if hd <= hg:
        raise ValueError(f"need xi(d) > xi(g), got {hd} <= {hg}")
    return fw.z1(hd - hg) % 2 == 1


# -- values ------------------------------------------------------------------


@dataclass(frozen=True)
class RcfValue:
    """A heap's reduced canonical form: a number, or the switch {1 | right}."""

    kind: str  # 'number' | 'switch'
    value: Dyadic

    def __str__(self) -> str:
        if self.kind == "number":
            return str(self.value)
        return "{1|" + str(self.value) + "}"

    def to_game(self, u: Universe) -> GameId:
        if self.kind == "number":
            return u.from_number(self.value)
        return u.make_game([u.from_number(ONE)], [u.from_number(self.value)])


def heap_rcf(h: int) -> RcfValue:
    """Reduced canonical form of a heap, by classification (no game search)."""
    cls = classify(h)
    if cls.kind == "zero":
        return RcfValue("number", ZERO)
    if cls.kind == "b":
        return RcfValue("switch", ZERO)
    if cls.kind == "ab-hat":
        return RcfValue("number", ONE)
    if cls.kind == "b2-hat":
        return RcfValue("number", xi_inverse(h))
    if cls.kind == "g0":
        value = xi_inverse(h)
        assert value == s_val(cls.n), f"heap {h}: xi gave {value}, ladder gives {s_val(cls.n)}"
        return RcfValue("number", value)
    return RcfValue("switch", s_val(cls.n))


def heap_canonical(u: Universe, h: int, bound: int = ORACLE_BOUND) -> GameId:
    """Brute-force oracle: the canonical form of a heap, by full expansion.

    Memoized bottom-up on the universe; guarded by `bound` because canonical
    forms grow quickly with the heap size.
    """
    if h < 0:
        raise ValueError(f"nonnegative integer required, got {h}")
    if h > bound:
        raise ResourceLimitError(f"heap {h} exceeds the oracle bound {bound}")
    memo = u.cache("gn_heaps")
    for k in range(len(memo), h + 1):
        left = [memo[k - a] for a in range(1, k + 1) if fw.in_a(a)]
        right = [memo[k - b] for b in range(1, k + 1) if fw.in_b(b)]
        memo[k] = u.canonical_form(u.make_game(left, right))
    return memo[h]
