"""Fibonacci numeration systems, the Wythoff sequences, and Fibonacci words.

Three representations of a positive integer as a multiset of Fibonacci
indices are provided:

* ``zeckendorf`` -- distinct non-consecutive indices, least index >= 2;
* ``least-odd``  -- distinct non-consecutive indices, least index odd;
* ``even``       -- even indices only, multiplicity up to 2, with an unused
  even index between any two doubled ones.

The Wythoff sequences A(n) = floor(n*phi) and B(n) = A(n) + n are computed
exactly from the representations (no floating point): A(n) is the left
shift of the least-odd representation of n.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

ZECKENDORF = "zeckendorf"
LEAST_ODD = "least-odd"
EVEN = "even"

_fib_cache = [1, 0, 1, 1]  # F(-1), F(0), F(1), F(2)


def fib(n: int) -> int:
    """Exact Fibonacci number, defined for n >= -1 with F(-1) = 1, F(0) = 0."""
    if n < -1:
        raise ValueError(f"fib undefined for n={n}")
    while len(_fib_cache) <= n + 1:
        _fib_cache.append(_fib_cache[-1] + _fib_cache[-2])
    return _fib_cache[n + 1]


def _largest_fib_at_most(x: int, parity: int | None = None) -> int:
    """Largest index i >= 2 with fib(i) <= x, optionally of fixed parity."""
    while _fib_cache[-1] <= x:
        _fib_cache.append(_fib_cache[-1] + _fib_cache[-2])
    # _fib_cache[3:] holds F2, F3, ... strictly increasing; entry j is F(j-1)
    i = bisect_right(_fib_cache, x, lo=3) - 2
    if parity is not None and i % 2 != parity:
        i -= 1
        if i < 2:
            raise ValueError(f"no Fibonacci number of the required parity <= {x}")
    return i


@dataclass(frozen=True)
class FibRepr:
    """A multiset of Fibonacci indices with a kind tag.

    ``terms`` maps index -> multiplicity and is stored as a sorted tuple of
    (index, multiplicity) pairs, largest index first.
    """

    kind: str
    terms: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, kind: str, counts: dict[int, int]) -> "FibRepr":
        items = tuple(sorted(((i, m) for i, m in counts.items() if m), reverse=True))
        return cls(kind, items)

    def value(self) -> int:
        return sum(m * fib(i) for i, m in self.terms)

    def indices(self) -> list[int]:
        """All indices, repeated according to multiplicity, descending."""
        out: list[int] = []
        for i, m in self.terms:
            out.extend([i] * m)
        return out

    def least_index(self) -> int:
        return self.terms[-1][0]

    def counts(self) -> dict[int, int]:
        return dict(self.terms)

    def validate(self) -> None:
        """Check the invariants of this representation's kind."""
        idx = [i for i, _ in self.terms]
        mults = dict(self.terms)
        if not idx:
            raise ValueError("empty representation")
        if self.kind in (ZECKENDORF, LEAST_ODD):
            if any(m != 1 for m in mults.values()):
                raise ValueError(f"{self.kind}: repeated index")
            if any(a - b == 1 for a, b in zip(idx, idx[1:])):
                raise ValueError(f"{self.kind}: consecutive indices")
            least = idx[-1]
            if self.kind == ZECKENDORF and least < 2:
                raise ValueError("zeckendorf: least index below 2")
            if self.kind == LEAST_ODD and least % 2 == 0:
                raise ValueError("least-odd: least index is even")
        elif self.kind == EVEN:
            if any(i % 2 for i in mults):
                raise ValueError("even: odd index present")
            if any(m not in (1, 2) for m in mults.values()):
                raise ValueError("even: multiplicity above 2")
            twos = sorted(i for i, m in mults.items() if m == 2)
            for a, b in zip(twos, twos[1:]):
                if all(mults.get(j, 0) for j in range(a + 2, b, 2)):
                    raise ValueError("even: no unused index between doubled terms")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    # -- text forms ------------------------------------------------------

    def to_text(self) -> str:
        """Sum notation, e.g. ``F11+F8+F5+F3``; doubled terms repeat."""
        return "+".join(f"F{i}" for i in self.indices())

    def to_ternary(self) -> str:
        """Digit string for even representations, most significant first.

        One digit per index from the largest down to 1, so odd positions
        are always 0 (e.g. 2*F2+F4+2*F8+F10 -> ``1020001020``).
        """
        if self.kind != EVEN:
            raise ValueError("ternary coding applies to even representations")
        mults = dict(self.terms)
        top = self.terms[0][0]
        return "".join(str(mults.get(i, 0)) for i in range(top, 0, -1))


def parse_repr(text: str, kind: str = ZECKENDORF) -> FibRepr:
    """Parse sum notation ``F11+F8+F5+F3`` (for even kind, also a ternary digit string)."""
    text = text.strip()
    if kind == EVEN and text.isdigit():
        counts: Counter[int] = Counter()
        for pos, ch in enumerate(reversed(text), start=1):
            if ch not in "012":
                raise ValueError(f"bad ternary digit {ch!r}")
            if ch != "0":
                counts[pos] += int(ch)
        r = FibRepr.from_counts(kind, counts)
    else:
        counts = Counter()
        for part in text.split("+"):
            part = part.strip()
            if not part.startswith("F"):
                raise ValueError(f"bad term {part!r}")
            counts[int(part[1:])] += 1
        r = FibRepr.from_counts(kind, counts)
    r.validate()
    return r


def zeckendorf(x: int) -> FibRepr:
    """Greedy Zeckendorf representation of a positive integer."""
    if x <= 0:
        raise ValueError(f"positive integer required, got {x}")
    counts: dict[int, int] = {}
    rest = x
    while rest:
        i = _largest_fib_at_most(rest)
        counts[i] = 1
        rest -= fib(i)
    return FibRepr.from_counts(ZECKENDORF, counts)


def z1(x: int) -> int:
    """Least index in the Zeckendorf representation of x."""
    if x <= 0:
        raise ValueError(f"positive integer required, got {x}")
    rest = x
    i = 2
    while rest:
        i = _largest_fib_at_most(rest)
        rest -= fib(i)
    return i


def least_odd(x: int) -> FibRepr:
    """Least-odd representation: Zeckendorf with a trailing even term expanded.

    A least term F(2k) unfolds into F(2k-1) + F(2k-3) + ... + F(1).
    """
    zk = zeckendorf(x)
    counts = zk.counts()
    least = zk.least_index()
    if least % 2 == 0:
        del counts[least]
        for j in range(1, least, 2):
            counts[j] = 1
    r = FibRepr.from_counts(LEAST_ODD, counts)
    r.validate()
    return r


def even_repr(x: int) -> FibRepr:
    """Even representation by greedy descent on even-indexed Fibonacci numbers."""
    if x <= 0:
        raise ValueError(f"positive integer required, got {x}")
    counts: Counter[int] = Counter()
    rest = x
    while rest:
        i = _largest_fib_at_most(rest, parity=0)
        counts[i] += 1
        rest -= fib(i)
    r = FibRepr.from_counts(EVEN, counts)
    r.validate()
    return r


def ze_transform(r: FibRepr) -> FibRepr:
    """Rewrite a Zeckendorf representation into the even representation.

    Repeatedly takes the least odd index n and applies F3 -> 2*F2, or
    F(n) + F(n-3) -> 2*F(n-1), or F(n) -> F(n-1) + F(n-2); the value is
    preserved at every step.
    """
    if r.kind != ZECKENDORF:
        raise ValueError("ze_transform expects a zeckendorf representation")
    target = r.value()
    counts = Counter(dict(r.terms))
    while True:
        odd = [i for i in counts if i % 2]
        if not odd:
            break
        n = min(odd)
        counts[n] -= 1
        if n == 3:
            counts[2] += 2
        elif counts.get(n - 3, 0) > 0:
            counts[n - 3] -= 1
            counts[n - 1] += 2
        else:
            counts[n - 1] += 1
            counts[n - 2] += 1
        counts = +counts  # drop zeros
        assert sum(m * fib(i) for i, m in counts.items()) == target
    out = FibRepr.from_counts(EVEN, counts)
    out.validate()
    return out


# -- Wythoff sequences ---------------------------------------------------


@lru_cache(maxsize=None)
def a_seq(n: int) -> int:
    """A(n) = floor(n*phi), computed as the left shift of least_odd(n)."""
    if n < 0:
        raise ValueError(f"nonnegative integer required, got {n}")
    if n == 0:
        return 0
    return sum(fib(i + 1) for i in least_odd(n).indices())


def b_seq(n: int) -> int:
    """B(n) = floor(n*phi^2) = A(n) + n."""
    if n < 0:
        raise ValueError(f"nonnegative integer required, got {n}")
    return a_seq(n) + n


def in_a(x: int) -> bool:
    """Membership in the A sequence: the least Zeckendorf index is even."""
    return z1(x) % 2 == 0


def in_b(x: int) -> bool:
    """Membership in the B sequence: the least Zeckendorf index is odd."""
    return z1(x) % 2 == 1


def a_inverse(y: int) -> int:
    """The n with A(n) = y, for y in the A sequence (right shift of Z(y))."""
    r = zeckendorf(y)
    if r.least_index() % 2:
        raise ValueError(f"{y} is not in the A sequence")
    return sum(fib(i - 1) for i in r.indices())


def b_inverse(y: int) -> int:
    """The n with B(n) = y, for y in the B sequence (double right shift of Z(y))."""
    r = zeckendorf(y)
    if r.least_index() % 2 == 0:
        raise ValueError(f"{y} is not in the B sequence")
    return sum(fib(i - 2) for i in r.indices())


def compose_ab(word: str, n: int) -> int:
    """Apply a composition of A and B written as a word, e.g. ``AB`` -> A(B(n))."""
    if n < 0:
        raise ValueError(f"nonnegative integer required, got {n}")
    value = n
    for letter in reversed(word):
        if letter == "A":
            value = a_seq(value)
        elif letter == "B":
            value = b_seq(value)
        else:
            raise ValueError(f"bad letter {letter!r} in composition word")
    return value


# -- Fibonacci words -----------------------------------------------------


def apply_morphism(word: str) -> str:
    """One step of the Fibonacci morphism a -> ab, b -> a."""
    return "".join("ab" if ch == "a" else "a" for ch in word)


def morphism_power(n: int) -> str:
    """The word phi^n(a)."""
    if n < 0:
        raise ValueError(f"nonnegative integer required, got {n}")
    word = "a"
    for _ in range(n):
        word = apply_morphism(word)
    return word


def word_prefix(length: int, with_leading_b: bool = False) -> str:
    """Prefix of the infinite Fibonacci word, or of the Wythoff word b*phi^inf."""
    if length < 0:
        raise ValueError(f"nonnegative length required, got {length}")
    if length == 0:
        return ""
    body = length - 1 if with_leading_b else length
    word = "a"
    while len(word) < body:
        word = apply_morphism(word)
    prefix = word[:body]
    return ("b" + prefix) if with_leading_b else prefix


def weighted_count(word: str, nb: int, na: int) -> int:
    """nb * (number of b's) + na * (number of a's)."""
    return nb * word.count("b") + na * word.count("a")
