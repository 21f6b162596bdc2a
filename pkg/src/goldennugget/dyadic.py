"""Exact dyadic rationals: integers divided by powers of two, no rounding ever."""

from __future__ import annotations


class Dyadic:
    """A rational ``num / 2**exp`` kept in lowest terms.

    Lowest terms means ``exp == 0`` or ``num`` odd, so every value has a
    unique representation and equality, hashing and ordering are structural.
    All arithmetic is exact; there is deliberately no conversion from float.
    """

    __slots__ = ("num", "exp")

    def __init__(self, num: int, exp: int = 0):
        if exp < 0:
            raise ValueError("exponent must be nonnegative")
        if num == 0:
            exp = 0
        elif exp > 0 and num % 2 == 0:
            shift = min(exp, (num & -num).bit_length() - 1)
            num >>= shift
            exp -= shift
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    # -- arithmetic ------------------------------------------------------

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.exp)

    def __add__(self, other: "Dyadic") -> "Dyadic":
        e = max(self.exp, other.exp)
        return Dyadic((self.num << (e - self.exp)) + (other.num << (e - other.exp)), e)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        return self + (-other)

    # -- order -----------------------------------------------------------

    def _cmp(self, other: "Dyadic") -> int:
        lhs = self.num << other.exp
        rhs = other.num << self.exp
        return (lhs > rhs) - (lhs < rhs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Dyadic) and self.num == other.num and self.exp == other.exp

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __hash__(self) -> int:
        return hash((self.num, self.exp))

    # -- structure -------------------------------------------------------

    def is_integer(self) -> bool:
        return self.exp == 0

    def floor(self) -> int:
        return self.num >> self.exp

    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    def __repr__(self) -> str:
        return f"Dyadic({self.num}, {self.exp})"

    def binary(self) -> str:
        """Binary positional form, e.g. ``11/16`` -> ``0.1011``."""
        if self.num < 0:
            return "-" + (-self).binary()
        whole = self.num >> self.exp
        frac = self.num - (whole << self.exp)
        if self.exp == 0:
            return format(whole, "b")
        bits = format(frac, f"0{self.exp}b")
        return f"{format(whole, 'b')}.{bits}"

    @classmethod
    def from_str(cls, text: str) -> "Dyadic":
        """Parse ``p/q`` with ``q`` a power of two, or a bare integer."""
        text = text.strip()
        if "/" in text:
            p, q = text.split("/", 1)
            den = int(q)
            if den <= 0 or den & (den - 1):
                raise ValueError(f"denominator {q!r} is not a power of two")
            return cls(int(p), den.bit_length() - 1)
        return cls(int(text))

    @classmethod
    def from_binary(cls, text: str) -> "Dyadic":
        """Parse a binary positional literal such as ``0.1011`` or ``1``."""
        text = text.strip()
        neg = text.startswith("-")
        if neg:
            text = text[1:]
        whole, _, frac = text.partition(".")
        if not whole or set(whole + frac) - {"0", "1"}:
            raise ValueError(f"not a binary literal: {text!r}")
        num = (int(whole, 2) << len(frac)) + (int(frac, 2) if frac else 0)
        d = cls(num, len(frac))
        return -d if neg else d


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)


def simplest_number(lo: Dyadic, hi: Dyadic) -> Dyadic:
    """The simplest dyadic strictly between ``lo`` and ``hi``.

    Simplest means least birthday: an integer of least magnitude if one
    fits, and otherwise the unique fraction with the smallest power-of-two
    denominator.
    """
    if not lo < hi:
        raise ValueError(f"empty interval: [{lo}, {hi}]")
    if lo.sign() < 0 < hi.sign():
        return ZERO
    smallest_above = Dyadic(lo.floor() + 1)
    if smallest_above < hi:
        if lo.sign() >= 0:
            return smallest_above
        # both endpoints nonpositive: the integer closest to zero wins
        return Dyadic(hi.floor() if not hi.is_integer() else hi.num - 1)
    k = 1
    while True:
        # first scaling at which the open interval traps an integer; that
        # integer is then unique and odd
        n = ((lo.num << k) >> lo.exp) + 1
        if Dyadic(n, k) < hi:
            return Dyadic(n, k)
        k += 1
