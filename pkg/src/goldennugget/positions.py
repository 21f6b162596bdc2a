"""Multi-heap positions and the generalized complementary subtraction family.

A position is a multiset of colored heaps: in blue heaps Left removes
A-members and Right removes B-members; in red heaps the roles swap, so a
red heap of size h is worth the negative of a blue one.  Game specs other
than GoldenNugget (Beatty pairs, modular residue games, explicit sets)
share one outcome recursion and one value oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import fibonacci as fw
from . import nugget
from .games import GameId, Outcome, ResourceLimitError, Universe

BLUE = "b"
RED = "r"


@dataclass(frozen=True)
class Position:
    """Colored heaps, kept in input order so moves can name them."""

    heaps: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for color, size in self.heaps:
            if color not in (BLUE, RED) or size < 0:
                raise ValueError(f"bad heap ({color!r}, {size})")

    @classmethod
    def parse(cls, text: str) -> "Position":
        """Parse a literal like ``3b+20b+18r``."""
        heaps = []
        for part in text.strip().split("+"):
            part = part.strip()
            if not part:
                continue
            color = part[-1]
            heaps.append((color, int(part[:-1])))
        return cls(tuple(heaps))

    def __str__(self) -> str:
        return "+".join(f"{size}{color}" for color, size in self.heaps)

    def swap_colors(self) -> "Position":
        flip = {BLUE: RED, RED: BLUE}
        return Position(tuple((flip[c], s) for c, s in self.heaps))

    def replace(self, index: int, size: int) -> "Position":
        heaps = list(self.heaps)
        heaps[index] = (heaps[index][0], size)
        return Position(tuple(heaps))


@dataclass(frozen=True)
class Move:
    """Remove ``amount`` tokens from the heap at ``index``."""

    index: int
    amount: int

    def describe(self, p: Position) -> str:
        color, size = p.heaps[self.index]
        return f"{size}{color} -> {size - self.amount}{color} (remove {self.amount})"


# -- game specs -------------------------------------------------------------


class CSGameSpec:
    """A complementary subtraction game: two sets partitioning the positives."""

    name = "cs"

    def left_ok(self, k: int) -> bool:
        raise NotImplementedError

    def right_ok(self, k: int) -> bool:
        return not self.left_ok(k)


class GoldenSpec(CSGameSpec):
    name = "golden"

    def left_ok(self, k: int) -> bool:
        return fw.in_a(k)


@dataclass(frozen=True)
class BeattySpec(CSGameSpec):
    """Left removes floor(n * sqrt(root)); the floor is exact via isqrt."""

    root: int = 2

    def __post_init__(self):
        if not 1 < self.root < 4 or math.isqrt(self.root) ** 2 == self.root:
            raise ValueError("root must give an irrational sqrt in (1, 2)")

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"beatty:sqrt{self.root}"

    def left_ok(self, k: int) -> bool:
        # k = floor(n * sqrt(root)) for some n iff the open interval
        # [k/sqrt(root), (k+1)/sqrt(root)) holds an integer
        n = math.isqrt(self.root * k * k) // self.root + 1
        return self.root * n * n < (k + 1) * (k + 1)


@dataclass(frozen=True)
class ModularSpec(CSGameSpec):
    """Left removes numbers whose residue mod `modulus` lies in `left_residues`."""

    modulus: int
    left_residues: frozenset[int]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if not set(self.left_residues) <= set(range(self.modulus)):
            raise ValueError("residues out of range")

    @property
    def name(self) -> str:  # type: ignore[override]
        inner = ",".join(str(r) for r in sorted(self.left_residues))
        return f"mod:{self.modulus}:L={inner}"

    def left_ok(self, k: int) -> bool:
        return k % self.modulus in self.left_residues


ODD_EVEN = ModularSpec(2, frozenset({1}))


@dataclass(frozen=True)
class ExplicitSpec(CSGameSpec):
    """Left's set given outright; Right gets the complement up to `limit`."""

    left_set: frozenset[int]
    limit: int

    def __post_init__(self):
        if any(k <= 0 or k > self.limit for k in self.left_set):
            raise ValueError("left set must lie in [1, limit]")

    @property
    def name(self) -> str:  # type: ignore[override]
        inner = ",".join(str(k) for k in sorted(self.left_set))
        return f"explicit:L={{{inner}}}"

    def left_ok(self, k: int) -> bool:
        if k > self.limit:
            raise ValueError(f"{k} beyond the bounded range {self.limit}")
        return k in self.left_set


def parse_spec(text: str) -> CSGameSpec:
    """Parse a spec literal: golden, oddeven, beatty:sqrt2, mod:3:L=1,2, explicit:L={...}."""
    text = text.strip()
    if text == "golden":
        return GoldenSpec()
    if text == "oddeven":
        return ODD_EVEN
    if text.startswith("beatty:sqrt"):
        return BeattySpec(int(text[len("beatty:sqrt"):]))
    if text.startswith("mod:"):
        _, modulus, left = text.split(":", 2)
        if not left.startswith("L="):
            raise ValueError(f"bad modular spec {text!r}")
        residues = frozenset(int(r) for r in left[2:].split(",") if r)
        return ModularSpec(int(modulus), residues)
    if text.startswith("explicit:L={") and text.endswith("}"):
        body = text[len("explicit:L={"):-1]
        members = frozenset(int(k) for k in body.split(",") if k.strip())
        return ExplicitSpec(members, max(members, default=1))
    raise ValueError(f"unknown game spec {text!r}")


# -- values ---------------------------------------------------------------


def _heap_value(u: Universe, spec: CSGameSpec, h: int, bound: int) -> GameId:
    if h > bound:
        raise ResourceLimitError(f"heap {h} exceeds the oracle bound {bound}")
    if isinstance(spec, GoldenSpec):
        return nugget.heap_canonical(u, h, bound=bound)
    memo = u.cache(f"cs_heaps:{spec.name}")
    for k in range(len(memo), h + 1):
        left = [memo[k - s] for s in range(1, k + 1) if spec.left_ok(s)]
        right = [memo[k - s] for s in range(1, k + 1) if spec.right_ok(s)]
        memo[k] = u.canonical_form(u.make_game(left, right))
    return memo[h]


def position_value(
    u: Universe,
    p: Position,
    spec: CSGameSpec | None = None,
    bound: int = nugget.ORACLE_BOUND,
) -> GameId:
    """Canonical form of the disjunctive sum (red heaps count negatively)."""
    spec = spec or GoldenSpec()
    total = u.zero
    for color, size in p.heaps:
        value = _heap_value(u, spec, size, bound)
        if color == RED:
            value = u.negate(value)
        total = u.add(total, value)
    return u.canonical_form(total)


def position_outcome(
    u: Universe,
    p: Position,
    spec: CSGameSpec | None = None,
    bound: int = nugget.ORACLE_BOUND,
) -> Outcome:
    return u.outcome(position_value(u, p, spec, bound))


def legal_moves(spec: CSGameSpec, p: Position, mover: str) -> list[Move]:
    """All moves for L or R, ordered by heap index then amount."""
    if mover not in ("L", "R"):
        raise ValueError(f"mover must be 'L' or 'R', got {mover!r}")
    moves = []
    for index, (color, size) in enumerate(p.heaps):
        mover_is_left_here = (mover == "L") == (color == BLUE)
        for amount in range(1, size + 1):
            ok = spec.left_ok(amount) if mover_is_left_here else spec.right_ok(amount)
            if ok:
                moves.append(Move(index, amount))
    return moves


def winning_move(
    u: Universe,
    p: Position,
    mover: str,
    spec: CSGameSpec | None = None,
    bound: int = nugget.ORACLE_BOUND,
) -> Move | None:
    """Some move after which the mover wins going second, or None.

    Deterministic tie-break: smallest heap index, then smallest amount.
    """
    spec = spec or GoldenSpec()
    wins = (Outcome.L, Outcome.P) if mover == "L" else (Outcome.R, Outcome.P)
    for move in legal_moves(spec, p, mover):
        after = p.replace(move.index, p.heaps[move.index][1] - move.amount)
        if position_outcome(u, after, spec, bound) in wins:
            return move
    return None


# -- outcome recursion -------------------------------------------------------


def cs_outcomes(spec: CSGameSpec, max_h: int) -> list[Outcome]:
    """Single-heap outcomes 0..max_h by direct win/lose recursion, no values."""
    if max_h < 0:
        raise ValueError(f"nonnegative bound required, got {max_h}")
    left_ok = [False] + [spec.left_ok(k) for k in range(1, max_h + 1)]
    right_ok = [False] + [not left_ok[k] for k in range(1, max_h + 1)]
    left_first = [False] * (max_h + 1)
    right_first = [False] * (max_h + 1)
    for h in range(1, max_h + 1):
        left_first[h] = any(left_ok[s] and not right_first[h - s] for s in range(1, h + 1))
        right_first[h] = any(right_ok[s] and not left_first[h - s] for s in range(1, h + 1))
    out = []
    for h in range(max_h + 1):
        if left_first[h] and right_first[h]:
            out.append(Outcome.N)
        elif left_first[h]:
            out.append(Outcome.L)
        elif right_first[h]:
            out.append(Outcome.R)
        else:
            out.append(Outcome.P)
    return out


def odd_even_value(u: Universe, h: int, bound: int = nugget.ORACLE_BOUND) -> GameId:
    """Canonical form of a heap in the odds-for-Left, evens-for-Right game."""
    return _heap_value(u, ODD_EVEN, h, bound)


@dataclass(frozen=True)
class PeriodReport:
    preperiod: int | None
    period: int | None

    def found(self) -> bool:
        return self.period is not None

    def __str__(self) -> str:
        if not self.found():
            return "no period found"
        return f"period {self.period} from h={self.preperiod}"


def periodicity_probe(spec: CSGameSpec, max_h: int) -> PeriodReport:
    """Empirical eventual-periodicity check on the outcome sequence.

    Suffix-matching over period candidates d <= max_h/3: a candidate is
    accepted only when the mismatch-free tail starts by max_h/3 and spans
    at least three full periods, enough evidence to reject the long
    near-repetitions of Sturmian outcome patterns.  Purely observational.
    """
    outcomes = cs_outcomes(spec, max_h)
    text = "".join(o.value for o in outcomes)
    limit = max_h // 3
    for d in range(1, limit + 1):
        if text[limit: len(text) - d] != text[limit + d:]:
            continue
        mismatch = -1
        for i in range(limit - 1, -1, -1):
            if text[i] != text[i + d]:
                mismatch = i
                break
        preperiod = mismatch + 1
        if max_h - d - preperiod + 1 >= 3 * d:
            return PeriodReport(preperiod=preperiod, period=d)
    return PeriodReport(preperiod=None, period=None)
