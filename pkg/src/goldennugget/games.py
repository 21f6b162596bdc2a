"""Exact short partizan game values over a hash-consed arena.

Games are immutable records ``(left options, right options)`` interned in a
:class:`Universe`; equal records always receive the same integer id, so
structural equality is id equality.  All comparisons, canonical forms,
stops and arithmetic are computed exactly and memoized on ids.

The Universe is single-threaded by design: callers that want parallelism
must give each thread its own Universe (the CLI uses one per process).
"""

from __future__ import annotations

import enum
import re

from .dyadic import Dyadic, ZERO, simplest_number

GameId = int


class MalformedGameError(ValueError):
    """A game fell outside the shapes its operation is defined on."""


class ResourceLimitError(RuntimeError):
    """A configured size bound (e.g. the oracle bound) was exceeded."""


class Outcome(enum.Enum):
    L = "L"
    R = "R"
    N = "N"
    P = "P"

    def __str__(self) -> str:
        return self.value


class Universe:
    """Append-only arena of game records plus memo tables.

    Insertions are idempotent: ``make_game`` returns the same id for the
    same option sets forever, and every cached answer equals what an
    uncached recomputation would produce.
    """

    def __init__(self):
        self._records: list[tuple[tuple[GameId, ...], tuple[GameId, ...]]] = []
        self._ids: dict[tuple[tuple[GameId, ...], tuple[GameId, ...]], GameId] = {}
        self._neg: dict[GameId, GameId] = {}
        self._sum: dict[tuple[GameId, GameId], GameId] = {}
        self._geq: dict[tuple[GameId, GameId], bool] = {}
        self._canon: dict[GameId, GameId] = {}
        self._numval: dict[GameId, Dyadic | None] = {}
        self._stops: dict[GameId, tuple[Dyadic, Dyadic]] = {}
        self._numbers: dict[Dyadic, GameId] = {}
        self._caches: dict[str, dict] = {}
        self.zero: GameId = self.make_game([], [])
        self._canon[self.zero] = self.zero
        self._numbers[ZERO] = self.zero
        self._numval[self.zero] = ZERO

    def cache(self, name: str) -> dict:
        """A named memo table for client modules, with get-or-insert use."""
        return self._caches.setdefault(name, {})

    # -- arena -------------------------------------------------------

    def make_game(self, left, right) -> GameId:
        """Intern the game with the given option ids (deduplicated, sorted)."""
        rec = (tuple(sorted(set(left))), tuple(sorted(set(right))))
        known = self._ids.get(rec)
        if known is not None:
            return known
        size = len(self._records)
        for g in rec[0] + rec[1]:
            if not 0 <= g < size:
                raise ValueError(f"unknown game id {g}")
        self._records.append(rec)
        self._ids[rec] = size
        return size

    def options(self, g: GameId) -> tuple[tuple[GameId, ...], tuple[GameId, ...]]:
        return self._records[g]

    def left_options(self, g: GameId) -> tuple[GameId, ...]:
        return self._records[g][0]

    def right_options(self, g: GameId) -> tuple[GameId, ...]:
        return self._records[g][1]

    def __len__(self) -> int:
        return len(self._records)

    # -- group structure ----------------------------------------------

    def negate(self, g: GameId) -> GameId:
        done = self._neg.get(g)
        if done is not None:
            return done
        left, right = self._records[g]
        result = self.make_game([self.negate(x) for x in right], [self.negate(x) for x in left])
        self._neg[g] = result
        self._neg[result] = g
        return result

    def add(self, g: GameId, h: GameId) -> GameId:
        """Disjunctive sum: a move is a move in exactly one summand."""
        if g > h:
            g, h = h, g
        if g == self.zero:
            return h
        done = self._sum.get((g, h))
        if done is not None:
            return done
        gl, gr = self._records[g]
        hl, hr = self._records[h]
        left = [self.add(x, h) for x in gl] + [self.add(g, x) for x in hl]
        right = [self.add(x, h) for x in gr] + [self.add(g, x) for x in hr]
        result = self.make_game(left, right)
        self._sum[(g, h)] = result
        return result

    # -- order ---------------------------------------------------------

    def geq(self, g: GameId, h: GameId) -> bool:
        """g >= h: Left wins g - h moving second."""
        if g == h:
            return True
        key = (g, h)
        done = self._geq.get(key)
        if done is not None:
            return done
        # fails iff some right option of g is <= h or some left option of h is >= g
        result = not (
            any(self.geq(h, gr) for gr in self._records[g][1])
            or any(self.geq(hl, g) for hl in self._records[h][0])
        )
        self._geq[key] = result
        return result

    def leq(self, g: GameId, h: GameId) -> bool:
        return self.geq(h, g)

    def equal(self, g: GameId, h: GameId) -> bool:
        return self.geq(g, h) and self.geq(h, g)

    def outcome(self, g: GameId) -> Outcome:
        ge = self.geq(g, self.zero)
        le = self.geq(self.zero, g)
        if ge and le:
            return Outcome.P
        if ge:
            return Outcome.L
        if le:
            return Outcome.R
        return Outcome.N

    # -- canonical form --------------------------------------------------

    def canonical_form(self, g: GameId) -> GameId:
        """The unique simplest game equal to g.

        Children are simplified first; then dominated options are removed
        and reversible options bypassed until a fixed point.
        """
        done = self._canon.get(g)
        if done is not None:
            return done
        ls = sorted({self.canonical_form(x) for x in self._records[g][0]})
        rs = sorted({self.canonical_form(x) for x in self._records[g][1]})
        while True:
            current = self.make_game(ls, rs)
            known = self._canon.get(current)
            if known is not None:
                result = known
                break
            ls = [a for a in ls if not any(b != a and self.geq(b, a) for b in ls)]
            rs = [b for b in rs if not any(c != b and self.geq(b, c) for c in rs)]
            replaced = self._bypass_left(current, ls) or self._bypass_right(current, rs)
            trimmed = self.make_game(ls, rs)
            if not replaced and trimmed == current:
                result = current
                self._canon[result] = result
                break
        self._canon[g] = result
        return result

    def _bypass_left(self, game: GameId, ls: list[GameId]) -> bool:
        # a left option is reversible through any of its right options <= game
        for pos, a in enumerate(ls):
            for r1 in self._records[a][1]:
                if self.geq(game, r1):
                    del ls[pos]
                    merged = set(ls) | set(self._records[r1][0])
                    ls[:] = sorted(merged)
                    return True
        return False

    def _bypass_right(self, game: GameId, rs: list[GameId]) -> bool:
        for pos, b in enumerate(rs):
            for l1 in self._records[b][0]:
                if self.geq(l1, game):
                    del rs[pos]
                    merged = set(rs) | set(self._records[l1][1])
                    rs[:] = sorted(merged)
                    return True
        return False

    # -- numbers -----------------------------------------------------------

    def from_number(self, d: Dyadic) -> GameId:
        """The canonical-form game of a dyadic number."""
        done = self._numbers.get(d)
        if done is not None:
            return done
        if d.is_integer():
            n = d.num
            if n > 0:
                result = self.make_game([self.from_number(Dyadic(n - 1))], [])
            else:
                result = self.make_game([], [self.from_number(Dyadic(n + 1))])
        else:
            step = Dyadic(1, d.exp)
            result = self.make_game([self.from_number(d - step)], [self.from_number(d + step)])
        self._numbers[d] = result
        self._canon[result] = result
        self._numval[result] = d
        return result

    def _read_number(self, g: GameId) -> Dyadic | None:
        """Structural number reading, sound on any record by simplicity.

        Reads ``{|} = 0``, integer chains ``{n|}`` / ``{|n}``, and
        ``{a|b}`` with number options a < b (the simplest number between).
        Returns None for records not of those shapes.
        """
        done = self._numval.get(g, _MISSING)
        if done is not _MISSING:
            return done
        left, right = self._records[g]
        value: Dyadic | None = None
        if not left and not right:
            value = ZERO
        elif not right and len(left) == 1:
            v = self._read_number(left[0])
            if v is not None and v.is_integer() and v.num >= 0:
                value = v + Dyadic(1)
        elif not left and len(right) == 1:
            v = self._read_number(right[0])
            if v is not None and v.is_integer() and v.num <= 0:
                value = v - Dyadic(1)
        elif len(left) == 1 and len(right) == 1:
            a = self._read_number(left[0])
            b = self._read_number(right[0])
            if a is not None and b is not None and a < b:
                value = simplest_number(a, b)
        self._numval[g] = value
        return value

    def as_number(self, g: GameId) -> Dyadic | None:
        """The exact dyadic value when g equals a number, else None."""
        return self._read_number(self.canonical_form(g))

    # -- stops --------------------------------------------------------------

    def stops(self, g: GameId) -> tuple[Dyadic, Dyadic]:
        """(Left stop, Right stop): best numbers under alternating play."""
        done = self._stops.get(g)
        if done is not None:
            return done
        x = self.as_number(g)
        if x is not None:
            pair = (x, x)
        else:
            left, right = self._records[g]
            if not left or not right:
                raise MalformedGameError(f"non-number game {g} with an empty option set")
            pair = (
                max(self.stops(gl)[1] for gl in left),
                min(self.stops(gr)[0] for gr in right),
            )
        self._stops[g] = pair
        return pair

    def left_stop(self, g: GameId) -> Dyadic:
        return self.stops(g)[0]

    def right_stop(self, g: GameId) -> Dyadic:
        return self.stops(g)[1]

    # -- text format --------------------------------------------------------

    def to_text(self, g: GameId) -> str:
        """Fully braced game text; number-shaped records print as numbers."""
        value = self._read_number(g)
        if value is not None:
            return str(value)
        left, right = self._records[g]
        ls = ",".join(self.to_text(x) for x in left)
        rs = ",".join(self.to_text(x) for x in right)
        return "{" + ls + "|" + rs + "}"

    def parse(self, text: str) -> GameId:
        """Parse game text; accepts ``||`` / ``|||`` slash-rank shorthand."""
        game, rest = self._parse_game(text.strip())
        if rest.strip():
            raise ValueError(f"trailing input {rest!r}")
        return game

    def _parse_game(self, text: str) -> tuple[GameId, str]:
        text = text.lstrip()
        if text.startswith("{"):
            body, rest = _matching_brace(text)
            return self._parse_body(body), rest
        m = _NUMBER_RE.match(text)
        if not m:
            raise ValueError(f"expected a game at {text[:20]!r}")
        return self.from_number(Dyadic.from_str(m.group(0))), text[m.end():]

    def _parse_body(self, body: str) -> GameId:
        split = _split_rank(body)
        if split is None:
            raise ValueError(f"no option separator in {body!r}")
        left_text, right_text = split
        return self.make_game(self._side_options(left_text), self._side_options(right_text))

    def _side_options(self, text: str) -> list[GameId]:
        # slash-rank shorthand: a side holding a depth-zero pipe is one
        # undelimited subgame (its commas belong to it), not an option list
        if _split_rank(text) is not None:
            return [self._parse_body(text)]
        return [self._parse_option(p) for p in _split_commas(text)]

    def _parse_option(self, text: str) -> GameId:
        game, rest = self._parse_game(text.strip())
        if rest.strip():
            raise ValueError(f"trailing option input {rest!r}")
        return game

    # -- JSON form ------------------------------------------------------------

    def to_json_obj(self, g: GameId):
        """Nested ``{"L": [...], "R": [...]}`` with numbers as strings."""
        value = self._read_number(g)
        if value is not None:
            return str(value)
        left, right = self._records[g]
        return {
            "L": [self.to_json_obj(x) for x in left],
            "R": [self.to_json_obj(x) for x in right],
        }

    def from_json_obj(self, obj) -> GameId:
        if isinstance(obj, str):
            return self.from_number(Dyadic.from_str(obj))
        return self.make_game(
            [self.from_json_obj(x) for x in obj["L"]],
            [self.from_json_obj(x) for x in obj["R"]],
        )


_MISSING = object()
_NUMBER_RE = re.compile(r"-?\d+(?:/\d+)?")


def _matching_brace(text: str) -> tuple[str, str]:
    depth = 0
    for pos, ch in enumerate(text):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth == 0:
                return text[1:pos], text[pos + 1:]
    raise ValueError(f"unbalanced braces in {text!r}")


def _split_rank(body: str):
    """Split on the longest pipe run at depth zero, or None if there is none."""
    best_rank = 0
    best_span = None
    depth = 0
    pos = 0
    while pos < len(body):
        ch = body[pos]
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        elif ch == "|" and depth == 0:
            run = pos
            while run < len(body) and body[run] == "|":
                run += 1
            if run - pos > best_rank:
                best_rank = run - pos
                best_span = (pos, run)
            pos = run
            continue
        pos += 1
    if best_span is None:
        return None
    return body[: best_span[0]], body[best_span[1]:]


def _split_commas(text: str) -> list[str]:
    parts = []
    depth = 0
    start = 0
    for pos, ch in enumerate(text):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:pos])
            start = pos + 1
    last = text[start:]
    if last.strip() or parts:
        parts.append(last)
    return [p for p in parts if p.strip()]
