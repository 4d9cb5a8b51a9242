"""Partition classes with parts separated by parity.

A class is named by a token ``HIGH_LOW`` where each block is one of
``ou od ond eu ed end``: parity (``o``/``e``) followed by a restriction
(``u`` unrestricted, ``d`` distinct, ``nd`` at least one repeated part).
Every part of the high block's parity is larger than every part of the low
block's parity.  ``ed_ou`` is the class with distinct even parts above
unrestricted odd parts.

The two multiplicity-refined classes are spelled ``bar-ou_eu`` and
``bar-eu_ou``:

* ``bar-ou_eu``: the largest even part has odd multiplicity and every other
  part has even multiplicity.  A partition with no even parts counts when
  all its multiplicities are even (the largest even part is read as a
  single zero).  The empty partition is accepted.
* ``bar-eu_ou``: both parities occur, the largest even and the largest odd
  part each have odd multiplicity, every other part has even multiplicity.

Two enumeration routes are provided on purpose: :func:`enumerate_class`
builds members directly, :func:`enumerate_all` plus :func:`is_member`
filters every partition.  The verification layer checks one against the
other.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator

from .partition import Partition, _from_sorted


class Parity(str, Enum):
    ODD = "o"
    EVEN = "e"

    def matches(self, part: int) -> bool:
        return (part & 1) == (1 if self is Parity.ODD else 0)


class Restriction(str, Enum):
    UNRESTRICTED = "u"
    DISTINCT = "d"
    NOT_DISTINCT = "nd"


class Overline(str, Enum):
    NONE = "none"
    HIGH = "high"  # even block on top: bar-eu_ou
    LOW = "low"  # even block below: bar-ou_eu


@dataclass(frozen=True)
class BlockSpec:
    parity: Parity
    restriction: Restriction = Restriction.UNRESTRICTED

    @property
    def token(self) -> str:
        return self.parity.value + self.restriction.value

    def accepts(self, block: Partition) -> bool:
        if self.restriction is Restriction.DISTINCT:
            return block.is_distinct()
        if self.restriction is Restriction.NOT_DISTINCT:
            return bool(block) and not block.is_distinct()
        return True


@dataclass(frozen=True)
class ClassSpec:
    high: BlockSpec
    low: BlockSpec
    overline: Overline = Overline.NONE

    def __post_init__(self):
        if self.high.parity == self.low.parity:
            raise ValueError("high and low blocks must have different parities")
        if self.overline is not Overline.NONE:
            if (
                self.high.restriction is not Restriction.UNRESTRICTED
                or self.low.restriction is not Restriction.UNRESTRICTED
            ):
                raise ValueError("overline classes refine unrestricted blocks only")
            even_on_top = self.high.parity is Parity.EVEN
            if even_on_top != (self.overline is Overline.HIGH):
                raise ValueError("overline variant does not match block parities")

    @property
    def id(self) -> str:
        base = f"{self.high.token}_{self.low.token}"
        return "bar-" + base if self.overline is not Overline.NONE else base

    def __str__(self):
        return self.id


_CLASS_RE = re.compile(r"^(bar-)?([oe])(u|d|nd)_([oe])(u|d|nd)$")


def parse_class(token: "str | ClassSpec") -> ClassSpec:
    if isinstance(token, ClassSpec):
        return token
    m = _CLASS_RE.match(token.strip())
    if not m:
        raise ValueError(f"bad class id {token!r}")
    bar, hp, hr, lp, lr = m.groups()
    high = BlockSpec(Parity(hp), Restriction(hr))
    low = BlockSpec(Parity(lp), Restriction(lr))
    overline = Overline.NONE
    if bar:
        overline = Overline.HIGH if hp == "e" else Overline.LOW
    return ClassSpec(high, low, overline)


BLOCK_TOKENS = ("ou", "od", "ond", "eu", "ed", "end")

# Every plain class (18 of them) plus the two overline refinements.
ALL_CLASS_IDS: tuple[str, ...] = tuple(
    f"{h}_{l}" for h in BLOCK_TOKENS for l in BLOCK_TOKENS if h[0] != l[0]
) + ("bar-ou_eu", "bar-eu_ou")


def _overline_ok(lam: Partition, overline: Overline) -> bool:
    freqs = lam.frequencies()
    largest_even = next((p for p, _ in freqs if not p & 1), None)
    largest_odd = next((p for p, _ in freqs if p & 1), None)
    if overline is Overline.HIGH and (largest_even is None or largest_odd is None):
        return False
    for p, m in freqs:
        special = p == largest_even or (overline is Overline.HIGH and p == largest_odd)
        if (m % 2 == 1) != special:
            return False
    return True


def is_member(lam: Partition, c: "ClassSpec | str") -> bool:
    c = parse_class(c)
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    high = _from_sorted(p for p in lam if c.high.parity.matches(p))
    low = _from_sorted(p for p in lam if c.low.parity.matches(p))
    if high and low and high[-1] <= low[0]:
        return False
    if not (c.high.accepts(high) and c.low.accepts(low)):
        return False
    if c.overline is not Overline.NONE:
        return _overline_ok(lam, c.overline)
    return True


def enumerate_all(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield Partition()
        return
    parts = [n]
    while True:
        yield _from_sorted(parts)
        rem = 0
        while parts and parts[-1] == 1:
            parts.pop()
            rem += 1
        if not parts:
            return
        v = parts.pop() - 1
        rem += 1
        parts.append(v)
        while rem > v:
            parts.append(v)
            rem -= v
        if rem:
            parts.append(rem)


def enumerate_class(n: int, c: "ClassSpec | str") -> Iterator[Partition]:
    """Members of class ``c`` with weight ``n``, in reverse-lexicographic order.

    Built value by value from the largest part downwards, choosing a
    multiplicity for each value, so the block ordering and restrictions are
    enforced while the partition is being assembled.
    """
    c = parse_class(c)
    if n < 0:
        return
    hi_par = 1 if c.high.parity is Parity.ODD else 0
    hi_res, lo_res = c.high.restriction, c.low.restriction
    bar = c.overline
    parts: list[int] = []

    def mult_range(v: int, rem: int, in_low: bool, first_even: bool, first_odd: bool):
        res = lo_res if in_low else hi_res
        top = 1 if res is Restriction.DISTINCT else rem // v
        if bar is Overline.NONE:
            return range(top, 0, -1)
        is_even = not v & 1
        odd_mult = (is_even and first_even) or (
            bar is Overline.HIGH and not is_even and first_odd
        )
        start = top if (top % 2 == 1) == odd_mult else top - 1
        return range(start, 0, -2)

    def leaf_ok(hi_rep: bool, lo_rep: bool, hi_seen: bool, lo_seen: bool,
                seen_even: bool, seen_odd: bool) -> bool:
        if hi_res is Restriction.NOT_DISTINCT and not (hi_seen and hi_rep):
            return False
        if lo_res is Restriction.NOT_DISTINCT and not (lo_seen and lo_rep):
            return False
        if bar is Overline.HIGH and not (seen_even and seen_odd):
            return False
        return True

    def rec(rem: int, maxv: int, in_low: bool, hi_rep: bool, lo_rep: bool,
            hi_seen: bool, lo_seen: bool, seen_even: bool, seen_odd: bool):
        if rem == 0:
            if leaf_ok(hi_rep, lo_rep, hi_seen, lo_seen, seen_even, seen_odd):
                yield _from_sorted(parts)
            return
        for v in range(min(maxv, rem), 0, -1):
            is_hi = (v & 1) == hi_par
            if in_low and is_hi:
                continue
            low_now = not is_hi
            is_even = not v & 1
            for m in mult_range(v, rem, low_now, is_even and not seen_even,
                                (not is_even) and not seen_odd):
                parts.extend([v] * m)
                yield from rec(
                    rem - m * v, v - 1, low_now,
                    hi_rep or (is_hi and m > 1),
                    lo_rep or (low_now and m > 1),
                    hi_seen or is_hi,
                    lo_seen or low_now,
                    seen_even or is_even,
                    seen_odd or not is_even,
                )
                del parts[-m:]

    yield from rec(n, n, False, False, False, False, False, False, False)


@lru_cache(maxsize=None)
def _count(n: int, cid: str) -> int:
    return sum(1 for _ in enumerate_class(n, cid))


def count_class(n: int, c: "ClassSpec | str") -> int:
    return _count(n, parse_class(c).id)


def count_sequence(c: "ClassSpec | str", n_max: int) -> list[int]:
    return [count_class(n, c) for n in range(n_max + 1)]


def partition_count(n: int) -> int:
    """Unrestricted partition number p(n), by the coin-change recurrence."""
    if n < 0:
        return 0
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]
