"""Canonical integer partitions and the statistics used throughout the package.

A :class:`Partition` is an immutable, non-increasing tuple of positive
integers.  Indexing with ``[]`` is the usual 0-based tuple indexing; the
1-based accessor :meth:`Partition.part` returns 0 past the last part, which
is the convention the map definitions rely on.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

MAX_WEIGHT = 10**6

BOX = "#"


class Partition(tuple):
    """A partition, stored as its parts in non-increasing order."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted(parts, reverse=True)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"parts must be integers, got {p!r}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive, got {parts[-1]}")
        if sum(parts) > MAX_WEIGHT:
            raise ValueError(f"weight exceeds {MAX_WEIGHT}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({format_partition(self) or 'empty'})"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, j: int) -> int:
        """Return the j-th part (1-based), or 0 when ``j > len(self)``."""
        if j < 1:
            raise IndexError("parts are indexed from 1")
        return self[j - 1] if j <= len(self) else 0

    # parity sub-partitions

    @property
    def odd(self) -> "Partition":
        return _from_sorted(p for p in self if p & 1)

    @property
    def even(self) -> "Partition":
        return _from_sorted(p for p in self if not p & 1)

    @property
    def n_odd(self) -> int:
        return sum(1 for p in self if p & 1)

    @property
    def n_even(self) -> int:
        return sum(1 for p in self if not p & 1)

    def is_distinct(self) -> bool:
        return all(self[i] > self[i + 1] for i in range(len(self) - 1))

    # multiplicities and counts

    def frequencies(self) -> list[tuple[int, int]]:
        """(part, multiplicity) pairs, largest part first."""
        out: list[tuple[int, int]] = []
        for p in self:
            if out and out[-1][0] == p:
                out[-1] = (p, out[-1][1] + 1)
            else:
                out.append((p, 1))
        return out

    def mult(self, j: int) -> int:
        return self.count(j)

    def count_gt(self, j: int) -> int:
        return sum(1 for p in self if p > j)

    def count_geq(self, j: int) -> int:
        return sum(1 for p in self if p >= j)

    def next_larger(self, j: int) -> Optional[int]:
        """Smallest part strictly larger than ``j``.

        Defined for any ``j``, not only for parts of the partition.
        """
        best = None
        for p in self:
            if p > j:
                best = p
            else:
                break
        return best

    def repeated(self) -> list[int]:
        """Part sizes with multiplicity at least two, in increasing order."""
        return [p for p, m in reversed(self.frequencies()) if m > 1]

    # multiset operations

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition(tuple(self) + tuple(other))

    def difference(self, other: Iterable[int]) -> "Partition":
        have = Counter(self)
        need = Counter(other)
        for p, m in need.items():
            if have[p] < m:
                raise ValueError(
                    f"not a sub-multiset: {p} occurs {m} times, only {have[p]} available"
                )
            have[p] -= m
        return Partition(have.elements())

    def stats(self) -> "PartitionStats":
        return stats(self)


def _from_sorted(parts: Iterable[int]) -> Partition:
    # Parts already non-increasing and positive; skip validation.
    return tuple.__new__(Partition, parts)


def make_partition(parts: Iterable[int] = ()) -> Partition:
    return Partition(parts)


EMPTY = Partition()


def odd_sub(lam: Partition) -> Partition:
    return lam.odd


def even_sub(lam: Partition) -> Partition:
    return lam.even


def msunion(lam: Iterable[int], mu: Iterable[int]) -> Partition:
    return Partition(lam).union(mu)


def msdiff(lam: Iterable[int], mu: Iterable[int]) -> Partition:
    return Partition(lam).difference(mu)


@dataclass(frozen=True)
class PartitionStats:
    ell: int
    ell_o: int
    ell_e: int
    ell_m: Optional[int]
    largest_odd: Optional[int]
    smallest_odd: Optional[int]
    largest_even: Optional[int]
    smallest_even: Optional[int]
    smallest_repeated: Optional[int]
    second_smallest_repeated: Optional[int]


def stats(lam: Partition) -> PartitionStats:
    odd, even = lam.odd, lam.even
    reps = lam.repeated()
    return PartitionStats(
        ell=len(lam),
        ell_o=len(odd),
        ell_e=len(even),
        ell_m=min(len(odd), len(even)) if odd and even else None,
        largest_odd=odd[0] if odd else None,
        smallest_odd=odd[-1] if odd else None,
        largest_even=even[0] if even else None,
        smallest_even=even[-1] if even else None,
        smallest_repeated=reps[0] if reps else None,
        second_smallest_repeated=reps[1] if len(reps) > 1 else None,
    )


# text format: "13 11 7^3 5 3^5 1"

_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse space- or comma-separated parts, with optional ``part^mult``."""
    text = text.strip().strip("()")
    if text in ("", "empty"):
        return EMPTY
    parts: list[int] = []
    for tok in re.split(r"[\s,]+", text):
        if not tok:
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"cannot parse part {tok!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        if value < 1:
            raise ValueError(f"parts must be positive, got {value}")
        parts.extend([value] * count)
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    """Inverse of :func:`parse_partition`; caret form when a multiplicity exceeds 2."""
    out = []
    for p, m in Partition(lam).frequencies():
        if m > 2:
            out.append(f"{p}^{m}")
        else:
            out.extend([str(p)] * m)
    return " ".join(out)


def render_ferrers(lam: Iterable[int], box: str = BOX) -> str:
    return "\n".join(box * p for p in Partition(lam))
