"""Shared machinery for the injections: case tables, traces, image witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from ..classes import ClassSpec, is_member, parse_class
from ..partition import Partition, format_partition

NOT_IN_IMAGE = "not in image"

Predicate = Callable[[Partition], bool]


class DomainError(ValueError):
    """The partition is not in the map's domain."""


class NotInImageError(ValueError):
    """The partition is not in the characterized image of the map."""


class CaseTableError(AssertionError):
    """A case table is not total or not exclusive on some input."""


@dataclass(frozen=True)
class CaseTrace:
    map: str
    case: str
    k: Optional[int] = None
    q: Optional[int] = None
    r: Optional[int] = None
    eta: Optional[Partition] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "map": self.map,
            "case": self.case,
            "k": self.k,
            "q": self.q,
            "r": self.r,
            "eta": None if self.eta is None else format_partition(self.eta),
        }


@dataclass(frozen=True)
class ImageWitness:
    map: str
    component: str
    # any further components that also matched; non-empty means the
    # characterization is not disjoint at this partition
    overlaps: tuple[str, ...] = ()

    @property
    def in_image(self) -> bool:
        return self.component != NOT_IN_IMAGE


@dataclass(frozen=True)
class MapDef:
    id: str
    domain: ClassSpec
    codomain: ClassSpec
    delta: int
    cases: tuple[tuple[str, Predicate], ...]
    forward: Callable[[Partition, str], tuple[Partition, dict]]
    components: tuple[tuple[str, Predicate], ...]
    backward: Callable[[Partition, str], Partition]
    min_weight: int = 0
    even_weight_only: bool = False
    non_image: Callable[[int], list[Partition]] = field(default=lambda n: [])
    cli_token: str = ""

    def weight_ok(self, n: int) -> bool:
        if n < self.min_weight:
            return False
        return not (self.even_weight_only and n % 2)

    def in_domain(self, lam: Partition) -> bool:
        return self.weight_ok(lam.weight) and is_member(lam, self.domain)

    def in_codomain(self, mu: Partition) -> bool:
        return self.weight_ok(mu.weight - self.delta) and is_member(mu, self.codomain)

    def matching_cases(self, lam: Partition) -> list[str]:
        return [label for label, pred in self.cases if pred(lam)]

    def matching_components(self, mu: Partition) -> list[str]:
        if not self.in_codomain(mu):
            return []
        return [label for label, pred in self.components if pred(mu)]


def make_mapdef(id, domain, codomain, **kw) -> MapDef:
    return MapDef(id=id, domain=parse_class(domain), codomain=parse_class(codomain), **kw)


# helpers shared by several maps


def shift_ends(parts, m: int, head: int, tail: int) -> Partition:
    """Add ``head`` to the first ``m`` parts and ``tail`` to the last ``m``."""
    out = list(parts)
    for i in range(m):
        out[i] += head
    for i in range(len(out) - m, len(out)):
        out[i] += tail
    return Partition(out)
