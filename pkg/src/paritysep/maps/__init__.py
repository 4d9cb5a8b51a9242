"""The injections between parity-separated classes, their inverses and images.

Every map is a :class:`~.base.MapDef` holding a predicate table for its
cases and one for its image components.  :func:`apply` evaluates every case
predicate and insists that exactly one holds, so a mis-transcribed boundary
shows up as a :class:`CaseTableError` instead of silently falling through.
"""

from __future__ import annotations

from typing import Iterable

from ..partition import Partition
from .auxiliary import BCN_APPEND1, F_SHIFT, PSI
from .base import (
    NOT_IN_IMAGE,
    CaseTableError,
    CaseTrace,
    DomainError,
    ImageWitness,
    MapDef,
    NotInImageError,
)
from .phi1 import PHI1_DD, PHI1_UU, excess_family_witness, excess_witnesses
from .phi2 import PHI2
from .phi3 import PHI3
from .phi4 import PHI4, c5_aggregate
from .phi5 import PHI5

MAPS: dict[str, MapDef] = {
    m.id: m
    for m in (PHI1_DD, PHI1_UU, PHI2, PHI3, PHI4, PHI5, PSI, F_SHIFT, BCN_APPEND1)
}

_ALIASES = {m.cli_token: m.id for m in MAPS.values()}

# maps whose image is described by the lettered components
CHARACTERIZED = ("phi1_dd", "phi1_uu", "phi2", "phi3", "phi4", "phi5")


def get_map(map_id: "str | MapDef") -> MapDef:
    if isinstance(map_id, MapDef):
        return map_id
    key = _ALIASES.get(map_id, map_id)
    try:
        return MAPS[key]
    except KeyError:
        raise ValueError(f"unknown map {map_id!r}") from None


def _as_partition(lam: Iterable[int]) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def apply(map_id, lam) -> tuple[Partition, CaseTrace]:
    m = get_map(map_id)
    lam = _as_partition(lam)
    if not m.in_domain(lam):
        why = f"not in {m.domain.id}"
        if not m.weight_ok(lam.weight):
            why = f"weight {lam.weight} is outside the domain"
            if lam.weight < m.min_weight:
                why += f" (needs at least {m.min_weight})"
            elif m.even_weight_only:
                why += " (needs an even weight)"
        raise DomainError(f"{lam!r} is not in the domain of {m.id}: {why}")
    hits = m.matching_cases(lam)
    if len(hits) != 1:
        raise CaseTableError(f"{m.id}: {lam!r} matches cases {hits}")
    mu, extra = m.forward(lam, hits[0])
    return mu, CaseTrace(map=m.id, case=hits[0], **extra)


def image_components(map_id, mu) -> list[str]:
    return get_map(map_id).matching_components(_as_partition(mu))


def image_membership(map_id, mu) -> ImageWitness:
    m = get_map(map_id)
    hits = image_components(m, mu)
    if not hits:
        return ImageWitness(m.id, NOT_IN_IMAGE)
    return ImageWitness(m.id, hits[0], tuple(hits[1:]))


def invert(map_id, mu) -> Partition:
    """Preimage of ``mu``, confirmed by applying the map to the answer.

    Raises :class:`NotInImageError` when ``mu`` satisfies no component, and
    also when a component admits ``mu`` but the inverse formula does not
    lead back to it (the characterization is wider than the image there).
    """
    m = get_map(map_id)
    mu = _as_partition(mu)
    w = image_membership(m, mu)
    if not w.in_image:
        raise NotInImageError(f"{mu!r} is not in the image of {m.id}")
    try:
        lam = m.backward(mu, w.component)
    except ValueError as e:
        raise NotInImageError(f"{mu!r} satisfies {w.component} of {m.id} but has no preimage: {e}") from None
    if not m.in_domain(lam) or len(m.matching_cases(lam)) != 1 or apply(m, lam)[0] != mu:
        raise NotInImageError(
            f"{mu!r} satisfies {w.component} of {m.id} but has no preimage "
            f"({lam!r} does not map back to it)"
        )
    return lam


__all__ = [
    "MAPS",
    "CHARACTERIZED",
    "NOT_IN_IMAGE",
    "CaseTableError",
    "CaseTrace",
    "DomainError",
    "ImageWitness",
    "MapDef",
    "NotInImageError",
    "apply",
    "c5_aggregate",
    "excess_family_witness",
    "excess_witnesses",
    "get_map",
    "image_components",
    "image_membership",
    "invert",
]
