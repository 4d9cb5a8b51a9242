"""Injection from ``bar-ou_eu`` at weight 2n into ``bar-eu_ou`` at weight
2n+1, for n >= 3.  Adds exactly one to the weight.

Components ``E1``..``E3``; the complement of their union is non-empty at
every admissible weight, which is what makes the count inequality strict.
"""

from __future__ import annotations

from ..partition import Partition
from .base import make_mapdef


CASES = (
    ("Case 1", lambda lam: lam.n_even == 0),
    ("Case 2", lambda lam: lam.n_odd == 0),
    ("Case 3", lambda lam: lam.n_odd > 0 and lam.n_even > 0),
)


def forward(lam: Partition, case: str):
    if case == "Case 1":
        return Partition((lam[0] + 1, *lam[1:])), {}
    if case == "Case 2":
        return lam.union((1,)), {}
    merged = lam[0] + lam[1]
    rest = [p - 1 for p in lam[2:]]
    return Partition([merged] + rest + [1] * (len(lam) - 1)), {}


def _e1(mu):
    return mu.n_even == 1 and mu.part(1) - mu.part(2) == 1


def _e2(mu):
    return mu.odd == (1,)


def _e3(mu):
    if mu[0] % 4 != 2 or mu.n_odd < 3:
        return False
    gap = mu.part(1) - mu.part(2)
    if not gap >= mu.part(2) + 2 >= 3:
        return False
    return mu.mult(1) >= mu.count_gt(1)


COMPONENTS = (
    ("E1", _e1),
    ("E2", _e2),
    ("E3", _e3),
)


def backward(mu: Partition, component: str) -> Partition:
    if component == "E1":
        return Partition((mu[0] - 1, *mu[1:]))
    if component == "E2":
        return mu.difference((1,))
    half = len(mu) // 2
    rest = Partition(mu[1:]).difference([1] * half)
    return Partition([mu[0] // 2, mu[0] // 2] + [p + 1 for p in rest])


def _non_image(m: int) -> list[Partition]:
    # m = 2n + 1 is the codomain weight
    if m < 7 or m % 2 == 0:
        return []
    k, res = divmod(m, 4)
    if res == 1:
        return [Partition([4 * (k - 1)] + [1] * 5)]
    return [Partition([4 * k] + [1] * 3)]


PHI5 = make_mapdef(
    "phi5", "bar-ou_eu", "bar-eu_ou",
    delta=1,
    cases=CASES,
    forward=forward,
    components=COMPONENTS,
    backward=backward,
    min_weight=6,
    even_weight_only=True,
    non_image=_non_image,
    cli_token="phi5",
)
