"""Injection from ``od_eu`` (odd distinct over even unrestricted) into
``ed_ou`` (even distinct over odd unrestricted).

Outside the two identity cases every part drops by one and ``ell`` ones are
inserted, which swaps the parity of every original part.
"""

from __future__ import annotations

from ..partition import Partition
from .base import make_mapdef


def _case1(lam):
    return lam.n_even == 0


def _case2(lam):
    # the empty partition is left to Case 1
    return lam.n_odd == 0 and lam.n_even > 0 and lam.is_distinct()


def _case3(lam):
    both = lam.n_odd > 0 and lam.n_even > 0
    return both or (lam.n_odd == 0 and not lam.is_distinct())


CASES = (
    ("Case 1", _case1),
    ("Case 2", _case2),
    ("Case 3", _case3),
)


def forward(lam: Partition, case: str):
    if case != "Case 3":
        return lam, {}
    return Partition([p - 1 for p in lam] + [1] * len(lam)), {}


def _i(mu):
    return mu.n_even == 0 and mu.is_distinct()


def _ii(mu):
    return mu.n_odd == 0 and len(mu) > 0 and mu.is_distinct()


def _iii(mu):
    ell = len(mu)
    if not mu.n_odd or ell < 4 or ell % 2:
        return False
    ones, above = mu.mult(1), mu.count_gt(1)
    if ones < 2 or ones < above:
        return False
    if mu.n_even == 0 and mu.repeated() == [1]:
        return ones == ell or ones >= above + 4
    return True


COMPONENTS = (
    ("(i)", _i),
    ("(ii)", _ii),
    ("(iii)", _iii),
)


def backward(mu: Partition, component: str) -> Partition:
    if component != "(iii)":
        return mu
    half = len(mu) // 2
    head = [p + 1 for p in mu[:half]]
    rest = Partition(mu[half:]).difference([1] * half)
    return Partition(head + list(rest))


def _non_image(n: int) -> list[Partition]:
    if n == 2:
        return [Partition((1, 1))]
    if n >= 3 and n % 2:
        return [Partition((n - 1, 1))]
    if n >= 4:
        return [Partition((n - 2, 1, 1))]
    return []


PHI3 = make_mapdef(
    "phi3", "od_eu", "ed_ou",
    delta=0,
    cases=CASES,
    forward=forward,
    components=COMPONENTS,
    backward=backward,
    non_image=_non_image,
    cli_token="phi3",
)
