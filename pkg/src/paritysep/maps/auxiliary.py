"""Three small maps on unrestricted classes used for the monotonicity facts.

* ``psi``: ``ou_eu`` at weight 2k onto ``ou_eu`` at weight 2k+1.  Appends a
  one when there are no even parts, otherwise bumps the largest even part.
* ``f_shift``: adds two to the largest part, ``ou_eu(n) -> ou_eu(n+2)``.
* ``bcn_append1``: appends a part equal to one, ``ed_ou(n) -> ed_ou(n+1)``.
"""

from __future__ import annotations

from ..partition import Partition
from .base import make_mapdef


def _psi_forward(lam: Partition, case: str):
    if case == "Case 1":
        return lam.union((1,)), {}
    even = lam.even[0]
    return lam.difference((even,)).union((even + 1,)), {}


def _psi_backward(mu: Partition, component: str) -> Partition:
    if component == "contains 1":
        return mu.difference((1,))
    # one copy of the smallest odd part; which copy is immaterial
    smallest = mu.odd[-1]
    return mu.difference((smallest,)).union((smallest - 1,))


PSI = make_mapdef(
    "psi", "ou_eu", "ou_eu",
    delta=1,
    cases=(
        ("Case 1", lambda lam: lam.n_even == 0),
        ("Case 2", lambda lam: lam.n_even > 0),
    ),
    forward=_psi_forward,
    components=(
        ("contains 1", lambda mu: 1 in mu),
        ("no 1", lambda mu: 1 not in mu),
    ),
    backward=_psi_backward,
    even_weight_only=True,
    cli_token="psi",
)


def _f_image(mu: Partition) -> bool:
    return mu.part(1) >= 3 and mu.part(1) - mu.part(2) >= 2


F_SHIFT = make_mapdef(
    "f_shift", "ou_eu", "ou_eu",
    delta=2,
    cases=(("shift", lambda lam: len(lam) > 0),),
    forward=lambda lam, case: (Partition((lam[0] + 2, *lam[1:])), {}),
    components=(("image", _f_image),),
    backward=lambda mu, comp: Partition((mu[0] - 2, *mu[1:])),
    min_weight=1,
    non_image=lambda m: [Partition([1] * m)] if m >= 3 else [],
    cli_token="f",
)


BCN_APPEND1 = make_mapdef(
    "bcn_append1", "ed_ou", "ed_ou",
    delta=1,
    cases=(("append", lambda lam: True),),
    forward=lambda lam, case: (lam.union((1,)), {}),
    components=(("contains 1", lambda mu: 1 in mu),),
    backward=lambda mu, comp: mu.difference((1,)),
    non_image=lambda m: [Partition((m,))] if m >= 3 else [],
    cli_token="append1",
)
