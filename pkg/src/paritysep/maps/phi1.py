"""The parity-swapping shift between odd-over-even and even-over-odd classes.

When both parities occur, one is added to each of the first ``ell_m`` parts
and one is subtracted from each of the last ``ell_m`` parts, where ``ell_m``
is the smaller of the odd and even part counts.  The same rule serves two
domains: distinct blocks (``od_ed -> ed_od``) and unrestricted blocks
(``ou_eu -> eu_ou``).
"""

from __future__ import annotations

from ..classes import enumerate_class
from ..partition import Partition
from .base import make_mapdef, shift_ends


def _one_parity(lam: Partition) -> bool:
    return not lam.n_odd or not lam.n_even


def _both(lam: Partition) -> bool:
    return bool(lam.n_odd and lam.n_even)


def _ell_m(lam: Partition) -> int:
    return min(lam.n_odd, lam.n_even)


CASES = (
    ("Case 1", _one_parity),
    ("Case 2", _both),
)


def forward(lam: Partition, case: str):
    if case == "Case 1":
        return lam, {}
    return shift_ends(lam, _ell_m(lam), +1, -1), {}


def backward(mu: Partition, component: str) -> Partition:
    if component in ("(i)", "(ii)"):
        return mu
    return shift_ends(mu, _ell_m(mu), -1, +1)


def _no_odd(mu):
    return not mu.n_odd


def _no_even(mu):
    return not mu.n_even and bool(mu)


# distinct version: even distinct over odd distinct


def _dd_gap(mu: Partition) -> bool:
    if not _both(mu):
        return False
    odd, even = mu.odd, mu.even
    return even[-1] - odd[0] >= 3


DD_COMPONENTS = (
    ("(i)", _no_odd),
    ("(ii)", _no_even),
    ("(iii)", _dd_gap),
)


def excess_witnesses(n: int) -> list[Partition]:
    """Members of ``ed_od`` at weight ``n`` whose smallest even part exceeds
    the largest odd part by exactly one."""
    out = []
    for lam in enumerate_class(n, "ed_od"):
        if _both(lam) and lam.even[-1] - lam.odd[0] == 1:
            out.append(lam)
    return out


def excess_family_witness(n: int):
    """The explicit witness for ``n >= 11``, chosen by ``n mod 4``."""
    if n < 11:
        return None
    k, res = divmod(n, 4)
    if res == 0:
        return Partition((2 * k, 2 * k - 1, 1))
    if res == 1:
        if n == 13:
            return Partition((6, 4, 3))
        if n == 17:
            return Partition((10, 4, 3))
        return Partition((2 * k - 2, 2 * k - 3, 5, 1))
    if res == 2:
        return Partition((2 * k, 2 * k - 1, 3))
    return Partition((2 * k + 2, 2 * k + 1))


PHI1_DD = make_mapdef(
    "phi1_dd", "od_ed", "ed_od",
    delta=0,
    cases=CASES,
    forward=forward,
    components=DD_COMPONENTS,
    backward=backward,
    non_image=excess_witnesses,
    cli_token="phi1dd",
)


# unrestricted version: even unrestricted over odd unrestricted


def _uu_iii(mu: Partition) -> bool:
    if not _both(mu):
        return False
    lo, le = mu.n_odd, mu.n_even
    return lo <= le and mu.part(lo) - mu.part(lo + 1) >= 2


def _uu_iv(mu: Partition) -> bool:
    if not _both(mu):
        return False
    lo, le = mu.n_odd, mu.n_even
    j = len(mu) - le
    return le < lo and mu.part(j) - mu.part(j + 1) >= 2


UU_COMPONENTS = (
    ("(i)", _no_odd),
    ("(ii)", _no_even),
    ("(iii)", _uu_iii),
    ("(iv)", _uu_iv),
)


def _uu_non_image(n: int) -> list[Partition]:
    return [Partition([2] + [1] * (n - 2))] if n >= 3 else []


PHI1_UU = make_mapdef(
    "phi1_uu", "ou_eu", "eu_ou",
    delta=0,
    cases=CASES,
    forward=forward,
    components=UU_COMPONENTS,
    backward=backward,
    non_image=_uu_non_image,
    cli_token="phi1uu",
)
