"""Injection from ``ed_od`` (even distinct over odd distinct) into ``od_eu``
(odd distinct over even unrestricted), for weights of at least 8.

Case 2 is the parity-swapping shift.  Case 3 strips the largest part and the
two smallest parts ``(2k+1, 1)``, maps the remainder ``eta`` through Case 1
or 2, and re-encodes the stripped largest part as copies of ``2k+2``.
Cases 4 and 5 trade parts for runs of twos.  Image components are labelled
``C1``..``C4`` and ``C5(i)``..``C5(v)``.
"""

from __future__ import annotations

from ..partition import Partition
from .base import CaseTableError, make_mapdef, shift_ends

MIN_WEIGHT = 8


def _both(lam):
    return bool(lam.n_odd and lam.n_even)


def _has_one(lam):
    return bool(lam) and lam[-1] == 1


def _case1(lam):
    return not _both(lam)


def _case2(lam):
    return _both(lam) and not _has_one(lam)


def _case3(lam):
    if not (_both(lam) and _has_one(lam) and lam.n_odd >= 2):
        return False
    return lam.n_odd != 2 or lam.even[-1] - lam.odd[0] != 1


def _case4(lam):
    return (
        _both(lam) and _has_one(lam) and lam.n_odd == 2
        and lam.even[-1] - lam.odd[0] == 1
    )


def _case5(lam):
    return lam.n_even > 0 and lam.odd == (1,)


def _case5_i(lam):
    return _case5(lam) and len(lam) == 2


def _case5_ii(lam):
    return _case5(lam) and len(lam) == 3


def _case5_iii(lam):
    return _case5(lam) and len(lam) == 4 and 2 in lam


def _case5_iv(lam):
    return _case5(lam) and len(lam) >= 4 and 2 not in lam


def _case5_v(lam):
    return _case5(lam) and len(lam) >= 5 and 2 in lam


CASES = (
    ("Case 1", _case1),
    ("Case 2", _case2),
    ("Case 3", _case3),
    ("Case 4", _case4),
    ("Case 5(i)", _case5_i),
    ("Case 5(ii)", _case5_ii),
    ("Case 5(iii)", _case5_iii),
    ("Case 5(iv)", _case5_iv),
    ("Case 5(v)", _case5_v),
)


def _shift(lam: Partition) -> Partition:
    return shift_ends(lam, min(lam.n_odd, lam.n_even), +1, -1)


def _simple(lam: Partition) -> Partition:
    """Cases 1 and 2, which need no lower bound on the weight."""
    return lam if _case1(lam) else _shift(lam)


def forward(lam: Partition, case: str):
    if case == "Case 1":
        return lam, {}
    if case == "Case 2":
        return _shift(lam), {}
    if case == "Case 3":
        eta = Partition(lam[1:-2])
        if not (_case1(eta) or _case2(eta)):
            raise CaseTableError(f"phi4 Case 3: eta={eta!r} is not in Case 1 or 2")
        k = (lam[-2] - 1) // 2
        block = 2 * k + 2
        q, r = divmod(lam[0], block)
        extra = [block] * (q + 1) + ([r] if r else [])
        return _simple(eta).union(extra), {"k": k, "q": q, "r": r, "eta": eta}
    if case == "Case 4":
        k = (lam.odd[0] - 1) // 2
        block = 2 * k + 2
        if len(lam) == 3:
            return Partition((block, block)), {"k": k}
        even = lam.even
        parts = list(even[1:]) + [block] + [2] * (lam[0] // 2)
        return Partition(parts), {"k": k}
    ell = len(lam)
    if case == "Case 5(i)":
        return Partition((lam.weight - 4, 2, 2)), {}
    if case == "Case 5(ii)":
        return Partition([lam[1] + 1] + [2] * (lam[0] // 2)), {}
    if case == "Case 5(iii)":
        return Partition([lam[0] + 1] + [2] * (lam[1] // 2 + 1)), {}
    if case == "Case 5(iv)":
        parts = [lam[0] + 1] + list(lam[1 : ell - 2]) + [2] * (lam[ell - 2] // 2)
        return Partition(parts), {}
    if case == "Case 5(v)":
        parts = [lam[1] + 1] + list(lam[2 : ell - 2]) + [2] * (lam[0] // 2 + 1)
        return Partition(parts), {}
    raise CaseTableError(f"unknown phi4 case {case!r}")


# image components; mu is already known to lie in od_eu


def _c1(mu):
    return (mu.n_even == 0 or mu.n_odd == 0) and mu.is_distinct()


def _c2(mu):
    if not (_both(mu) and mu.is_distinct()):
        return False
    return mu.odd[-1] - mu.even[0] >= 3


def _c3_split(mu):
    """(repeated part, parts above it) when ``mu`` has the Case 3 shape."""
    if len(mu) < 3:
        return None
    reps = mu.repeated()
    if len(reps) != 1:
        return None
    block = reps[0]
    if block % 2 or block < 4:
        return None
    sizes = sorted(set(mu))
    if block not in sizes[:2]:
        return None
    above = Partition(p for p in mu if p > block)
    if not (_c1(above) or _c2(above)):
        return None
    return block, above


def _c3(mu):
    split = _c3_split(mu)
    if split is None:
        return False
    block, above = split
    if above and mu.weight - above.weight - block <= mu[0]:
        return False
    return True


def _c4(mu):
    if mu.n_odd or mu.is_distinct():
        return False
    if len(mu) <= 2:
        return True
    if 2 not in mu:
        return False
    reps = mu.repeated()
    sizes = sorted(set(mu))
    if len(sizes) < 2 or reps[:2] != sizes[:2]:
        return False
    # exactly one repeated size besides 2, and it occurs twice
    if len(reps) != 2 or mu.mult(reps[1]) != 2:
        return False
    return 2 * mu.mult(2) > mu[0]


def _twos_only(mu):
    """``mu = (mu_1, 2^m)`` with a single odd part on top."""
    return mu.n_odd == 1 and all(p == 2 for p in mu[1:])


def _c5_i(mu):
    return len(mu) == 3 and mu.n_odd == 1 and mu.mult(2) == 2


def _c5_ii(mu):
    m = mu.mult(2)
    return _twos_only(mu) and m >= 3 and 2 * m > mu[0]


def _c5_iii(mu):
    m = mu.mult(2)
    return _twos_only(mu) and m >= 3 and 2 * m < mu[0]


def _big_evens(mu):
    return sum(1 for p in mu if p > 2 and not p & 1)


def _only_two_repeated(mu):
    return mu.repeated() == [2]


def _c5_iv(mu):
    if mu.n_odd != 1 or _big_evens(mu) < 1 or not _only_two_repeated(mu):
        return False
    return 2 * mu.mult(2) < mu.next_larger(2)


def _c5_v(mu):
    # one even part above 2 suffices; (11, 8, 2^7) is a member
    if mu.n_odd != 1 or _big_evens(mu) < 1 or not _only_two_repeated(mu):
        return False
    return 2 * mu.mult(2) > mu[0] + 2


COMPONENTS = (
    ("C1", _c1),
    ("C2", _c2),
    ("C3", _c3),
    ("C4", _c4),
    ("C5(i)", _c5_i),
    ("C5(ii)", _c5_ii),
    ("C5(iii)", _c5_iii),
    ("C5(iv)", _c5_iv),
    ("C5(v)", _c5_v),
)


def c5_aggregate(mu: Partition) -> bool:
    """The single combined description of the Case 5 image."""
    if mu.n_odd != 1 or not _only_two_repeated(mu):
        return False
    m2 = mu.mult(2)
    big = _big_evens(mu)
    if big == 1:
        return 2 * m2 < mu.next_larger(2)
    if big >= 2:
        return 2 * m2 < mu.next_larger(2) or 2 * m2 > mu[0] + 2
    return True


def _simple_inverse(mu: Partition) -> Partition:
    if _c1(mu) or not mu:
        return mu
    return shift_ends(mu, min(mu.n_odd, mu.n_even), -1, +1)


def backward(mu: Partition, component: str) -> Partition:
    if component == "C1":
        return mu
    if component == "C2":
        return _simple_inverse(mu)
    if component == "C3":
        block, above = _c3_split(mu)
        largest = mu.weight - above.weight - block
        return _simple_inverse(above).union((largest, block - 1, 1))
    if component == "C4":
        if len(mu) == 2:
            return Partition((mu[0], mu[1] - 1, 1))
        m2 = mu.mult(2)
        block = mu.repeated()[1]
        return mu.difference([block] + [2] * m2).union((2 * m2, block - 1, 1))
    m2 = mu.mult(2)
    if component == "C5(i)":
        return Partition((mu[0] + 3, 1))
    if component == "C5(ii)":
        return Partition((2 * m2, mu[0] - 1, 1))
    if component == "C5(iii)":
        return Partition((mu[0] - 1, 2 * m2 - 2, 2, 1))
    if component == "C5(iv)":
        return mu.difference([mu[0]] + [2] * m2).union((mu[0] - 1, 2 * m2, 1))
    if component == "C5(v)":
        return mu.difference([mu[0]] + [2] * (m2 - 1)).union((2 * m2 - 2, mu[0] - 1, 1))
    raise ValueError(f"unknown phi4 component {component!r}")


def _non_image(n: int) -> list[Partition]:
    if n < MIN_WEIGHT:
        return []
    if n % 2 == 0:
        return [Partition((n - 4, 2, 2))]
    k, res = divmod(n, 4)
    if res == 1:
        return [Partition((2 * k + 1, 2 * k))] if k >= 2 else []
    return [Partition((2 * k + 1, 2 * k, 2))] if k >= 2 else []


PHI4 = make_mapdef(
    "phi4", "ed_od", "od_eu",
    delta=0,
    cases=CASES,
    forward=forward,
    components=COMPONENTS,
    backward=backward,
    min_weight=MIN_WEIGHT,
    non_image=_non_image,
    cli_token="phi4",
)
