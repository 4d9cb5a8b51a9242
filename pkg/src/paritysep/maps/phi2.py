"""Injection from ``eu_od`` (even unrestricted over odd distinct) into
``ou_ed`` (odd unrestricted over even distinct).

Five cases.  The interesting one is Case 5, which subtracts an odd amount
``k`` from every even part and re-inserts ``ell_e`` parts equal to ``k``,
so the output is all odd.  Image components are labelled ``B1``..``B5``.
"""

from __future__ import annotations

from ..partition import Partition
from .base import make_mapdef


def _tail_pair(lam: Partition) -> bool:
    # lambda^o == (lambda^e_s - 1, 1)
    odd, even = lam.odd, lam.even
    return len(odd) == 2 and odd[1] == 1 and odd[0] == even[-1] - 1


def _case1(lam):
    return lam.n_even == 0


def _case2(lam):
    return lam.n_odd == 0 and lam.n_even == 1


def _case3(lam):
    return lam.n_odd >= 2 and lam.n_even == 1


def _case4(lam):
    return lam.n_even >= 2 and _tail_pair(lam)


def _case5(lam):
    le, lo = lam.n_even, lam.n_odd
    return (le == 1 and lo == 1) or (le >= 2 and not _tail_pair(lam))


CASES = (
    ("Case 1", _case1),
    ("Case 2", _case2),
    ("Case 3", _case3),
    ("Case 4", _case4),
    ("Case 5", _case5),
)


def case5_k(lam: Partition) -> int:
    odd, even = lam.odd, lam.even
    if not odd:
        return 1
    return min(odd[0], even[-1] - odd[0])


def forward(lam: Partition, case: str):
    odd, even = lam.odd, lam.even
    if case in ("Case 1", "Case 2"):
        return lam, {}
    if case == "Case 3":
        return Partition((even[0] - 1, *odd[:-1], odd[-1] + 1)), {}
    if case == "Case 4":
        s = len(even)
        parts = [even[0] + 1] + [e - 1 for e in even[1:]] + [odd[0]] + [1] * (s - 1)
        return Partition(parts), {}
    k = case5_k(lam)
    parts = [e - k for e in even] + list(odd) + [k] * len(even)
    return Partition(parts), {"k": k}


# image components


def _all_odd(mu):
    return mu.n_even == 0


def _b1(mu):
    return _all_odd(mu) and mu.is_distinct()


def _b2(mu):
    return len(mu) == 1 and mu[0] % 2 == 0


def _b3(mu):
    if mu.n_even != 1 or mu.n_odd < 2:
        return False
    odd = mu.odd
    return all(odd[i] > odd[i + 1] for i in range(1, len(odd) - 1))


def _b4(mu):
    if not _all_odd(mu) or mu.is_distinct():
        return False
    ell = len(mu)
    if ell < 4 or ell % 2 or mu[0] == mu[1]:
        return False
    if mu.mult(1) != mu.count_gt(1) - 2:
        return False
    a = mu.next_larger(1)
    return a is not None and mu.mult(a) > 1


def _rr_rule(mu: Partition, m: int) -> bool:
    reps = mu.repeated()
    if len(reps) < 2:
        return False
    g = mu.count_geq(reps[1])
    return m in (g - 1, g)


def _b5(mu):
    if not _all_odd(mu) or mu.is_distinct() or len(mu) < 3:
        return False
    if len(mu) == 3:
        return True
    r = mu.repeated()[0]
    m = mu.mult(r)
    above = mu.count_gt(r)
    if r == 1:
        if m < above:  # restriction (I)
            return _rr_rule(mu, m)
        return True
    # restriction (II)
    if len(mu) < 5:
        return False
    if m < above:
        return _rr_rule(mu, m)
    if m == above:
        a = mu.next_larger(r)
        return a is not None and mu.mult(a) > 1
    return mu.count_geq(r) % 2 == 1


COMPONENTS = (
    ("B1", _b1),
    ("B2", _b2),
    ("B3", _b3),
    ("B4", _b4),
    ("B5", _b5),
)


def _add_to_head(mu: Partition, t: int, amount: int) -> Partition:
    head = [p + amount for p in mu[:t]]
    rest = Partition(mu[t:]).difference([amount] * t)
    return Partition(head + list(rest))


def backward(mu: Partition, component: str) -> Partition:
    if component in ("B1", "B2"):
        return mu
    ell = len(mu)
    if component == "B3":
        return Partition((mu[0] + 1, *mu[1:-1], mu[-1] - 1))
    if component == "B4":
        m = mu.mult(1)
        parts = [mu[0] - 1] + [p + 1 for p in mu[1 : m + 1]] + [mu[m + 1], 1]
        return Partition(parts)
    if ell == 3:
        return Partition((mu[0] + mu[2], mu[1]))
    reps = mu.repeated()
    r = reps[0]
    m, above = mu.mult(r), mu.count_gt(r)
    if m < above or (m == above and r != 1):
        t = mu.count_geq(reps[1]) - 1
    else:
        t = mu.count_geq(r) // 2
    return _add_to_head(mu, t, r)


def _non_image(n: int) -> list[Partition]:
    return [Partition((n - 2, 2))] if n >= 5 else []


PHI2 = make_mapdef(
    "phi2", "eu_od", "ou_ed",
    delta=0,
    cases=CASES,
    forward=forward,
    components=COMPONENTS,
    backward=backward,
    non_image=_non_image,
    cli_token="phi2",
)
