"""Exhaustive verification of the counting inequalities and the injections.

Every check scans weights in ascending order and, within a weight, members
in the documented enumeration order, so the first counterexample recorded
is always of minimal weight and reruns produce identical reports.  At most
:data:`MAX_COUNTEREXAMPLES` are kept per report; the total is recorded in
``info["failures"]``.

Failure semantics only apply to claims with an explicit threshold.  Claims
without one (the ``nd`` inequalities) are reported with their empirical
threshold and always pass.
"""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .classes import (
    ALL_CLASS_IDS,
    count_class,
    enumerate_all,
    enumerate_class,
    is_member,
    parse_class,
    partition_count,
)
from .maps import (
    MAPS,
    CaseTableError,
    NotInImageError,
    apply,
    c5_aggregate,
    excess_family_witness,
    excess_witnesses,
    get_map,
    image_components,
    invert,
)
from .maps.phi4 import COMPONENTS as PHI4_COMPONENTS
from .partition import format_partition

MAX_COUNTEREXAMPLES = 10

# default upper weights per kind of check
NMAX_COUNTS = 50
NMAX_MAPS = 40
NMAX_IMAGES = 36
NMAX_ORACLE = 30
NMAX_CONJECTURE = 30
# cheap maps get a larger round-trip range
NMAX_MAPS_CHEAP = 50
CHEAP_MAPS = ("phi1_dd", "phi1_uu", "phi3", "phi5", "psi")

PASS, FAIL = "pass", "fail"

_RELATIONS: dict[str, tuple[Callable[[int, int], bool], str]] = {
    "strict-less": (operator.lt, "<"),
    "less-equal": (operator.le, "<="),
    "equal": (operator.eq, "="),
}


def _fmt(lam) -> str:
    return "(" + (format_partition(lam) or "empty") + ")"


@dataclass(frozen=True)
class InequalitySpec:
    """``count(lhs, n) <relation> count(rhs, n + rhs_shift)``."""

    lhs: str
    rhs: str
    relation: str = "strict-less"
    claimed_threshold: Optional[int] = None
    parity_filter: str = "all"
    rhs_shift: int = 0

    def __post_init__(self):
        parse_class(self.lhs)
        parse_class(self.rhs)
        if self.relation not in _RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        if self.parity_filter not in ("all", "even", "odd"):
            raise ValueError(f"unknown parity filter {self.parity_filter!r}")
        if self.lhs == self.rhs and not self.rhs_shift:
            raise ValueError("a class compared with itself needs a shift")

    @property
    def name(self) -> str:
        sym = _RELATIONS[self.relation][1]
        if not self.rhs_shift:
            return f"{self.lhs} {sym} {self.rhs}"
        base, offset = {"all": ("n", 0), "even": ("2k", 0), "odd": ("2k", -1)}[self.parity_filter]

        def at(shift):
            total = offset + shift
            return base if not total else f"{base}{total:+d}"

        return f"{self.lhs}({at(0)}) {sym} {self.rhs}({at(self.rhs_shift)})"

    def admits(self, n: int) -> bool:
        if self.parity_filter == "even":
            return n % 2 == 0
        if self.parity_filter == "odd":
            return n % 2 == 1
        return True

    def holds(self, a: int, b: int) -> bool:
        return _RELATIONS[self.relation][0](a, b)


@dataclass
class VerificationReport:
    check: str
    range: tuple[int, int]
    status: str = PASS
    empirical_threshold: Optional[int] = None
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict[str, Any]:
        out = {
            "check": self.check,
            "range": list(self.range),
            "status": self.status,
            "empirical_threshold": self.empirical_threshold,
            "counterexamples": self.counterexamples,
        }
        if self.info:
            out["info"] = self.info
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


class _Collector:
    def __init__(self):
        self.items: list[dict[str, Any]] = []
        self.total = 0

    def add(self, n: int, detail: str):
        self.total += 1
        if len(self.items) < MAX_COUNTEREXAMPLES:
            self.items.append({"n": n, "detail": detail})

    def finish(self, report: VerificationReport) -> VerificationReport:
        report.counterexamples = self.items
        if self.total:
            report.status = FAIL
            report.info["failures"] = self.total
        return report


# counting inequalities

THRESHOLD_SPECS: tuple[InequalitySpec, ...] = (
    InequalitySpec("od_ed", "ed_od", claimed_threshold=11),
    InequalitySpec("ou_eu", "eu_ou", claimed_threshold=3),
    InequalitySpec("eu_od", "ou_ed", claimed_threshold=5),
    InequalitySpec("od_eu", "ed_ou", claimed_threshold=2),
    InequalitySpec("ed_od", "od_eu", claimed_threshold=8),
)

CHAIN = ("od_ed", "ed_od", "eu_od", "od_eu", "ou_ed", "ou_eu", "ed_ou", "eu_ou")

ND_INEQUALITIES: tuple[InequalitySpec, ...] = (
    InequalitySpec("ou_end", "ond_eu"),
    InequalitySpec("ond_eu", "eu_ond"),
    InequalitySpec("end_od", "od_end"),
    InequalitySpec("od_end", "ond_ed"),
)

# a - b = c; each holds because the nd block is the complement of the d block
ND_IDENTITIES: tuple[tuple[str, str, str], ...] = (
    ("eu_ou", "eu_od", "eu_ond"),
    ("ou_eu", "od_eu", "ond_eu"),
    ("ou_eu", "ou_ed", "ou_end"),
    ("eu_od", "ed_od", "end_od"),
    ("ou_ed", "od_ed", "ond_ed"),
    ("od_eu", "od_ed", "od_end"),
    ("eu_ou", "ed_ou", "end_ou"),
)

MONOTONE_SPECS: tuple[InequalitySpec, ...] = (
    InequalitySpec("ou_eu", "ou_eu", claimed_threshold=1, rhs_shift=2),
    InequalitySpec("ed_ou", "ed_ou", claimed_threshold=2, rhs_shift=1),
    InequalitySpec("ou_eu", "ou_eu", claimed_threshold=1, parity_filter="odd", rhs_shift=1),
    InequalitySpec("ou_eu", "ou_eu", "equal", claimed_threshold=0, parity_filter="even",
                   rhs_shift=1),
)


def check_inequality(spec: InequalitySpec, n_max: int = NMAX_COUNTS,
                     n_min: int = 0) -> VerificationReport:
    """Scan ``n_min..n_max``; the right-hand side may reach ``n_max + rhs_shift``
    only when that stays within ``n_max``, so every count compared is in range."""
    if spec.claimed_threshold is not None and n_max < spec.claimed_threshold:
        raise ValueError("n_max is below the claimed threshold")
    tested = [n for n in range(n_min, n_max - spec.rhs_shift + 1) if spec.admits(n)]
    report = VerificationReport(spec.name, (n_min, n_max))
    bad = _Collector()
    last_fail = None
    for n in tested:
        a = count_class(n, spec.lhs)
        b = count_class(n + spec.rhs_shift, spec.rhs)
        if spec.holds(a, b):
            continue
        last_fail = n
        claimed = spec.claimed_threshold
        detail = f"{spec.lhs}={a} {spec.rhs}={b}"
        if claimed is not None and n >= claimed:
            bad.add(n, detail)
        else:
            # below the claimed range, or no claim at all: surfaced, not judged
            report.info.setdefault("below_threshold", []).append({"n": n, "detail": detail})
    if last_fail is None:
        report.empirical_threshold = tested[0] if tested else None
    elif last_fail != tested[-1]:
        report.empirical_threshold = last_fail + 1
    if spec.claimed_threshold is not None:
        report.info["claimed_threshold"] = spec.claimed_threshold
        report.info["threshold_confirmed"] = (
            report.empirical_threshold == spec.claimed_threshold
        )
    return bad.finish(report)


def check_chain(n_max: int = NMAX_COUNTS) -> VerificationReport:
    """All seven adjacent strict relations of the chain at once."""
    report = VerificationReport("chain " + " < ".join(CHAIN), (0, n_max))
    last_fail = None
    failing: dict[int, list[str]] = {}
    for n in range(n_max + 1):
        counts = [count_class(n, c) for c in CHAIN]
        broken = [
            f"{CHAIN[i]}={counts[i]} !< {CHAIN[i + 1]}={counts[i + 1]}"
            for i in range(len(CHAIN) - 1)
            if not counts[i] < counts[i + 1]
        ]
        if broken:
            last_fail = n
            failing[n] = broken
    per_link = {}
    for i in range(len(CHAIN) - 1):
        spec = InequalitySpec(CHAIN[i], CHAIN[i + 1])
        per_link[spec.name] = check_inequality(spec, n_max).empirical_threshold
    report.info["link_thresholds"] = per_link
    report.info["below_threshold"] = [
        {"n": n, "detail": "; ".join(v)} for n, v in sorted(failing.items())
    ]
    if last_fail is None:
        report.empirical_threshold = 0
    elif last_fail < n_max:
        report.empirical_threshold = last_fail + 1
    else:
        report.status = FAIL
        report.counterexamples = [{"n": n_max, "detail": "; ".join(failing[n_max])}]
    return report


def check_nd_identities(n_max: int = NMAX_MAPS) -> VerificationReport:
    report = VerificationReport("nd difference identities", (0, n_max))
    bad = _Collector()
    for n in range(n_max + 1):
        for a, b, c in ND_IDENTITIES:
            lhs = count_class(n, a) - count_class(n, b)
            rhs = count_class(n, c)
            if lhs != rhs:
                bad.add(n, f"{a} - {b} = {lhs} but {c} = {rhs}")
    return bad.finish(report)


def check_nd_inequalities(n_max: int = NMAX_COUNTS) -> VerificationReport:
    report = VerificationReport("nd inequalities", (0, n_max))
    thresholds = {}
    for spec in ND_INEQUALITIES:
        sub = check_inequality(spec, n_max)
        thresholds[spec.name] = sub.empirical_threshold
        for item in sub.info.get("below_threshold", []):
            report.counterexamples.append({"n": item["n"], "detail": f"{spec.name}: {item['detail']}"})
    report.counterexamples.sort(key=lambda d: d["n"])
    report.counterexamples = report.counterexamples[:MAX_COUNTEREXAMPLES]
    report.info["thresholds"] = thresholds
    known = [t for t in thresholds.values() if t is not None]
    if len(known) == len(thresholds):
        report.empirical_threshold = max(known)
    return report


def check_monotone(n_max: int = NMAX_COUNTS + 1) -> VerificationReport:
    """Successor inequalities and the odd/even equality, plus the injections
    behind them: ``f`` and ``append1`` each miss a witness at every weight."""
    report = VerificationReport("monotonicity", (0, n_max))
    bad = _Collector()
    for spec in MONOTONE_SPECS:
        sub = check_inequality(spec, n_max)
        for item in sub.counterexamples:
            bad.add(item["n"], f"{spec.name}: {item['detail']}")
        report.info[spec.name] = sub.empirical_threshold
    for map_id in ("f_shift", "bcn_append1", "psi"):
        m = MAPS[map_id]
        for n in range(min(n_max, NMAX_MAPS) + 1):
            if not m.weight_ok(n):
                continue
            image = {apply(m, lam)[0] for lam in enumerate_class(n, m.domain)}
            for w in m.non_image(n + m.delta):
                if w in image or not m.in_codomain(w):
                    bad.add(n + m.delta, f"{map_id}: witness {_fmt(w)} is not a genuine non-image")
            if map_id == "psi":
                target = count_class(n + m.delta, m.codomain)
                if len(image) != target:
                    bad.add(n + 1, f"psi image has {len(image)} of {target} members")
    return bad.finish(report)


# maps


def check_roundtrip(map_id, n_max: Optional[int] = None) -> VerificationReport:
    """Weight law, codomain membership and ``invert(apply(lam)) == lam``."""
    m = get_map(map_id)
    if n_max is None:
        n_max = NMAX_MAPS_CHEAP if m.id in CHEAP_MAPS else NMAX_MAPS
    report = VerificationReport(f"roundtrip {m.id}", (0, n_max))
    bad = _Collector()
    tested = 0
    for n in range(n_max + 1):
        if not m.weight_ok(n):
            continue
        for lam in enumerate_class(n, m.domain):
            tested += 1
            try:
                mu, trace = apply(m, lam)
            except CaseTableError as e:
                bad.add(n, f"{_fmt(lam)}: {e}")
                continue
            if mu.weight - lam.weight != m.delta:
                bad.add(n, f"{_fmt(lam)} -> {_fmt(mu)} breaks the weight law")
            if not m.in_codomain(mu):
                bad.add(n, f"{_fmt(lam)} -> {_fmt(mu)} lies outside {m.codomain.id}")
                continue
            try:
                back = invert(m, mu)
            except NotInImageError:
                bad.add(n, f"{_fmt(lam)} [{trace.case}] -> {_fmt(mu)} is not recognised as an image")
                continue
            if back != lam:
                bad.add(n, f"{_fmt(lam)} [{trace.case}] -> {_fmt(mu)} -> {_fmt(back)}")
    report.info["tested"] = tested
    return bad.finish(report)


def _safe_invert(m, mu):
    try:
        return invert(m, mu)
    except NotInImageError:
        return None


def check_injective(map_id, n_max: int = NMAX_MAPS) -> VerificationReport:
    m = get_map(map_id)
    report = VerificationReport(f"injective {m.id}", (0, n_max))
    bad = _Collector()
    for n in range(n_max + 1):
        if not m.weight_ok(n):
            continue
        seen = {}
        for lam in enumerate_class(n, m.domain):
            mu = apply(m, lam)[0]
            if mu in seen:
                bad.add(n, f"{_fmt(seen[mu])} and {_fmt(lam)} both map to {_fmt(mu)}")
            else:
                seen[mu] = lam
    return bad.finish(report)


def check_image(map_id, n_max: int = NMAX_IMAGES) -> VerificationReport:
    """Forward image against the characterized image, component overlaps, and
    the non-image witnesses, at every domain weight up to ``n_max``."""
    m = get_map(map_id)
    report = VerificationReport(f"image {m.id}", (0, n_max))
    bad = _Collector()
    extra = missed = overlaps = 0
    for n in range(n_max + 1):
        if not m.weight_ok(n):
            continue
        image = {apply(m, lam)[0] for lam in enumerate_class(n, m.domain)}
        target = n + m.delta
        for mu in enumerate_class(target, m.codomain):
            comps = image_components(m, mu)
            if len(comps) > 1:
                overlaps += 1
                bad.add(target, f"{_fmt(mu)} satisfies {', '.join(comps)}")
            if mu in image and not comps:
                missed += 1
                bad.add(target, f"{_fmt(mu)} is an image but satisfies no component")
            elif comps and mu not in image:
                extra += 1
                bad.add(target, f"{_fmt(mu)} satisfies {comps[0]} but has no preimage")
        for w in m.non_image(target):
            if not m.in_codomain(w):
                bad.add(target, f"witness {_fmt(w)} is outside {m.codomain.id}")
            elif w in image:
                bad.add(target, f"witness {_fmt(w)} is an image")
            elif image_components(m, w):
                bad.add(target, f"witness {_fmt(w)} satisfies {image_components(m, w)[0]}")
    report.info.update({"no_preimage": extra, "uncharacterized": missed, "overlaps": overlaps})
    return bad.finish(report)


def check_c5_aggregate(n_max: int = NMAX_IMAGES) -> VerificationReport:
    """The combined Case 5 description against the union of its subcases."""
    report = VerificationReport("phi4 C5 aggregate", (0, n_max))
    bad = _Collector()
    subcases = [(label, pred) for label, pred in PHI4_COMPONENTS if label.startswith("C5")]
    for n in range(8, n_max + 1):
        for mu in enumerate_class(n, "od_eu"):
            hit = [label for label, pred in subcases if pred(mu)]
            if bool(hit) != c5_aggregate(mu):
                side = f"only {hit[0]}" if hit else "only the aggregate"
                bad.add(n, f"{_fmt(mu)}: {side}")
    return bad.finish(report)


def check_excess(n_max: int = NMAX_COUNTS) -> VerificationReport:
    """``ed_od - od_ed`` equals the number of excess witnesses, and the
    witnesses are exactly what the forward map misses."""
    report = VerificationReport("excess ed_od - od_ed", (0, n_max))
    bad = _Collector()
    m = MAPS["phi1_dd"]
    for n in range(n_max + 1):
        wit = excess_witnesses(n)
        diff = count_class(n, "ed_od") - count_class(n, "od_ed")
        if diff != len(wit):
            bad.add(n, f"difference {diff} but {len(wit)} witnesses")
        image = {apply(m, lam)[0] for lam in enumerate_class(n, m.domain)}
        missed = [mu for mu in enumerate_class(n, m.codomain) if mu not in image]
        if missed != wit:
            bad.add(n, f"missed {len(missed)} partitions, expected the {len(wit)} witnesses")
        if n >= 11:
            fam = excess_family_witness(n)
            if fam not in wit:
                bad.add(n, f"family witness {_fmt(fam)} absent")
    return bad.finish(report)


def check_conjecture(n_max: int = NMAX_CONJECTURE) -> VerificationReport:
    """``bar-ou_eu(2n) < bar-eu_ou(2n+1)`` by count, and by injection plus a
    witness outside the forward image, for ``3 <= n <= n_max``."""
    report = VerificationReport("bar-ou_eu(2n) < bar-eu_ou(2n+1)", (3, n_max))
    bad = _Collector()
    m = MAPS["phi5"]
    small = []
    last_fail = None
    for n in range(1, n_max + 1):
        a = count_class(2 * n, "bar-ou_eu")
        b = count_class(2 * n + 1, "bar-eu_ou")
        if n < 3:
            small.append({"n": n, "detail": f"{a} vs {b}"})
            continue
        if not a < b:
            last_fail = n
            bad.add(n, f"count {a} !< {b}")
        image = {}
        for lam in enumerate_class(2 * n, m.domain):
            mu = apply(m, lam)[0]
            if mu in image:
                bad.add(n, f"{_fmt(image[mu])} and {_fmt(lam)} both map to {_fmt(mu)}")
            elif not m.in_codomain(mu):
                bad.add(n, f"{_fmt(lam)} -> {_fmt(mu)} lies outside the codomain")
            elif _safe_invert(m, mu) != lam:
                bad.add(n, f"{_fmt(lam)} -> {_fmt(mu)} does not invert")
            image[mu] = lam
        witnesses = [w for w in m.non_image(2 * n + 1) if m.in_codomain(w) and w not in image]
        if not witnesses:
            bad.add(n, "no witness outside the image")
    report.info["outside_range"] = small
    report.empirical_threshold = 3 if last_fail is None else last_fail + 1
    return bad.finish(report)


def check_oracle(n_max: int = NMAX_ORACLE) -> VerificationReport:
    """Direct class generation against filtering every partition."""
    report = VerificationReport("direct vs filtered enumeration", (0, n_max))
    bad = _Collector()
    for n in range(n_max + 1):
        everything = list(enumerate_all(n))
        if len(everything) != partition_count(n):
            bad.add(n, f"{len(everything)} partitions, expected {partition_count(n)}")
        for cid in ALL_CLASS_IDS:
            c = parse_class(cid)
            direct = list(enumerate_class(n, c))
            filtered = [lam for lam in everything if is_member(lam, c)]
            if direct != filtered:
                bad.add(n, f"{cid}: {len(direct)} generated, {len(filtered)} filtered")
    return bad.finish(report)


SUITES = ("all", "chain", "images", "roundtrips", "conjecture", "nd", "monotone", "oracle")


def run_suite(suite: str = "all", n_max: Optional[int] = None) -> list[VerificationReport]:
    """Run a named group of checks; ``n_max`` overrides every default range."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")

    def nm(default):
        return default if n_max is None else n_max

    out: list[VerificationReport] = []
    if suite in ("all", "chain"):
        out.append(check_chain(nm(NMAX_COUNTS)))
        out.extend(check_inequality(s, max(nm(NMAX_COUNTS), s.claimed_threshold))
                   for s in THRESHOLD_SPECS)
        out.append(check_excess(nm(NMAX_COUNTS)))
    if suite in ("all", "images"):
        out.extend(check_image(mid, nm(NMAX_IMAGES)) for mid in MAPS)
        out.append(check_c5_aggregate(nm(NMAX_IMAGES)))
    if suite in ("all", "roundtrips"):
        for mid in MAPS:
            out.append(check_roundtrip(mid, n_max))
            out.append(check_injective(mid, nm(NMAX_MAPS)))
    if suite in ("all", "conjecture"):
        out.append(check_conjecture(max(nm(NMAX_CONJECTURE), 3)))
    if suite in ("all", "nd"):
        out.append(check_nd_identities(nm(NMAX_MAPS)))
        out.append(check_nd_inequalities(nm(NMAX_COUNTS)))
    if suite in ("all", "monotone"):
        out.append(check_monotone(nm(NMAX_COUNTS + 1)))
    if suite in ("all", "oracle"):
        out.append(check_oracle(nm(NMAX_ORACLE)))
    return out


def suite_json(reports: list[VerificationReport]) -> str:
    body = {
        "status": PASS if all(r.passed for r in reports) else FAIL,
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(body, indent=2)
