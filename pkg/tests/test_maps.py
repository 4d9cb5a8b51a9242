import pytest

from paritysep.classes import enumerate_class
from paritysep.maps import (
    MAPS,
    NOT_IN_IMAGE,
    CaseTableError,
    DomainError,
    NotInImageError,
    apply,
    c5_aggregate,
    excess_family_witness,
    excess_witnesses,
    get_map,
    image_components,
    image_membership,
    invert,
)
from paritysep.partition import Partition, parse_partition as P
from paritysep.verify import check_image, check_injective, check_roundtrip

SMALL = 24


def test_registry_and_tokens():
    assert set(MAPS) == {
        "phi1_dd", "phi1_uu", "phi2", "phi3", "phi4", "phi5", "psi", "f_shift", "bcn_append1",
    }
    tokens = {m.cli_token: m.id for m in MAPS.values()}
    assert tokens == {
        "phi1dd": "phi1_dd", "phi1uu": "phi1_uu", "phi2": "phi2", "phi3": "phi3",
        "phi4": "phi4", "phi5": "phi5", "psi": "psi", "f": "f_shift", "append1": "bcn_append1",
    }
    assert get_map("append1") is MAPS["bcn_append1"]
    with pytest.raises(ValueError):
        get_map("phi9")


def test_weight_shifts():
    deltas = {m.id: m.delta for m in MAPS.values()}
    assert deltas == {
        "phi1_dd": 0, "phi1_uu": 0, "phi2": 0, "phi3": 0, "phi4": 0,
        "phi5": 1, "psi": 1, "f_shift": 2, "bcn_append1": 1,
    }


@pytest.mark.parametrize("map_id", sorted(MAPS))
def test_exactly_one_case_and_weight_law(map_id):
    m = MAPS[map_id]
    for n in range(SMALL + 1):
        if not m.weight_ok(n):
            continue
        for lam in enumerate_class(n, m.domain):
            assert len(m.matching_cases(lam)) == 1, lam
            mu, trace = apply(m, lam)
            assert mu.weight == n + m.delta
            assert m.in_codomain(mu)


@pytest.mark.parametrize(
    "map_id, text",
    [
        ("phi4", "6 1"),
        ("phi4", "5 2"),
        ("phi5", "4 4 2"),
        ("phi5", "2 1 1"),
        ("psi", "5 4 2"),
        ("f_shift", ""),
        ("phi2", "3 2"),
        ("phi1_dd", "5 3 3"),
    ],
)
def test_domain_violations(map_id, text):
    with pytest.raises(DomainError):
        apply(map_id, P(text))


def test_phi4_needs_weight_eight():
    with pytest.raises(DomainError, match="at least 8"):
        apply("phi4", P("6 1"))
    assert apply("phi4", P("8"))[0] == P("8")


def test_case_table_error_is_raised_on_ambiguity():
    m = MAPS["phi3"]
    broken = type(m)(**{**m.__dict__, "cases": m.cases + (("again", lambda lam: True),)})
    with pytest.raises(CaseTableError):
        apply(broken, P("3 1"))


def test_image_membership_examples():
    assert image_membership("phi1_dd", P("18 12 5")).component == "(iii)"
    assert image_membership("phi2", P("14 2")).component == NOT_IN_IMAGE
    assert image_membership("phi1_uu", P("2 1 1 1")).component == NOT_IN_IMAGE
    assert image_membership("phi3", P("1 1")).component == NOT_IN_IMAGE
    assert image_membership("phi5", P("8 1 1 1")).component == NOT_IN_IMAGE
    assert image_membership("phi5", P("4 1^5")).component == NOT_IN_IMAGE
    # outside the codomain is never in the image
    assert image_components("phi2", P("4 3")) == []


def test_c5_subcase_boundary_at_nine():
    assert image_components("phi4", P("5 2 2")) == ["C5(i)"]


def test_invert_rejects_non_images():
    for map_id, text in [("phi2", "14 2"), ("phi3", "1 1"), ("phi5", "4 1^5")]:
        with pytest.raises(NotInImageError):
            invert(map_id, P(text))


def test_invert_rejects_characterized_points_without_preimage():
    # (4, 2, 1, 1) satisfies the third phi3 component, yet the inverse
    # formula gives (5, 3), which phi3 fixes
    assert image_membership("phi3", P("4 2 1 1")).component == "(iii)"
    with pytest.raises(NotInImageError, match="no preimage"):
        invert("phi3", P("4 2 1 1"))


def test_excess_witnesses():
    assert excess_witnesses(10) == []
    assert P("6 5 1") in excess_witnesses(12)
    assert P("6 4 3") in excess_witnesses(13)
    assert P("12 11") in excess_witnesses(23)
    for n in range(11, 51):
        assert excess_family_witness(n) in excess_witnesses(n)
    assert excess_family_witness(10) is None


def test_phi2_case5_k_is_odd():
    for n in range(SMALL + 1):
        for lam in enumerate_class(n, "eu_od"):
            mu, trace = apply("phi2", lam)
            if trace.case == "Case 5" and lam.n_odd:
                assert trace.k % 2 == 1


def test_phi5_merged_part_is_two_mod_four():
    for n in range(6, 41, 2):
        for lam in enumerate_class(n, "bar-ou_eu"):
            mu, trace = apply("phi5", lam)
            if trace.case == "Case 3":
                assert mu[0] % 4 == 2


def test_psi_inverse_then_forward_is_identity_on_codomain():
    for n in range(0, 31, 2):
        for mu in enumerate_class(n + 1, "ou_eu"):
            assert apply("psi", invert("psi", mu))[0] == mu


@pytest.mark.parametrize(
    "map_id", ["phi1_dd", "phi1_uu", "phi2", "phi3", "phi5", "psi", "f_shift", "bcn_append1"]
)
def test_roundtrip_and_injective(map_id):
    assert check_roundtrip(map_id, SMALL + 6).passed
    assert check_injective(map_id, SMALL + 6).passed


def test_phi4_collisions_start_at_23_and_come_from_case3():
    report = check_roundtrip("phi4", 30)
    assert not report.passed
    first = report.counterexamples[0]
    assert first["n"] == 23
    assert first["detail"] == "(8 6 5 3 1) [Case 3] -> (7 4^4) -> (12 7 3 1)"
    assert all("[Case 3]" in c["detail"] for c in report.counterexamples)
    assert check_roundtrip("phi4", 22).passed
    injective = check_injective("phi4", 30)
    assert injective.counterexamples[0]["detail"] == (
        "(12 7 3 1) and (8 6 5 3 1) both map to (7 4^4)"
    )


@pytest.mark.parametrize("map_id", ["phi1_dd", "phi1_uu", "psi", "f_shift", "bcn_append1"])
def test_image_is_exact(map_id):
    report = check_image(map_id, SMALL)
    assert report.passed, report.counterexamples


@pytest.mark.parametrize(
    "map_id, first",
    [
        ("phi2", "(5 5 3 1 1) satisfies B5 but has no preimage"),
        ("phi3", "(4 2 1 1) satisfies (iii) but has no preimage"),
        ("phi4", "(7 6 2 2) satisfies C5(iv) but has no preimage"),
        ("phi5", "(6 1^5) satisfies E3 but has no preimage"),
    ],
)
def test_characterization_too_wide(map_id, first):
    # every image point is characterized, components never overlap and
    # every witness is genuine; the only defect is extra admitted points
    report = check_image(map_id, SMALL)
    assert report.info["uncharacterized"] == 0
    assert report.info["overlaps"] == 0
    assert report.info["no_preimage"] == report.info["failures"] > 0
    assert report.counterexamples[0]["detail"] == first


def test_witness_families_are_outside_the_image():
    for map_id in ("phi1_uu", "phi2", "phi3", "phi4", "phi5", "f_shift", "bcn_append1"):
        m = MAPS[map_id]
        hits = 0
        for n in range(0, 31):
            if not m.weight_ok(n):
                continue
            image = {apply(m, lam)[0] for lam in enumerate_class(n, m.domain)}
            for w in m.non_image(n + m.delta):
                hits += 1
                assert m.in_codomain(w), (map_id, w)
                assert w not in image, (map_id, w)
        assert hits > 0, map_id


def test_witness_family_shapes():
    assert MAPS["phi2"].non_image(16) == [P("14 2")]
    assert MAPS["phi3"].non_image(2) == [P("1 1")]
    assert MAPS["phi3"].non_image(9) == [P("8 1")]
    assert MAPS["phi3"].non_image(10) == [P("8 1 1")]
    assert MAPS["phi4"].non_image(12) == [P("8 2 2")]
    assert MAPS["phi4"].non_image(17) == [P("9 8")]
    assert MAPS["phi4"].non_image(23) == [P("11 10 2")]
    assert MAPS["phi5"].non_image(9) == [P("4 1^5")]
    assert MAPS["phi5"].non_image(11) == [P("8 1 1 1")]
    assert MAPS["f_shift"].non_image(5) == [P("1^5")]
    assert MAPS["bcn_append1"].non_image(4) == [P("4")]


def test_c5_aggregate_disagrees_with_subcase_union():
    # the worked Case 5(v) image has a single even part above 2
    mu = P("11 8 2^7")
    assert image_components("phi4", mu) == ["C5(v)"]
    assert not c5_aggregate(mu)
    assert c5_aggregate(P("13 10 2^4"))


def test_partitions_are_accepted_as_plain_tuples():
    assert apply("phi1_dd", (17, 12, 6))[0] == Partition((18, 12, 5))
