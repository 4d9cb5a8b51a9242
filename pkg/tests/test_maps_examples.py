"""Worked examples for every map, reproduced exactly."""

import pytest

from paritysep.maps import apply, invert
from paritysep.partition import parse_partition as P

# (map, input, output, case, trace fields)
FORWARD = [
    ("phi1_dd", "17 12 6", "18 12 5", "Case 2", {}),
    ("phi1_uu", "11 9 9 6 4 2 2", "12 10 10 6 3 1 1", "Case 2", {}),
    ("phi1_uu", "11 9 9 7 4 2 2", "12 10 10 7 3 1 1", "Case 2", {}),
    ("phi2", "15 1", "15 1", "Case 1", {}),
    ("phi2", "16", "16", "Case 2", {}),
    ("phi2", "8 5 3", "7 5 4", "Case 3", {}),
    ("phi2", "8 4 3 1", "9 3 3 1", "Case 4", {}),
    ("phi2", "8 5", "5 5 3", "Case 5", {"k": 3}),
    ("phi2", "8 6 2", "7 5 1^4", "Case 5", {"k": 1}),
    ("phi2", "8 6 6 4 2 1", "7 5 5 3 1^7", "Case 5", {"k": 1}),
    ("phi2", "8 6 6 5 3 1", "7 5 5 5 3 1^4", "Case 5", {"k": 1}),
    ("phi2", "10 8 8 5 3 1", "7 5 5 5 3 3 3 3 1", "Case 5", {"k": 3}),
    ("phi2", "10 8 8 5 1", "7 5 5 5 3 3 3 1", "Case 5", {"k": 3}),
    ("phi2", "16 14 10 10 7 5 3 1", "13 11 7 7 7 5 3^5 1", "Case 5", {"k": 3}),
    ("phi2", "16 14 10 10 7 5 1", "13 11 7 7 7 5 3^4 1", "Case 5", {"k": 3}),
    ("phi2", "16 14 10 10 3 1", "13 11 7 7 3^5 1", "Case 5", {"k": 3}),
    ("phi2", "16 14 10 10 5 3 1", "11 9 5^7 3 1", "Case 5", {"k": 5}),
    ("phi3", "10 8 2 2", "9 7 1^6", "Case 3", {}),
    ("phi4", "16 12 7", "17 12 6", "Case 2", {}),
    ("phi4", "20 16 12 7 5 1", "17 12 6^5 2", "Case 3",
     {"k": 2, "q": 3, "r": 2, "eta": P("16 12 7")}),
    ("phi4", "20 16 12 6 5 1", "16 12 6 6 2^10", "Case 4", {"k": 2}),
    ("phi4", "8 1", "5 2 2", "Case 5(i)", {}),
    ("phi4", "8 4 1", "5 2^4", "Case 5(ii)", {}),
    ("phi4", "12 10 2 1", "13 2^6", "Case 5(iii)", {}),
    ("phi4", "12 10 8 1", "13 10 2^4", "Case 5(iv)", {}),
    ("phi4", "12 10 8 2 1", "11 8 2^7", "Case 5(v)", {}),
    ("phi5", "7 7 5 5", "8 7 5 5", "Case 1", {}),
    ("phi5", "12 6 6", "12 6 6 1", "Case 2", {}),
    ("phi5", "11 11 9 9 8 2 2", "22 8 8 7 1^8", "Case 3", {}),
]

INVERSE = [
    ("phi3", "9 7 1^6", "10 8 2 2"),
    ("phi2", "5 5 3", "8 5"),
]


@pytest.mark.parametrize("map_id, lam, mu, case, fields", FORWARD)
def test_forward_example(map_id, lam, mu, case, fields):
    image, trace = apply(map_id, P(lam))
    assert image == P(mu)
    assert trace.case == case
    for name in ("k", "q", "r", "eta"):
        assert getattr(trace, name) == fields.get(name)


# Case 3 re-encodes the largest part as blocks of 2k+2, but phi4(eta) may
# already contain a part 2k+2; the blocks then cannot be told apart and a
# second partition lands on the same image.
COLLIDING = {("phi4", "20 16 12 7 5 1"): "26 16 13 5 1"}


@pytest.mark.parametrize("map_id, lam, mu, case, fields", FORWARD)
def test_forward_example_inverts(map_id, lam, mu, case, fields):
    back = invert(map_id, P(mu))
    assert apply(map_id, back)[0] == P(mu)
    assert back == P(COLLIDING.get((map_id, lam), lam))


def test_phi4_case3_example_shares_its_image():
    lam, other = P("20 16 12 7 5 1"), P("26 16 13 5 1")
    assert lam != other
    assert apply("phi4", lam)[0] == apply("phi4", other)[0] == P("17 12 6^5 2")


@pytest.mark.parametrize("map_id, mu, lam", INVERSE)
def test_inverse_example(map_id, mu, lam):
    assert invert(map_id, P(mu)) == P(lam)


def test_small_inverse_rules():
    assert invert("phi4", P("5 2 2")) == P("8 1")
    assert invert("phi5", P("22 8 8 7 1^8")) == P("11 11 9 9 8 2 2")


@pytest.mark.parametrize(
    "map_id, lam, mu, case",
    [
        ("phi1_dd", "9 7 5", "9 7 5", "Case 1"),
        ("phi3", "15 1", "15 1", "Case 1"),
        ("phi3", "6 4 2", "6 4 2", "Case 2"),
        ("phi2", "2 1", "1^3", "Case 5"),
        ("psi", "3 1", "3 1 1", "Case 1"),
        ("psi", "5 5 4 2", "5 5 5 2", "Case 2"),
        ("f_shift", "3 1", "5 1", "shift"),
        ("bcn_append1", "6", "6 1", "append"),
    ],
)
def test_identity_and_auxiliary_cases(map_id, lam, mu, case):
    image, trace = apply(map_id, P(lam))
    assert (image, trace.case) == (P(mu), case)


def test_trace_json_fields():
    _, trace = apply("phi4", P("20 16 12 7 5 1"))
    assert trace.to_dict() == {
        "map": "phi4", "case": "Case 3", "k": 2, "q": 3, "r": 2, "eta": "16 12 7",
    }
