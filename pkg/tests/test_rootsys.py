from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dimdata.lattice import coroot_pairing, vadd
from dimdata.rootsys import (
    TypeLabel,
    build,
    classify_cartan,
    closure,
    cusp_product,
    fundamental_weights,
    generated_subsystem,
    root_string,
)

ROOT_COUNTS = {
    "A1": 2, "A4": 20, "B3": 18, "C3": 18, "D4": 24, "D5": 40, "G2": 12, "F4": 48,
    "E6": 72, "E7": 126, "E8": 240, "BC1": 4, "BC3": 24,
}
LENGTHS = {
    "B3": {1: 6, 2: 12},
    "C3": {1: 12, 2: 6},
    "G2": {1: 6, 3: 6},
    "F4": {1: 24, 2: 24},
    "BC2": {1: 4, 2: 4, 4: 4},
    "E8": {1: 240},
}


@pytest.mark.parametrize("label,count", sorted(ROOT_COUNTS.items()))
def test_root_counts(label, count):
    P = build(label)
    assert len(P.roots) == count
    assert P.npos * 2 == count


@pytest.mark.parametrize("label,lengths", sorted(LENGTHS.items()))
def test_short_roots_have_norm_one(label, lengths):
    P = build(label)
    assert Counter(P.norms) == {Fraction(k): v for k, v in lengths.items()}


@pytest.mark.parametrize("label", ["A3", "B4", "C4", "D5", "G2", "F4", "E6", "E7"])
def test_cartan_classification_round_trip(label):
    P = build(label)
    t = TypeLabel.parse(label)
    assert classify_cartan(P.cartan, [P.norms[i] for i in P.simple_idx]) == (t.family, t.rank)


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4", "G2", "F4", "E6", "BC2"])
def test_half_sum_of_positive_roots(label):
    P = build(label)
    total = P.space.zero()
    for r in P.roots[: P.npos]:
        total = vadd(total, r)
    assert total == P.two_delta()
    if P.is_reduced():
        # 2 delta pairs to 2 with every simple coroot
        assert all(coroot_pairing(P.two_delta(), s, P.space) == 2 for s in P.simple)


@pytest.mark.parametrize("label", ["B3", "G2", "F4", "D4", "C3"])
@given(data=st.data())
def test_cusp_product_matches_root_strings(label, data):
    P = build(label)
    n = len(P.roots)
    a = P.roots[data.draw(st.integers(0, n - 1))]
    b = P.roots[data.draw(st.integers(0, n - 1))]
    if b in (a, tuple(-x for x in a)):
        return
    up, down = root_string(b, a, P)
    assert cusp_product(b, a, P) == down - up


@pytest.mark.parametrize("label", ["B3", "G2", "F4", "A4"])
@given(data=st.data())
def test_generated_subsystem_is_idempotent_and_monotone(label, data):
    P = build(label)
    n = len(P.roots)
    xs = data.draw(st.lists(st.integers(0, n - 1), max_size=3))
    ys = data.draw(st.lists(st.integers(0, n - 1), max_size=2))
    s = generated_subsystem([P.roots[i] for i in xs], P)
    assert generated_subsystem(s.roots, P).idx == s.idx
    assert s.is_closed()
    t = generated_subsystem([P.roots[i] for i in xs + ys], P)
    assert s.idx <= t.idx
    assert closure(P, list(s.idx)) == s.idx


@pytest.mark.parametrize("label", ["A3", "B3", "G2", "F4", "E6"])
def test_fundamental_weights_are_dual_to_coroots(label):
    P = build(label)
    om = fundamental_weights(P)
    for i, w in enumerate(om):
        for j, s in enumerate(P.simple):
            assert coroot_pairing(w, s, P.space) == (1 if i == j else 0)


def test_subsystem_type_strings():
    P = build("F4")
    long_ = [r for r in P.roots if P.space.norm(r) == 2]
    assert generated_subsystem(long_, P).type_string() == "D4^L"
    short = [r for r in P.roots if P.space.norm(r) == 1]
    assert generated_subsystem(short, P).type_string() == "D4^S"


def test_rejects_non_roots():
    P = build("A2")
    with pytest.raises(ValueError):
        generated_subsystem([(Fraction(1), Fraction(0), Fraction(0))], P)
