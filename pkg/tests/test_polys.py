from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dimdata.characters import character_F, leading_term
from dimdata.config import BudgetExceeded
from dimdata.polys import (
    FIXED,
    MultiPoly,
    UniPoly,
    _evaluate,
    embed_E,
    eprime,
    genfun,
    genfun_product,
    genfun_sum,
    lp_poly,
    one_minus_t,
    sigma,
    specialize_psi,
    verify_identities,
)
from dimdata.subsystems import ClassicalIndex, classes, classical_subsystem, named_subsystem

KINDS = ["a", "b", "b'", "c", "d"]


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", range(0, 6))
def test_family_is_homogeneous_of_degree_n(kind, n):
    p = lp_poly(kind, n)
    assert p.is_homogeneous()
    assert p.degrees() == {n}


@pytest.mark.parametrize("n", range(0, 6))
def test_sigma_swaps_b_and_b_prime(n):
    assert sigma(lp_poly("b", n)) == lp_poly("b'", n)
    assert sigma(sigma(lp_poly("c", n))) == lp_poly("c", n)


def test_small_members():
    x = MultiPoly.var
    assert lp_poly("a", 1) == x(0)
    assert lp_poly("a", 2) == x(0) * x(0) - x(1) * x(1)
    assert lp_poly("b", 1) == x(0) - x(1)
    assert lp_poly("c", 1) == x(0) - x(2)
    assert lp_poly("d", 1) == x(0)


BLOCK = {"a": lambda n: ClassicalIndex(a=(n,)), "b": lambda n: ClassicalIndex(b=(n,)),
         "c": lambda n: ClassicalIndex(c=(n,)), "d": lambda n: ClassicalIndex(d=(n,))}


@pytest.mark.parametrize("kind", ["a", "b", "c", "d"])
@pytest.mark.parametrize("n", range(1, 5))
def test_e_of_block_characters_gives_the_families(kind, n):
    if kind == "d" and n < 2:
        pytest.skip("D_1 is empty")
    phi = classical_subsystem(f"BC{n}", BLOCK[kind](n))
    assert embed_E(character_F(phi)) == lp_poly(kind, n)


@given(st.lists(st.sampled_from(["a", "b", "c", "d"]), min_size=1, max_size=3),
       st.lists(st.integers(1, 2), min_size=3, max_size=3))
def test_e_is_multiplicative_over_blocks(kinds, sizes):
    blocks = [(k, max(s, 2) if k == "d" else s) for k, s in zip(kinds, sizes)]
    n = sum(s for _, s in blocks)
    idx = ClassicalIndex(**{k: tuple(s for kk, s in blocks if kk == k) for k in "abcd"})
    phi = classical_subsystem(f"BC{n}", idx)
    expect = MultiPoly.const(1)
    for k, s in blocks:
        expect = expect * lp_poly(k, s)
    assert embed_E(character_F(phi)) == expect


@pytest.mark.parametrize("parent", ["B3", "C3", "G2", "F4", "D4", "A4", "E6"])
def test_sum_and_product_paths_agree(parent):
    for phi in classes(parent):
        assert genfun_sum(phi) == genfun_product(phi)


@pytest.mark.parametrize("parent", ["B3", "G2", "F4", "E6"])
def test_palindromy(parent):
    for phi in classes(parent):
        f = genfun(phi)
        assert f.is_palindromic((-1) ** (len(phi) // 2))
        assert f.coeff(0) == 1
        assert f.degree == leading_term(phi).e


@pytest.mark.parametrize("n", range(1, 4))
def test_psi_e_triangle(n):
    for phi in classes(f"BC{n}"):
        F = character_F(phi)
        assert specialize_psi(embed_E(F)) == eprime(F) == genfun_sum(phi)


def test_univariate_helpers():
    p = one_minus_t(2) * one_minus_t(3)
    assert p == UniPoly({0: 1, 2: -1, 3: -1, 5: 1})
    assert p.subs_power(2) == UniPoly({0: 1, 4: -1, 6: -1, 10: 1})
    assert p.is_palindromic(1)
    assert p.degree == 5
    assert p.low_terms(3) == [1, 0, -1]
    with pytest.raises(ValueError):
        one_minus_t(Fraction(1, 2))


def test_e8_leading_coefficient_example():
    f = genfun(named_subsystem("A5", "E8"))
    assert f.degree == 35 and f.coeff(35) == -1


def test_seed_identities_vanish():
    for name in FIXED:
        assert _evaluate(FIXED[name]()).is_zero(), name


def test_perturbed_identity_does_not_vanish():
    terms = FIXED["a3*d1+d2^2-2a2*d2"]()
    terms[0] = (2, terms[0][1])
    assert not _evaluate(terms).is_zero()


def test_identity_report_and_caps():
    rep = verify_identities(n_max=2, names=["a2n=bn*b'n", "BC"])
    assert [r["n"] for r in rep] == [1, 2, 0, 1, 2]
    assert all(r["status"] == "pass" for r in rep)
    with pytest.raises(BudgetExceeded):
        verify_identities(n_max=99)
    with pytest.raises(BudgetExceeded):
        lp_poly("a", 50)
    with pytest.raises(ValueError):
        lp_poly("e", 2)


def test_embed_needs_classical_coordinates():
    with pytest.raises(ValueError):
        embed_E(character_F(classes("G2")[1]))
