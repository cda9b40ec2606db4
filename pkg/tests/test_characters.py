from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dimdata.characters import (
    Character,
    apply_outer,
    character_F,
    characters_equal,
    classical_equal_criterion,
    leading_term,
    linear_relations,
    product_character,
    relation_holds,
    type_d_conditions,
)
from dimdata.rootsys import SubRootSystem, build
from dimdata.subsystems import ClassicalIndex, _image, classes, classical_subsystem, named_subsystem
from dimdata.weyl import SymmetrySpec

PARENTS = ["G2", "B3", "C3", "D4", "F4", "E6"]


@pytest.mark.parametrize("parent", PARENTS)
@given(data=st.data())
def test_constant_term_and_leading_term(parent, data):
    phi = data.draw(st.sampled_from(classes(parent)))
    for w in (SymmetrySpec.weyl(phi.parent), SymmetrySpec.aut(phi.parent)):
        F = character_F(phi, w)
        assert F.constant_term() == 1
        (key, coeff), = F.longest()
        assert abs(coeff) == 1
        assert key == w.canonical_labels(leading_term(phi).fw_coords)


@pytest.mark.parametrize("parent", ["D4", "E6"])
def test_outer_action_is_equivariant(parent):
    P = build(parent)
    w = SymmetrySpec.weyl(P)
    for phi in classes(parent):
        F = character_F(phi, w)
        for g in SymmetrySpec.aut(P).group:
            assert apply_outer(F, g) == character_F(SubRootSystem(P, _image(phi, g)), w)


@pytest.mark.parametrize("parent", ["D4", "E6"])
def test_aut_characters_are_outer_invariant(parent):
    P = build(parent)
    w = SymmetrySpec.aut(P)
    for phi in classes(parent, "aut"):
        F = character_F(phi, w)
        assert all(apply_outer(F, g) == F for g in w.group)


@pytest.mark.parametrize("parent", PARENTS)
def test_e_is_additive_over_components(parent):
    for phi in classes(parent):
        total = Fraction(0)
        for comp, _ in phi.components():
            td = comp.two_delta()
            total += phi.parent.space.norm(td)
        assert leading_term(phi).e == total


@pytest.mark.parametrize("parent,name", [("E7", "A2+2A1"), ("E6", "3A2"), ("F4", "A1^L+A2^S")])
def test_product_of_component_characters(parent, name):
    phi = named_subsystem(name, parent)
    parts = [c.as_root_system() for c, _ in phi.components()]
    prod = product_character([character_F(p.full()) for p in parts])
    assert character_F(prod.parent.full(), prod.w) == prod


def test_g2_relation_is_the_whole_nullspace():
    reps = classes("G2")
    cs = [character_F(c) for c in reps]
    ns = linear_relations(cs)
    assert len(ns) == 1
    assert relation_holds(cs, ns[0])
    assert not relation_holds(cs, [x + (i == 1) for i, x in enumerate(ns[0])])


def test_characters_from_different_contexts_do_not_mix():
    a = character_F(classes("D4")[1], SymmetrySpec.weyl(build("D4")))
    b = character_F(classes("D4")[1], SymmetrySpec.aut(build("D4")))
    with pytest.raises(ValueError):
        characters_equal(a, b)


def test_arithmetic():
    w = SymmetrySpec.weyl(build("B2"))
    one = Character.one(w)
    assert (one - one).is_zero()
    assert (2 * one).constant_term() == 2
    assert (one + one.scale(Fraction(1, 2))).terms == {(0, 0): Fraction(3, 2)}


@pytest.mark.parametrize("n", [3, 4])
def test_classical_criterion_is_symmetric_and_reflexive(n):
    reps = [c for c in classes(f"BC{n}") if c.rank == n]
    for x in reps:
        for y in reps:
            assert classical_equal_criterion(x, y) == classical_equal_criterion(y, x)
        assert classical_equal_criterion(x, x)


def test_classical_criterion_rejects_other_parents():
    phi = classes("D4")[1]
    with pytest.raises(ValueError):
        classical_equal_criterion(phi, phi)


@pytest.mark.parametrize("n", [5, 6])
def test_type_d_conditions_agree(n):
    for phi in classes(f"D{n}"):
        vals = set(type_d_conditions(phi).values())
        assert len(vals) == 1


def test_type_d_split_example():
    phi = classical_subsystem("D6", ClassicalIndex(a=(2, 2, 2)))
    assert all(type_d_conditions(phi).values())
    psi = classical_subsystem("D6", ClassicalIndex(a=(3, 3)))
    assert not any(type_d_conditions(psi).values())


@pytest.mark.parametrize("parent", ["G2", "B3", "C3", "D4", "F4", "E6", "A4", "BC3"])
def test_longest_coefficient_sign(parent):
    for phi in classes(parent):
        (_, coeff), = character_F(phi).longest()
        assert coeff == (-1) ** (len(phi) // 2)


@pytest.mark.parametrize("alias,name", [("2D2", "4A1"), ("D2+A1", "3A1")])
def test_d4_aliases(alias, name):
    assert named_subsystem(alias, "D4").idx == named_subsystem(name, "D4").idx
