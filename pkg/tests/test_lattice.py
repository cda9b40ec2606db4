from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dimdata.lattice import (
    _hnf_basis,
    AmbientSpace,
    Lattice,
    integral_weight_lattice,
    is_root_system_in_lattice,
    maximal_root_system,
    reflect,
    sandwich_criterion,
    short_vectors,
    vadd,
)
from dimdata.rootsys import build

SYSTEMS = ["A2", "B3", "C3", "D4", "G2", "F4", "E6", "BC2"]

small = st.integers(-4, 4)


def _vec(dim):
    return st.lists(small, min_size=dim, max_size=dim).map(lambda xs: tuple(Fraction(x) for x in xs))


@pytest.mark.parametrize("label", SYSTEMS)
@given(data=st.data())
def test_reflection_is_isometric_involution(label, data):
    P = build(label)
    sp = P.space
    a = P.roots[data.draw(st.integers(0, len(P.roots) - 1))]
    v = data.draw(_vec(sp.dim))
    u = data.draw(_vec(sp.dim))
    sv = reflect(v, a, sp)
    assert reflect(sv, a, sp) == v
    assert sp.pair(sv, reflect(u, a, sp)) == sp.pair(v, u)
    assert reflect(a, a, sp) == tuple(-x for x in a)


@pytest.mark.parametrize("label", SYSTEMS)
def test_built_systems_are_root_systems_in_their_root_lattice(label):
    P = build(label)
    L = Lattice(P.space, _hnf_basis(sorted(P.rootset), P.space.dim))
    assert is_root_system_in_lattice(P.rootset, L)
    assert P.rootset <= maximal_root_system(L)


def test_maximal_root_system_of_z2_is_bc2():
    L = Lattice(AmbientSpace.scaled_identity(2), [(1, 0), (0, 1)])
    psi = maximal_root_system(L)
    assert len(psi) == 12
    assert psi == build("BC2").rootset


def test_maximal_root_system_of_a2_lattice_is_g2():
    G = build("G2")
    A2 = [r for r in G.rootset if G.space.norm(r) == 1]
    L = Lattice(G.space, [A2[0], next(r for r in A2 if G.space.pair(r, A2[0]) == Fraction(-1, 2))])
    assert maximal_root_system(L) == G.rootset


def test_strong_integrality_is_stricter_than_closure():
    # {+-3} is reflection closed and pairwise integral, but 2(1, 3)/9 is not an integer
    sp = AmbientSpace.scaled_identity(1)
    L = Lattice(sp, [(1,)])
    phi = {(Fraction(3),), (Fraction(-3),)}
    assert not is_root_system_in_lattice(phi, L)
    assert not sandwich_criterion(phi, L)
    assert is_root_system_in_lattice({(Fraction(2),), (Fraction(-2),)}, L)
    assert sandwich_criterion({(Fraction(2),), (Fraction(-2),)}, L)


@pytest.mark.parametrize("label", SYSTEMS)
def test_sandwich_agrees_with_definition_on_subsystem_lattices(label):
    P = build(label)
    L = Lattice(P.space, _hnf_basis(sorted(P.rootset), P.space.dim))
    psi = maximal_root_system(L)
    lam = integral_weight_lattice(P.rootset, L)
    assert all(lam.contains(b) for b in L.basis)
    for sub in (P.rootset, frozenset(r for r in P.rootset if P.space.norm(r) == 1)):
        assert sandwich_criterion(sub, L) == is_root_system_in_lattice(sub, L)
    assert sandwich_criterion(psi, L)


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_short_vectors_are_complete_in_z2(xs):
    L = Lattice(AmbientSpace.scaled_identity(2), [(1, 0), (1, 1)])
    bound = L.ambient.norm(L.point(xs))
    found = set(short_vectors(L, bound))
    if any(xs):
        assert tuple(xs) in found
    assert all(L.ambient.norm(L.point(x)) <= bound for x in found)
    assert all(tuple(-c for c in x) in found for x in found)


def test_point_and_coordinates_round_trip():
    P = build("E6")
    L = Lattice(P.space, _hnf_basis(sorted(P.rootset), P.space.dim))
    coords = (1, -2, 0, 3, 1, -1)
    v = L.point(coords)
    assert L.coordinates(v) == tuple(Fraction(c) for c in coords)
    assert L.contains(v)
    assert not L.contains(vadd(v, tuple(Fraction(1, 3) * x for x in P.simple[0])))
