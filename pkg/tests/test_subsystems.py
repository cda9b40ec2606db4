import pytest
from hypothesis import given
from hypothesis import strategies as st

from dimdata.config import BudgetExceeded
from dimdata.rootsys import TypeLabel, build
from dimdata.subsystems import (
    _ALLOWED,
    ClassicalIndex,
    are_conjugate,
    class_name,
    classes,
    classical_index_of,
    classical_subsystem,
    enumerate_subsystems,
    fingerprint,
    named_subsystem,
    registry_names,
)
from dimdata.weyl import SymmetrySpec, replay_word


def _partitions(n, top=None):
    top = n if top is None else top
    if n == 0:
        return 1
    return sum(_partitions(n - k, k) for k in range(1, min(n, top) + 1))


def classical_indices(family, n):
    """Every block layout of a classical parent; size-1 A blocks are implicit."""
    kinds = [k for k in ("bc", "b", "c", "d", "a") if k in _ALLOWED[family]]
    blocks = [(k, m) for k in kinds for m in range(1, n + 1) if not (k in ("a", "d") and m < 2)]
    out = []

    def rec(i, rem, acc):
        if i == len(blocks):
            out.append(ClassicalIndex(**{k: tuple(m for kk, m in acc if kk == k) for k in kinds}))
            return
        k, m = blocks[i]
        c = 0
        while c * m <= rem:
            rec(i + 1, rem - c * m, acc + [(k, m)] * c)
            c += 1

    rec(0, n, [])
    res = []
    for ix in out:
        res.append(ix)
        if family == "D" and ix.padded(n).ambiguous_in_d():
            res.append(ClassicalIndex(ix.bc, ix.b, ix.c, ix.d, ix.a, primed=True))
    return res


@pytest.mark.parametrize("n", range(2, 9))
def test_type_a_classes_are_partitions(n):
    assert len(classes(f"A{n - 1}")) == _partitions(n)


@pytest.mark.parametrize("label,count", [("G2", 7), ("D4", 12), ("F4", 37), ("E6", 21), ("B3", 13), ("C3", 13)])
def test_class_counts(label, count):
    assert len(classes(label)) == count


def test_d4_classes_under_automorphisms():
    assert len(classes("D4", "aut")) == 8


@pytest.mark.parametrize("label", ["B2", "B3", "C3", "D4", "D5", "BC2", "BC3", "A4"])
def test_classical_indices_classify(label):
    t = TypeLabel.parse(label)
    n = t.rank + 1 if t.family == "A" else t.rank
    idx = classical_indices(t.family, n)
    assert len(classes(label, "weyl", reduced_only=False)) == len(idx)
    assert len(classes(label)) == sum(1 for i in idx if not i.bc)


@pytest.mark.parametrize("label", ["B3", "C4", "D4", "D5", "BC3", "A4"])
def test_classical_round_trip(label):
    t = TypeLabel.parse(label)
    n = t.rank + 1 if t.family == "A" else t.rank
    for ix in classical_indices(t.family, n):
        phi = classical_subsystem(label, ix)
        assert phi.is_closed()
        assert classical_index_of(phi) == ix.padded(n)


def test_primed_classes_are_not_conjugate():
    a = classical_subsystem("D4", ClassicalIndex(a=(2, 2)))
    b = classical_subsystem("D4", ClassicalIndex(a=(2, 2), primed=True))
    assert not are_conjugate(a, b)
    assert are_conjugate(a, b, SymmetrySpec.aut(a.parent))


@pytest.mark.parametrize("label", ["F4", "B3", "E6"])
@given(data=st.data())
def test_conjugates_share_fingerprint(label, data):
    reps = classes(label)
    phi = data.draw(st.sampled_from(reps))
    P = phi.parent
    word = data.draw(st.lists(st.integers(0, P.rank - 1), max_size=6))
    moved = [P.index[replay_word(P.roots[i], word, P)] for i in phi.idx]
    from dimdata.rootsys import SubRootSystem

    psi = SubRootSystem(P, moved)
    assert are_conjugate(phi, psi)
    assert fingerprint(psi) == fingerprint(phi)
    others = [r for r in reps if r is not phi]
    assert not any(are_conjugate(psi, r) for r in others if len(r) == len(psi))


@pytest.mark.parametrize("parent", ["D4", "E6", "E7", "E8", "F4", "G2"])
def test_registry_names_resolve(parent):
    for name in registry_names(parent):
        phi = named_subsystem(name, parent)
        assert phi.is_closed()


def test_class_names_in_g2():
    names = sorted(class_name(c) for c in classes("G2"))
    assert len(names) == len(set(names)) == 7


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_subsystems(build("E7"), max_roots=72)


def test_non_reduced_classes_of_bc1():
    reps = classes("BC1", "weyl", reduced_only=False)
    assert "BC1" in {r.type_string() for r in reps}
    assert len(reps) == 4
