"""Weyl group orbits: dominant representatives, signed orbits and extended symmetry groups."""

from __future__ import annotations

import os
import re
from fractions import Fraction
from math import factorial, lcm, prod
from typing import Iterable, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .config import BudgetExceeded, budget
from .lattice import Weight, coroot_pairing, reflect, vadd, vec
from .rootsys import EmbeddedType, RootSystem, SubRootSystem, TypeLabel

if os.environ.get("DIMDATA_PURE_PYTHON"):
    from . import _kernels_py as K

    BACKEND = "python"
else:
    try:
        from . import _kernels as K

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        from . import _kernels_py as K

        BACKEND = "python"

__all__ = [
    "BACKEND",
    "SymmetrySpec",
    "dominant_rep",
    "canonical_rep",
    "signed_orbit",
    "weyl_order",
    "canonical_tuple",
]


def _compose(p: tuple, q: tuple) -> tuple:
    return tuple(p[q[i]] for i in range(len(p)))


def _close(gens: Iterable[tuple], r: int) -> tuple:
    ident = tuple(range(r))
    group = {ident}
    frontier = [ident]
    gens = list(gens)
    while frontier:
        g = frontier.pop()
        for s in gens:
            h = _compose(s, g)
            if h not in group:
                group.add(h)
                frontier.append(h)
    return tuple(sorted(group))


def diagram_automorphisms(psi: RootSystem) -> tuple:
    """All permutations of the simple roots preserving Cartan entries and root lengths."""
    g = nx.DiGraph()
    for i in range(psi.rank):
        g.add_node(i, norm=psi.norms[psi.simple_idx[i]])
    for i in range(psi.rank):
        for j in range(psi.rank):
            if i != j and psi.cartan[i][j]:
                g.add_edge(i, j, c=psi.cartan[i][j])
    gm = DiGraphMatcher(
        g, g, node_match=lambda a, b: a["norm"] == b["norm"], edge_match=lambda a, b: a["c"] == b["c"]
    )
    perms = {tuple(m[i] for i in range(psi.rank)) for m in gm.isomorphisms_iter()}
    return tuple(sorted(perms))


class SymmetrySpec:
    """W_psi extended by a finite group of diagram permutations (acting on labels)."""

    def __init__(self, base: RootSystem, perms: Iterable[Sequence[int]] = (), tag: str | None = None):
        self.base = base
        r = base.rank
        gens = [tuple(p) for p in perms]
        for p in gens:
            if sorted(p) != list(range(r)):
                raise ValueError("not a permutation of the simple roots")
            if any(base.cartan[p[i]][p[j]] != base.cartan[i][j] for i in range(r) for j in range(r)):
                raise ValueError("permutation does not normalise the root system")
            if any(base.norms[base.simple_idx[p[i]]] != base.norms[base.simple_idx[i]] for i in range(r)):
                raise ValueError("permutation does not preserve root lengths")
        self.group = _close(gens, r)
        self.outer = tuple(g for g in self.group if g != tuple(range(r)))
        self.tag = tag or ("weyl" if not self.outer else "custom")

    @classmethod
    def weyl(cls, psi: RootSystem) -> "SymmetrySpec":
        return cls(psi, (), "weyl")

    @classmethod
    def aut(cls, psi: RootSystem) -> "SymmetrySpec":
        return cls(psi, diagram_automorphisms(psi), "aut")

    @classmethod
    def from_isometries(cls, psi: RootSystem, mats: Iterable[Sequence[Sequence]], tag: str = "custom") -> "SymmetrySpec":
        """Outer generators given as ambient matrices (acting on column vectors)."""
        perms = []
        sp = psi.space
        for m in mats:
            M = [[Fraction(x) for x in row] for row in m]
            act = lambda v: tuple(sum((M[i][j] * v[j] for j in range(sp.dim)), Fraction(0)) for i in range(sp.dim))
            for a in psi.roots:
                if act(a) not in psi.index:
                    raise ValueError("isometry does not permute the roots")
            for a in psi.simple:
                for b in psi.simple:
                    if sp.pair(act(a), act(b)) != sp.pair(a, b):
                        raise ValueError("matrix is not an isometry")
            p = [None] * psi.rank
            for i, w in enumerate(psi.omega):
                d, _ = K.dominant(psi.labels_of(act(w), integral=True), psi.cartan)
                j = [t for t, x in enumerate(d) if x]
                if len(j) != 1 or d[j[0]] != 1:
                    raise ValueError("image of a fundamental weight is not fundamental")
                p[i] = j[0]
            perms.append(tuple(p))
        return cls(psi, perms, tag)

    @property
    def order(self) -> int:
        return len(self.group) * weyl_group_order(self.base)

    def act(self, perm: Sequence[int], mu: Sequence) -> tuple:
        """Apply a diagram permutation to a label vector: simple root i goes to perm[i]."""
        out = [0] * len(mu)
        for i, x in enumerate(mu):
            out[perm[i]] = x
        return tuple(out)

    def canonical_labels(self, mu: Sequence[int]) -> tuple:
        return K.canon(tuple(mu), self.base.cartan, self.outer)

    def __repr__(self) -> str:
        return f"SymmetrySpec({self.base.label}, {self.tag}, |outer|={len(self.group)})"


def dominant_rep(lam: Weight, psi: RootSystem, with_word: bool = False):
    """The dominant element of W_psi . lam; the part orthogonal to psi is untouched."""
    lam = vec(lam)
    mu = psi.labels_of(lam)
    orth = tuple(a - b for a, b in zip(lam, psi.weight_of_labels(mu)))
    if all(isinstance(x, int) for x in mu):
        d, word = K.dominant(mu, psi.cartan)
    else:
        d, word = _dominant_frac(mu, psi.cartan)
    out = vadd(orth, psi.weight_of_labels(d))
    return (out, word) if with_word else out


def _dominant_frac(mu, cartan):
    v = [Fraction(x) for x in mu]
    word = []
    while True:
        j, m = -1, 0
        for i, x in enumerate(v):
            if x < m:
                m, j = x, i
        if j < 0:
            return tuple(v), word
        v = [a - m * b for a, b in zip(v, cartan[j])]
        word.append(j)


def replay_word(lam: Weight, word: Sequence[int], psi: RootSystem) -> Weight:
    out = vec(lam)
    for j in word:
        out = reflect(out, psi.simple[j], psi.space)
    return out


def canonical_rep(lam: Weight, w: SymmetrySpec) -> Weight:
    psi = w.base
    lam = vec(lam)
    mu = psi.labels_of(lam)
    orth = tuple(a - b for a, b in zip(lam, psi.weight_of_labels(mu)))
    if all(isinstance(x, int) for x in mu):
        d, _ = K.dominant(mu, psi.cartan)
    else:
        d, _ = _dominant_frac(mu, psi.cartan)
    best = min(w.act(g, d) for g in w.group)
    return vadd(orth, psi.weight_of_labels(best))


def _phi_gens(phi: SubRootSystem):
    P = phi.parent
    s = phi.simple_idx()
    return [P.labels[i] for i in s], [P.coco[i] for i in s]


def signed_orbit(delta: Weight, phi: SubRootSystem, cap: int | None = None) -> list[tuple[Weight, int]]:
    """[(w delta, sign w)] over W_phi, sorted by label vector."""
    P = phi.parent
    delta = vec(delta)
    for i in phi.pos_idx:
        if coroot_pairing(delta, P.roots[i], P.space) <= 0:
            raise ValueError("delta is not regular for phi")
    cap = budget().orbit if cap is None else cap
    gr, gc = _phi_gens(phi)
    mu = P.labels_of(delta)
    scale = 1
    for x in mu:
        scale = lcm(scale, Fraction(x).denominator)
    mu = tuple(int(x * scale) for x in mu)
    orth = P.orth_part(delta)
    out = []
    for v, s in sorted(K.signed_orbit(mu, gr, gc, cap)):
        lab = tuple(Fraction(x, scale) for x in v)
        out.append((vadd(orth, P.weight_of_labels(lab)), s))
    return out


def canonical_tuple(psi: RootSystem, vecs: Sequence[Sequence[int]]) -> tuple:
    """Canonical form of an ordered tuple of label vectors under W_psi."""
    cart = psi.cartan
    allowed = list(range(psi.rank))
    cur = [tuple(v) for v in vecs]
    out = []
    for t in range(len(cur)):
        d, word = K.dominant_in(cur[t], cart, allowed)
        out.append(d)
        if word:
            cur = cur[: t + 1] + [K.apply_word(v, word, cart) for v in cur[t + 1 :]]
        allowed = [j for j in allowed if d[j] == 0]
    return tuple(out)


_ORDER = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}


def _type_order(family: str, n: int) -> int:
    if family in _ORDER:
        return _ORDER[family]
    if n == 0:
        return 1
    if family == "A":
        return factorial(n + 1)
    if family in ("B", "C", "BC"):
        return 2**n * factorial(n)
    if family == "D":
        return 2 ** (n - 1) * factorial(n)
    raise ValueError(family)


def weyl_order(label) -> int:
    """|W| for a type label, an embedded type list, or a composite string like ``A2+2A1``."""
    if isinstance(label, TypeLabel):
        return _type_order(label.family, label.rank)
    if isinstance(label, EmbeddedType):
        return _type_order(label.family, label.rank)
    if isinstance(label, (list, tuple)):
        return prod(weyl_order(x) for x in label)
    if isinstance(label, SubRootSystem):
        return prod(_type_order(t.family, t.rank) for t in label.types())
    s = str(label).replace(" ", "")
    if s in ("", "0"):
        return 1
    total = 1
    for part in s.split("+"):
        m = re.fullmatch(r"(\d*)\(?([A-Za-z]+)_?(\d*)\)?'?(\^[LS])?'?", part)
        if not m:
            raise ValueError(f"cannot parse {part!r}")
        mult = int(m.group(1) or 1)
        fam = m.group(2).upper()
        if fam in _ORDER:
            total *= _ORDER[fam] ** mult
            continue
        if fam + m.group(3) in _ORDER:
            total *= _ORDER[fam + m.group(3)] ** mult
            continue
        TypeLabel(fam, int(m.group(3)))
        total *= _type_order(fam, int(m.group(3))) ** mult
    return total


def weyl_group_order(psi: RootSystem) -> int:
    """|W_psi| from the components of psi."""
    return weyl_order(psi.full())
