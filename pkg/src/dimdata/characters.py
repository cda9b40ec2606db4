"""Orbit-averaged characters F_{phi,W} in the chi* basis, leading terms and relations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .config import budget
from .lattice import Weight, vscale
from .rootsys import RootSystem, SubRootSystem, classical_blocks
from .weyl import K, SymmetrySpec, _phi_gens, canonical_tuple

__all__ = [
    "Character",
    "LeadingData",
    "half_sum",
    "leading_term",
    "character_F",
    "product_character",
    "characters_equal",
    "linear_relations",
    "classical_counts",
    "classical_equal_criterion",
    "apply_outer",
    "type_d_conditions",
    "fmt",
]


def fmt(x) -> str:
    """Exact rational as "p/q" (integers without a denominator)."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _ctx_key(w: SymmetrySpec) -> tuple:
    P = w.base
    return (P.simple, P.space.gram, w.group)


class Character:
    """Sparse sum of chi*_{lambda,W}; keys are canonical label vectors of lambda."""

    __slots__ = ("w", "terms")

    def __init__(self, w: SymmetrySpec, terms: dict | None = None):
        self.w = w
        self.terms = {tuple(k): Fraction(v) for k, v in (terms or {}).items() if v}

    @property
    def parent(self) -> RootSystem:
        return self.w.base

    @classmethod
    def one(cls, w: SymmetrySpec) -> "Character":
        return cls(w, {(0,) * w.base.rank: 1})

    def _check(self, other: "Character"):
        if _ctx_key(self.w) != _ctx_key(other.w):
            raise ValueError("characters live in different contexts")

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Character(self.w, out)

    def __sub__(self, other: "Character") -> "Character":
        return self + other.scale(-1)

    def scale(self, c) -> "Character":
        return Character(self.w, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c) -> "Character":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and _ctx_key(self.w) == _ctx_key(other.w) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.parent.rank, Fraction(0))

    def norm(self, key) -> Fraction:
        return self.parent.norm_of_labels(key)

    def sorted_items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (self.norm(kv[0]), kv[0]))

    def longest(self) -> list:
        if not self.terms:
            return []
        m = max(self.norm(k) for k in self.terms)
        return [(k, v) for k, v in self.sorted_items() if self.norm(k) == m]

    def __repr__(self) -> str:
        return f"Character({self.pretty()})"

    def pretty(self) -> str:
        parts = []
        for k, v in self.sorted_items():
            w = "+".join(
                (f"{x}w{i + 1}" if x != 1 else f"w{i + 1}") for i, x in enumerate(k) if x
            )
            parts.append(f"{fmt(v)}*chi[{w or '0'}]")
        return " + ".join(parts) or "0"

    def to_json(self) -> list:
        P = self.parent
        return [
            {
                "weight": [fmt(x) for x in P.weight_of_labels(k)],
                "fw": list(k),
                "norm": fmt(self.norm(k)),
                "coefficient": fmt(v),
            }
            for k, v in self.sorted_items()
        ]


@dataclass(frozen=True)
class LeadingData:
    two_delta_prime: Weight
    fw_coords: tuple
    e: Fraction

    def fw_string(self) -> str:
        return fw_string(self.fw_coords)


def fw_string(mu: Sequence[int]) -> str:
    parts = [(f"{x}w{i + 1}" if x != 1 else f"w{i + 1}") for i, x in enumerate(mu) if x]
    return "+".join(parts) or "0"


def half_sum(phi: SubRootSystem) -> Weight:
    if not phi.is_reduced():
        raise ValueError("half_sum needs a reduced subsystem")
    return vscale(Fraction(1, 2), phi.two_delta())


def leading_term(phi: SubRootSystem) -> LeadingData:
    """2 delta' (dominant representative of 2 delta_phi), its labels and squared norm."""
    if not phi.is_reduced():
        raise ValueError("leading terms are defined for reduced subsystems")
    P = phi.parent
    mu, _ = K.dominant(phi.two_delta_labels(), P.cartan)
    return LeadingData(P.weight_of_labels(mu), tuple(mu), P.norm_of_labels(mu))


def character_F(phi: SubRootSystem, w: SymmetrySpec | None = None, cap: int | None = None) -> Character:
    """F_{phi,W} = sum over W_phi of sign(w) chi*_{delta - w delta}."""
    P = phi.parent
    w = SymmetrySpec.weyl(P) if w is None else w
    if w.base is not P:
        raise ValueError("symmetry group belongs to a different root system")
    if not phi.is_reduced():
        raise ValueError("F is defined for reduced subsystems")
    cap = budget().orbit if cap is None else cap
    if not phi.idx:
        return Character.one(w)
    gr, gc = _phi_gens(phi)
    D = phi.two_delta_labels()
    terms = K.f_character(D, gr, gc, P.cartan, list(w.outer), cap)
    return Character(w, terms)


def product_character(parts: Sequence[Character]) -> Character:
    """Tensor product over pairwise orthogonal parents: keys concatenate, coefficients multiply."""
    if not parts:
        raise ValueError("empty product")
    U = RootSystem.union([c.parent for c in parts])
    perms, off = [], 0
    r = U.rank
    for c in parts:
        k = c.parent.rank
        for g in c.w.outer:
            p = list(range(r))
            for i in range(k):
                p[off + i] = off + g[i]
            perms.append(tuple(p))
        off += k
    w = SymmetrySpec(U, perms, "product")
    acc = {(): Fraction(1)}
    for c in parts:
        nxt = {}
        for k1, v1 in acc.items():
            for k2, v2 in c.terms.items():
                key = k1 + k2
                nxt[key] = nxt.get(key, 0) + v1 * v2
        acc = nxt
    return Character(w, acc)


def characters_equal(c1: Character, c2: Character) -> bool:
    c1._check(c2)
    return c1.terms == c2.terms


def _primitive(v: Sequence[Fraction]) -> tuple:
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints] if g else ints
    first = next((x for x in ints if x), 0)
    return tuple(-x for x in ints) if first < 0 else tuple(ints)


def linear_relations(cs: Sequence[Character]) -> list[tuple[int, ...]]:
    """Basis of integer vectors r (primitive, first nonzero entry positive) with sum r_i c_i = 0."""
    cs = list(cs)
    if not cs:
        return []
    for c in cs[1:]:
        cs[0]._check(c)
    keys = sorted({k for c in cs for k in c.terms})
    if not keys:
        return [tuple(1 if i == j else 0 for i in range(len(cs))) for j in range(len(cs))]
    rows = [[QQ(c.terms.get(k, Fraction(0)).numerator, c.terms.get(k, Fraction(0)).denominator) for k in keys] for c in cs]
    M = DomainMatrix(rows, (len(cs), len(keys)), QQ).transpose()
    ns = M.nullspace().to_Matrix()
    out = []
    for i in range(ns.rows):
        out.append(_primitive([Fraction(int(x.p), int(x.q)) for x in ns.row(i)]))
    return sorted(out, reverse=True)


def relation_holds(cs: Sequence[Character], coeffs: Sequence[int]) -> bool:
    total = Character(cs[0].w)
    for c, a in zip(cs, coeffs):
        total = total + c.scale(a)
    return total.is_zero()


# ---------------------------------------------------------------------------
# classical parents


def classical_counts(phi: SubRootSystem) -> dict:
    """Counts a_m, b_m, c_m, d_m of blocks A_{m-1}, B_m, C_m, D_m (singletons count as A_0)."""
    out = {"a": {}, "b": {}, "c": {}, "d": {}, "bc": {}}
    names = {"A": "a", "B": "b", "C": "c", "D": "d", "BC": "bc"}
    for _, t, coords in classical_blocks(phi):
        m = len(coords)
        d = out[names[t.family]]
        d[m] = d.get(m, 0) + 1
    return out


def classical_equal_criterion(phi1: SubRootSystem, phi2: SubRootSystem, variant: bool = False) -> bool:
    """Block-count test for F_{phi1} = F_{phi2} inside C_n or BC_n.

    ``variant=True`` uses the shifted indexing (a_{2m-1}, c_{m-1}, d_m).
    """
    P = phi1.parent
    if phi2.parent is not P:
        raise ValueError("subsystems live in different parents")
    if P.label.family not in ("C", "BC"):
        raise ValueError("criterion applies to C_n and BC_n parents")
    n = P.space.dim
    x, y = classical_counts(phi1), classical_counts(phi2)
    g = lambda c, kind, m: c[kind].get(m, 0)
    for m in range(1, n + 2):
        if g(x, "b", m) != g(y, "b", m) or g(x, "a", 2 * m) != g(y, "a", 2 * m):
            return False
        if variant:
            da = g(x, "a", 2 * m - 1) - g(y, "a", 2 * m - 1)
            dc = g(y, "c", m - 1) - g(x, "c", m - 1)
            dd = g(y, "d", m) - g(x, "d", m)
        else:
            da = g(x, "a", 2 * m + 1) - g(y, "a", 2 * m + 1)
            dc = g(y, "c", m) - g(x, "c", m)
            dd = g(y, "d", m + 1) - g(x, "d", m + 1)
        if not da == dc == dd:
            return False
    return True


def apply_outer(c: Character, perm: Sequence[int]) -> Character:
    """Image of c under a diagram automorphism, re-canonicalised in c's context."""
    P = c.parent
    out = {}
    for k, v in c.terms.items():
        img = [0] * len(k)
        for i, x in enumerate(k):
            img[perm[i]] = x
        key = K.canon(tuple(img), P.cartan, list(c.w.outer))
        out[key] = out.get(key, 0) + v
    return Character(c.w, out)


def type_d_conditions(phi: SubRootSystem) -> dict:
    """The four conditions that single out the W_D classes split by the diagram flip of D_n."""
    from .subsystems import are_conjugate, _image

    P = phi.parent
    if P.label.family != "D" or P.rank < 5:
        raise ValueError("needs a D_n parent with n >= 5")
    n = P.rank
    flip = tuple(range(n - 2)) + (n - 1, n - 2)
    F = character_F(phi, SymmetrySpec.weyl(P))
    not_invariant = apply_outer(F, flip) != F
    mu = leading_term(phi).fw_coords
    lead_moves = mu[n - 2] != mu[n - 1]
    blocks = classical_blocks(phi)
    shape = all(t.family == "A" and len(coords) % 2 == 0 for _, t, coords in blocks)
    gphi = SubRootSystem(P, _image(phi, flip))
    not_conj = not are_conjugate(phi, gphi)
    return {
        "F_not_flip_invariant": not_invariant,
        "leading_not_flip_invariant": lead_moves,
        "even_A_blocks_only": shape,
        "not_conjugate_to_flip": not_conj,
    }
