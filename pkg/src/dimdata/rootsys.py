"""Root systems with integer label tables.

Every root system carries a *skeleton*: the simple system of the reduced part
``{a : 2a not a root}``.  For reduced systems this is the usual base; for BC_n it is
the C_n base, which keeps every coroot an integer combination of simple coroots.

Per root we store

* ``labels[i]``  -- the pairings <root_i, s_j^vee> with the skeleton coroots,
* ``coco[i]``    -- the coefficients of root_i^vee in the simple coroots,

so that reflections act on label vectors by integer arithmetic only.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import re
from typing import Iterable, Sequence

import sympy

from .lattice import (
    AmbientSpace,
    Weight,
    coroot_pairing,
    is_zero,
    reflect,
    to_sympy,
    vadd,
    vec,
    vneg,
    vscale,
)

CLASSICAL = ("A", "B", "C", "D", "BC")
EXCEPTIONAL = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
FAMILIES = CLASSICAL + tuple(EXCEPTIONAL)


@dataclass(frozen=True)
class TypeLabel:
    family: str
    rank: int

    def __post_init__(self):
        if self.family in EXCEPTIONAL:
            if self.rank != EXCEPTIONAL[self.family]:
                raise ValueError(f"{self.family} has rank {EXCEPTIONAL[self.family]}")
        elif self.family in CLASSICAL:
            lo = 2 if self.family == "D" else 1
            if not isinstance(self.rank, int) or self.rank < lo:
                raise ValueError(f"{self.family}{self.rank}: rank must be >= {lo}")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    @classmethod
    def parse(cls, s: str) -> "TypeLabel":
        t = s.strip().replace("_", "").upper()
        if t in EXCEPTIONAL:
            return cls(t, EXCEPTIONAL[t])
        m = re.fullmatch(r"(BC|A|B|C|D)(\d+)", t)
        if not m:
            raise ValueError(f"cannot parse type label {s!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return self.family if self.family in EXCEPTIONAL else f"{self.family}{self.rank}"


# ---------------------------------------------------------------------------
# Dynkin classification of a Cartan matrix


def classify_cartan(cartan: Sequence[Sequence[int]], norms: Sequence[Fraction]) -> tuple[str, int]:
    """(family, rank) of a connected Cartan matrix; rank-2 double bonds are reported as B2."""
    r = len(cartan)
    if r == 1:
        return "A", 1
    adj = {i: [j for j in range(r) if j != i and cartan[i][j]] for i in range(r)}
    bonds = {(i, j): cartan[i][j] * cartan[j][i] for i in range(r) for j in adj[i] if i < j}
    mult = max(bonds.values())
    if mult == 3:
        return "G2", 2
    if mult == 2:
        if r == 2:
            return "B", 2
        (i, j), = [e for e, m in bonds.items() if m == 2]
        if r == 4 and len(adj[i]) == 2 and len(adj[j]) == 2:
            return "F4", 4
        end = i if len(adj[i]) == 1 else j
        other = j if end == i else i
        return ("B" if norms[end] < norms[other] else "C"), r
    branch = [i for i in range(r) if len(adj[i]) == 3]
    if not branch:
        return "A", r
    b = branch[0]
    arms = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return "D", r
    return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}[tuple(arms)], r


# ---------------------------------------------------------------------------


def _int_or_frac(x: Fraction):
    return int(x) if x.denominator == 1 else x


def _simple_of_positive(pos: list[Weight]) -> list[Weight]:
    s = set(pos)
    sums = {vadd(a, b) for a in pos for b in pos}
    return [a for a in pos if a not in sums and a in s]


class RootSystem:
    """A finite root system with a fixed positive system and integer label tables."""

    def __init__(
        self,
        space: AmbientSpace,
        roots: Iterable[Weight],
        simple: Sequence[Weight],
        label=None,
        positive: Iterable[Weight] | None = None,
        classical_coords: bool = False,
    ):
        self.space = space
        self.label = label
        self.classical_coords = classical_coords
        rootset = frozenset(vec(r) for r in roots)
        self.simple = tuple(vec(s) for s in simple)
        for s in self.simple:
            if s not in rootset:
                raise ValueError("simple root not in root set")
        rank = len(self.simple)
        if rank and to_sympy(self.simple).rank() != rank:
            raise ValueError("simple roots are dependent")
        self.rank = rank
        sp = space
        self.cartan = tuple(
            tuple(int(coroot_pairing(a, b, sp)) for b in self.simple) for a in self.simple
        )
        if rank:
            cinv = to_sympy(self.cartan).inv()
            S = to_sympy(self.simple)
            om = cinv * S
            self.omega = tuple(
                tuple(Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in om.row(i))
                for i in range(rank)
            )
        else:
            self.omega = ()
        self.gram_omega = tuple(tuple(sp.pair(u, v) for v in self.omega) for u in self.omega)
        self._simple_norm = tuple(sp.norm(s) for s in self.simple)

        if positive is None:
            pos = [r for r in rootset if self.height(r) > 0]
        else:
            pos = [vec(r) for r in positive]
        pos.sort(key=lambda r: (self.height(r), self.simple_coords(r)))
        if len(pos) * 2 != len(rootset) or any(vneg(p) not in rootset for p in pos):
            raise ValueError("positive system does not split the roots")
        self.npos = len(pos)
        self.roots = tuple(pos) + tuple(vneg(p) for p in pos)
        self.index = {r: i for i, r in enumerate(self.roots)}
        self.labels = tuple(self.labels_of(r, integral=True) for r in self.roots)
        self.coco = tuple(
            tuple(int(coroot_pairing(w, r, sp)) for w in self.omega) for r in self.roots
        )
        self.label_index = {l: i for i, l in enumerate(self.labels)}
        self.norms = tuple(sp.norm(r) for r in self.roots)
        self.simple_idx = tuple(self.index[s] for s in self.simple)
        self._refl = None

    # -- coordinates -------------------------------------------------------
    def simple_coords(self, v: Weight) -> tuple:
        """Coefficients of v (in the span) in the skeleton basis."""
        return tuple(2 * self.space.pair(v, w) / n for w, n in zip(self.omega, self._simple_norm))

    def height(self, v: Weight) -> Fraction:
        return sum(self.simple_coords(v), Fraction(0))

    def labels_of(self, v: Weight, integral: bool = False) -> tuple:
        out = tuple(coroot_pairing(v, s, self.space) for s in self.simple)
        if integral:
            if any(x.denominator != 1 for x in out):
                raise ValueError("weight is not integral for this root system")
            return tuple(int(x) for x in out)
        return tuple(_int_or_frac(x) for x in out)

    def weight_of_labels(self, mu: Sequence) -> Weight:
        out = self.space.zero()
        for c, w in zip(mu, self.omega):
            if c:
                out = vadd(out, vscale(c, w))
        return out

    def norm_of_labels(self, mu: Sequence) -> Fraction:
        g = self.gram_omega
        r = len(mu)
        return sum((Fraction(mu[i]) * mu[j] * g[i][j] for i in range(r) for j in range(r) if mu[i] and mu[j]), Fraction(0))

    def orth_part(self, v: Weight) -> Weight:
        """Component of v orthogonal to the span of the roots."""
        return tuple(a - b for a, b in zip(v, self.weight_of_labels(self.labels_of(v))))

    # -- structure -----------------------------------------------------------
    @property
    def positive(self) -> frozenset:
        return frozenset(self.roots[: self.npos])

    @property
    def rootset(self) -> frozenset:
        return frozenset(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def neg(self, i: int) -> int:
        return i + self.npos if i < self.npos else i - self.npos

    def is_reduced(self) -> bool:
        return all(vscale(2, r) not in self.index for r in self.roots)

    @property
    def refl(self) -> tuple:
        """refl[i][k] = index of s_{root_i}(root_k)."""
        if self._refl is None:
            L, C, idx = self.labels, self.coco, self.label_index
            table = []
            for i in range(len(L)):
                ci, li = C[i], L[i]
                row = []
                for lk in L:
                    p = sum(a * b for a, b in zip(ci, lk))
                    row.append(idx[tuple(x - p * y for x, y in zip(lk, li))] if p else idx[lk])
                table.append(tuple(row))
            self._refl = tuple(table)
        return self._refl

    def is_irreducible(self) -> bool:
        r = self.rank
        if r == 0:
            return False
        seen, todo = {0}, [0]
        while todo:
            i = todo.pop()
            for j in range(r):
                if j not in seen and self.cartan[i][j]:
                    seen.add(j)
                    todo.append(j)
        return len(seen) == r

    def two_delta(self) -> Weight:
        """Sum of the positive roots of the reduced part."""
        out = self.space.zero()
        for r in self.roots[: self.npos]:
            out = vadd(out, r)
        return out

    def full(self) -> "SubRootSystem":
        return SubRootSystem(self, frozenset(range(len(self.roots))))

    def __repr__(self) -> str:
        return f"RootSystem({self.label}, {len(self.roots)} roots)"

    def to_json(self) -> dict:
        f = lambda v: [str(x) for x in v]
        return {
            "label": str(self.label),
            "dim": self.space.dim,
            "gram": [f(r) for r in self.space.gram],
            "simple": [f(s) for s in self.simple],
            "roots": sorted(f(r) for r in self.roots),
        }

    @classmethod
    def from_simple(cls, space: AmbientSpace, simple: Sequence[Weight], label=None, **kw) -> "RootSystem":
        simple = [vec(s) for s in simple]
        roots = set(simple)
        todo = list(simple)
        while todo:
            v = todo.pop()
            for s in simple:
                w = reflect(v, s, space)
                if w not in roots:
                    roots.add(w)
                    todo.append(w)
        return cls(space, roots, simple, label, **kw)

    @classmethod
    def union(cls, parts: Sequence["RootSystem"], label=None) -> "RootSystem":
        sp = parts[0].space
        roots, simple, pos = [], [], []
        for p in parts:
            if p.space != sp:
                raise ValueError("parts live in different spaces")
            roots += p.roots
            simple += p.simple
            pos += p.roots[: p.npos]
        for i, p in enumerate(parts):
            for q in parts[i + 1 :]:
                if any(sp.pair(a, b) for a in p.simple for b in q.simple):
                    raise ValueError("parts are not orthogonal")
        if label is None:
            label = "+".join(str(p.label) for p in parts)
        return cls(sp, roots, simple, label, positive=pos)


# ---------------------------------------------------------------------------
# standard realisations


def _e(n: int, *pairs) -> Weight:
    v = [Fraction(0)] * n
    for i, c in pairs:
        v[i] += Fraction(c)
    return tuple(v)


def _e8_space() -> AmbientSpace:
    return AmbientSpace.scaled_identity(8, Fraction(1, 2))


def _e8_simple() -> list[Weight]:
    h = Fraction(1, 2)
    a1 = (h, -h, -h, -h, -h, -h, -h, h)
    out = [vec(a1), _e(8, (0, 1), (1, 1))]
    for i in range(6):
        out.append(_e(8, (i + 1, 1), (i, -1)))
    return out


def _classical_roots(family: str, n: int) -> tuple[AmbientSpace, set, list]:
    half = Fraction(1, 2)
    if family == "A":
        m = n + 1
        sp = AmbientSpace.scaled_identity(m, half)
        roots = {_e(m, (i, 1), (j, -1)) for i in range(m) for j in range(m) if i != j}
        simple = [_e(m, (i, 1), (i + 1, -1)) for i in range(n)]
        return sp, roots, simple
    pm = {_e(n, (i, s), (j, t)) for i in range(n) for j in range(i + 1, n) for s in (1, -1) for t in (1, -1)}
    chain = [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
    singles = {_e(n, (i, s)) for i in range(n) for s in (1, -1)}
    doubles = {_e(n, (i, 2 * s)) for i in range(n) for s in (1, -1)}
    if family == "B":
        return AmbientSpace.scaled_identity(n, 1), pm | singles, chain + [_e(n, (n - 1, 1))]
    if family == "C":
        scale = Fraction(1, 4) if n == 1 else half
        return AmbientSpace.scaled_identity(n, scale), pm | doubles, chain + [_e(n, (n - 1, 2))]
    if family == "D":
        return AmbientSpace.scaled_identity(n, half), pm, chain + [_e(n, (n - 2, 1), (n - 1, 1))]
    if family == "BC":
        return AmbientSpace.scaled_identity(n, 1), pm | singles | doubles, chain + [_e(n, (n - 1, 2))]
    raise ValueError(family)


@lru_cache(maxsize=None)
def build(label) -> RootSystem:
    """Standard realisation of a type, with short roots of squared length 1."""
    if isinstance(label, str):
        label = TypeLabel.parse(label)
    f, n = label.family, label.rank
    if f in CLASSICAL:
        sp, roots, simple = _classical_roots(f, n)
        return RootSystem(sp, roots, simple, label, classical_coords=True)
    if f in ("E6", "E7", "E8"):
        return RootSystem.from_simple(_e8_space(), _e8_simple()[:n], label)
    if f == "F4":
        h = Fraction(1, 2)
        simple = [_e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)), vec((h, -h, -h, -h))]
        return RootSystem.from_simple(AmbientSpace.scaled_identity(4, 1), simple, label)
    if f == "G2":
        simple = [vec((-2, 1, 1)), vec((1, -1, 0))]
        return RootSystem.from_simple(AmbientSpace.scaled_identity(3, Fraction(1, 2)), simple, label)
    raise ValueError(label)


def fundamental_weights(psi: RootSystem) -> tuple:
    if not psi.is_irreducible():
        raise ValueError("fundamental weights requested for a reducible system")
    return psi.omega


# ---------------------------------------------------------------------------
# sub-root systems


def closure(psi: RootSystem, gens: Iterable[int]) -> frozenset:
    """Index set of <X>: the orbit of X under the reflections in X."""
    gens = list(dict.fromkeys(gens))
    refl = psi.refl
    out = set(gens)
    todo = list(gens)
    rows = [refl[g] for g in gens]
    while todo:
        y = todo.pop()
        for row in rows:
            z = row[y]
            if z not in out:
                out.add(z)
                todo.append(z)
    return frozenset(out)


@dataclass(frozen=True)
class EmbeddedType:
    family: str
    rank: int
    k: Fraction

    def name(self, decorate: bool = False) -> str:
        base = self.family if self.family in EXCEPTIONAL else f"{self.family}{self.rank}"
        if decorate and self.family in ("A", "D"):
            base += "^L" if self.k > 1 else "^S"
        return base

    def sort_key(self):
        pri = {"E8": 9, "E7": 8, "E6": 7, "F4": 6, "G2": 5, "D": 4, "BC": 3.5, "C": 3, "B": 2, "A": 1}[self.family]
        return (-pri, -self.rank, -self.k)


def format_types(types: Iterable[EmbeddedType], decorate: bool = False) -> str:
    types = sorted(types, key=EmbeddedType.sort_key)
    if not types:
        return "0"
    counts = Counter(t.name(decorate) for t in types)
    seen, parts = set(), []
    for t in types:
        nm = t.name(decorate)
        if nm in seen:
            continue
        seen.add(nm)
        parts.append(f"{counts[nm]}{nm}" if counts[nm] > 1 else nm)
    return "+".join(parts)


class SubRootSystem:
    """A reflection-closed subset of a parent root system, stored as root indices."""

    __slots__ = ("parent", "idx", "_cache")

    def __init__(self, parent: RootSystem, idx: Iterable[int]):
        self.parent = parent
        self.idx = frozenset(idx)
        self._cache = {}

    def __eq__(self, other):
        return isinstance(other, SubRootSystem) and self.parent is other.parent and self.idx == other.idx

    def __hash__(self):
        return hash((id(self.parent), self.idx))

    def __len__(self):
        return len(self.idx)

    def __repr__(self):
        return f"SubRootSystem({self.type_string()} in {self.parent.label})"

    @property
    def roots(self) -> frozenset:
        return frozenset(self.parent.roots[i] for i in self.idx)

    @property
    def pos_idx(self) -> tuple:
        return tuple(sorted(i for i in self.idx if i < self.parent.npos))

    @property
    def positive(self) -> frozenset:
        return frozenset(self.parent.roots[i] for i in self.pos_idx)

    def is_closed(self) -> bool:
        refl = self.parent.refl
        return all(refl[a][b] in self.idx for a in self.idx for b in self.idx)

    def is_reduced(self) -> bool:
        P = self.parent
        return all(P.index.get(vscale(2, P.roots[i])) not in self.idx for i in self.idx)

    def simple_idx(self) -> tuple:
        """Skeleton of this subsystem: base of its reduced part {a : 2a not in phi}."""
        if "simple" not in self._cache:
            P = self.parent
            pos = [i for i in self.pos_idx if P.index.get(vscale(2, P.roots[i])) not in self.idx]
            L = P.labels
            posset = set(pos)
            hit = set()
            for a in pos:
                la = L[a]
                for b in pos:
                    j = P.label_index.get(tuple(x + y for x, y in zip(la, L[b])))
                    if j is not None and j in posset:
                        hit.add(j)
            self._cache["simple"] = tuple(i for i in pos if i not in hit)
        return self._cache["simple"]

    def generators(self) -> tuple:
        """Skeleton plus the halves of skeleton roots that lie in the subsystem."""
        P = self.parent
        extra = []
        for i in self.simple_idx():
            j = P.index.get(vscale(Fraction(1, 2), P.roots[i]))
            if j is not None and j in self.idx:
                extra.append(j)
        return self.simple_idx() + tuple(extra)

    def simple(self) -> list[Weight]:
        return [self.parent.roots[i] for i in self.simple_idx()]

    @property
    def rank(self) -> int:
        return len(self.simple_idx())

    def as_root_system(self) -> RootSystem:
        if "rs" not in self._cache:
            P = self.parent
            self._cache["rs"] = RootSystem(
                P.space, self.roots, self.simple(), self.type_string(), positive=self.positive
            )
        return self._cache["rs"]

    def two_delta(self) -> Weight:
        """2 delta_phi, the sum of the positive roots (reduced subsystems)."""
        out = self.parent.space.zero()
        for i in self.pos_idx:
            out = vadd(out, self.parent.roots[i])
        return out

    def two_delta_labels(self) -> tuple:
        L = self.parent.labels
        r = self.parent.rank
        acc = [0] * r
        for i in self.pos_idx:
            for j, x in enumerate(L[i]):
                acc[j] += x
        return tuple(acc)

    def components(self) -> list[tuple["SubRootSystem", EmbeddedType]]:
        if "comp" not in self._cache:
            if self.parent.classical_coords:
                self._cache["comp"] = [(s, t) for s, t, _ in classical_blocks(self) if t.rank > 0]
            else:
                self._cache["comp"] = _generic_components(self)
        return self._cache["comp"]

    def types(self) -> list[EmbeddedType]:
        return [t for _, t in self.components()]

    def type_string(self) -> str:
        fam = getattr(self.parent.label, "family", None)
        return format_types(self.types(), decorate=fam in ("F4", "G2"))

    def to_json(self) -> dict:
        f = lambda v: [str(x) for x in v]
        return {
            "parent": str(self.parent.label),
            "type": self.type_string(),
            "generators": [f(self.parent.roots[i]) for i in self.generators()],
            "roots": sorted(f(self.parent.roots[i]) for i in self.idx),
        }


def _generic_components(phi: SubRootSystem) -> list:
    P = phi.parent
    sp = P.space
    simple = list(phi.simple_idx())
    comps, seen = [], set()
    for s in simple:
        if s in seen:
            continue
        block, todo = {s}, [s]
        while todo:
            a = todo.pop()
            for b in simple:
                if b not in block and sp.pair(P.roots[a], P.roots[b]) != 0:
                    block.add(b)
                    todo.append(b)
        seen |= block
        comps.append(sorted(block))
    out = []
    for block in comps:
        gens = list(block)
        for i in block:
            j = P.index.get(vscale(Fraction(1, 2), P.roots[i]))
            if j is not None and j in phi.idx:
                gens.append(j)
        sub = SubRootSystem(P, closure(P, gens))
        cart = [[int(coroot_pairing(P.roots[a], P.roots[b], sp)) for b in block] for a in block]
        fam, r = classify_cartan(cart, [P.norms[a] for a in block])
        if not sub.is_reduced():
            fam = "BC"
        k = min(P.norms[i] for i in sub.idx)
        out.append((sub, EmbeddedType(fam, r, k)))
    out.sort(key=lambda st: (st[1].sort_key(), min(st[0].idx)))
    return out


def classical_blocks(phi: SubRootSystem) -> list[tuple[SubRootSystem, EmbeddedType, tuple]]:
    """Coordinate-block decomposition inside a standard classical parent.

    Returns (block subsystem, embedded type, coordinates) including A_0 singletons.
    """
    P = phi.parent
    if not P.classical_coords:
        raise ValueError("parent is not a standard classical realisation")
    n = P.space.dim
    parent_of = list(range(n))

    def find(x):
        while parent_of[x] != x:
            parent_of[x] = parent_of[parent_of[x]]
            x = parent_of[x]
        return x

    for i in phi.idx:
        supp = [c for c, x in enumerate(P.roots[i]) if x]
        for c in supp[1:]:
            parent_of[find(c)] = find(supp[0])
    groups: dict[int, list[int]] = {}
    for c in range(n):
        groups.setdefault(find(c), []).append(c)
    by_block: dict[int, list[int]] = {}
    for i in phi.idx:
        c = next(c for c, x in enumerate(P.roots[i]) if x)
        by_block.setdefault(find(c), []).append(i)
    out = []
    for root, coords in sorted(groups.items(), key=lambda kv: kv[1]):
        members = by_block.get(root, [])
        m = len(coords)
        sub = SubRootSystem(P, members)
        if not members:
            out.append((sub, EmbeddedType("A", 0, Fraction(0)), tuple(coords)))
            continue
        vs = [P.roots[i] for i in members]
        single = {max(abs(x) for x in v) for v in vs if sum(1 for x in v if x) == 1}
        k = min(P.norms[i] for i in members)
        if single:
            fam = "BC" if single == {1, 2} else ("B" if single == {1} else "C")
            rank = m
        else:
            supports = Counter(frozenset(c for c, x in enumerate(v) if x) for v in vs)
            # a D block has 4 roots (+-e_i+-e_j) on some pair; an A block only 2
            fam = "D" if any(cnt == 4 for cnt in supports.values()) else "A"
            rank = m if fam == "D" else m - 1
        out.append((sub, EmbeddedType(fam, rank, k), tuple(coords)))
    return out


def generated_subsystem(x: Iterable[Weight], psi: RootSystem) -> SubRootSystem:
    idx = []
    for v in x:
        v = vec(v)
        if v not in psi.index:
            raise ValueError(f"{v} is not a root of {psi.label}")
        idx.append(psi.index[v])
    return SubRootSystem(psi, closure(psi, idx))


def short_subsystem(phi: SubRootSystem) -> SubRootSystem:
    """Roots a with: every root b is at least as long as a, or orthogonal to it."""
    P = phi.parent
    sp = P.space
    keep = []
    for a in phi.idx:
        na, va = P.norms[a], P.roots[a]
        if all(P.norms[b] >= na or sp.pair(va, P.roots[b]) == 0 for b in phi.idx):
            keep.append(a)
    return SubRootSystem(P, keep)


def cusp_product(beta: Weight, alpha: Weight, phi: SubRootSystem | RootSystem) -> int:
    """<beta, alpha> = 2(alpha, beta)/(alpha, alpha)."""
    P = phi.parent if isinstance(phi, SubRootSystem) else phi
    rs = phi.roots if isinstance(phi, SubRootSystem) else P.rootset
    beta, alpha = vec(beta), vec(alpha)
    if beta not in rs or alpha not in rs:
        raise ValueError("arguments must be roots")
    return int(coroot_pairing(beta, alpha, P.space))


def root_string(beta: Weight, alpha: Weight, phi: SubRootSystem | RootSystem) -> tuple[int, int]:
    """(k1, k2): the largest k with beta + k alpha, resp. beta - k alpha, a root."""
    rs = phi.roots if isinstance(phi, SubRootSystem) else phi.rootset
    beta, alpha = vec(beta), vec(alpha)
    if beta not in rs or alpha not in rs:
        raise ValueError("arguments must be roots")

    def far(sign):
        best = None
        for k in range(-8, 9):
            if vadd(beta, vscale(sign * k, alpha)) in rs:
                best = k
        return best

    return far(1), far(-1)
