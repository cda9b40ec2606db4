"""Sub-root systems: classical index data, named representatives, conjugacy and enumeration."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .config import BudgetExceeded, budget
from .lattice import Weight, vec
from .rootsys import (
    EXCEPTIONAL,
    EmbeddedType,
    RootSystem,
    SubRootSystem,
    TypeLabel,
    build,
    classical_blocks,
    closure,
)
from .polys import genfun_product
from .weyl import SymmetrySpec, canonical_tuple

# ---------------------------------------------------------------------------
# classical index data


@dataclass(frozen=True)
class ClassicalIndex:
    """Block sizes by embedded type.  ``a`` lists A-block sizes (1 means a free coordinate)."""

    bc: tuple = ()
    b: tuple = ()
    c: tuple = ()
    d: tuple = ()
    a: tuple = ()
    primed: bool = False

    def __post_init__(self):
        for name in ("bc", "b", "c", "d", "a"):
            object.__setattr__(self, name, tuple(sorted(getattr(self, name), reverse=True)))
        if any(x < 2 for x in self.d):
            raise ValueError("D blocks need size >= 2")
        if any(x < 1 for x in self.bc + self.b + self.c + self.a):
            raise ValueError("block sizes must be positive")

    @property
    def size(self) -> int:
        return sum(self.bc) + sum(self.b) + sum(self.c) + sum(self.d) + sum(self.a)

    def padded(self, n: int) -> "ClassicalIndex":
        if self.size > n:
            raise ValueError(f"index needs {self.size} coordinates, parent has {n}")
        return ClassicalIndex(self.bc, self.b, self.c, self.d, self.a + (1,) * (n - self.size), self.primed)

    def ambiguous_in_d(self) -> bool:
        """The D_n case with two W-classes: only even A blocks, no D blocks, no free coordinates."""
        return not self.d and not self.bc and not self.b and not self.c and all(x % 2 == 0 for x in self.a)

    def to_json(self) -> dict:
        return {"bc": list(self.bc), "b": list(self.b), "c": list(self.c), "d": list(self.d), "a": list(self.a), "primed": self.primed}


_ALLOWED = {"A": {"a"}, "B": {"b", "d", "a"}, "C": {"c", "d", "a"}, "D": {"d", "a"}, "BC": {"bc", "b", "c", "d", "a"}}


def _coord_dim(label: TypeLabel) -> int:
    return label.rank + 1 if label.family == "A" else label.rank


def classical_subsystem(parent, idx: ClassicalIndex) -> SubRootSystem:
    """Block-diagonal realisation: blocks laid out left to right in the order bc, b, c, d, a."""
    P = parent if isinstance(parent, RootSystem) else build(parent)
    label = P.label
    if not P.classical_coords:
        raise ValueError("classical_subsystem needs a classical parent")
    for name in ("bc", "b", "c", "d", "a"):
        if getattr(idx, name) and name not in _ALLOWED[label.family]:
            raise ValueError(f"{name.upper()} blocks are not allowed in {label}")
    n = _coord_dim(label)
    idx = idx.padded(n)
    if idx.primed and (label.family != "D" or not idx.ambiguous_in_d()):
        raise ValueError("primed flag only applies to the ambiguous D_n classes")
    roots: list[Weight] = []
    start = 0

    def e(*pairs):
        v = [0] * n
        for i, c in pairs:
            v[i] += c
        return vec(v)

    for kind in ("bc", "b", "c", "d", "a"):
        for m in getattr(idx, kind):
            cs = range(start, start + m)
            for i in cs:
                for j in cs:
                    if i < j:
                        roots += [e((i, 1), (j, -1)), e((i, -1), (j, 1))]
                        if kind != "a":
                            roots += [e((i, 1), (j, 1)), e((i, -1), (j, -1))]
                if kind in ("bc", "b"):
                    roots += [e((i, 1)), e((i, -1))]
                if kind in ("bc", "c"):
                    roots += [e((i, 2)), e((i, -2))]
            start += m
    if idx.primed:
        roots = [vec((-r[0],) + r[1:]) for r in roots]
    sub = SubRootSystem(P, [P.index[r] for r in roots])
    return sub


def classical_index_of(phi: SubRootSystem) -> ClassicalIndex:
    """Inverse of classical_subsystem up to conjugacy (the primed flag is decided by conjugacy)."""
    kinds = {"BC": "bc", "B": "b", "C": "c", "D": "d", "A": "a"}
    acc = {k: [] for k in kinds.values()}
    for _, t, coords in classical_blocks(phi):
        acc[kinds[t.family]].append(len(coords))
    idx = ClassicalIndex(**acc)
    P = phi.parent
    if P.label.family == "D" and idx.ambiguous_in_d():
        if not are_conjugate(phi, classical_subsystem(P, idx)):
            idx = ClassicalIndex(**acc, primed=True)
    return idx


# ---------------------------------------------------------------------------
# names


_TOKEN = re.compile(r"^(\d*)([A-Z]+?)('?)(\d+)('?)(\^[LS])?$")


def parse_name(name: str) -> tuple:
    """Normalise a subsystem name to (sorted component tokens, primed)."""
    s = name.replace(" ", "").replace("_", "").replace("{", "").replace("}", "")
    s = s.replace("′", "'").replace("\\prime", "'")
    if ":" in s:
        s = s.split(":", 1)[1]
    primed = False
    m = re.fullmatch(r"\((.*)\)'", s)
    if m:
        s, primed = m.group(1), True
    if s in ("0", "", "empty"):
        return ((), primed)
    toks = Counter()
    for part in s.split("+"):
        mt = _TOKEN.match(part)
        if not mt:
            raise ValueError(f"cannot parse subsystem name {name!r}")
        mult, fam, p1, rank, p2, deco = mt.groups()
        if p1 or p2:
            primed = True
        toks[(fam + rank, deco or "")] += int(mult or 1)
    return (tuple(sorted(toks.items())), primed)


def format_name(key: tuple) -> str:
    toks, primed = key
    body = "+".join(f"{n if n > 1 else ''}{t}{d}" for (t, d), n in toks) or "0"
    return f"({body})'" if primed else body


def _type_key(types: Iterable[EmbeddedType], decorate: bool) -> tuple:
    toks = Counter()
    for t in types:
        nm = t.name(decorate)
        base, deco = (nm.split("^") + [""])[:2]
        toks[(base, "^" + deco if deco else "")] += 1
    return tuple(sorted(toks.items()))


# Simple-root coefficient vectors (Bourbaki numbering) for the named classes whose type
# alone does not determine the W-class.
def _a(n, *terms):
    v = [0] * n
    for i in terms:
        v[i - 1] += 1
    return tuple(v)


_E7B = (2, 2, 3, 4, 3, 2, 1)
_E7B1 = (0, 1, 1, 2, 1, 0, 0)
_E8B = (2, 3, 4, 6, 5, 4, 3, 2)
_E8B1 = (1, 2, 2, 4, 4, 3, 2, 1)
_E8B2 = (2, 2, 4, 5, 4, 3, 2, 1)


def _s(n, *idx):
    return [_a(n, i) for i in idx]


EXPLICIT: dict[str, dict[str, list]] = {
    "E7": {
        "A5": _s(7, 2, 4, 5, 6, 7),
        "(A5)'": _s(7, 3, 4, 5, 6, 7),
        "3A1": _s(7, 2, 5, 7),
        "(3A1)'": _s(7, 3, 5, 7),
        "4A1": _s(7, 2, 3, 5, 7),
        "(4A1)'": _s(7, 2, 3, 5) + [_E7B1],
        "A3+A1": _s(7, 2, 5, 6, 7),
        "(A3+A1)'": _s(7, 3, 5, 6, 7),
        "A3+2A1": _s(7, 2, 3, 5, 6, 7),
        "(A3+2A1)'": [_E7B] + _s(7, 3, 5, 6, 7),
        "A5+A1": [_E7B] + _s(7, 2, 4, 5, 6, 7),
        "(A5+A1)'": [_E7B] + _s(7, 3, 4, 5, 6, 7),
    },
    "E8": {
        # the A7 class not containing (A7)'; chain beta - a8 - a7 - a6 - a5 - a4 - a2
        "A7": [_E8B] + _s(8, 8, 7, 6, 5, 4, 2),
        "(A7)'": _s(8, 1, 3, 4, 5, 6, 7, 8),
        "4A1": _s(8, 2, 3, 5) + [(0, 1, 1, 2, 1, 0, 0, 0)],
        "(4A1)'": _s(8, 2, 3, 5, 8),
        "A3+2A1": [_E8B1] + _s(8, 1, 6, 7, 8),
        "(A3+2A1)'": _s(8, 2, 4, 3, 6, 8),
        "2A3": [_E8B1] + _s(8, 3, 1, 6, 7, 8),
        "(2A3)'": _s(8, 2, 3, 4, 6, 7, 8),
        "A5+A1": [_E8B2] + _s(8, 4, 5, 6, 7, 8),
        "(A5+A1)'": _s(8, 1, 4, 5, 6, 7, 8),
    },
    "D4": {
        "A1": _s(4, 1),
        "A2": _s(4, 1, 2),
        "2A1": _s(4, 1, 3),
        "2A'1": _s(4, 1, 4),
        "D2": _s(4, 3, 4),
        "A3": _s(4, 1, 2, 3),
        "A'3": _s(4, 1, 2, 4),
        "D3": _s(4, 2, 3, 4),
        "D4": _s(4, 1, 2, 3, 4),
    },
    "F4": {
        "B4": [_a(4, 2), _a(4, 1), (0, 1, 2, 0), _a(4, 4)],
        "C4": [_a(4, 3), _a(4, 4), (0, 1, 1, 0), _a(4, 1)],
    },
    "G2": {
        "A1^L": [(1, 0)],
        "A1^S": [(0, 1)],
        "A2^L": [(1, 0), (1, 3)],
        "A2^S": [(1, 1), (0, 1)],
        "A1^L+A1^S": [(1, 0), (1, 2)],
        "G2": [(1, 0), (0, 1)],
    },
}

# alternative spellings that denote the same class
ALIASES = {
    "D4": {"3A1": "D2+A1", "4A1": "2D2", "2A1'": "2A'1", "A3'": "A'3"},
}

# D4 classes given directly in coordinates
_D4_COORDS = {
    "D2+A1": [(1, -1, 0, 0), (1, 1, 0, 0), (0, 0, 1, -1)],
    "2D2": [(1, -1, 0, 0), (1, 1, 0, 0), (0, 0, 1, -1), (0, 0, 1, 1)],
}


def _from_simple_coeffs(P: RootSystem, coeffs: Sequence[Sequence[int]]) -> list[Weight]:
    out = []
    for c in coeffs:
        v = P.space.zero()
        for x, s in zip(c, P.simple):
            if x:
                v = tuple(a + x * b for a, b in zip(v, s))
        out.append(v)
    return out


@dataclass(frozen=True)
class NamedRep:
    parent: str
    name: str

    @classmethod
    def parse(cls, s: str) -> "NamedRep":
        parent, name = s.split(":", 1)
        return cls(parent.strip(), name.strip())


def _lookup_explicit(parent: str, key: tuple):
    for nm, gens in EXPLICIT.get(parent, {}).items():
        if parse_name(nm) == key:
            return nm, gens
    return None


def named_subsystem(rep, parent=None) -> SubRootSystem:
    """Resolve a registry name (e.g. ``E7:(A5)'``, ``F4:A2^S``) to a concrete subsystem."""
    if isinstance(rep, str):
        rep = NamedRep.parse(rep) if parent is None else NamedRep(str(parent), rep)
    pname = str(TypeLabel.parse(rep.parent))
    P = build(pname)
    return _named(pname, rep.name, P)


def _named(pname: str, name: str, P: RootSystem) -> SubRootSystem:
    key = parse_name(name)
    if not key[0]:
        return SubRootSystem(P, ())
    for alias, target in ALIASES.get(pname, {}).items():
        if parse_name(alias) == key:
            key = parse_name(target)
            break
    if pname == "D4":
        for nm, coords in _D4_COORDS.items():
            if parse_name(nm) == key:
                return SubRootSystem(P, closure(P, [P.index[vec(c)] for c in coords]))
    hit = _lookup_explicit(pname, key)
    if hit is not None:
        roots = _from_simple_coeffs(P, hit[1])
        return SubRootSystem(P, closure(P, [P.index[r] for r in roots]))
    if key[1]:
        raise KeyError(f"unknown primed class {format_name(key)} in {pname}")
    sub = find_by_type(P, key[0])
    if sub is None:
        raise KeyError(f"no subsystem of type {format_name(key)} in {pname}")
    return sub


def registry_names(parent: str) -> list[str]:
    return list(EXPLICIT.get(str(parent), {}))


# ---------------------------------------------------------------------------
# search for a subsystem of a prescribed type


def _target(tokens, P: RootSystem):
    """Cartan matrix and simple norms of a composite type, components laid out in order."""
    blocks = []
    expanded = []
    for (tname, deco), mult in tokens:
        if tname == "D2":
            expanded.append((("A1", deco), 2 * mult))
        elif tname == "D3":
            expanded.append((("A3", deco), mult))
        else:
            expanded.append(((tname, deco), mult))
    for (tname, deco), mult in expanded:
        if tname in EXCEPTIONAL:
            lab = TypeLabel(tname, EXCEPTIONAL[tname])
        else:
            fam, rank = re.fullmatch(r"([A-Z]+)(\d+)", tname).groups()
            lab = TypeLabel(fam, int(rank))
        base = build(lab)
        short = min(base._simple_norm)
        if deco == "^L":
            scale = max(P.norms)
        else:
            scale = Fraction(1)
        norms = [n / short * scale for n in base._simple_norm]
        cart = base.cartan
        for _ in range(mult):
            blocks.append((cart, norms))
    n = sum(len(c) for c, _ in blocks)
    C = [[0] * n for _ in range(n)]
    N = []
    off = 0
    for cart, norms in blocks:
        r = len(cart)
        for i in range(r):
            for j in range(r):
                C[off + i][off + j] = cart[i][j]
        N += norms
        off += r
    return C, N


def find_by_type(P: RootSystem, tokens) -> SubRootSystem | None:
    """Depth-first search for roots realising a target Cartan matrix; returns <roots>."""
    C, N = _target(tokens, P)
    n = len(C)
    order = _connected_order(C)
    pos = {v: i for i, v in enumerate(order)}
    C = [[C[a][b] for b in order] for a in order]
    N = [N[a] for a in order]
    by_norm: dict[Fraction, list[int]] = {}
    for i, nm in enumerate(P.norms):
        by_norm.setdefault(nm, []).append(i)
    L, CO = P.labels, P.coco
    chosen: list[int] = []

    def pair(i, j):  # <root_i, root_j^vee>
        return sum(a * b for a, b in zip(L[i], CO[j]))

    def rec(t):
        if t == n:
            return True
        cands = by_norm.get(N[t], [])
        if t == 0:
            cands = cands[:1]
        for c in cands:
            if c in chosen:
                continue
            if all(pair(c, chosen[s]) == C[t][s] and pair(chosen[s], c) == C[s][t] for s in range(t)):
                chosen.append(c)
                if rec(t + 1):
                    return True
                chosen.pop()
        return False

    if not rec(0):
        return None
    import sympy

    if sympy.Matrix([list(L[i]) for i in chosen]).rank() != n:
        return None
    return SubRootSystem(P, closure(P, chosen))


def _connected_order(C):
    n = len(C)
    seen, order = set(), []
    for s in range(n):
        if s in seen:
            continue
        seen.add(s)
        todo = [s]
        while todo:
            v = todo.pop(0)
            order.append(v)
            for w in range(n):
                if w not in seen and C[v][w]:
                    seen.add(w)
                    todo.append(w)
    return order


# ---------------------------------------------------------------------------
# conjugacy


def _image(phi: SubRootSystem, perm: Sequence[int]) -> frozenset:
    P = phi.parent
    out = []
    for i in phi.idx:
        mu = P.labels[i]
        nu = [0] * len(mu)
        for j, x in enumerate(mu):
            nu[perm[j]] = x
        out.append(P.label_index[tuple(nu)])
    return frozenset(out)


def _weyl_conjugate(phi1: SubRootSystem, idx2: frozenset) -> bool:
    P = phi1.parent
    gens = list(phi1.generators())
    if not gens:
        return not idx2
    L, CO = P.labels, P.coco
    target = canonical_tuple(P, [L[g] for g in gens])
    n = len(gens)
    pairs = [[sum(a * b for a, b in zip(L[gens[i]], CO[gens[j]])) for j in range(n)] for i in range(n)]
    cands = sorted(idx2)
    chosen: list[int] = []

    def rec(t):
        if t == n:
            return True
        for c in cands:
            if P.norms[c] != P.norms[gens[t]]:
                continue
            if any(sum(a * b for a, b in zip(L[c], CO[chosen[s]])) != pairs[t][s] for s in range(t)):
                continue
            if canonical_tuple(P, [L[x] for x in chosen] + [L[c]]) != target[: t + 1]:
                continue
            chosen.append(c)
            if rec(t + 1):
                return True
            chosen.pop()
        return False

    return rec(0)


def are_conjugate(phi1: SubRootSystem, phi2: SubRootSystem, w: SymmetrySpec | None = None) -> bool:
    """Whether some element of W (extended by the outer permutations of ``w``) maps phi1 onto phi2."""
    if phi1.parent is not phi2.parent:
        raise ValueError("subsystems live in different parents")
    P = phi1.parent
    if w is not None and w.base is not P:
        raise ValueError("symmetry group belongs to a different root system")
    if len(phi1) != len(phi2):
        return False
    if abstract_types(phi1) != abstract_types(phi2):
        return False
    group = w.group if w is not None else (tuple(range(P.rank)),)
    for g in group:
        img = phi1.idx if g == tuple(range(P.rank)) else _image(phi1, g)
        if _weyl_conjugate(SubRootSystem(P, img), phi2.idx):
            return True
    return False


# ---------------------------------------------------------------------------
# enumeration


def abstract_types(phi: SubRootSystem) -> tuple:
    """Component types with D2 = 2A1 and D3 = A3 identified (stable under every automorphism)."""
    out = []
    for t in phi.types():
        if t.family == "D" and t.rank == 2:
            out += [(t.k, "A", 1)] * 2
        elif t.family == "D" and t.rank == 3:
            out.append((t.k, "A", 3))
        else:
            out.append((t.k, t.family, t.rank))
    return tuple(sorted(out))


def fingerprint(phi: SubRootSystem, w: SymmetrySpec | None = None) -> tuple:
    """Conjugacy invariant: root count, types, canonical 2 delta' labels, norm counts and f(t)."""
    P = phi.parent
    mu = phi.two_delta_labels()
    key = w.canonical_labels(mu) if w is not None else canonical_tuple(P, [mu])[0]
    types = abstract_types(phi)
    norms = tuple(sorted(Counter(P.norms[i] for i in phi.idx).items()))
    f = genfun_product(phi).coeff_tuple() if phi.is_reduced() else ()
    return (len(phi), types, key, norms, f)


def enumerate_subsystems(
    psi: RootSystem,
    w: SymmetrySpec | None = None,
    max_roots: int | None = None,
    reduced_only: bool = False,
) -> list[SubRootSystem]:
    """One representative per class, grown by adding a positive root to known classes."""
    cap = budget().enum_roots if max_roots is None else max_roots
    if len(psi.roots) > cap:
        raise BudgetExceeded(f"{psi.label} has {len(psi.roots)} roots, enumeration cap is {cap}")
    empty = SubRootSystem(psi, ())
    reps = [empty]
    by_fp: dict[tuple, list[SubRootSystem]] = {fingerprint(empty, w): [empty]}
    seen_sets = {empty.idx}
    frontier = [empty]
    while frontier:
        nxt = []
        for rep in frontier:
            gens = list(rep.generators())
            for a in range(psi.npos):
                if a in rep.idx:
                    continue
                s = closure(psi, gens + [a])
                if s in seen_sets:
                    continue
                seen_sets.add(s)
                cand = SubRootSystem(psi, s)
                if reduced_only and not cand.is_reduced():
                    continue
                fp = fingerprint(cand, w)
                bucket = by_fp.setdefault(fp, [])
                if any(are_conjugate(cand, r, w) for r in bucket):
                    continue
                bucket.append(cand)
                reps.append(cand)
                nxt.append(cand)
        frontier = nxt
    reps.sort(key=lambda s: (len(s), s.type_string(), fingerprint(s, w)[2]))
    return reps


@lru_cache(maxsize=None)
def classes(parent: str, tag: str = "weyl", reduced_only: bool = True) -> tuple:
    """Cached class list for a named parent under W ("weyl") or Aut ("aut")."""
    P = build(parent)
    w = SymmetrySpec.aut(P) if tag == "aut" else SymmetrySpec.weyl(P)
    return tuple(enumerate_subsystems(P, w, reduced_only=reduced_only))


def class_name(phi: SubRootSystem, w: SymmetrySpec | None = None) -> str:
    """Registry name of a class when it has one, else its type string."""
    P = phi.parent
    pname = str(P.label)
    t = phi.type_string()
    candidates = [nm for nm in EXPLICIT.get(pname, {})]
    for nm in candidates:
        ref = _named(pname, nm, P)
        if len(ref) == len(phi) and are_conjugate(ref, phi, w):
            return nm
    return t
