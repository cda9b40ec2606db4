"""Exact ambient spaces, lattices and the maximal root system of a lattice.

Weights are plain tuples of :class:`fractions.Fraction`; they are hashable and compare
coordinatewise, which is what the sparse character code relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, isqrt, lcm
from typing import Iterable, Sequence

import sympy
from sympy.matrices.normalforms import hermite_normal_form

Weight = tuple  # tuple[Fraction, ...]


def vec(xs: Iterable) -> Weight:
    return tuple(Fraction(x) for x in xs)


def vadd(v: Weight, w: Weight) -> Weight:
    return tuple(a + b for a, b in zip(v, w))


def vsub(v: Weight, w: Weight) -> Weight:
    return tuple(a - b for a, b in zip(v, w))


def vscale(c, v: Weight) -> Weight:
    c = Fraction(c)
    return tuple(c * a for a in v)


def vneg(v: Weight) -> Weight:
    return tuple(-a for a in v)


def is_zero(v: Weight) -> bool:
    return all(a == 0 for a in v)


def to_sympy(rows) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x for x in r] for r in rows])


def from_sympy(m: sympy.Matrix) -> list[list[Fraction]]:
    return [[Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in m.row(i)] for i in range(m.rows)]


def _dot(v: Weight, w: Weight) -> Fraction:
    # integer arithmetic over a common denominator; much cheaper than summing Fractions
    nums, dens = [], []
    for a, b in zip(v, w):
        if a and b:
            nums.append(a.numerator * b.numerator)
            dens.append(a.denominator * b.denominator)
    if not nums:
        return Fraction(0)
    L = lcm(*dens)
    return Fraction(sum(n * (L // d) for n, d in zip(nums, dens)), L)


@dataclass(frozen=True)
class AmbientSpace:
    dim: int
    gram: tuple

    def __post_init__(self):
        g = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        if len(g) != self.dim or any(len(r) != self.dim for r in g):
            raise ValueError("gram must be dim x dim")
        for i in range(self.dim):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("gram must be symmetric")
        diag = all(g[i][j] == 0 for i in range(self.dim) for j in range(self.dim) if i != j)
        scalar = g[0][0] if diag and self.dim and all(g[i][i] == g[0][0] for i in range(self.dim)) else None
        object.__setattr__(self, "_diag", diag)
        object.__setattr__(self, "_scalar", scalar)
        m = to_sympy(g)
        for k in range(1, self.dim + 1):
            if m[:k, :k].det() <= 0:
                raise ValueError("gram must be positive definite")

    @classmethod
    def scaled_identity(cls, dim: int, scale=1) -> "AmbientSpace":
        s = Fraction(scale)
        return cls(dim, tuple(tuple(s if i == j else Fraction(0) for j in range(dim)) for i in range(dim)))

    @property
    def diagonal(self) -> bool:
        return self._diag

    def pair(self, v: Weight, w: Weight) -> Fraction:
        if len(v) != self.dim or len(w) != self.dim:
            raise ValueError("dimension mismatch")
        g = self.gram
        if self._scalar is not None:
            return self._scalar * _dot(v, w)
        if self._diag:
            return sum((v[i] * w[i] * g[i][i] for i in range(self.dim)), Fraction(0))
        return sum((v[i] * g[i][j] * w[j] for i in range(self.dim) for j in range(self.dim)), Fraction(0))

    def norm(self, v: Weight) -> Fraction:
        return self.pair(v, v)

    def zero(self) -> Weight:
        return tuple(Fraction(0) for _ in range(self.dim))

    def unit(self, i: int) -> Weight:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))


def pairing(v: Weight, w: Weight, space: AmbientSpace) -> Fraction:
    """Return the exact inner product (v, w) in ``space``."""
    return space.pair(v, w)


def coroot_pairing(v: Weight, alpha: Weight, space: AmbientSpace) -> Fraction:
    """Return 2(v, alpha)/(alpha, alpha)."""
    n = space.norm(alpha)
    if n == 0:
        raise ValueError("alpha must be nonzero")
    return 2 * space.pair(v, alpha) / n


def reflect(lam: Weight, alpha: Weight, space: AmbientSpace) -> Weight:
    """Reflect ``lam`` in the hyperplane orthogonal to ``alpha``."""
    c = coroot_pairing(lam, alpha, space)
    return tuple(a - c * b for a, b in zip(lam, alpha))


@dataclass(frozen=True)
class Lattice:
    ambient: AmbientSpace
    basis: tuple

    def __post_init__(self):
        b = tuple(vec(x) for x in self.basis)
        object.__setattr__(self, "basis", b)
        if any(len(x) != self.ambient.dim for x in b):
            raise ValueError("basis vector has wrong dimension")
        if b and to_sympy(b).rank() != len(b):
            raise ValueError("basis vectors must be linearly independent")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def gram(self) -> list[list[Fraction]]:
        return [[self.ambient.pair(u, v) for v in self.basis] for u in self.basis]

    def coordinates(self, v: Weight):
        """Rational coordinates of ``v`` in the basis, or ``None`` if outside the span."""
        if not self.basis:
            return () if is_zero(v) else None
        m = to_sympy(self.basis).T
        sol, params = m.gauss_jordan_solve(to_sympy([v]).T)[:2] if _consistent(m, v) else (None, None)
        if sol is None:
            return None
        return tuple(Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in sol)

    def contains(self, v: Weight) -> bool:
        c = self.coordinates(v)
        return c is not None and all(x.denominator == 1 for x in c)

    def point(self, coords: Sequence[int]) -> Weight:
        out = self.ambient.zero()
        for c, b in zip(coords, self.basis):
            if c:
                out = vadd(out, vscale(c, b))
        return out


def _consistent(m: sympy.Matrix, v: Weight) -> bool:
    aug = m.row_join(to_sympy([v]).T)
    return aug.rank() == m.rank()


def short_vectors(L: Lattice, bound) -> list[tuple[int, ...]]:
    """All nonzero integer coordinate vectors x with |sum x_i b_i|^2 <= bound.

    Exact Fincke-Pohst style search on the LDL^T factorisation of the Gram matrix.
    """
    k = L.rank
    if k == 0:
        return []
    G = to_sympy(L.gram())
    Lm, Dm = G.LDLdecomposition(hermitian=False)
    Lf = from_sympy(Lm)
    d = [Fraction(int(sympy.fraction(Dm[i, i])[0]), int(sympy.fraction(Dm[i, i])[1])) for i in range(k)]
    bound = Fraction(bound)
    out: list[tuple[int, ...]] = []
    x = [0] * k

    def rec(i: int, rem: Fraction):
        if i < 0:
            if any(x):
                out.append(tuple(x))
            return
        c = sum((Lf[j][i] * x[j] for j in range(i + 1, k)), Fraction(0))
        r = rem / d[i]
        m = isqrt(floor(r)) + 1
        for xi in range(floor(-c) - m, ceil(-c) + m + 1):
            y = xi + c
            q = d[i] * y * y
            if q <= rem:
                x[i] = xi
                rec(i - 1, rem - q)
        x[i] = 0

    rec(k - 1, bound)
    return out


def maximal_root_system(L: Lattice) -> frozenset:
    """The set of all 0 != a in L with 2(b, a)/(a, a) integral for every basis vector b."""
    if L.rank == 0:
        return frozenset()
    sp = L.ambient
    bound = 4 * max(sp.norm(b) for b in L.basis)
    roots = set()
    for x in short_vectors(L, bound):
        a = L.point(x)
        n = sp.norm(a)
        if all((2 * sp.pair(b, a) / n).denominator == 1 for b in L.basis):
            roots.add(a)
    return frozenset(roots)


def _reflection_closed(phi: frozenset, space: AmbientSpace) -> bool:
    return all(reflect(b, a, space) in phi for a in phi for b in phi)


def is_root_system_in_lattice(phi: Iterable[Weight], L: Lattice) -> bool:
    """Reflection closure plus strong integrality against the lattice basis."""
    phi = frozenset(vec(a) for a in phi)
    sp = L.ambient
    for a in phi:
        if len(a) != sp.dim:
            raise ValueError("root not in the lattice's ambient space")
        if is_zero(a):
            raise ValueError("zero is not a root")
    if not all(L.contains(a) for a in phi):
        return False
    if not _reflection_closed(phi, sp):
        return False
    return all((coroot_pairing(b, a, sp)).denominator == 1 for a in phi for b in L.basis)


def sandwich_criterion(phi: Iterable[Weight], L: Lattice) -> bool:
    """Check Z.phi <= L <= Lambda_phi by lattice containment (independent of the definition)."""
    phi = frozenset(vec(a) for a in phi)
    if not _reflection_closed(phi, L.ambient):
        return False
    if not all(L.contains(v) for v in _hnf_basis(sorted(phi), L.ambient.dim)):
        return False
    lam = integral_weight_lattice(phi, L)
    return all(lam.contains(b) for b in L.basis)


def _hnf_basis(vectors: list[Weight], dim: int) -> list[Weight]:
    """Z-basis of the group generated by rational vectors, via integer HNF."""
    if not vectors:
        return []
    den = 1
    for v in vectors:
        for a in v:
            den = den * a.denominator // gcd(den, a.denominator)
    rows = [[int(a * den) for a in v] for v in vectors]
    M = sympy.Matrix(rows).T
    H = hermite_normal_form(M)
    basis = []
    for j in range(H.cols):
        col = [Fraction(int(H[i, j]), den) for i in range(H.rows)]
        if any(col):
            basis.append(tuple(col))
    return basis


def lex_simple_system(phi: Iterable[Weight]) -> list[Weight]:
    """Simple roots for the positive system cut out by lexicographic order."""
    phi = frozenset(phi)
    pos = [a for a in phi if next(x for x in a if x != 0) > 0]
    sums = {vadd(a, b) for a in pos for b in pos}
    return sorted(a for a in pos if a not in sums)


def _q(x: Fraction) -> sympy.Rational:
    return sympy.Rational(x.numerator, x.denominator)


def _f(x) -> Fraction:
    n, d = sympy.fraction(x)
    return Fraction(int(n), int(d))


def integral_weight_lattice(phi: Iterable[Weight], L: Lattice) -> Lattice:
    """The lattice {v in L + Q.phi : 2(v, a)/(a, a) in Z for all a in phi}.

    For empty ``phi`` this is ``L`` itself.
    """
    phi = frozenset(vec(a) for a in phi)
    sp = L.ambient
    if not _reflection_closed(phi, sp):
        raise ValueError("phi is not reflection-closed")
    if not phi:
        return L
    # a^vee = 2 (2a)^vee, so only roots a with 2a not in phi impose conditions
    simple = lex_simple_system(a for a in phi if vscale(2, a) not in phi)
    R = to_sympy(simple).T
    # C[i][j] = <s_j, s_i^vee>
    C = sympy.Matrix([[_q(coroot_pairing(b, a, sp)) for b in simple] for a in simple])
    Cinv = C.inv()
    gens: list[Weight] = []
    for i in range(len(simple)):
        gens.append(tuple(_f(x) for x in R * Cinv[:, i]))
    for b in L.basis:
        pb = sympy.Matrix([[_q(coroot_pairing(b, a, sp))] for a in simple])
        proj = R * (Cinv * pb)
        gens.append(vsub(b, tuple(_f(x) for x in proj)))
    return Lattice(sp, tuple(_hnf_basis(gens, sp.dim)))
