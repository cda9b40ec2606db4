"""Polynomials in x_0, x_1, ... and in t: determinant families, the map E, psi, E' and f(t)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .config import BudgetExceeded, budget
from .rootsys import RootSystem, SubRootSystem, TypeLabel, build

__all__ = [
    "MultiPoly",
    "UniPoly",
    "lp_poly",
    "sigma",
    "embed_E",
    "specialize_psi",
    "eprime",
    "genfun",
    "genfun_sum",
    "genfun_product",
    "verify_identities",
    "IDENTITIES",
]

# monomials are packed into one int: BITS bits of exponent per variable
BITS = 8
MASK = (1 << BITS) - 1


def _unpack(m: int) -> tuple:
    out = []
    while m:
        out.append(m & MASK)
        m >>= BITS
    return tuple(out)


def _pack(exps: Sequence[int]) -> int:
    m = 0
    for i, e in enumerate(exps):
        if e < 0 or e > MASK:
            raise ValueError("exponent out of range")
        m |= e << (BITS * i)
    return m


class MultiPoly:
    """Sparse polynomial with rational coefficients in x_0, x_1, ..."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict | None = None):
        self.c = {m: v for m, v in (coeffs or {}).items() if v}

    @classmethod
    def const(cls, a) -> "MultiPoly":
        return cls({0: a})

    @classmethod
    def var(cls, i: int) -> "MultiPoly":
        return cls({1 << (BITS * i): 1})

    @classmethod
    def monomial(cls, idx: Iterable[int], coeff=1) -> "MultiPoly":
        m = 0
        for i in idx:
            m += 1 << (BITS * i)
        return cls({m: coeff})

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.c)
        for m, v in other.c.items():
            out[m] = out.get(m, 0) + v
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({m: -v for m, v in self.c.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out: dict = {}
        for m1, v1 in self.c.items():
            for m2, v2 in other.c.items():
                m = m1 + m2
                out[m] = out.get(m, 0) + v1 * v2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, (MultiPoly, int, Fraction)) and self.c == _lift(other).c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def is_zero(self) -> bool:
        return not self.c

    def terms(self) -> list:
        """(exponent tuple, coefficient) in graded-lex order, highest first."""
        items = [(_unpack(m), v) for m, v in self.c.items()]
        return sorted(items, key=lambda t: (sum(t[0]), t[0][::-1]), reverse=True)

    def degrees(self) -> set:
        return {sum(_unpack(m)) for m in self.c}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coeff(self, exps: Sequence[int]):
        return self.c.get(_pack(exps), 0)

    def subs_sign(self, sign: Callable[[int], int]) -> "MultiPoly":
        out = {}
        for m, v in self.c.items():
            s = 1
            for i, e in enumerate(_unpack(m)):
                if e % 2 and sign(i) < 0:
                    s = -s
            out[m] = s * v
        return MultiPoly(out)

    def nvars(self) -> int:
        return max((len(_unpack(m)) for m in self.c), default=0)

    def __repr__(self) -> str:
        return f"MultiPoly({self.pretty()})"

    def pretty(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for exps, v in self.terms():
            mono = "*".join(f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e)
            v = Fraction(v)
            if not mono:
                parts.append(_q(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{_q(v)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list:
        return [{"exponents": list(e), "coefficient": _q(v)} for e, v in self.terms()]


def _lift(x) -> MultiPoly:
    return x if isinstance(x, MultiPoly) else MultiPoly.const(x)


def _q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class UniPoly:
    """Sparse polynomial in t with rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict | None = None):
        self.c = {int(e): v for e, v in (coeffs or {}).items() if v}
        if any(e < 0 for e in self.c):
            raise ValueError("negative exponent")

    @classmethod
    def one(cls) -> "UniPoly":
        return cls({0: 1})

    def __add__(self, other: "UniPoly") -> "UniPoly":
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) + v
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + UniPoly({e: -v for e, v in other.c.items()})

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        out: dict = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return UniPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    @property
    def degree(self) -> int:
        return max(self.c, default=-1)

    def coeff(self, e: int):
        return self.c.get(e, 0)

    def subs_power(self, k: int) -> "UniPoly":
        return UniPoly({e * k: v for e, v in self.c.items()})

    def coeff_tuple(self) -> tuple:
        return tuple(sorted((e, Fraction(v)) for e, v in self.c.items()))

    def low_terms(self, n: int) -> list:
        return [self.coeff(e) for e in range(n)]

    def top_terms(self, n: int) -> list:
        d = self.degree
        return [self.coeff(d - i) for i in range(n)]

    def is_palindromic(self, sign: int) -> bool:
        d = self.degree
        return all(self.coeff(d - e) == sign * v for e, v in self.c.items())

    def pretty(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            v = Fraction(self.c[e])
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if not mono:
                parts.append(_q(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{_q(v)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"UniPoly({self.pretty()})"

    def to_json(self) -> list:
        return [{"exponent": e, "coefficient": _q(self.c[e])} for e in sorted(self.c)]


def one_minus_t(k) -> UniPoly:
    k = Fraction(k)
    if k.denominator != 1:
        raise ValueError("non-integral exponent")
    return UniPoly({0: 1, int(k): -1}) if k else UniPoly()


# ---------------------------------------------------------------------------
# determinant families


def _det(entry: Callable[[int, int], MultiPoly], n: int) -> MultiPoly:
    """Laplace expansion along rows, memoised on the set of used columns."""
    memo: dict[int, dict] = {}
    full = (1 << n) - 1
    cells = [[entry(i, j).c for j in range(n)] for i in range(n)]

    def rec(mask: int) -> dict:
        if mask == full:
            return {0: 1}
        hit = memo.get(mask)
        if hit is not None:
            return hit
        row = bin(mask).count("1")
        out: dict = {}
        sign = 1
        for j in range(n):
            if mask >> j & 1:
                continue
            e = cells[row][j]
            if e:
                sub = rec(mask | (1 << j))
                for m1, v1 in e.items():
                    v1 = v1 if sign > 0 else -v1
                    for m2, v2 in sub.items():
                        m = m1 + m2
                        out[m] = out.get(m, 0) + v1 * v2
            sign = -sign
        out = {m: v for m, v in out.items() if v}
        memo[mask] = out
        return out

    return MultiPoly(rec(0))


def _x(i: int) -> MultiPoly:
    return MultiPoly.var(i)


KINDS = ("a", "b", "b'", "c", "d")


@lru_cache(maxsize=None)
def _lp(kind: str, n: int) -> MultiPoly:
    if n == 0:
        return MultiPoly.const(1)
    if kind == "a":
        f = lambda i, j: _x(abs(i - j))
    elif kind == "b":
        f = lambda i, j: _x(abs(i - j)) - _x(i + j + 1)
    elif kind == "b'":
        f = lambda i, j: _x(abs(i - j)) + _x(i + j + 1)
    elif kind == "c":
        f = lambda i, j: _x(abs(i - j)) - _x(i + j + 2)
    else:
        # half of det (x_{|i-j|} + x_{i+j-2}) with the first row halved
        f = lambda i, j: _x(j) if i == 0 else _x(abs(i - j)) + _x(i + j)
    return _det(f, n)


def lp_poly(kind: str, n: int, cap: int | None = None) -> MultiPoly:
    """a_n, b_n, b'_n, c_n or d_n as a homogeneous polynomial of degree n."""
    kind = kind.replace("prime", "'")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    cap = budget().degree if cap is None else cap
    if n > cap:
        raise BudgetExceeded(f"degree {n} exceeds cap {cap}")
    return _lp(kind, n)


def sigma(p: MultiPoly) -> MultiPoly:
    """x_k -> (-1)^k x_k."""
    return p.subs_sign(lambda i: -1 if i % 2 else 1)


def specialize_psi(p: MultiPoly) -> UniPoly:
    """x_n -> t^(n^2)."""
    out: dict = {}
    for m, v in p.c.items():
        e = sum(k * k * x for k, x in enumerate(_unpack(m)))
        out[e] = out.get(e, 0) + v
    return UniPoly(out)


def embed_E(c) -> MultiPoly:
    """chi*_{sum a_i e_i} -> x_{a_1} ... x_{a_n} for characters whose group contains W_n."""
    P = c.parent
    fam = P.label.family if isinstance(P.label, TypeLabel) else None
    if fam not in ("B", "C", "BC") and not (fam == "D" and c.w.outer):
        raise ValueError("E needs a W_n-invariant character of a classical parent")
    if not P.classical_coords:
        raise ValueError("E needs the standard coordinates")
    out = MultiPoly()
    for key, v in c.terms.items():
        wt = P.weight_of_labels(key)
        a = sorted((abs(Fraction(x)) for x in wt), reverse=True)
        if any(x.denominator != 1 for x in a):
            raise ValueError(f"non-integral key {wt}")
        out = out + MultiPoly.monomial([int(x) for x in a], v)
    return out


def eprime(c) -> UniPoly:
    """chi*_lambda -> t^{|lambda|^2}."""
    out: dict = {}
    for key, v in c.terms.items():
        nrm = c.parent.norm_of_labels(key)
        if Fraction(nrm).denominator != 1:
            raise ValueError("non-integral norm")
        out[int(nrm)] = out.get(int(nrm), 0) + v
    return UniPoly(out)


# ---------------------------------------------------------------------------
# generating functions


def genfun_sum(phi: SubRootSystem, cap: int | None = None) -> UniPoly:
    """sum over W_phi of sign(w) t^{|delta - w delta|^2}."""
    from .weyl import K, _phi_gens

    if not phi.is_reduced():
        raise ValueError("f is defined for reduced subsystems")
    if not phi.idx:
        return UniPoly.one()
    P = phi.parent
    cap = budget().orbit if cap is None else cap
    gr, gc = _phi_gens(phi)
    D = phi.two_delta_labels()
    out: dict = {}
    for v, s in K.signed_orbit(D, gr, gc, cap):
        mu = tuple((a - b) // 2 for a, b in zip(D, v))
        e = P.norm_of_labels(mu)
        out[int(e)] = out.get(int(e), 0) + s
    return UniPoly(out)


@lru_cache(maxsize=None)
def _f_irreducible(family: str, rank: int) -> UniPoly:
    """prod over positive roots of (1 - t^{(2 delta, alpha)}) in the short-length-1 normalisation."""
    P = build(TypeLabel(family, rank) if family not in ("E6", "E7", "E8", "F4", "G2") else family)
    sp = P.space
    two_delta = P.two_delta()
    out = UniPoly.one()
    for a in P.roots[: P.npos]:
        out = out * one_minus_t(sp.pair(two_delta, a))
    return out


def genfun_product(phi: SubRootSystem) -> UniPoly:
    """prod over irreducible components of f_{component}(t^{r}), r the shortest squared length."""
    if not phi.is_reduced():
        raise ValueError("f is defined for reduced subsystems")
    out = UniPoly.one()
    for t in phi.types():
        fam = t.family
        if fam == "D" and t.rank == 2:
            f = _f_irreducible("A", 1) * _f_irreducible("A", 1)
        elif fam == "D" and t.rank == 3:
            f = _f_irreducible("A", 3)
        else:
            f = _f_irreducible(fam, t.rank)
        k = Fraction(t.k)
        if k.denominator != 1:
            raise ValueError("non-integral length ratio")
        out = out * f.subs_power(int(k))
    return out


def genfun(phi: SubRootSystem, path: str = "product") -> UniPoly:
    if path == "sum":
        return genfun_sum(phi)
    if path == "product":
        return genfun_product(phi)
    raise ValueError("path is 'sum' or 'product'")


# ---------------------------------------------------------------------------
# identities

X0INV = "x0^-1"


def _g(kind: str, n: int):
    """Family member with the conventions a_0=b_0=c_0=d_0=1 and a_{-1}=c_{-1}=x_0^{-1}."""
    if n < -1:
        raise ValueError("index below -1")
    if n == -1:
        if kind in ("a", "c"):
            return X0INV
        raise ValueError(f"{kind}_(-1) is undefined")
    return _lp(kind, n)


def _evaluate(terms) -> MultiPoly:
    """Sum of coeff * prod(factors) after clearing x_0^{-1} factors."""
    inv = [sum(1 for f in fs if f is X0INV) for _, fs in terms]
    k = max(inv, default=0)
    total = MultiPoly()
    x0 = _x(0)
    for (coef, fs), ni in zip(terms, inv):
        p = MultiPoly.const(coef) * (x0 ** (k - ni))
        for f in fs:
            if f is not X0INV:
                p = p * f
        total = total + p
    return total



a, b, bp, c, d = (lambda n: _g("a", n)), (lambda n: _g("b", n)), (lambda n: _g("b'", n)), (lambda n: _g("c", n)), (lambda n: _g("d", n))

IDENTITIES = {
    "a2n=bn*b'n": (1, lambda n: [(1, [a(2 * n)]), (-1, [b(n), bp(n)])]),
    "a2n+1=cn*dn+1": (1, lambda n: [(1, [a(2 * n + 1)]), (-1, [c(n), d(n + 1)])]),
    "2a2n=cn*dn+cn-1*dn+1": (1, lambda n: [(2, [a(2 * n)]), (-1, [c(n), d(n)]), (-1, [c(n - 1), d(n + 1)])]),
    "2a2n+1=bn*b'n+1+b'n*bn+1": (1, lambda n: [(2, [a(2 * n + 1)]), (-1, [b(n), bp(n + 1)]), (-1, [bp(n), b(n + 1)])]),
    "BC": (
        0,
        lambda n: [
            (1, [b(n + 1), b(n + 1), c(n), d(n)]),
            (1, [b(n + 1), b(n + 1), c(n - 1), d(n + 1)]),
            (1, [b(n), b(n), c(n + 1), d(n + 1)]),
            (1, [b(n), b(n), c(n), d(n + 2)]),
            (-4, [b(n + 1), b(n), c(n), d(n + 1)]),
        ],
    ),
    "B1": (0, lambda n: [(1, [a(2 * n + 2), b(n), b(n)]), (1, [a(2 * n), b(n + 1), b(n + 1)]), (-2, [a(2 * n + 1), b(n), b(n + 1)])]),
    "B2": (0, lambda n: [(1, [a(2 * n + 1), d(n), d(n)]), (1, [a(2 * n - 1), d(n + 1), d(n + 1)]), (-2, [a(2 * n), d(n), d(n + 1)])]),
    "C1": (1, lambda n: [(1, [a(2 * n + 1)]), (-1, [c(n), d(n + 1)])]),
    "C2": (0, lambda n: [(2, [a(2 * n + 2)]), (-1, [c(n + 1), d(n + 1)]), (-1, [c(n), d(n + 2)])]),
}

# fixed identities (no index)
FIXED = {
    "degree6": lambda: [
        (2, [b(1), b(2), b(2), c(1)]),
        (4, [b(1), b(1), c(2), d(2)]),
        (4, [b(1), b(1), c(1), d(3)]),
        (4, [b(2), c(1), c(1), d(2)]),
        (4, [b(2), b(2), d(2)]),
        (-1, [b(1), c(1), c(2), d(2)]),
        (-1, [b(1), c(1), c(1), d(3)]),
        (-16, [b(1), b(2), c(1), d(2)]),
    ],
    "a3*d1+d2^2-2a2*d2": lambda: [(1, [a(3), d(1)]), (1, [d(2), d(2)]), (-2, [a(2), d(2)])],
    "2a2*c1-a1*c1^2-a3": lambda: [(2, [a(2), c(1)]), (-1, [a(1), c(1), c(1)]), (-1, [a(3)])],
}

# default index ranges used by the acceptance suite
DEFAULT_RANGES = {
    "a2n=bn*b'n": 5,
    "a2n+1=cn*dn+1": 5,
    "2a2n=cn*dn+cn-1*dn+1": 5,
    "2a2n+1=bn*b'n+1+b'n*bn+1": 5,
    "BC": 3,
    "B1": 3,
    "B2": 3,
    "C1": 3,
    "C2": 3,
}


def verify_identities(n_max: int | None = None, names: Iterable[str] | None = None) -> list[dict]:
    """Evaluate every identity family for n up to its range (capped by n_max)."""
    cap = budget().identity_n
    if n_max is not None and n_max > cap:
        raise BudgetExceeded(f"n_max {n_max} exceeds identity cap {cap}")
    names = list(names) if names is not None else list(IDENTITIES) + list(FIXED)
    report = []
    for name in names:
        if name in IDENTITIES:
            nmin, fn = IDENTITIES[name]
            top = DEFAULT_RANGES[name] if n_max is None else min(n_max, DEFAULT_RANGES[name])
            for n in range(nmin, top + 1):
                val = _evaluate(fn(n))
                report.append({"name": name, "n": n, "status": "pass" if val.is_zero() else "fail"})
        elif name in FIXED:
            val = _evaluate(FIXED[name]())
            report.append({"name": name, "n": None, "status": "pass" if val.is_zero() else "fail"})
        else:
            raise ValueError(f"unknown identity {name!r}")
    return report
