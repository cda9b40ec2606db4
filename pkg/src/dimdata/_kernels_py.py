"""Pure-Python orbit kernels.  Same API as the compiled ``_kernels`` module.

All vectors are integer label vectors: entry j is the pairing with the j-th simple
coroot of the ambient root system.  ``cartan[j]`` is the label vector of simple root j.
"""

from .config import BudgetExceeded


def dominant(vec, cartan):
    """Return (dominant vector, reflection word); most negative label first, ties to lowest index."""
    v = list(vec)
    r = len(v)
    word = []
    while True:
        j, m = -1, 0
        for i in range(r):
            if v[i] < m:
                m, j = v[i], i
        if j < 0:
            return tuple(v), word
        row = cartan[j]
        for i in range(r):
            if row[i]:
                v[i] -= m * row[i]
        word.append(j)


def dominant_in(vec, cartan, allowed):
    """Like ``dominant`` but only reflecting in the simple roots listed in ``allowed``."""
    v = list(vec)
    word = []
    while True:
        j, m = -1, 0
        for i in allowed:
            if v[i] < m:
                m, j = v[i], i
        if j < 0:
            return tuple(v), word
        row = cartan[j]
        for i in range(len(v)):
            if row[i]:
                v[i] -= m * row[i]
        word.append(j)


def apply_word(vec, word, cartan):
    v = list(vec)
    for j in word:
        c = v[j]
        if c:
            row = cartan[j]
            for i in range(len(v)):
                v[i] -= c * row[i]
    return tuple(v)


def _phi_cartan(gens_r, gens_c):
    k = len(gens_r)
    return [[sum(a * b for a, b in zip(gens_r[i], gens_c[j])) for j in range(k)] for i in range(k)]


def _walk(start, gens_r, gens_c, cap, visit):
    k = len(gens_r)
    A = _phi_cartan(gens_r, gens_c)
    p0 = [sum(a * b for a, b in zip(c, start)) for c in gens_c]
    if any(x <= 0 for x in p0):
        raise ValueError("start vector is not regular dominant for the generators")
    stack = [(tuple(start), p0, 0)]
    n = 0
    while stack:
        v, p, d = stack.pop()
        n += 1
        if n > cap:
            raise BudgetExceeded(f"orbit larger than cap {cap}")
        visit(v, -1 if d & 1 else 1)
        for i in range(k):
            pi = p[i]
            if pi <= 0:
                continue
            Ai = A[i]
            q = [p[j] - pi * Ai[j] for j in range(k)]
            if any(q[j] < 0 for j in range(i)):
                continue
            gi = gens_r[i]
            stack.append((tuple(x - pi * y for x, y in zip(v, gi)), q, d + 1))
    return n


def signed_orbit(start, gens_r, gens_c, cap):
    """All (w.start, sign w) for w in the group generated by the given reflections.

    Hash-free: each element is reached once along its canonical descent path.
    """
    out = []
    _walk(start, gens_r, gens_c, cap, lambda v, s: out.append((v, s)))
    return out


def canon(vec, cartan, perms):
    v, _ = dominant(vec, cartan)
    if perms:
        best = v
        for p in perms:
            w = tuple(v[p[i]] for i in range(len(v)))
            if w < best:
                best = w
        return best
    return v


def f_character(D, gens_r, gens_c, cartan, perms, cap):
    """Sparse map canon((D - w D)/2) -> sum of signs, for D = labels of 2 delta."""
    acc = {}

    def visit(v, s):
        key = canon(tuple((a - b) // 2 for a, b in zip(D, v)), cartan, perms)
        acc[key] = acc.get(key, 0) + s

    _walk(D, gens_r, gens_c, cap, visit)
    return {k: c for k, c in acc.items() if c}
