# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled orbit kernels.  Drop-in replacement for ``_kernels_py``."""

from libc.stdlib cimport malloc, free

from .config import BudgetExceeded


cdef long* _arr(seq, Py_ssize_t n) except NULL:
    cdef long* a = <long*> malloc(max(n, 1) * sizeof(long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        a[i] = seq[i]
    return a


cdef long* _mat(rows, Py_ssize_t m, Py_ssize_t n) except NULL:
    cdef long* a = <long*> malloc(max(m * n, 1) * sizeof(long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    for i in range(m):
        row = rows[i]
        for j in range(n):
            a[i * n + j] = row[j]
    return a


cdef int _dominate(long* v, const long* cart, Py_ssize_t r, list word) except -1:
    cdef Py_ssize_t i, j
    cdef long m
    while True:
        j = -1
        m = 0
        for i in range(r):
            if v[i] < m:
                m = v[i]
                j = i
        if j < 0:
            return 0
        for i in range(r):
            v[i] -= m * cart[j * r + i]
        if word is not None:
            word.append(j)


def dominant(vec, cartan):
    cdef Py_ssize_t r = len(vec)
    cdef long* v = _arr(vec, r)
    cdef long* c = _mat(cartan, r, r)
    word = []
    try:
        _dominate(v, c, r, word)
        return tuple([v[i] for i in range(r)]), word
    finally:
        free(v)
        free(c)


def dominant_in(vec, cartan, allowed):
    cdef Py_ssize_t r = len(vec)
    cdef Py_ssize_t i, j, t
    cdef long m
    cdef long* v = _arr(vec, r)
    cdef long* c = _mat(cartan, r, r)
    cdef Py_ssize_t na = len(allowed)
    cdef long* al = _arr(allowed, na)
    word = []
    try:
        while True:
            j = -1
            m = 0
            for t in range(na):
                i = al[t]
                if v[i] < m:
                    m = v[i]
                    j = i
            if j < 0:
                break
            for i in range(r):
                v[i] -= m * c[j * r + i]
            word.append(j)
        return tuple([v[i] for i in range(r)]), word
    finally:
        free(v)
        free(c)
        free(al)


def apply_word(vec, word, cartan):
    cdef Py_ssize_t r = len(vec)
    cdef Py_ssize_t i
    cdef long cc
    cdef long* v = _arr(vec, r)
    cdef long* c = _mat(cartan, r, r)
    try:
        for j in word:
            cc = v[j]
            if cc:
                for i in range(r):
                    v[i] -= cc * c[<Py_ssize_t> j * r + i]
        return tuple([v[i] for i in range(r)])
    finally:
        free(v)
        free(c)


cdef class _Walker:
    cdef Py_ssize_t r, k, maxd
    cdef long* gr
    cdef long* gc
    cdef long* A

    def __cinit__(self, gens_r, gens_c, Py_ssize_t r):
        self.k = len(gens_r)
        self.r = r
        self.gr = _mat(gens_r, self.k, r)
        self.gc = _mat(gens_c, self.k, r)
        self.A = <long*> malloc(max(self.k * self.k, 1) * sizeof(long))
        cdef Py_ssize_t i, j, t
        cdef long s
        for i in range(self.k):
            for j in range(self.k):
                s = 0
                for t in range(r):
                    s += self.gr[i * r + t] * self.gc[j * r + t]
                self.A[i * self.k + j] = s

    def __dealloc__(self):
        free(self.gr)
        free(self.gc)
        free(self.A)


cdef object _walk(_Walker W, start, long cap, object D, const long* cart, object perms, bint want_list):
    """Depth-first descent tree over the orbit.  Returns list or dict depending on mode."""
    cdef Py_ssize_t r = W.r, k = W.k
    cdef Py_ssize_t i, j, t, depth
    cdef long pi, n = 0
    cdef bint ok
    # depth is bounded by the number of positive roots of the generated group (<= 120 for E8)
    cdef Py_ssize_t maxd = 256
    cdef long* vs = <long*> malloc(maxd * r * sizeof(long))
    cdef long* ps = <long*> malloc(maxd * max(k, 1) * sizeof(long))
    cdef Py_ssize_t* nxt = <Py_ssize_t*> malloc(maxd * sizeof(Py_ssize_t))
    cdef long* tmp = <long*> malloc(max(r, 1) * sizeof(long))
    cdef long* Dv = NULL
    out_list = []
    acc = {}
    if vs == NULL or ps == NULL or nxt == NULL or tmp == NULL:
        raise MemoryError()
    try:
        for t in range(r):
            vs[t] = start[t]
        for j in range(k):
            pi = 0
            for t in range(r):
                pi += W.gc[j * r + t] * vs[t]
            if pi <= 0:
                raise ValueError("start vector is not regular dominant for the generators")
            ps[j] = pi
        if D is not None:
            Dv = _arr(D, r)
        depth = 0
        nxt[0] = -1
        while depth >= 0:
            if nxt[depth] < 0:
                # first visit of this node
                n += 1
                if n > cap:
                    raise BudgetExceeded(f"orbit larger than cap {cap}")
                if want_list:
                    out_list.append((tuple([vs[depth * r + t] for t in range(r)]), -1 if depth & 1 else 1))
                else:
                    for t in range(r):
                        tmp[t] = (Dv[t] - vs[depth * r + t]) // 2
                    _dominate(tmp, cart, r, None)
                    key = tuple([tmp[t] for t in range(r)])
                    if perms:
                        best = key
                        for p in perms:
                            cand = tuple([key[p[t]] for t in range(r)])
                            if cand < best:
                                best = cand
                        key = best
                    acc[key] = acc.get(key, 0) + (-1 if depth & 1 else 1)
                nxt[depth] = 0
            # find next admissible child
            i = nxt[depth]
            ok = False
            while i < k:
                pi = ps[depth * k + i]
                if pi > 0:
                    ok = True
                    for j in range(i):
                        if ps[depth * k + j] - pi * W.A[i * k + j] < 0:
                            ok = False
                            break
                    if ok:
                        break
                i += 1
            if not ok:
                depth -= 1
                continue
            nxt[depth] = i + 1
            if depth + 1 >= maxd:
                raise RuntimeError("descent deeper than supported")
            for t in range(r):
                vs[(depth + 1) * r + t] = vs[depth * r + t] - pi * W.gr[i * r + t]
            for j in range(k):
                ps[(depth + 1) * k + j] = ps[depth * k + j] - pi * W.A[i * k + j]
            depth += 1
            nxt[depth] = -1
    finally:
        free(vs)
        free(ps)
        free(nxt)
        free(tmp)
        if Dv != NULL:
            free(Dv)
    if want_list:
        return out_list
    return {key: c for key, c in acc.items() if c}


def signed_orbit(start, gens_r, gens_c, cap):
    cdef Py_ssize_t r = len(start)
    W = _Walker(gens_r, gens_c, r)
    return _walk(W, start, cap, None, NULL, None, True)


def canon(vec, cartan, perms):
    v, _ = dominant(vec, cartan)
    if perms:
        best = v
        for p in perms:
            w = tuple([v[p[i]] for i in range(len(v))])
            if w < best:
                best = w
        return best
    return v


def f_character(D, gens_r, gens_c, cartan, perms, cap):
    cdef Py_ssize_t r = len(D)
    cdef long* c = _mat(cartan, r, r)
    W = _Walker(gens_r, gens_c, r)
    try:
        return _walk(W, D, cap, D, c, perms, False)
    finally:
        free(c)
