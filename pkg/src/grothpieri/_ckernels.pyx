# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernels``; same functions, same results."""

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from libc.stdlib cimport free, malloc
from libc.string cimport memset


cdef inline tuple _key(int *buf, Py_ssize_t width):
    cdef Py_ssize_t m = width
    while m > 0 and buf[m - 1] == 0:
        m -= 1
    cdef tuple t = PyTuple_New(m)
    cdef object o
    cdef Py_ssize_t i
    for i in range(m):
        o = buf[i]
        Py_INCREF(o)
        PyTuple_SET_ITEM(t, i, o)
    return t


cdef inline void _bump(dict out, tuple key, object c):
    cdef object v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


cdef Py_ssize_t _width(dict f):
    cdef Py_ssize_t w = 0
    cdef tuple e
    for e in f:
        if len(e) > w:
            w = len(e)
    return w


cdef int *_pack(dict f, Py_ssize_t width, list coeffs) except NULL:
    cdef Py_ssize_t n = len(f), r = 0, i
    cdef int *arr = <int *> malloc((n * width + 1) * sizeof(int))
    if arr == NULL:
        raise MemoryError()
    memset(arr, 0, (n * width + 1) * sizeof(int))
    cdef tuple e
    for e, c in f.items():
        for i in range(len(e)):
            arr[r * width + i] = e[i]
        coeffs.append(c)
        r += 1
    return arr


def inversions(tuple window):
    cdef Py_ssize_t n = len(window), i, j
    cdef long count = 0
    cdef int *w = <int *> malloc((n + 1) * sizeof(int))
    if w == NULL:
        raise MemoryError()
    for i in range(n):
        w[i] = window[i]
    for i in range(n):
        for j in range(i + 1, n):
            if w[j] < w[i]:
                count += 1
    free(w)
    return count


def is_cover(tuple window, int a, int b):
    """Cover condition for the transposition of positions ``a < b`` (1-based)."""
    cdef Py_ssize_t n = len(window)
    cdef int va, vb, vc, c
    va = window[a - 1] if a <= n else a
    vb = window[b - 1] if b <= n else b
    if va >= vb:
        return False
    for c in range(a + 1, b):
        vc = window[c - 1] if c <= n else c
        if va < vc < vb:
            return False
    return True


def poly_mul(dict f, dict g):
    if len(f) < len(g):
        f, g = g, f
    cdef Py_ssize_t nf = len(f), ng = len(g)
    cdef dict out = {}
    if nf == 0 or ng == 0:
        return out
    cdef Py_ssize_t wf = _width(f), wg = _width(g)
    cdef Py_ssize_t width = wf if wf > wg else wg
    if width == 0:
        width = 1
    cdef list cf = [], cg = []
    cdef int *fa = _pack(f, width, cf)
    cdef int *ga = NULL
    cdef int *buf = NULL
    cdef Py_ssize_t i, j, t
    cdef object c
    try:
        ga = _pack(g, width, cg)
        buf = <int *> malloc(width * sizeof(int))
        if buf == NULL:
            raise MemoryError()
        for j in range(ng):
            c = cg[j]
            for i in range(nf):
                for t in range(width):
                    buf[t] = fa[i * width + t] + ga[j * width + t]
                key = _key(buf, width)
                out[key] = out.get(key, 0) + cf[i] * c
    finally:
        free(fa)
        free(ga)
        free(buf)
    return {k: v for k, v in out.items() if v}


def poly_axpy(dict f, dict g, c):
    """Return ``f + c*g`` as a new dict."""
    cdef dict out = dict(f)
    if c == 0:
        return out
    cdef tuple e
    for e, cg in g.items():
        _bump(out, e, c * cg)
    return out


cdef void _divdiff_into(dict out, int *exps, Py_ssize_t width, Py_ssize_t j, object c) except *:
    cdef int a = exps[j], b = exps[j + 1], t, lo, hi
    if a == b:
        return
    if a < b:
        hi, lo = b, a
        c = -c
    else:
        hi, lo = a, b
    for t in range(hi - lo):
        exps[j] = hi - 1 - t
        exps[j + 1] = lo + t
        _bump(out, _key(exps, width), c)
    exps[j] = a
    exps[j + 1] = b


def divdiff(dict f, int i):
    """Divided difference in the variables x_i, x_{i+1} (``i`` is 1-based)."""
    cdef dict out = {}
    cdef Py_ssize_t width = _width(f)
    if width < i + 1:
        width = i + 1
    cdef int *exps = <int *> malloc(width * sizeof(int))
    if exps == NULL:
        raise MemoryError()
    cdef tuple e
    cdef Py_ssize_t t
    try:
        for e, c in f.items():
            memset(exps, 0, width * sizeof(int))
            for t in range(len(e)):
                exps[t] = e[t]
            _divdiff_into(out, exps, width, i - 1, c)
    finally:
        free(exps)
    return out


def isobaric(dict f, int i):
    """Isobaric divided difference ``d_i((1 - x_{i+1}) f)`` (``i`` is 1-based)."""
    cdef dict out = {}
    cdef Py_ssize_t width = _width(f)
    if width < i + 1:
        width = i + 1
    cdef int *exps = <int *> malloc(width * sizeof(int))
    if exps == NULL:
        raise MemoryError()
    cdef tuple e
    cdef Py_ssize_t t
    try:
        for e, c in f.items():
            memset(exps, 0, width * sizeof(int))
            for t in range(len(e)):
                exps[t] = e[t]
            _divdiff_into(out, exps, width, i - 1, c)
            exps[i] += 1
            _divdiff_into(out, exps, width, i - 1, -c)
    finally:
        free(exps)
    return out


def lowest_lex_min(dict f):
    """(degree, exponents) of the lex-smallest monomial among those of least degree."""
    cdef long best_d = -1, d
    cdef tuple best = None, e
    cdef Py_ssize_t t
    for e in f:
        d = 0
        for t in range(len(e)):
            d += <long> e[t]
        if best_d < 0 or d < best_d or (d == best_d and e < best):
            best_d = d
            best = e
    return best_d, best
