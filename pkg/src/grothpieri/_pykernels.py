"""Pure-Python inner loops.

Polynomials are plain dicts mapping exponent tuples (trailing zeros trimmed)
to nonzero Python ints.  Permutation windows are tuples of 1-based values.
The compiled twin in ``_ckernels.pyx`` exposes the same functions.
"""


def inversions(window):
    n = len(window)
    count = 0
    for i in range(n):
        wi = window[i]
        for j in range(i + 1, n):
            if window[j] < wi:
                count += 1
    return count


def is_cover(window, a, b):
    """Cover condition for the transposition of positions ``a < b`` (1-based)."""
    n = len(window)
    va = window[a - 1] if a <= n else a
    vb = window[b - 1] if b <= n else b
    if va >= vb:
        return False
    for c in range(a + 1, b):
        vc = window[c - 1] if c <= n else c
        if va < vc < vb:
            return False
    return True


def _trim(exps):
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return tuple(exps[:n])


def _add_exps(e, f):
    if len(e) < len(f):
        e, f = f, e
    out = list(e)
    for i, x in enumerate(f):
        out[i] += x
    return tuple(out)


def poly_mul(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = {}
    get = out.get
    for eg, cg in g.items():
        for ef, cf in f.items():
            key = _add_exps(ef, eg)
            out[key] = get(key, 0) + cf * cg
    return {k: v for k, v in out.items() if v}


def poly_axpy(f, g, c):
    """Return ``f + c*g`` as a new dict."""
    out = dict(f)
    if c == 0:
        return out
    get = out.get
    for e, cg in g.items():
        v = get(e, 0) + c * cg
        if v:
            out[e] = v
        else:
            del out[e]
    return out


def _accumulate_divdiff(out, exps, i, c):
    # exps is a mutable list of length >= i + 1; i is the 0-based index of x_i
    a = exps[i]
    b = exps[i + 1]
    if a == b:
        return
    if a < b:
        a, b = b, a
        c = -c
    # (x^a y^b - x^b y^a)/(x - y) = sum_{t=0}^{a-b-1} x^{a-1-t} y^{b+t}
    get = out.get
    for t in range(a - b):
        exps[i] = a - 1 - t
        exps[i + 1] = b + t
        key = _trim(exps)
        v = get(key, 0) + c
        if v:
            out[key] = v
        else:
            del out[key]


def divdiff(f, i):
    """Divided difference in the variables x_i, x_{i+1} (``i`` is 1-based)."""
    out = {}
    j = i - 1
    for e, c in f.items():
        exps = list(e)
        if len(exps) < i + 1:
            exps.extend([0] * (i + 1 - len(exps)))
        _accumulate_divdiff(out, exps, j, c)
    return out


def isobaric(f, i):
    """Isobaric divided difference ``d_i((1 - x_{i+1}) f)`` (``i`` is 1-based)."""
    out = {}
    j = i - 1
    for e, c in f.items():
        exps = list(e)
        if len(exps) < i + 1:
            exps.extend([0] * (i + 1 - len(exps)))
        a, b = exps[j], exps[j + 1]
        _accumulate_divdiff(out, exps, j, c)
        exps[j], exps[j + 1] = a, b + 1
        _accumulate_divdiff(out, exps, j, -c)
    return out


def lowest_lex_min(f):
    """(degree, exponents) of the lex-smallest monomial among those of least degree."""
    best_d = -1
    best = None
    for e in f:
        d = sum(e)
        if best_d < 0 or d < best_d or (d == best_d and e < best):
            best_d = d
            best = e
    return best_d, best
