# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; same results as ``_pykernel``."""

from libc.stdlib cimport malloc, free

cdef enum:
    MAXN = 64


cdef struct Walk:
    int n
    int N
    int kmax
    int k
    int ndivs
    int partner[MAXN]
    int divs[MAXN]
    long long *hist


cdef int _period(Walk *w) nogil:
    cdef int t, d, i, N = w.N
    for t in range(w.ndivs):
        d = w.divs[t]
        for i in range(N):
            if w.partner[(i + d) % N] != (w.partner[i] + d) % N:
                break
        else:
            return d
    return N


cdef void _rec_periods(Walk *w, int depth, int c) nogil:
    cdef int i, j, seen
    if depth == w.n:
        if c == w.k:
            w.hist[_period(w)] += 1
        return
    i = 0
    while w.partner[i] != -1:
        i += 1
    seen = 0
    for j in range(i + 1, w.N):
        if w.partner[j] != -1:
            seen += 1
            continue
        if c + seen > w.kmax:
            break
        w.partner[i] = j
        w.partner[j] = i
        _rec_periods(w, depth + 1, c + seen)
        w.partner[i] = -1
        w.partner[j] = -1


cdef void _rec_crossings(Walk *w, int depth, int c) nogil:
    cdef int i, j, seen
    if depth == w.n:
        w.hist[c] += 1
        return
    i = 0
    while w.partner[i] != -1:
        i += 1
    seen = 0
    for j in range(i + 1, w.N):
        if w.partner[j] != -1:
            seen += 1
            continue
        if c + seen > w.kmax:
            break
        w.partner[i] = j
        w.partner[j] = i
        _rec_crossings(w, depth + 1, c + seen)
        w.partner[i] = -1
        w.partner[j] = -1


cdef void _init(Walk *w, int n, int kmax, long long *hist):
    cdef int i, d
    w.n = n
    w.N = 2 * n
    w.kmax = kmax
    w.k = kmax
    w.hist = hist
    for i in range(w.N):
        w.partner[i] = -1
    w.ndivs = 0
    for d in range(1, w.N):
        if w.N % d == 0:
            w.divs[w.ndivs] = d
            w.ndivs += 1


def crossing_histogram(int n, int kmax):
    """Counts of matchings with c = 0..kmax crossings."""
    if not 1 <= n <= MAXN // 2:
        raise ValueError(f"n must be in 1..{MAXN // 2}")
    cdef Walk w
    cdef long long *hist = <long long *>malloc((kmax + 1) * sizeof(long long))
    cdef int t
    for t in range(kmax + 1):
        hist[t] = 0
    _init(&w, n, kmax, hist)
    with nogil:
        _rec_crossings(&w, 0, 0)
    out = [hist[t] for t in range(kmax + 1)]
    free(hist)
    return out


def period_histogram(int n, int k):
    """``h[d]`` for d in 0..2n: matchings with exactly k crossings and period d."""
    if not 1 <= n <= MAXN // 2:
        raise ValueError(f"n must be in 1..{MAXN // 2}")
    cdef Walk w
    cdef int N = 2 * n, t
    cdef long long *hist = <long long *>malloc((N + 1) * sizeof(long long))
    for t in range(N + 1):
        hist[t] = 0
    _init(&w, n, k, hist)
    with nogil:
        _rec_periods(&w, 0, 0)
    out = [hist[t] for t in range(N + 1)]
    free(hist)
    return out
