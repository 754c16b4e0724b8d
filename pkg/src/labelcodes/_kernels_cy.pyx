# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _kernels_py: same names, same results, C-speed loops.

Kept in lockstep with the pure-Python module; the backend-equivalence
tests compare the two on exhaustive small inputs.
"""
from libc.stdlib cimport malloc, free

BACKEND = "cython"

OK = 0
INVALID = 1
AMBIGUOUS = 2


def derivative(x, int q):
    """Mod-q difference word (x1, x2-x1, ..., xn-x_{n-1})."""
    cdef Py_ssize_t n = len(x), i
    cdef int prev = 0, cur
    out = [0] * n
    for i in range(n):
        cur = x[i]
        # cur - prev can be negative; shift before the C-semantics modulo
        out[i] = (cur - prev + q) % q
        prev = cur
    return tuple(out)


def integrate(d, int q):
    """Inverse of derivative: running prefix sums mod q."""
    cdef Py_ssize_t n = len(d), i
    cdef int acc = 0
    out = [0] * n
    for i in range(n):
        acc = (acc + <int> d[i]) % q
        out[i] = acc
    return tuple(out)


def signature(x):
    """Binary monotonicity indicator: bit i is 1 iff x_{i+1} >= x_i."""
    cdef Py_ssize_t n = len(x), i
    if n < 1:
        return ()
    out = [0] * (n - 1)
    cdef int prev = x[0], cur
    for i in range(n - 1):
        cur = x[i + 1]
        out[i] = 1 if cur >= prev else 0
        prev = cur
    return tuple(out)


def vt_weight_sum(x):
    """Weighted index sum: sum of (i+1) * x_i over 0-based positions."""
    cdef Py_ssize_t i, n = len(x)
    cdef long long acc = 0
    for i in range(n):
        acc += (i + 1) * <long long> x[i]
    return acc


def label_word_pairs(x, int q, const unsigned char[:] table):
    """Standalone labeling for a uniform length-2 label set."""
    cdef Py_ssize_t n = len(x), i
    out = [0] * n
    cdef int a, b
    if n == 0:
        return ()
    a = x[0]
    for i in range(n - 1):
        b = x[i + 1]
        out[i] = table[a * q + b]
        a = b
    return tuple(out)


def label_framed_pairs(x, int q, const unsigned char[:] table, int x0, int xend):
    """Framed labeling: pairs of (x0, x, xend), one label per pair."""
    cdef Py_ssize_t n = len(x), i
    out = [0] * (n + 1)
    cdef int prev = x0, cur
    for i in range(n):
        cur = x[i]
        out[i] = table[prev * q + cur]
        prev = cur
    out[n] = table[prev * q + xend]
    return tuple(out)


def invert_framed_pairs(
    u,
    int q,
    const unsigned char[:] la,
    const unsigned char[:] lb,
    const unsigned char[:] zero_adj,
    int x0,
    int xend,
    bint all_pairs,
):
    """Reconstruct the word whose framed labeling is u.

    Mirrors the pure-Python implementation: returns (status, interior
    symbols) with the same status codes.
    """
    cdef Py_ssize_t m = len(u), i, j, t
    cdef int v, a, b, total, cur, steps
    cdef int *sym = <int *> malloc((m + 1) * sizeof(int))
    cdef int *back = NULL
    if sym == NULL:
        raise MemoryError()
    try:
        for i in range(m + 1):
            sym[i] = -1
        sym[0] = x0
        sym[m] = xend
        if all_pairs:
            for i in range(m):
                v = u[i]
                a = v // q
                b = v % q
                if sym[i] == -1:
                    sym[i] = a
                elif sym[i] != a:
                    return INVALID, None
                if sym[i + 1] == -1:
                    sym[i + 1] = b
                elif sym[i + 1] != b:
                    return INVALID, None
            return OK, tuple([sym[i] for i in range(1, m)])
        for i in range(m):
            v = u[i]
            if v > 0:
                a = la[v]
                b = lb[v]
                if sym[i] == -1:
                    sym[i] = a
                elif sym[i] != a:
                    return INVALID, None
                if sym[i + 1] == -1:
                    sym[i + 1] = b
                elif sym[i + 1] != b:
                    return INVALID, None
        i = 1
        while i < m:
            if sym[i] != -1:
                i += 1
                continue
            j = i
            while sym[j] == -1:
                j += 1
            steps = <int> (j - i + 1)
            back = <int *> malloc((steps + 1) * q * sizeof(int))
            if back == NULL:
                raise MemoryError()
            try:
                for t in range((steps + 1) * q):
                    back[t] = 0
                back[sym[j]] = 1
                for t in range(1, steps + 1):
                    for a in range(q):
                        total = 0
                        for b in range(q):
                            if zero_adj[a * q + b]:
                                total += back[(t - 1) * q + b]
                                if total > 2:
                                    total = 2
                                    break
                        back[t * q + a] = total
                total = back[steps * q + sym[i - 1]]
                if total == 0:
                    return INVALID, None
                if total > 1:
                    return AMBIGUOUS, None
                cur = sym[i - 1]
                for t in range(steps, 1, -1):
                    for b in range(q):
                        if zero_adj[cur * q + b] and back[(t - 1) * q + b] > 0:
                            cur = b
                            break
                    sym[i] = cur
                    i += 1
            finally:
                free(back)
                back = NULL
            i = j + 1
        for i in range(m):
            if u[i] == 0 and not zero_adj[sym[i] * q + sym[i + 1]]:
                return INVALID, None
        return OK, tuple([sym[i] for i in range(1, m)])
    finally:
        free(sym)
